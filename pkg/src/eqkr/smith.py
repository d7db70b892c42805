"""Smith normal form over Q[t] and homology of complexes over that PID.

``UPoly`` is a small dense univariate polynomial with Fraction coefficients.
``smith`` returns unimodular U, V (and their inverses) with U A V = D
diagonal, each diagonal entry monic and dividing the next.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ring import Poly


class UPoly:
    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def const(cls, x):
        return cls([x])

    @classmethod
    def monomial(cls, k, x=1):
        return cls([0] * k + [x])

    def __bool__(self):
        return bool(self.c)

    @property
    def deg(self):
        return len(self.c) - 1

    def lead(self):
        return self.c[-1]

    def __eq__(self, other):
        if isinstance(other, int):
            other = UPoly.const(other)
        return isinstance(other, UPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        return UPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self):
        return UPoly([-x for x in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UPoly([x * other for x in self.c])
        if not self.c or not other.c:
            return UPoly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] += x * y
        return UPoly(out)

    __rmul__ = __mul__

    def divmod(self, d: "UPoly"):
        if not d:
            raise ZeroDivisionError
        r = list(self.c)
        q = [Fraction(0)] * max(len(r) - len(d.c) + 1, 0)
        inv = Fraction(1) / d.lead()
        while len(r) >= len(d.c) and any(r):
            if not r[-1]:
                r.pop()
                continue
            k = len(r) - len(d.c)
            f = r[-1] * inv
            q[k] = f
            for i, y in enumerate(d.c):
                r[k + i] -= f * y
            r.pop()
        return UPoly(q), UPoly(r)

    def monic(self):
        return self * (Fraction(1) / self.lead()) if self else self

    def is_unit(self):
        return len(self.c) == 1

    def is_monomial(self):
        return sum(1 for x in self.c if x) == 1

    def valuation(self):
        for i, x in enumerate(self.c):
            if x:
                return i
        return None

    def __repr__(self):
        if not self.c:
            return "0"
        return " + ".join(f"{x}*t^{i}" for i, x in enumerate(self.c) if x)

    def to_poly(self, code: int, n: int) -> Poly:
        return Poly({(((code, i),) if i else ()): x for i, x in enumerate(self.c) if x}, n)

    @classmethod
    def from_poly(cls, p: Poly, code: int) -> "UPoly":
        out = {}
        for m, x in p.terms.items():
            d = dict(m)
            e = d.pop(code, 0)
            if d:
                raise ValueError(f"{p} is not univariate in the expected variable")
            out[e] = x
        top = max(out, default=-1)
        return cls([out.get(i, 0) for i in range(top + 1)])


def _identity(k):
    return [[UPoly.const(1) if i == j else UPoly() for j in range(k)] for i in range(k)]


@dataclass
class SmithDecomposition:
    D: list          # diagonal entries (monic), length = rank
    U: list
    V: list
    Uinv: list
    Vinv: list
    rows: int
    cols: int
    row_degrees: list = None   # degrees of the new target basis (columns of Uinv)
    col_degrees: list = None   # degrees of the new source basis (columns of V)

    @property
    def rank(self):
        return len(self.D)

    def diagonal_matrix(self):
        M = [[UPoly() for _ in range(self.cols)] for _ in range(self.rows)]
        for i, d in enumerate(self.D):
            M[i][i] = d
        return M


def umat_mul(A, B):
    if not A:
        return []
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        r = []
        for j in range(cols):
            s = UPoly()
            for k, x in enumerate(row):
                if x and B[k][j]:
                    s = s + x * B[k][j]
            r.append(s)
        out.append(r)
    return out


def smith(A, row_degrees=None, col_degrees=None) -> SmithDecomposition:
    """Smith normal form with transforms.  With degree lists given, the input
    must be homogeneous (entry degree = col degree - row degree, t of weight
    given implicitly); pivots of least t-degree keep everything homogeneous."""
    m = len(A)
    ncols = len(A[0]) if m else 0
    M = [list(row) for row in A]
    U, Uinv = _identity(m), _identity(m)
    V, Vinv = _identity(ncols), _identity(ncols)
    rdeg = list(row_degrees) if row_degrees is not None else None
    cdeg = list(col_degrees) if col_degrees is not None else None

    def swap_rows(i, j):
        if i == j:
            return
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]
        if rdeg is not None:
            rdeg[i], rdeg[j] = rdeg[j], rdeg[i]

    def swap_cols(i, j):
        if i == j:
            return
        for row in M:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]
        if cdeg is not None:
            cdeg[i], cdeg[j] = cdeg[j], cdeg[i]

    def add_row(dst, src, f):
        # R_dst += f R_src
        M[dst] = [x + f * y if y else x for x, y in zip(M[dst], M[src])]
        U[dst] = [x + f * y if y else x for x, y in zip(U[dst], U[src])]
        for row in Uinv:
            if row[dst]:
                row[src] = row[src] - f * row[dst]

    def add_col(dst, src, f):
        # C_dst += f C_src
        for row in M:
            if row[src]:
                row[dst] = row[dst] + f * row[src]
        for row in V:
            if row[src]:
                row[dst] = row[dst] + f * row[src]
        Vinv[src] = [x - f * y if y else x for x, y in zip(Vinv[src], Vinv[dst])]

    def scale_row(i, f: Fraction):
        M[i] = [x * f for x in M[i]]
        U[i] = [x * f for x in U[i]]
        for row in Uinv:
            row[i] = row[i] * (Fraction(1) / f)

    diag = []
    p = 0
    while p < min(m, ncols):
        best = None
        for i in range(p, m):
            for j in range(p, ncols):
                if M[i][j] and (best is None or M[i][j].deg < best[0]):
                    best = (M[i][j].deg, i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(p, i)
        swap_cols(p, j)
        while True:
            done = True
            for i in range(p + 1, m):
                if M[i][p]:
                    q, r = M[i][p].divmod(M[p][p])
                    add_row(i, p, -q)
                    if r:
                        swap_rows(p, i)
                        done = False
                        break
            if not done:
                continue
            for j in range(p + 1, ncols):
                if M[p][j]:
                    q, r = M[p][j].divmod(M[p][p])
                    add_col(j, p, -q)
                    if r:
                        swap_cols(p, j)
                        done = False
                        break
            if not done:
                continue
            # divisibility of the remaining block
            bad = None
            for i in range(p + 1, m):
                for j in range(p + 1, ncols):
                    if M[i][j] and M[i][j].divmod(M[p][p])[1]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(p, bad, UPoly.const(1))
        scale_row(p, Fraction(1) / M[p][p].lead())
        diag.append(M[p][p])
        p += 1
    return SmithDecomposition(diag, U, V, Uinv, Vinv, m, ncols, rdeg, cdeg)


# ---------------------------------------------------------------------------
# homology of complexes of graded free Q[t]-modules


@dataclass
class PIDHomology:
    free: dict      # i -> list of generator degrees
    torsion: list   # (i, degree, k) for summands Q[t]/(t^k) generated in that degree


def graded_complex_homology(modules: dict, differentials: dict, code: int, n: int) -> PIDHomology:
    """modules: i -> generator degrees; differentials: i -> matrix of Poly
    (rows C^{i+1}, cols C^i) homogeneous of degree 0 in the single variable
    ``code``."""
    free, torsion = {}, []
    for i, degs in modules.items():
        N = len(degs)
        # incoming map
        if i - 1 in differentials and modules.get(i - 1):
            A = [[UPoly.from_poly(e, code) for e in row] for row in differentials[i - 1]]
            S = smith(A, degs, modules[i - 1])
            rho = S.rank
            basis_deg = S.row_degrees
            Uinv = S.Uinv
            for r, d in enumerate(S.D):
                if d.deg > 0:
                    if not d.is_monomial():
                        raise ValueError("inhomogeneous differential over the graded PID")
                    torsion.append((i, basis_deg[r], d.deg))
        else:
            rho, basis_deg, Uinv = 0, list(degs), _identity(N)
        # outgoing map restricted to the complement of the image
        if i in differentials and modules.get(i + 1) and N:
            B = [[UPoly.from_poly(e, code) for e in row] for row in differentials[i]]
            Bp = umat_mul(B, Uinv)
            for row in Bp:
                for r in range(rho):
                    if row[r]:
                        raise ValueError("d o d != 0")
            sub = [row[rho:] for row in Bp]
            S2 = smith(sub, modules[i + 1], basis_deg[rho:])
            ker_deg = S2.col_degrees[S2.rank:]
        else:
            ker_deg = basis_deg[rho:]
        if ker_deg:
            free[i] = sorted(ker_deg)
    return PIDHomology(free, sorted(torsion))


def univariate_homology(M, code: int):
    """Homology of a potential-zero factorization over Q[y] (single variable).
    Raises if the homology is not finite dimensional."""
    from .mf import LocalCohomology
    from .ring import var_weight
    n = M.n
    w = var_weight(code, n)
    dims = {}
    for par in (0, 1):
        modules = {0: [g + (n + 1) for g in M.degrees(1 - par)], 1: list(M.degrees(par)),
                   2: [g - (n + 1) for g in M.degrees(1 - par)]}
        # C^0 = M^{1-par} -> C^1 = M^par -> C^2 = M^{1-par}, with degrees shifted so
        # the differential has degree 0
        diffs = {0: M.diff(1 - par), 1: M.diff(par)}
        H = graded_complex_homology(modules, diffs, code, n)
        if H.free.get(1):
            raise ValueError("homology is not finite dimensional")
        out = []
        for i, d, k in H.torsion:
            if i == 1:
                out += [d + j * w for j in range(k)]
        dims[par] = sorted(out)
    return LocalCohomology(dims[0], dims[1])
