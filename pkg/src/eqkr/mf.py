"""Graded matrix factorizations over Q[a_0..a_{n-2}][marks].

A factorization is stored as two lists of generator q-degrees plus the two
differential matrices.  ``d0[t][s]`` is the entry from generator ``s`` of M^0
to generator ``t`` of M^1, and ``d1`` goes the other way.  Differentials are
homogeneous of degree n+1: an entry from a generator of degree g to one of
degree h has polynomial degree n + 1 + g - h.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .linalg import Echelon, kernel
from .ring import Poly, mono_degree, var_weight


class InvariantError(RuntimeError):
    """An internal consistency check failed (d^2 != w, inhomogeneous entry, ...)."""


class PotentialMismatch(ValueError):
    pass


def mat_mul(A, B, n):
    rows, inner = len(A), len(B)
    cols = len(B[0]) if B else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            s = Poly.zero(n)
            for k in range(inner):
                if A[i][k] and B[k][j]:
                    s = s + A[i][k] * B[k][j]
            row.append(s)
        out.append(row)
    return out


def zero_matrix(r, c, n):
    return [[Poly.zero(n) for _ in range(c)] for _ in range(r)]


def transpose(A, ncols_if_empty=0):
    if not A:
        return [[] for _ in range(ncols_if_empty)]
    return [list(col) for col in zip(*A)]


@dataclass
class MatrixFactorization:
    n: int
    deg0: list
    deg1: list
    d0: list
    d1: list
    potential: Poly
    labels0: list = field(default=None)
    labels1: list = field(default=None)

    def __post_init__(self):
        self.deg0 = list(self.deg0)
        self.deg1 = list(self.deg1)
        if self.labels0 is None:
            self.labels0 = list(range(len(self.deg0)))
        if self.labels1 is None:
            self.labels1 = list(range(len(self.deg1)))
        if not self.d0:
            self.d0 = [[] for _ in self.deg1] if self.deg1 else []
        if not self.d1:
            self.d1 = [[] for _ in self.deg0] if self.deg0 else []

    @property
    def rank(self):
        return len(self.deg0), len(self.deg1)

    def degrees(self, parity):
        return self.deg0 if parity % 2 == 0 else self.deg1

    def diff(self, parity):
        """Matrix of the differential leaving the given parity."""
        return self.d0 if parity % 2 == 0 else self.d1

    def variables(self) -> set:
        vs = set()
        for M in (self.d0, self.d1):
            for row in M:
                for e in row:
                    vs |= e.variables()
        return vs | self.potential.variables()

    def check(self) -> "MatrixFactorization":
        """Verify d1 d0 = w Id, d0 d1 = w Id and entry homogeneity."""
        n = self.n
        r0, r1 = self.rank
        for A, B, size in ((self.d1, self.d0, r0), (self.d0, self.d1, r1)):
            if size == 0:
                continue
            P = mat_mul(A, B, n) if (A and B and A[0] and B[0]) else zero_matrix(size, size, n)
            for i in range(size):
                for j in range(size):
                    want = self.potential if i == j else Poly.zero(n)
                    if P[i][j] != want:
                        raise InvariantError(f"d^2 != w at ({i},{j}): {P[i][j]} vs {want}")
        for M, src, tgt in ((self.d0, self.deg0, self.deg1), (self.d1, self.deg1, self.deg0)):
            for t, row in enumerate(M):
                for s, e in enumerate(row):
                    if e.is_zero():
                        continue
                    want = n + 1 + src[s] - tgt[t]
                    if not e.is_homogeneous() or e.degree() != want:
                        raise InvariantError(
                            f"entry {e} has degree {e.degrees()}, expected {want}")
        if not self.potential.is_zero() and self.potential.degree() != 2 * n + 2:
            raise InvariantError("potential is not of degree 2n+2")
        return self

    def map_entries(self, f) -> "MatrixFactorization":
        return MatrixFactorization(
            self.n, self.deg0, self.deg1,
            [[f(e) for e in row] for row in self.d0],
            [[f(e) for e in row] for row in self.d1],
            f(self.potential), self.labels0, self.labels1)

    def __repr__(self):
        return f"MatrixFactorization(n={self.n}, rank={self.rank}, w={self.potential})"


@dataclass
class MFMorphism:
    """A pair (f0, f1) with f_i : M^i -> N^i; ``q_degree`` is the shift in
    q-degree.  ``odd`` morphisms map M^i to N^{i+1} instead."""
    source: MatrixFactorization
    target: MatrixFactorization
    f0: list
    f1: list
    q_degree: int = 0
    odd: bool = False

    def check(self) -> "MFMorphism":
        M, N, n = self.source, self.target, self.source.n
        if M.potential != N.potential:
            raise PotentialMismatch("morphism between different potentials")
        if self.odd:
            raise NotImplementedError("odd morphisms are not checked")
        # d_N f0 = f1 d_M  on M^0 and d_N f1 = f0 d_M on M^1
        for fa, fb, dM, dN, size_src in ((self.f0, self.f1, M.d0, N.d0, len(M.deg0)),
                                         (self.f1, self.f0, M.d1, N.d1, len(M.deg1))):
            lhs = _apply_mat(dN, fa, n, len(fa[0]) if fa else size_src)
            rhs = _apply_mat(fb, dM, n, size_src)
            if lhs != rhs:
                raise InvariantError("morphism does not commute with differentials")
        for F, src, tgt in ((self.f0, M.deg0, N.deg0), (self.f1, M.deg1, N.deg1)):
            for t, row in enumerate(F):
                for s, e in enumerate(row):
                    if e.is_zero():
                        continue
                    want = self.q_degree + src[s] - tgt[t]
                    if not e.is_homogeneous() or e.degree() != want:
                        raise InvariantError(f"morphism entry {e} not of degree {want}")
        return self

    def compose(self, other: "MFMorphism") -> "MFMorphism":
        """self after other."""
        n = self.source.n
        return MFMorphism(other.source, self.target,
                          _apply_mat(self.f0, other.f0, n, len(other.source.deg0)),
                          _apply_mat(self.f1, other.f1, n, len(other.source.deg1)),
                          self.q_degree + other.q_degree)


def _apply_mat(A, B, n, ncols):
    if not A or not B:
        rows = len(A)
        return [[Poly.zero(n) for _ in range(ncols)] for _ in range(rows)]
    return mat_mul(A, B, n)


def identity_morphism(M: MatrixFactorization) -> MFMorphism:
    n = M.n
    I0 = [[Poly.const(1 if i == j else 0, n) for j in range(len(M.deg0))] for i in range(len(M.deg0))]
    I1 = [[Poly.const(1 if i == j else 0, n) for j in range(len(M.deg1))] for i in range(len(M.deg1))]
    return MFMorphism(M, M, I0, I1, 0)


# ---------------------------------------------------------------------------
# constructions


def koszul(b: Sequence[Poly], c: Sequence[Poly], shifts: Sequence[int] | None = None,
           base_shift: int = 0) -> MatrixFactorization:
    """Tensor product of the rows R --b_i--> R{s_i} --c_i--> R."""
    from .koszul import KoszulMF
    return KoszulMF.build(b, c, shifts, base_shift).to_mf()


def unit_mf(n: int) -> MatrixFactorization:
    """The rank (1, 0) factorization R of potential 0."""
    return MatrixFactorization(n, [0], [], [], [[]], Poly.zero(n))


def tensor(M: MatrixFactorization, N: MatrixFactorization) -> MatrixFactorization:
    """d(m x n) = d_M(m) x n * (-1)^|n| + m x d_N(n)."""
    if M.n != N.n:
        raise ValueError("ambient mismatch")
    n = M.n
    gens = {0: [], 1: []}
    for p, q in product((0, 1), repeat=2):
        for i, g in enumerate(M.degrees(p)):
            for j, h in enumerate(N.degrees(q)):
                gens[(p + q) % 2].append((p, i, q, j, g + h))
    index = {par: {(p, i, q, j): k for k, (p, i, q, j, _) in enumerate(gens[par])} for par in (0, 1)}
    mats = {}
    for par in (0, 1):
        src, tgt = gens[par], gens[1 - par]
        A = zero_matrix(len(tgt), len(src), n)
        for k, (p, i, q, j, _) in enumerate(src):
            dM = M.diff(p)
            sign = -1 if q else 1
            for t in range(len(M.degrees(1 - p))):
                e = dM[t][i]
                if e:
                    A[index[1 - par][(1 - p, t, q, j)]][k] = e * sign
            dN = N.diff(q)
            for t in range(len(N.degrees(1 - q))):
                e = dN[t][j]
                if e:
                    A[index[1 - par][(p, i, 1 - q, t)]][k] = A[index[1 - par][(p, i, 1 - q, t)]][k] + e
        mats[par] = A
    return MatrixFactorization(
        n, [g[4] for g in gens[0]], [g[4] for g in gens[1]], mats[0], mats[1],
        M.potential + N.potential)


def shift_c(M: MatrixFactorization) -> MatrixFactorization:
    """The functor <1>: swap M^0 and M^1 and negate both differentials."""
    return MatrixFactorization(M.n, M.deg1, M.deg0,
                               [[-e for e in row] for row in M.d1],
                               [[-e for e in row] for row in M.d0],
                               M.potential, M.labels1, M.labels0)


def shift_q(M: MatrixFactorization, k: int) -> MatrixFactorization:
    return MatrixFactorization(M.n, [g + k for g in M.deg0], [g + k for g in M.deg1],
                               M.d0, M.d1, M.potential, M.labels0, M.labels1)


def direct_sum(*Ms: MatrixFactorization) -> MatrixFactorization:
    n = Ms[0].n
    w = Ms[0].potential
    deg0, deg1 = [], []
    for M in Ms:
        if M.potential != w:
            raise PotentialMismatch("direct sum of different potentials")
        deg0 += M.deg0
        deg1 += M.deg1
    d0 = zero_matrix(len(deg1), len(deg0), n)
    d1 = zero_matrix(len(deg0), len(deg1), n)
    o0 = o1 = 0
    for M in Ms:
        r0, r1 = M.rank
        for t in range(r1):
            for s in range(r0):
                d0[o1 + t][o0 + s] = M.d0[t][s]
        for t in range(r0):
            for s in range(r1):
                d1[o0 + t][o1 + s] = M.d1[t][s]
        o0 += r0
        o1 += r1
    return MatrixFactorization(n, deg0, deg1, d0, d1, w)


def dual(M: MatrixFactorization) -> MatrixFactorization:
    """(M^0)* --(-d1^T)--> (M^1)* --(d0^T)--> (M^0)*, degrees negated."""
    r0, r1 = M.rank
    nd0 = [[-M.d1[s][t] for s in range(r0)] for t in range(r1)]
    nd1 = [[M.d0[t][s] for t in range(r1)] for s in range(r0)]
    return MatrixFactorization(M.n, [-g for g in M.deg0], [-g for g in M.deg1],
                               nd0, nd1, -M.potential)


def hom_complex(M: MatrixFactorization, N: MatrixFactorization) -> MatrixFactorization:
    """Hom_R(M, N) as a factorization of potential w_N - w_M.

    The basis element E[t, s] sends generator s of M to generator t of N and
    has q-degree deg(t) - deg(s).  df = d_N f - (-1)^|f| f d_M.
    """
    n = M.n
    gens = {0: [], 1: []}
    for q, p in product((0, 1), repeat=2):
        for t, h in enumerate(N.degrees(q)):
            for s, g in enumerate(M.degrees(p)):
                gens[(q - p) % 2].append((q, t, p, s, h - g))
    index = {par: {g[:4]: k for k, g in enumerate(gens[par])} for par in (0, 1)}
    mats = {}
    for par in (0, 1):
        src, tgt = gens[par], gens[1 - par]
        A = zero_matrix(len(tgt), len(src), n)
        sign = -1 if par == 0 else 1
        for k, (q, t, p, s, _) in enumerate(src):
            dN = N.diff(q)
            for t2 in range(len(N.degrees(1 - q))):
                e = dN[t2][t]
                if e:
                    key = index[1 - par][(1 - q, t2, p, s)]
                    A[key][k] = A[key][k] + e
            # (f d_M)(e_{s2}) = sum_s d_M[s, s2] f(e_s); d_M here leaves parity 1-p
            dM = M.diff(1 - p)
            for s2 in range(len(M.degrees(1 - p))):
                e = dM[s][s2]
                if e:
                    key = index[1 - par][(q, t, 1 - p, s2)]
                    A[key][k] = A[key][k] + e * sign
        mats[par] = A
    return MatrixFactorization(n, [g[4] for g in gens[0]], [g[4] for g in gens[1]],
                               mats[0], mats[1], N.potential - M.potential)


# ---------------------------------------------------------------------------
# q-slices of a potential-zero factorization


def monomials_of_degree(codes: Sequence[int], degree: int, n: int):
    """All monomials (sorted tuples) in the given variables of the given q-degree."""
    codes = sorted(codes)
    weights = [var_weight(c, n) for c in codes]
    out = []

    def rec(i, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if i == len(codes):
            return
        w = weights[i]
        e = 0
        while e * w <= remaining:
            rec(i + 1, remaining - e * w, acc + ([(codes[i], e)] if e else []))
            e += 1

    if degree >= 0:
        rec(0, degree, [])
    return out


class Slicer:
    """Q-linear pieces of a factorization in fixed total q-degree.

    A basis vector of the slice of parity p and degree D is a pair
    (generator index, monomial) with deg(monomial) + deg(generator) = D.
    """

    def __init__(self, M: MatrixFactorization, codes: Iterable[int]):
        self.M = M
        self.codes = sorted(set(codes))
        self.n = M.n
        self._mono_cache = {}

    def monos(self, d):
        if d not in self._mono_cache:
            self._mono_cache[d] = monomials_of_degree(self.codes, d, self.n)
        return self._mono_cache[d]

    def basis(self, parity, D):
        out = []
        for g, deg in enumerate(self.M.degrees(parity)):
            for m in self.monos(D - deg):
                out.append((g, m))
        return out

    def apply(self, parity, vec: dict) -> dict:
        """Apply the differential leaving ``parity`` to a slice vector."""
        dmat = self.M.diff(parity)
        out: dict = {}
        for (g, m), c in vec.items():
            for t, row in enumerate(dmat):
                e = row[g]
                if not e:
                    continue
                for m2, c2 in e.terms.items():
                    key = (t, _mono_mul(m, m2))
                    s = out.get(key, 0) + c * c2
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        return out

    def homology(self, parity, D):
        """(cycles, boundaries) of the given parity in degree D as lists of
        slice vectors."""
        n = self.n
        src = self.basis(parity, D)
        images = [self.apply(parity, {b: Fraction(1)}) for b in src]
        ker = [{src[i]: c for i, c in k.items()} for k in kernel(images)]
        pre = self.basis(1 - parity, D - n - 1)
        bnd = [self.apply(1 - parity, {b: Fraction(1)}) for b in pre]
        bnd = [v for v in bnd if v]
        return ker, bnd

    def homology_dim(self, parity, D) -> int:
        ker, bnd = self.homology(parity, D)
        e = Echelon()
        for v in bnd:
            e.add(v)
        return len(ker) - len(e)


def _mono_mul(m1, m2):
    from .ring import mono_mul
    return mono_mul(m1, m2)


def poly_vec_to_slice(vec: dict, parity_deg: int | None = None) -> dict:
    """{generator: Poly} -> {(generator, monomial): coeff}."""
    out = {}
    for g, p in vec.items():
        for m, c in p.terms.items():
            out[(g, m)] = c
    return out


def slice_to_poly_vec(vec: dict, n: int) -> dict:
    out: dict = {}
    for (g, m), c in vec.items():
        out.setdefault(g, {})[m] = c
    return {g: Poly(t, n) for g, t in out.items()}


# ---------------------------------------------------------------------------
# Ext and local cohomology


@dataclass
class LocalCohomology:
    h0: list
    h1: list

    def dims(self):
        return {0: _count(self.h0), 1: _count(self.h1)}

    def swapped(self):
        return LocalCohomology(self.h1, self.h0)

    def shifted(self, k):
        return LocalCohomology([d + k for d in self.h0], [d + k for d in self.h1])

    def __add__(self, other):
        return LocalCohomology(sorted(self.h0 + other.h0), sorted(self.h1 + other.h1))

    def __eq__(self, other):
        return sorted(self.h0) == sorted(other.h0) and sorted(self.h1) == sorted(other.h1)


def _count(degs):
    out = {}
    for d in degs:
        out[d] = out.get(d, 0) + 1
    return dict(sorted(out.items()))


def ext(M: MatrixFactorization, N: MatrixFactorization, degrees: Iterable[int]):
    """Q-dimensions of Ext^0 and Ext^1 (homology of the Hom complex over the
    full polynomial ring) in the requested q-degrees."""
    if M.potential != N.potential:
        raise PotentialMismatch("ext needs equal potentials")
    H = hom_complex(M, N)
    sl = Slicer(H, H.variables() | M.variables() | N.variables())
    out = {}
    for D in degrees:
        out[D] = (sl.homology_dim(0, D), sl.homology_dim(1, D))
    return out


def reduce_mod(M: MatrixFactorization, codes: Iterable[int]) -> MatrixFactorization:
    codes = set(codes)
    return M.map_entries(lambda p: p.set_zero(codes))


def constant_homology(M: MatrixFactorization) -> LocalCohomology:
    """Homology of a factorization all of whose entries are constants (after
    reduction modulo the maximal ideal)."""
    res = {}
    for par in (0, 1):
        src_deg = M.degrees(par)
        d_out = M.diff(par)
        d_in = M.diff(1 - par)
        images = [{t: d_out[t][s].constant_term() for t in range(len(d_out)) if d_out[t][s].constant_term()}
                  for s in range(len(src_deg))]
        bnd = []
        for s in range(len(M.degrees(1 - par))):
            v = {t: d_in[t][s].constant_term() for t in range(len(d_in)) if d_in[t][s].constant_term()}
            if v:
                bnd.append(v)
        # differentials respect the grading, so count per degree
        degs = []
        for D in sorted(set(src_deg)):
            kd = len(kernel([images[i] for i, g in enumerate(src_deg) if g == D]))
            e = Echelon()
            for v in bnd:
                if src_deg[next(iter(v))] == D:
                    e.add(v)
            degs += [D] * (kd - len(e))
        res[par] = degs
    return LocalCohomology(res[0], res[1])


def local_cohomology(M: MatrixFactorization, internal: Iterable[int] = ()) -> LocalCohomology:
    """Homology of M/mM where m is generated by the a's and all variables not
    listed as internal.  Internal variables stay polynomial; at most one is
    supported here (Koszul factorizations have a more general routine)."""
    internal = set(internal)
    ground = M.variables() - internal
    R = reduce_mod(M, ground)
    live = R.variables()
    if not live:
        return constant_homology(R)
    if len(live) == 1:
        from .smith import univariate_homology
        return univariate_homology(R, live.pop())
    raise NotImplementedError("local cohomology with several internal variables "
                              "needs a Koszul presentation")


# ---------------------------------------------------------------------------
# simplification by cancelling unit entries


def _find_unit(M: MatrixFactorization):
    for par in (0, 1):
        D = M.diff(par)
        for t, row in enumerate(D):
            for s, e in enumerate(row):
                if e and e.is_constant():
                    return par, t, s
    return None


def cancel_unit(M: MatrixFactorization, t: int, s: int):
    """Gaussian elimination of the unit entry d0[t][s].

    Returns (M', pi, iota) where pi: M -> M' and iota: M' -> M are given as
    pairs of matrices (on M^0, M^1) and are mutually inverse homotopy
    equivalences.
    """
    n = M.n
    r0, r1 = M.rank
    u = M.d0[t][s].constant_term()
    uinv = Fraction(1) / u
    keep0 = [i for i in range(r0) if i != s]
    keep1 = [j for j in range(r1) if j != t]
    # d0 = [[u, alpha], [beta, delta]] with A = (s), B = (t)
    alpha = {i: M.d0[t][i] for i in keep0}
    beta = {j: M.d0[j][s] for j in keep1}
    nd0 = [[M.d0[j][i] - beta[j] * alpha[i] * uinv for i in keep0] for j in keep1]
    nd1 = [[M.d1[i][j] for j in keep1] for i in keep0]
    N = MatrixFactorization(n, [M.deg0[i] for i in keep0], [M.deg1[j] for j in keep1],
                            nd0, nd1, M.potential,
                            [M.labels0[i] for i in keep0], [M.labels1[j] for j in keep1])
    one, zero = Poly.const(1, n), Poly.zero(n)
    # pi on M^0 drops s; on M^1 sends (b, b') to b' - beta u^-1 b
    pi0 = [[one if i == k else zero for k in range(r0)] for i in keep0]
    pi1 = []
    for j in keep1:
        row = [zero] * r1
        row[j] = one
        row[t] = -beta[j] * uinv
        pi1.append(row)
    # iota on M^0: a' -> (-u^-1 alpha a', a'); on M^1: b' -> (0, b')
    iota0 = []
    for k in range(r0):
        if k == s:
            iota0.append([-alpha[i] * uinv for i in keep0])
        else:
            iota0.append([one if i == k else zero for i in keep0])
    iota1 = [[one if j == k else zero for j in keep1] for k in range(r1)]
    return N, (pi0, pi1), (iota0, iota1)


def simplify_units(M: MatrixFactorization):
    """Cancel unit entries until none remain.  Returns (M', pi, iota) with
    composite transport matrices."""
    n = M.n
    pi = ( _identity(len(M.deg0), n), _identity(len(M.deg1), n))
    iota = (_identity(len(M.deg0), n), _identity(len(M.deg1), n))
    while True:
        hit = _find_unit(M)
        if hit is None:
            return M, pi, iota
        par, t, s = hit
        if par == 0:
            N, p, i = cancel_unit(M, t, s)
        else:
            Nc, p, i = cancel_unit(shift_c(M), t, s)
            N = shift_c(Nc)
            p, i = (p[1], p[0]), (i[1], i[0])
        pi = (mat_mul(p[0], pi[0], n) if pi[0] else p[0], mat_mul(p[1], pi[1], n) if pi[1] else p[1])
        iota = (_mm(iota[0], i[0], n), _mm(iota[1], i[1], n))
        M = N


def _mm(A, B, n):
    if not A or not B or not B[0]:
        return [[Poly.zero(n) for _ in range(len(B[0]) if B else 0)] for _ in range(len(A))]
    return mat_mul(A, B, n)


def _identity(k, n):
    return [[Poly.const(1 if i == j else 0, n) for j in range(k)] for i in range(k)]


def simplify(M: MatrixFactorization, protected_vars: Iterable[int] = ()) -> MatrixFactorization:
    """Cancel unit entries; Koszul factorizations additionally support
    exclusion of unprotected variables (see ``koszul.KoszulMF.simplify``)."""
    return simplify_units(M)[0]


def morphism_matrix_mod(F, codes):
    return [[e.set_zero(codes) for e in row] for row in F]


def is_homotopy_iso(f: MFMorphism) -> bool:
    """Criterion via the induced map modulo the maximal ideal: f is a homotopy
    equivalence iff it induces an isomorphism on local cohomology.  Both ends
    must be free over the ground ring (no internal variables)."""
    M, N = f.source, f.target
    if M.potential != N.potential:
        raise PotentialMismatch("morphism between different potentials")
    codes = M.variables() | N.variables()
    for (F, par) in ((f.f0, 0), (f.f1, 1)):
        for row in F:
            for e in row:
                codes |= e.variables()
    Mb, Nb = reduce_mod(M, codes), reduce_mod(N, codes)
    for par, F in ((0, f.f0), (1, f.f1)):
        if not _induced_iso(Mb, Nb, par, morphism_matrix_mod(F, codes)):
            return False
    return True


def _cycles_and_boundaries(M, par):
    d_out, d_in = M.diff(par), M.diff(1 - par)
    src = len(M.degrees(par))
    images = [{t: d_out[t][s].constant_term() for t in range(len(d_out)) if d_out[t][s]} for s in range(src)]
    ker = kernel(images)
    bnd = []
    for s in range(len(M.degrees(1 - par))):
        v = {t: d_in[t][s].constant_term() for t in range(len(d_in)) if d_in[t][s]}
        if v:
            bnd.append(v)
    return ker, bnd


def _induced_iso(M, N, par, F) -> bool:
    zM, bM = _cycles_and_boundaries(M, par)
    zN, bN = _cycles_and_boundaries(N, par)
    eM = Echelon()
    for v in bM:
        eM.add(v)
    hM = [z for z in zM if eM.add(z) is None]
    eN = Echelon()
    for v in bN:
        eN.add(v)
    dimN = len([z for z in zN if eN.add(z) is None])
    if len(hM) != dimN:
        return False
    # images of homology representatives must be independent modulo boundaries
    e = Echelon()
    for v in bN:
        e.add(v)
    for z in hM:
        img = {}
        for s, c in z.items():
            for t in range(len(F)):
                x = F[t][s].constant_term()
                if x:
                    img[t] = img.get(t, 0) + c * x
        img = {k: v for k, v in img.items() if v}
        if e.add(img) is not None:
            return False
    return True


def is_null_homotopic(f: MFMorphism) -> bool:
    """Decide whether an even homogeneous morphism is null-homotopic, by testing
    whether it is a boundary in the q-slice of the Hom complex it lives in."""
    M, N = f.source, f.target
    if f.odd:
        raise NotImplementedError("only even morphisms are supported")
    H = hom_complex(M, N)
    index = {}
    k = 0
    for q, p in product((0, 1), repeat=2):
        for t in range(len(N.degrees(q))):
            for s in range(len(M.degrees(p))):
                if (q - p) % 2 == 0:
                    index[(q, t, p, s)] = k
                    k += 1
    vec: dict = {}
    D = None
    for par, F in ((0, f.f0), (1, f.f1)):
        for t, row in enumerate(F):
            for s, e in enumerate(row):
                for m, c in e.terms.items():
                    g = index[(par, t, par, s)]
                    d = H.deg0[g] + mono_degree(m, M.n)
                    if D is None:
                        D = d
                    elif d != D:
                        raise InvariantError("morphism is not homogeneous")
                    vec[(g, m)] = vec.get((g, m), 0) + c
    vec = {key: c for key, c in vec.items() if c}
    if not vec:
        return True
    sl = Slicer(H, H.variables() | M.variables() | N.variables())
    e = Echelon()
    for b in sl.basis(1, D - M.n - 1):
        img = sl.apply(1, {b: Fraction(1)})
        if img:
            e.add(img)
    return e.contains(vec)
