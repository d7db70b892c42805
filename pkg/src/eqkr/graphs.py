"""MOY graphs, their factorizations, the loop algebra and the maps chi_0, chi_1.

A graph is given by marks (integers), thin arcs ``(j, i)`` running from mark
j to mark i, thick edges ``(x1, x2, x3, x4)`` with x1, x2 leaving and x3, x4
entering, and a number of markless loops.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .koszul import KoszulMF
from .mf import InvariantError, LocalCohomology, MatrixFactorization, MFMorphism
from .ring import Poly, P_prime, big_u1, big_u2, exact_divide, pi_ij


class MalformedGraph(ValueError):
    pass


@dataclass
class MOYGraph:
    boundary: list = field(default_factory=list)
    arcs: list = field(default_factory=list)
    thick: list = field(default_factory=list)
    loops: int = 0

    @classmethod
    def from_json(cls, text_or_obj) -> "MOYGraph":
        obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
        try:
            g = cls([int(x) for x in obj.get("boundary", [])],
                    [tuple(int(x) for x in a) for a in obj.get("arcs", [])],
                    [tuple(int(x) for x in t) for t in obj.get("thick", [])],
                    int(obj.get("loops", 0)))
        except (TypeError, ValueError, AttributeError) as exc:
            raise MalformedGraph(str(exc)) from exc
        g.validate()
        return g

    def to_json(self) -> str:
        return json.dumps({"boundary": self.boundary, "arcs": [list(a) for a in self.arcs],
                           "thick": [list(t) for t in self.thick], "loops": self.loops})

    def ends(self):
        """Return (heads, tails): how often each mark ends a piece (flow arrives
        at the mark) and starts a piece (flow leaves the mark)."""
        heads, tails = {}, {}
        for j, i in self.arcs:
            tails[j] = tails.get(j, 0) + 1
            heads[i] = heads.get(i, 0) + 1
        for x1, x2, x3, x4 in self.thick:
            for m in (x1, x2):
                heads[m] = heads.get(m, 0) + 1
            for m in (x3, x4):
                tails[m] = tails.get(m, 0) + 1
        return heads, tails

    def marks(self) -> set:
        out = set(self.boundary)
        for a in self.arcs:
            out |= set(a)
        for t in self.thick:
            out |= set(t)
        return out

    def internal(self) -> set:
        return self.marks() - set(self.boundary)

    def validate(self):
        for t in self.thick:
            if len(t) != 4 or len(set(t)) != 4:
                raise MalformedGraph(f"thick edge needs four distinct marks: {t}")
        for a in self.arcs:
            if len(a) != 2:
                raise MalformedGraph(f"arc needs two marks: {a}")
        if self.loops < 0:
            raise MalformedGraph("negative loop count")
        heads, tails = self.ends()
        for m in self.marks():
            h, t = heads.get(m, 0), tails.get(m, 0)
            if m in self.boundary:
                if h + t != 1:
                    raise MalformedGraph(f"boundary mark {m} must meet exactly one edge end")
            elif (h, t) != (1, 1):
                raise MalformedGraph(f"internal mark {m} must be entered once and left once")
        return self

    def boundary_signs(self) -> dict:
        """+1 for boundary marks where flow leaves the graph, -1 where it enters."""
        heads, _ = self.ends()
        return {m: (1 if heads.get(m, 0) else -1) for m in self.boundary}

    def potential(self, n) -> Poly:
        from .ring import P
        w = Poly.zero(n)
        for m, s in self.boundary_signs().items():
            w = w + P(m, n) * s
        return w


def arc_rows(n, j, i):
    """The factorization L_j^i of an arc from j to i as (b, c, shift)."""
    if i == j:
        return P_prime(i, n), Poly.zero(n), 1 - n
    return pi_ij(i, j, n), Poly.x(i, n) - Poly.x(j, n), 1 - n


def thick_rows(n, marks):
    x1, x2, x3, x4 = (Poly.x(m, n) for m in marks)
    return [(big_u1(n, marks), x1 + x2 - x3 - x4, 1 - n),
            (big_u2(n, marks), x1 * x2 - x3 * x4, 3 - n)]


def compile_koszul(g: MOYGraph, n: int) -> KoszulMF:
    g.validate()
    b, c, s = [], [], []
    base = 0
    for t in g.thick:
        for row in thick_rows(n, t):
            b.append(row[0]); c.append(row[1]); s.append(row[2])
        base -= 1
    for j, i in g.arcs:
        row = arc_rows(n, j, i)
        b.append(row[0]); c.append(row[1]); s.append(row[2])
    fresh = max(g.marks(), default=0) + 1
    for k in range(g.loops):
        row = arc_rows(n, fresh + k, fresh + k)
        b.append(row[0]); c.append(row[1]); s.append(row[2])
    K = KoszulMF(n, b, c, s, base, 0)
    K.check_rows()
    if K.potential != g.potential(n):
        raise InvariantError("graph potential mismatch")
    return K


def compile(g: MOYGraph, n: int) -> MatrixFactorization:
    """C(Gamma) as an explicit factorization (internal marks not yet excluded)."""
    return compile_koszul(g, n).to_mf().check()


def graph_local_cohomology(g: MOYGraph, n: int):
    from .koszul import koszul_local_cohomology
    K = compile_koszul(g, n)
    return koszul_local_cohomology(K, internal=g.internal() | _loop_marks(g))


def _loop_marks(g):
    fresh = max(g.marks(), default=0) + 1
    return set(range(fresh, fresh + g.loops))


# ---------------------------------------------------------------------------
# loop algebra


class LoopAlgebra:
    """Q[a][x]/(x^n + a_{n-2} x^{n-2} + ... + a_0) with basis 1, x, ..., x^{n-1}.

    Elements are lists of n polynomials in the a's.
    """

    def __init__(self, n: int):
        self.n = n

    def zero(self):
        return [Poly.zero(self.n) for _ in range(self.n)]

    def unit(self):
        v = self.zero()
        v[0] = Poly.const(1, self.n)
        return v

    def x_power(self, k: int):
        v = [Poly.zero(self.n) for _ in range(max(k + 1, self.n))]
        v[k] = Poly.const(1, self.n)
        return self.reduce(v)

    def reduce(self, coeffs):
        """Reduce a coefficient list of any length using x^n = -sum a_j x^j."""
        n = self.n
        c = list(coeffs)
        for k in range(len(c) - 1, n - 1, -1):
            top = c[k]
            if top:
                for j in range(n - 1):
                    c[k - n + j] = c[k - n + j] - top * Poly.a(j, n)
            c[k] = Poly.zero(n)
        c = c[:n] + [Poly.zero(n)] * (n - len(c))
        return c

    def mul(self, p, q):
        n = self.n
        out = [Poly.zero(n) for _ in range(2 * n - 1)]
        for i, a in enumerate(p):
            if not a:
                continue
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
        return self.reduce(out)

    def trace(self, p) -> Poly:
        return p[self.n - 1]

    def from_poly(self, f: Poly, code: int):
        """Element represented by a polynomial in the mark ``code`` (and a's)."""
        deg = max(f.degree_in(code), 0)
        coeffs = [Poly.zero(self.n) for _ in range(max(deg + 1, self.n))]
        for m, c in f.terms.items():
            d = dict(m)
            e = d.pop(code, 0)
            coeffs[e] = coeffs[e] + Poly({tuple(sorted(d.items())): c}, self.n)
        return self.reduce(coeffs)


def algebra_mul(n, p, q):
    return LoopAlgebra(n).mul(p, q)


def algebra_trace(n, p):
    return LoopAlgebra(n).trace(p)


def algebra_unit(n):
    return LoopAlgebra(n).unit()


# ---------------------------------------------------------------------------
# chi maps


GAMMA0_ARCS = ((4, 1), (3, 2))  # arcs x4 -> x1 and x3 -> x2


def gamma0(n, marks=(1, 2, 3, 4)) -> KoszulMF:
    x1, x2, x3, x4 = marks
    rows = [arc_rows(n, x4, x1), arc_rows(n, x3, x2)]
    return KoszulMF(n, [r[0] for r in rows], [r[1] for r in rows], [r[2] for r in rows], 0, 0)


def gamma1(n, marks=(1, 2, 3, 4)) -> KoszulMF:
    rows = thick_rows(n, marks)
    return KoszulMF(n, [r[0] for r in rows], [r[1] for r in rows], [r[2] for r in rows], -1, 0)


def chi_local(n, mu=1, lam=0, marks=(1, 2, 3, 4)):
    """The chi maps as dicts {source local generator: [(target, entry)]}.

    Local generators are bitmasks over the two rows (bit 0 = first row):
    0 = empty, 3 = both, 1 = first, 2 = second.
    """
    x1, x2, x3, x4 = (Poly.x(m, n) for m in marks)
    i1, i2, i3, i4 = marks
    U1, U2 = big_u1(n, marks), big_u2(n, marks)
    P23 = pi_ij(i2, i3, n)
    num = U1 + x1 * U2 - P23
    k1 = U2 * (mu - 1) + exact_divide(num, x1 - x4)
    k2 = U2 * lam + exact_divide(num, x4 - x1)
    k3 = (x3 + x4 - x1 - x2) * lam + x1 - x3
    one = Poly.const(1, n)
    # matrices act on columns: entry [target][source]
    U0 = [[x4 - x2 + (x1 + x2 - x3 - x4) * mu, Poly.zero(n)], [k1, one]]
    Uo = [[x4 + (x1 - x4) * mu, (x2 - x3) * mu - x2], [-one, one]]
    V0 = [[one, Poly.zero(n)], [k2, k3]]
    Vo = [[one, x3 + (x2 - x3) * lam], [one, x1 + (x4 - x1) * lam]]
    even, odd = (0, 3), (1, 2)

    def as_dict(M0, M1):
        out = {}
        for gens, M in ((even, M0), (odd, M1)):
            for s, J in enumerate(gens):
                out[J] = [(gens[t], M[t][s]) for t in range(2) if M[t][s]]
        return out

    return as_dict(U0, Uo), as_dict(V0, Vo), (U0, Uo, V0, Vo)


@dataclass
class ChiPair:
    chi0: MFMorphism
    chi1: MFMorphism
    mu: int
    lam: int


def chi_maps(n, mu=1, lam=0, marks=(1, 2, 3, 4)) -> ChiPair:
    G0 = gamma0(n, marks).to_mf().check()
    G1 = gamma1(n, marks).to_mf().check()
    _, _, (U0, Uo, V0, Vo) = chi_local(n, mu, lam, marks)
    c0 = MFMorphism(G0, G1, U0, Uo, 1).check()
    c1 = MFMorphism(G1, G0, V0, Vo, 1).check()
    return ChiPair(c0, c1, mu, lam)


def apply_local(chi: dict, v: dict, offset: int) -> dict:
    """Apply a two-row local map to rows (offset, offset+1) of a vector {J: Poly}."""
    out: dict = {}
    mask = 3 << offset
    for J, p in v.items():
        loc = (J >> offset) & 3
        rest = J & ~mask
        for T, e in chi.get(loc, []):
            K = rest | (T << offset)
            q = e * p
            s = out[K] + q if K in out else q
            if s:
                out[K] = s
            else:
                out.pop(K, None)
    return out


# ---------------------------------------------------------------------------
# direct sum decompositions


@dataclass
class DSDReport:
    name: str
    n: int
    passed: bool
    details: list = field(default_factory=list)

    def __bool__(self):
        return self.passed

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{self.name} n={self.n}: {status}" + ("" if not self.details else "; " + "; ".join(self.details))


def _koszul(n, rows, base_shift=0):
    return KoszulMF(n, [r[0] for r in rows], [r[1] for r in rows], [r[2] for r in rows], base_shift, 0)


def _lc(g: MOYGraph, n):
    return graph_local_cohomology(g, n)


def _boundary_zero(v: dict, codes) -> dict:
    out = {}
    for J, p in v.items():
        q = p.set_zero(codes)
        if q:
            out[J] = q
    return out


def _scale(v: dict, f: Poly) -> dict:
    out = {}
    for J, p in v.items():
        q = p * f
        if q:
            out[J] = q
    return out


def _vsum(u: dict, v: dict) -> dict:
    out = dict(u)
    for J, p in v.items():
        s = out[J] + p if J in out else p
        if s:
            out[J] = s
        else:
            out.pop(J, None)
    return out


class _Circle:
    """Unit and trace for a circle made of two arcs ``row_a`` (carrying the
    mark ``drop``, which is excluded) and the last row of a Koszul
    factorization (whose surviving mark is ``keep``)."""

    def __init__(self, K: KoszulMF, row_a: int, drop: int, keep: int):
        lin = K.c[row_a].linear_in(drop)
        if lin is None:
            raise InvariantError("circle row is not linear in the mark to drop")
        self.ex = K.exclude(row_a, "c", drop, lin[0], lin[1])
        self.top = self.ex.new.k - 1
        self.keep = keep
        self.n = K.n
        if self.ex.new.c[self.top]:
            raise InvariantError("circle row does not close up after exclusion")

    def unit(self, v: dict) -> dict:
        """v lives on the rows other than the circle rows (in order)."""
        w = {J | (1 << self.top): p for J, p in v.items()}
        return self.ex.lift(w)

    def trace(self, v: dict) -> dict:
        alg = LoopAlgebra(self.n)
        out: dict = {}
        for J, p in self.ex.project(v).items():
            if J >> self.top & 1:
                t = alg.trace(alg.from_poly(p, self.keep))
                if t:
                    K = J & ~(1 << self.top)
                    out[K] = out[K] + t if K in out else t
        return {J: p for J, p in out.items() if p}


def _map_degree(src: KoszulMF, tgt: KoszulMF, f, J=0):
    """q-degree of a homogeneous map evaluated on one source generator."""
    img = f({J: Poly.const(1, src.n)})
    degs = {tgt.degree(T) + p.degree() for T, p in img.items() for _ in [0] if p.is_homogeneous()}
    if len(degs) != 1 or any(not p.is_homogeneous() for p in img.values()):
        raise InvariantError("map is not homogeneous")
    return degs.pop() - src.degree(J)


def _is_chain_map(src: KoszulMF, tgt: KoszulMF, f) -> bool:
    """d f = f d or d f = -f d on every generator (odd maps anticommute)."""
    signs = set()
    for J in src.generators():
        e = {J: Poly.const(1, src.n)}
        lhs = tgt.apply(f(e))
        rhs = f(src.apply(e))
        if lhs == rhs and not lhs:
            continue
        if lhs == rhs:
            signs.add(1)
        elif _vsum(lhs, rhs) == {}:
            signs.add(-1)
        else:
            return False
    return len(signs) <= 1


def _mod_m_matrix(src: KoszulMF, maps, ground):
    """Rank of the block map sum(maps) on H(src / m) where src has no internal
    marks and all its entries vanish modulo m.  maps[k][i] acts from summand
    i to summand k."""
    from .linalg import rank
    for e in src.b + src.c:
        if e.set_zero(ground):
            raise InvariantError("source factorization is not minimal")
    gens = src.generators()
    size = len(gens)
    cols = []
    for i in range(len(maps[0]) if maps else 0):
        for J in gens:
            col = {}
            for k in range(len(maps)):
                img = _boundary_zero(maps[k][i]({J: Poly.const(1, src.n)}), ground)
                for T, p in img.items():
                    c = p.constant_term()
                    if c:
                        col[k * size + T] = c
            cols.append(col)
    return rank(cols), len(cols)


def dsd0_check(n: int) -> DSDReport:
    """The circle is a direct sum of n shifted copies of the empty graph:
    D0 = sum x^i iota and its inverse sum eps x^(n-1-i) compose to
    unitriangular matrices over Q[a], equal to the identity modulo a."""
    alg = LoopAlgebra(n)
    details = []
    M = [[alg.trace(alg.mul(alg.x_power(n - 1 - i), alg.x_power(j))) for j in range(n)] for i in range(n)]
    ok = all((M[i][j] == Poly.const(1 if i == j else 0, n)) if j <= i else True
             for i in range(n) for j in range(n))
    ok = ok and all(M[i][j].set_zero({-(k + 1) for k in range(n - 1)}) == Poly.const(int(i == j), n)
                    for i in range(n) for j in range(n))
    details.append("D0^-1 D0 unitriangular" if ok else "D0^-1 D0 not unitriangular")
    # the other composite on the basis x^k of A
    ok2 = True
    for k in range(n):
        acc = alg.zero()
        for i in range(n):
            t = alg.trace(alg.mul(alg.x_power(n - 1 - i), alg.x_power(k)))
            acc = [a + t * b for a, b in zip(acc, alg.x_power(i))]
        red = [p.set_zero({-(j + 1) for j in range(n - 1)}) for p in acc]
        ok2 = ok2 and red == alg.x_power(k)
    details.append("D0 D0^-1 = id mod a" if ok2 else "D0 D0^-1 != id mod a")
    # grading: summand i sits where x^i sits in the circle's cohomology
    circ = _lc(MOYGraph(loops=1), n)
    want = [1 - n + 2 * i for i in range(n)]
    ok3 = sorted(circ.h1) == want and not circ.h0
    details.append(f"circle degrees {sorted(circ.h1)}")
    return DSDReport("dsd0", n, ok and ok2 and ok3, details)


def dsdI_graphs():
    gamma = MOYGraph(boundary=[1, 4], arcs=[(2, 3)], thick=[(1, 2, 3, 4)])
    gamma1 = MOYGraph(boundary=[1, 4], arcs=[(4, 1)])
    return gamma, gamma1


def dsdI_check(n: int) -> DSDReport:
    """C(Gamma) = sum_i C(Gamma_1)<1>{...} for the thick edge with a loop."""
    details = []
    G0 = _koszul(n, [arc_rows(n, 4, 1), arc_rows(n, 3, 2), arc_rows(n, 2, 3)])
    G = _koszul(n, thick_rows(n, (1, 2, 3, 4)) + [arc_rows(n, 2, 3)], -1)
    G1 = _koszul(n, [arc_rows(n, 4, 1)])
    circle = _Circle(G0, 1, 3, 2)
    c0, c1, _ = chi_local(n, 1, 0, (1, 2, 3, 4))
    x1, x2 = Poly.x(1, n), Poly.x(2, n)

    def alpha(i):
        f = sum((x1 ** j * x2 ** (i - j) for j in range(i + 1)), Poly.zero(n))
        return lambda v: _scale(apply_local(c0, circle.unit(v), 0), f)

    # the multiplier of beta_i is the out-mark lying on the loop (mark 2 here)
    def beta(i):
        f = x2 ** (n - i - 2)
        return lambda v: circle.trace(apply_local(c1, _scale(v, f), 0))

    m = n - 1
    ground = {1, 4} | {-(j + 1) for j in range(n - 1)}
    comp = [[(lambda k, i: (lambda v: beta(k)(alpha(i)(v))))(k, i) for i in range(m)] for k in range(m)]
    r, size = _mod_m_matrix(G1, comp, ground)
    chain = all(_is_chain_map(G1, G, alpha(i)) and _is_chain_map(G, G1, beta(i)) for i in range(m))
    ok_maps = r == size and chain
    details.append(f"beta' alpha' rank {r}/{size} on local cohomology")
    if not chain:
        details.append("alpha_i or beta_i is not a chain map")
    shifts = [_map_degree(G1, G, alpha(i)) for i in range(m)]
    details.append(f"alpha_i degrees {shifts}")
    lhs = _lc(dsdI_graphs()[0], n)
    rhs = LocalCohomology([], [])
    base = _lc(dsdI_graphs()[1], n)
    for s in shifts:
        rhs = rhs + base.swapped().shifted(s)
    ok_dims = lhs == rhs
    spaced = all(b - a == 2 for a, b in zip(shifts, shifts[1:]))
    details.append("dims match" if ok_dims else f"dims differ: {lhs} vs {rhs}")
    return DSDReport("dsdI", n, ok_maps and ok_dims and spaced, details)


def dsdII_graphs():
    gamma = MOYGraph(boundary=[1, 2, 3, 4], thick=[(1, 2, 5, 6), (5, 6, 3, 4)])
    gamma1 = MOYGraph(boundary=[1, 2, 3, 4], thick=[(1, 2, 3, 4)])
    return gamma, gamma1


def dsdII_check(n: int) -> DSDReport:
    """Two stacked thick edges = C(Gamma_1){1} + C(Gamma_1){-1} (dimensions)."""
    g, g1 = dsdII_graphs()
    lhs, base = _lc(g, n), _lc(g1, n)
    rhs = base.shifted(1) + base.shifted(-1)
    ok = lhs == rhs
    return DSDReport("dsdII", n, ok, ["dims match" if ok else f"dims differ: {lhs} vs {rhs}"])


def dsdIII_graphs():
    gamma = MOYGraph(boundary=[1, 2, 3, 4], thick=[(1, 5, 6, 2), (3, 6, 5, 4)])
    gamma1 = MOYGraph(boundary=[1, 2, 3, 4], arcs=[(2, 1), (4, 3)])   # vertical pair
    gamma2 = MOYGraph(boundary=[1, 2, 3, 4], arcs=[(2, 3), (4, 1)])   # horizontal pair
    return gamma, gamma1, gamma2


def dsdIII_check(n: int) -> DSDReport:
    """C(Gamma) = C(Gamma_2) + sum_{i<=n-3} C(Gamma_1)<1>{...}.  The maps alpha_i
    and beta_i into and out of the Gamma_1 summands are built explicitly;
    the Gamma_2 summand is accounted for by dimensions."""
    details = []
    rows0 = [arc_rows(n, 2, 1), arc_rows(n, 6, 5), arc_rows(n, 4, 3), arc_rows(n, 5, 6)]
    G0 = _koszul(n, rows0)
    G = _koszul(n, thick_rows(n, (1, 5, 6, 2)) + thick_rows(n, (3, 6, 5, 4)), -2)
    G1 = _koszul(n, [arc_rows(n, 2, 1), arc_rows(n, 4, 3)])
    circle = _Circle(G0, 1, 6, 5)
    left = chi_local(n, 1, 0, (1, 5, 6, 2))
    right = chi_local(n, 1, 0, (3, 6, 5, 4))
    x = {k: Poly.x(k, n) for k in range(1, 6)}

    def unit(v):
        # G1 rows (2->1, 4->3) sit at positions 0 and 1 of the excluded factorization
        return circle.unit(v)

    def alpha(i):
        def f(v):
            w = apply_local(left[0], unit(v), 0)
            w = apply_local(right[0], w, 2)
            return _scale(w, x[5] ** i)
        return f

    def beta(i):
        s = Poly.zero(n)
        for a in range(n - 2 - i):
            for b in range(n - 2 - i - a):
                c = n - 3 - i - a - b
                # the c-exponent goes on the circle mark 5, the others on boundary marks
                s = s + x[2] ** a * x[4] ** b * x[5] ** c

        def f(v):
            w = apply_local(right[1], _scale(v, s), 2)
            w = apply_local(left[1], w, 0)
            return circle.trace(w)
        return f

    m = n - 2
    ground = {1, 2, 3, 4} | {-(j + 1) for j in range(n - 1)}
    g, g1, g2 = dsdIII_graphs()
    lhs = _lc(g, n)
    rhs = _lc(g2, n)
    ok_maps = True
    if m > 0:
        comp = [[(lambda k, i: (lambda v: beta(k)(alpha(i)(v))))(k, i) for i in range(m)] for k in range(m)]
        r, size = _mod_m_matrix(G1, comp, ground)
        chain = all(_is_chain_map(G1, G, alpha(i)) and _is_chain_map(G, G1, beta(i)) for i in range(m))
        ok_maps = r == size and chain
        details.append(f"beta' alpha' rank {r}/{size} on local cohomology")
        if not chain:
            details.append("alpha_i or beta_i is not a chain map")
        shifts = [_map_degree(G1, G, alpha(i)) for i in range(m)]
        details.append(f"alpha_i degrees {shifts}")
        base = _lc(g1, n)
        for s in shifts:
            rhs = rhs + base.swapped().shifted(s)
    else:
        details.append("no Gamma_1 summands at this n")
    ok_dims = lhs == rhs
    details.append("dims match" if ok_dims else f"dims differ: {lhs} vs {rhs}")
    return DSDReport("dsdIII", n, ok_maps and ok_dims, details)


def thick_braid_graph(word, strands: int) -> MOYGraph:
    """Stack thick edges between positions (i, i+1) for each i in ``word``
    (1-based), bottom to top; flow goes upward."""
    bottom = list(range(1, strands + 1))
    cur = list(bottom)
    nxt = strands + 1
    thick = []
    for i in word:
        p = i - 1
        o1, o2 = nxt, nxt + 1
        nxt += 2
        thick.append((o1, o2, cur[p], cur[p + 1]))
        cur[p], cur[p + 1] = o1, o2
    arcs = []
    top = []
    for p in range(strands):
        if cur[p] == bottom[p]:
            arcs.append((bottom[p], nxt))
            top.append(nxt)
            nxt += 1
        else:
            top.append(cur[p])
    return MOYGraph(boundary=bottom + top, arcs=arcs, thick=thick)


def dsdIV_graphs():
    return tuple(thick_braid_graph(w, 3) for w in ((1, 2, 1), (2,), (2, 1, 2), (1,)))


def _relabel_top(g: MOYGraph, strands=3) -> MOYGraph:
    """Rename the top boundary marks to 101, 102, 103 so graphs with
    different internal structure share their boundary."""
    top = g.boundary[strands:]
    ren = {m: 101 + k for k, m in enumerate(top)}
    f = lambda m: ren.get(m, m)
    return MOYGraph([f(m) for m in g.boundary], [tuple(map(f, a)) for a in g.arcs],
                    [tuple(map(f, t)) for t in g.thick], g.loops)


def dsdIV_check(n: int) -> DSDReport:
    """C(Gamma_1) + C(Gamma_2) and C(Gamma_3) + C(Gamma_4) have equal local
    cohomology dimensions."""
    gs = [_relabel_top(g) for g in dsdIV_graphs()]
    pots = {g.potential(n) for g in gs}
    if len(pots) != 1:
        return DSDReport("dsdIV", n, False, ["graphs have different potentials"])
    lc = [_lc(g, n) for g in gs]
    lhs, rhs = lc[0] + lc[1], lc[2] + lc[3]
    ok = lhs == rhs
    return DSDReport("dsdIV", n, ok, ["dims match" if ok else f"dims differ: {lhs} vs {rhs}"])


def dsd_checks(n: int) -> list:
    return [dsd0_check(n), dsdI_check(n), dsdII_check(n), dsdIII_check(n), dsdIV_check(n)]
