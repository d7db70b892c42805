"""Koszul factorizations {b, c} and exclusion of variables.

Generators of a Koszul factorization with k rows are bitmasks J over the
rows.  Row r moves J -> J | r with entry b_r and J | r -> J with entry c_r,
each multiplied by (-1)^(number of rows s > r lying in J).  Row r carries the
q-shift s_r, and the generator J sits in degree base_shift + sum of s_r.

Vectors of the factorization are dicts ``{J: Poly}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import random
from fractions import Fraction
from typing import Sequence

from .ring import Poly, exact_divide, var_weight
from .mf import MatrixFactorization, InvariantError


def _popcount(x: int) -> int:
    return bin(x).count("1")


def row_sign(J: int, r: int) -> int:
    return -1 if _popcount(J >> (r + 1)) % 2 else 1


def _drop_bit(J: int, r: int) -> int:
    low = J & ((1 << r) - 1)
    high = J >> (r + 1)
    return low | (high << r)


def _insert_bit(J: int, r: int, bit: int) -> int:
    low = J & ((1 << r) - 1)
    high = J >> r
    return low | (bit << r) | (high << (r + 1))


def vec_add(u: dict, v: dict, scale=1) -> dict:
    out = dict(u)
    for k, p in v.items():
        s = out[k] + p * scale if k in out else p * scale
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_map(v: dict, f) -> dict:
    out = {}
    for k, p in v.items():
        q = f(p)
        if q:
            out[k] = q
    return out


@dataclass
class KoszulMF:
    n: int
    b: list
    c: list
    shifts: list
    base_shift: int = 0
    base_parity: int = 0

    @classmethod
    def build(cls, b, c, shifts=None, base_shift=0, base_parity=0) -> "KoszulMF":
        b, c = list(b), list(c)
        if len(b) != len(c):
            raise ValueError("b and c must have equal length")
        n = (b[0].n if b else 2)
        if shifts is None:
            shifts = []
            for bi, ci in zip(b, c):
                if ci:
                    shifts.append(ci.degree() - n - 1)
                elif bi:
                    shifts.append(n + 1 - bi.degree())
                else:
                    raise ValueError("cannot infer the shift of a zero row")
        K = cls(n, b, c, list(shifts), base_shift, base_parity)
        K.check_rows()
        return K

    @property
    def k(self):
        return len(self.b)

    def check_rows(self):
        n = self.n
        for bi, ci, s in zip(self.b, self.c, self.shifts):
            if bi and (not bi.is_homogeneous() or bi.degree() != n + 1 - s):
                raise InvariantError(f"row entry {bi} not of degree {n + 1 - s}")
            if ci and (not ci.is_homogeneous() or ci.degree() != n + 1 + s):
                raise InvariantError(f"row entry {ci} not of degree {n + 1 + s}")

    def check(self, potential=None, sample: int = 64) -> "KoszulMF":
        """Verify d o d = w Id without expanding to dense matrices.

        The cross terms of rows i != j carry the same polynomial along both
        paths, so they cancel exactly when the two path signs are opposite;
        that is checked on every generator (on the sample beyond 4096
        generators, where it is an implementation guard only: the sign rule
        makes it hold identically).  The diagonal terms give the
        potential, compared against ``potential`` when given.  d(d(e_J)) is
        also computed outright on all generators, or a seeded sample of them
        when there are more than ``sample``.
        """
        self.check_rows()
        w = self.potential
        if potential is not None and w != potential:
            raise InvariantError(f"potential {w} differs from expected {potential}")
        gens = self.generators()
        sampled = gens
        if len(gens) > sample:
            sampled = sorted(random.Random(len(gens)).sample(gens, sample))
        for J in gens if len(gens) <= 4096 else sampled:
            for i in range(self.k):
                for j in range(i):
                    one = row_sign(J, i) * row_sign(J ^ (1 << i), j)
                    two = row_sign(J, j) * row_sign(J ^ (1 << j), i)
                    if one != -two:
                        raise InvariantError(f"rows {i}, {j} commute on generator {J:b}")
        gens = sampled
        unit = Poly.const(1, self.n)
        for J in gens:
            if self.apply(self.apply({J: unit})) != ({J: w} if w else {}):
                raise InvariantError(f"d o d != w Id on generator {J:b}")
        return self

    @property
    def potential(self) -> Poly:
        w = Poly.zero(self.n)
        for bi, ci in zip(self.b, self.c):
            w = w + bi * ci
        return w

    def degree(self, J: int) -> int:
        return self.base_shift + sum(s for r, s in enumerate(self.shifts) if J >> r & 1)

    def parity(self, J: int) -> int:
        return (_popcount(J) + self.base_parity) % 2

    def generators(self, parity=None):
        gens = list(range(1 << self.k))
        if parity is None:
            return gens
        return [J for J in gens if self.parity(J) == parity % 2]

    def variables(self) -> set:
        vs = set()
        for p in self.b + self.c:
            vs |= p.variables()
        return vs

    def apply(self, v: dict) -> dict:
        """Apply the differential to a vector {J: Poly}."""
        out: dict = {}
        for J, p in v.items():
            for r in range(self.k):
                sgn = row_sign(J, r)
                if J >> r & 1:
                    e, T = self.c[r], J & ~(1 << r)
                else:
                    e, T = self.b[r], J | (1 << r)
                if e:
                    term = e * p * sgn
                    s = out[T] + term if T in out else term
                    if s:
                        out[T] = s
                    else:
                        out.pop(T, None)
        return out

    def to_mf(self) -> MatrixFactorization:
        n = self.n
        g0, g1 = self.generators(0), self.generators(1)
        i0 = {J: i for i, J in enumerate(g0)}
        i1 = {J: i for i, J in enumerate(g1)}
        d0 = [[Poly.zero(n) for _ in g0] for _ in g1]
        d1 = [[Poly.zero(n) for _ in g1] for _ in g0]
        for gens, idx_t, D in ((g0, i1, d0), (g1, i0, d1)):
            for s, J in enumerate(gens):
                for T, p in self.apply({J: Poly.const(1, n)}).items():
                    D[idx_t[T]][s] = p
        return MatrixFactorization(n, [self.degree(J) for J in g0], [self.degree(J) for J in g1],
                                   d0, d1, self.potential, g0, g1)

    def tensor(self, other: "KoszulMF") -> "KoszulMF":
        """Row concatenation; matches the sign rule of ``mf.tensor`` up to the
        obvious relabelling of generators."""
        return KoszulMF(self.n, self.b + other.b, self.c + other.c, self.shifts + other.shifts,
                        self.base_shift + other.base_shift,
                        (self.base_parity + other.base_parity) % 2)

    def shift_q(self, k: int) -> "KoszulMF":
        return KoszulMF(self.n, self.b, self.c, self.shifts, self.base_shift + k, self.base_parity)

    def map_entries(self, f) -> "KoszulMF":
        return KoszulMF(self.n, [f(p) for p in self.b], [f(p) for p in self.c], self.shifts,
                        self.base_shift, self.base_parity)

    # -- exclusion --------------------------------------------------------
    def find_exclusion(self, protected: set, min_row: int = 0):
        """First (row, side, code, lam, rest) with entry = lam*x + rest, x unprotected."""
        for side in ("c", "b"):
            entries = self.c if side == "c" else self.b
            for r, e in enumerate(entries):
                if r < min_row or not e or e.is_constant():
                    continue
                for code in sorted(e.variables()):
                    if code in protected or code < 0:
                        continue
                    lin = e.linear_in(code)
                    if lin is not None:
                        return r, side, code, lin[0], lin[1]
        return None

    def exclude(self, r: int, side: str, code: int, lam, rest) -> "Exclusion":
        s = -rest * (Fraction(1) / lam)  # x := s
        n = self.n
        keep = [i for i in range(self.k) if i != r]
        if side == "c":
            nb = [self.b[i].substitute(code, s) for i in keep]
            nc = [self.c[i].substitute(code, s) for i in keep]
            new = KoszulMF(n, nb, nc, [self.shifts[i] for i in keep],
                           self.base_shift, self.base_parity)
        else:
            nb, nc = [], []
            for i in keep:
                sg = -1 if i < r else 1
                nb.append(self.b[i].substitute(code, s) * sg)
                nc.append(self.c[i].substitute(code, s) * sg)
            new = KoszulMF(n, nb, nc, [self.shifts[i] for i in keep],
                           self.base_shift + self.shifts[r], (self.base_parity + 1) % 2)
        return Exclusion(self, new, r, side, code, s)

    def simplify(self, protected, min_row: int = 0) -> "ExclusionChain":
        """Exclude unprotected variables until no entry is linear in one.
        Only rows with index >= min_row are used as pivots; earlier rows keep
        their positions throughout."""
        protected = set(protected)
        chain = ExclusionChain(self)
        cur = self
        while True:
            hit = cur.find_exclusion(protected, min_row)
            if hit is None:
                break
            step = cur.exclude(*hit)
            chain.steps.append(step)
            cur = step.new
        chain.result = cur
        return chain


@dataclass
class Exclusion:
    old: KoszulMF
    new: KoszulMF
    r: int
    side: str
    code: int
    value: Poly
    _quot: list = field(default=None, repr=False, compare=False)

    def project(self, v: dict) -> dict:
        bit = 0 if self.side == "c" else 1
        out = {}
        for J, p in v.items():
            if (J >> self.r & 1) == bit:
                q = p.substitute(self.code, self.value)
                if q:
                    K = _drop_bit(J, self.r)
                    out[K] = out[K] + q if K in out else q
                    if not out[K]:
                        del out[K]
        return out

    def _quotients(self):
        """(e - e|x=value) / pivot for every entry e of another row that
        involves the excluded variable; these are all the lift needs."""
        if self._quot is None:
            old = self.old
            piv = old.c[self.r] if self.side == "c" else old.b[self.r]
            self._quot = []
            for i in range(old.k):
                if i == self.r:
                    continue
                for side, e in (("b", old.b[i]), ("c", old.c[i])):
                    if e and self.code in e.variables():
                        q = exact_divide(e - e.substitute(self.code, self.value), piv)
                        self._quot.append((i, side, q))
        return self._quot

    def lift(self, v: dict) -> dict:
        r, old = self.r, self.old
        bit = 1 if self.side == "b" else 0
        base = {_insert_bit(J, r, bit): p for J, p in v.items()}
        # the part of d(base) that changes under x -> value, divided by the pivot
        corr: dict = {}
        for J, p in base.items():
            for i, side, q in self._quotients():
                if (J >> i & 1) == (side == "c"):
                    T = J ^ (1 << i)
                    term = q * p * row_sign(J, i)
                    corr[T] = corr[T] + term if T in corr else term
        out = dict(base)
        for T, q in corr.items():
            if not q:
                continue
            Jp = _drop_bit(T, r)
            sg = row_sign(_insert_bit(Jp, r, 0), r)
            target = _insert_bit(Jp, r, 1 - bit)
            out[target] = out.get(target, Poly.zero(old.n)) - q * sg
            if not out[target]:
                del out[target]
        return out


@dataclass
class ExclusionChain:
    source: KoszulMF
    steps: list = field(default_factory=list)
    result: KoszulMF = None

    def project(self, v: dict) -> dict:
        for st in self.steps:
            v = st.project(v)
        return v

    def lift(self, v: dict) -> dict:
        for st in reversed(self.steps):
            v = st.lift(v)
        return v

    def substitution(self):
        """Map code -> value (in the surviving variables) for all excluded marks."""
        sub = {}
        for st in self.steps:
            val = st.value
            sub = {k: p.substitute(st.code, val) for k, p in sub.items()}
            sub[st.code] = val
        return sub


# ---------------------------------------------------------------------------
# homology dimensions modulo the ground ideal


class NotRegular(RuntimeError):
    """No side choice gives a regular sequence; the homology is not computable
    by the Koszul route."""


def _laurent_mul(p: dict, q: dict) -> dict:
    out = {}
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return {k: v for k, v in out.items() if v}


def quotient_hilbert(seq, codes, n) -> dict:
    """Hilbert function of Q[codes]/(seq) for a homogeneous regular sequence
    with len(seq) == len(codes); raises NotRegular otherwise."""
    from .mf import monomials_of_degree
    from .linalg import Echelon
    k = len(codes)
    if len(seq) != k:
        raise NotRegular("sequence length differs from the number of variables")
    degs = [p.degree() for p in seq]
    if any(d is None or d <= 0 for d in degs):
        raise NotRegular("zero or constant element in sequence")
    # product of (1 - t^d)/(1 - t^2): each factor is 1 + t^2 + ... + t^(d-2)
    series = {0: 1}
    for d in degs:
        if d % 2:
            raise NotRegular("odd degree element")
        series = _laurent_mul(series, {2 * i: 1 for i in range(d // 2)})
    top = max(series)
    # regular iff the quotient vanishes just above the expected socle degree
    D = top + 2
    monos = monomials_of_degree(codes, D, n)
    e = Echelon()
    for p in seq:
        for m in monomials_of_degree(codes, D - p.degree(), n):
            e.add(dict(p.mul_mono(m).terms))
            if len(e) == len(monos):
                break
    if len(e) != len(monos):
        raise NotRegular("quotient is not finite dimensional")
    return series


def _divides(f: Poly, g: Poly):
    try:
        return exact_divide(g, f)
    except ArithmeticError:
        return None


def reduced_homology_dims(K: KoszulMF, ground) -> "LocalCohomology":
    """Graded dimensions of H(K / ground K), where ``ground`` lists the codes
    set to zero.  The remaining variables must be cut down by the rows to a
    finite-dimensional quotient."""
    from .mf import LocalCohomology
    ground = set(ground)
    n = K.n
    rows = [[K.b[i].set_zero(ground), K.c[i].set_zero(ground), K.shifts[i]] for i in range(K.k)]
    shift, parity = K.base_shift, K.base_parity
    for b, c, _ in rows:
        if (b and b.is_constant()) or (c and c.is_constant()):
            return LocalCohomology([], [])
    codes = set()
    for b, c, _ in rows:
        codes |= b.variables() | c.variables()
    codes = sorted(codes)

    def swap(i):
        nonlocal shift, parity
        b, c, s = rows[i]
        shift += s
        parity += 1
        rows[i] = [c, b, -s]

    changed = True
    while changed:
        changed = False
        for i in range(len(rows)):
            for j in range(len(rows)):
                if i == j:
                    continue
                for si in (0, 1):
                    for sj in (0, 1):
                        f = rows[i][1 - si]  # entry playing the role of c_i
                        g = rows[j][1 - sj]
                        if not f or not g:
                            continue
                        lam = _divides(f, g)
                        if lam is None:
                            continue
                        e_i = rows[i][si]
                        e_j = rows[j][sj]
                        new_ei = e_i + lam * e_j
                        if e_i.is_zero() and not new_ei.is_zero():
                            continue
                        if si:
                            swap(i)
                        if sj:
                            swap(j)
                        rows[i][0] = rows[i][0] + lam * rows[j][0]
                        rows[j][1] = rows[j][1] - lam * rows[i][1]
                        changed = True
                        break
                    if changed:
                        break
                if changed:
                    break
            if changed:
                break
    extra = {(0, 0): 1}  # (degree, parity) multiplicities from zero rows
    live = []
    for b, c, s in rows:
        if not b and not c:
            new = {}
            for (d, p), m in extra.items():
                for dd, pp in ((0, 0), (s, 1)):
                    key = (d + dd, (p + pp) % 2)
                    new[key] = new.get(key, 0) + m
            extra = new
        else:
            live.append([b, c, s])
    choices = []
    for idx, (b, c, s) in enumerate(live):
        if not c:
            choices.append([1])
        elif not b:
            choices.append([0])
        else:
            choices.append([0, 1])
    result = None
    from itertools import product as _prod
    for pick in _prod(*choices):
        seq = [live[i][1] if side == 0 else live[i][0] for i, side in enumerate(pick)]
        try:
            series = quotient_hilbert(seq, codes, n)
        except NotRegular:
            continue
        sh = shift + sum(live[i][2] for i, side in enumerate(pick) if side == 1)
        par = (parity + sum(pick)) % 2
        result = (series, sh, par)
        break
    if result is None:
        raise NotRegular("no regular side choice for the reduced rows")
    series, sh, par = result
    h = {0: [], 1: []}
    for (d0, p0), m in extra.items():
        for d, cnt in series.items():
            h[(par + p0) % 2] += [sh + d0 + d] * (cnt * m)
    return LocalCohomology(sorted(h[0]), sorted(h[1]))


def koszul_local_cohomology(K: KoszulMF, internal=()) -> "LocalCohomology":
    """Local cohomology over the ring of non-internal variables: exclude the
    internal marks that can be excluded, then reduce modulo the ground ideal."""
    internal = set(internal)
    ground = (K.variables() - internal) | {-(j + 1) for j in range(K.n - 1)}
    res = K.simplify(protected=ground).result
    return reduced_homology_dims(res, ground)


# ---------------------------------------------------------------------------
# closed graphs: homology as a free module over the active coefficients


def _to_slice(v: dict) -> dict:
    out = {}
    for J, p in v.items():
        for m, c in p.terms.items():
            out[(J, m)] = c
    return out


def _from_slice(v: dict, n: int) -> dict:
    acc: dict = {}
    for (J, m), c in v.items():
        acc.setdefault(J, {})[m] = c
    return {J: Poly(t, n) for J, t in acc.items()}


class FreeHomology:
    """Homology of a potential-zero Koszul factorization that is free over
    Q[active a's] and concentrated in one Z/2 degree.

    Generators are picked degree by degree as a complement of boundaries plus
    the Q[a]-span of earlier generators inside the cycles.  Inactive
    coefficients must already be set to zero in ``K``.
    """

    def __init__(self, K: KoszulMF, active=()):
        from .mf import monomials_of_degree
        self.K = K
        self.n = n = K.n
        self.active = sorted(set(active))
        a_codes = {-(j + 1) for j in range(n - 1)}
        if K.potential:
            raise InvariantError("closed graph with nonzero potential")
        dims = reduced_homology_dims(K, a_codes)
        if dims.h0 and dims.h1:
            raise InvariantError("homology is not concentrated in one Z/2 degree")
        self.parity = 0 if dims.h0 or not dims.h1 else 1
        self.poincare = list(dims.h0 or dims.h1)
        marks = sorted(c for c in K.variables() if c >= 0)
        self.codes = sorted(set(marks) | set(self.active))
        self._monos = {}
        self._mono_fn = monomials_of_degree
        self.gens: list = []      # (degree, slice vector)
        self._echelons = {}
        for D in sorted(set(self.poincare)):
            want = self.poincare.count(D)
            ech = self._echelon(D)
            ker = self._cycles(D, ech)
            new = []
            for z in ker:
                if ech.add(z, tag=("g", len(self.gens) + len(new))) is None:
                    new.append(z)
            if len(new) != want:
                raise InvariantError(
                    f"expected {want} generators in degree {D}, found {len(new)}")
            for z in new:
                self.gens.append((D, z))
            # cached echelon now contains the new generators with tags
        self.rank = len(self.gens)

    def degrees(self):
        return [d for d, _ in self.gens]

    def _mon(self, d):
        if d not in self._monos:
            self._monos[d] = self._mono_fn(self.codes, d, self.n)
        return self._monos[d]

    def _basis(self, parity, D):
        return [(J, m) for J in self.K.generators(parity) for m in self._mon(D - self.K.degree(J))]

    def _cycles(self, D, ech=None):
        """Cycles of degree D spanning a complement of the span stored in
        ``ech`` (boundaries plus earlier generators).  Since d vanishes on
        that span, it is enough to look at the standard basis vectors that
        are not pivots of ``ech``."""
        from .linalg import kernel
        src = self._basis(self.parity, D)
        if ech is not None:
            src = [b for b in src if b not in ech.rows]
        n = self.n
        imgs = [_to_slice(self.K.apply({J: Poly({m: Fraction(1)}, n)})) for J, m in src]
        return [{src[i]: c for i, c in k.items()} for k in kernel(imgs)]

    def _echelon(self, D):
        from .linalg import Echelon
        if D in self._echelons:
            return self._echelons[D]
        n = self.n
        ech = Echelon(track=True)
        for i, (J, m) in enumerate(self._basis(1 - self.parity, D - n - 1)):
            v = _to_slice(self.K.apply({J: Poly({m: Fraction(1)}, n)}))
            if v:
                ech.add(v, tag=("b", i))
        a_only = [c for c in self.active]
        for gi, (g, z) in enumerate(self.gens):
            if g >= D:
                continue
            for m in self._mono_fn(a_only, D - g, n):
                v = {(J, _mm(mm, m)): c for (J, mm), c in z.items()}
                ech.add(v, tag=("g", gi, m))
        self._echelons[D] = ech
        return ech

    def coordinates(self, v: dict, D: int) -> list:
        """Coefficients (polynomials in the active a's) of the class of the
        cycle v = {J: Poly} of degree D in terms of the generators."""
        n = self.n
        ech = self._echelon(D)
        combo = ech.coordinates(_to_slice(v))
        out = [Poly.zero(n) for _ in self.gens]
        for tag, c in combo.items():
            if tag[0] == "g":
                gi = tag[1]
                m = tag[2] if len(tag) > 2 else ()
                out[gi] = out[gi] + Poly({m: c}, n)
        return out

    def generator(self, i: int) -> dict:
        return _from_slice(self.gens[i][1], self.n)


def _mm(a, b):
    from .ring import mono_mul
    return mono_mul(a, b)
