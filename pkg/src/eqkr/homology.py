"""Homology of assembled link complexes.

Three modes are supported:

* ``a_zero``: every a_j is set to zero and the bigraded dimensions over Q
  are computed slice by slice (the Khovanov-Rozansky specialization);
* ``pid``: one coefficient a_j is kept, the others are zero, and the
  homology is decomposed over the graded PID Q[a_j] by Smith normal form;
* ``specialized``: the a_j take rational values and ungraded dimensions
  are reported.

Internally q-degrees are symmetric (the unknot sits in degrees 1-n, ..., n-1).
Reports use the raw presentation, shifted up by n-1 so that the unknot
occupies 0, 2, ..., 2n-2, unless ``normalize=True`` is asked for.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import rank
from .link import LinkDiagram, TotalComplex, assemble
from .ring import var_weight
from .smith import graded_complex_homology

MODES = ("a_zero", "pid", "specialized")


def a_code(j: int) -> int:
    """Variable code of the coefficient a_j."""
    return -(j + 1)


def _shift(n, normalize):
    return 0 if normalize else n - 1


@dataclass
class HomologyReport:
    mode: str
    n: int
    table: dict                 # (i, j) -> rank; j is None for ungraded reports
    torsion: list = field(default_factory=list)   # (i, j, k): Q[a]/(a^k) generated in degree j
    euler: dict = field(default_factory=dict)     # q-exponent -> coefficient
    components: int = 1
    normalized: bool = False
    keep: int | None = None     # pid mode: index j of the kept coefficient
    values: dict | None = None  # specialized mode: j -> value

    @property
    def graded(self):
        return self.mode != "specialized"

    def total_rank(self) -> int:
        return sum(self.table.values())

    def ranks_by_degree(self) -> dict:
        out: dict = {}
        for (i, _), r in self.table.items():
            out[i] = out.get(i, 0) + r
        return out

    def poincare(self) -> dict:
        return dict(self.table)

    def key(self):
        """Comparable content (used for invariance checks)."""
        return (self.mode, self.n, sorted(self.table.items(), key=_tkey), sorted(self.torsion))

    def to_dict(self) -> dict:
        d = {
            "mode": self.mode,
            "n": self.n,
            "components": self.components,
            "normalized": self.normalized,
            "table": [{"i": i, "j": j, "rank": r} for (i, j), r in sorted(self.table.items(), key=_tkey)],
            "torsion": [{"i": i, "j": j, "k": k} for i, j, k in sorted(self.torsion)],
            "euler": format_laurent(self.euler),
        }
        if self.keep is not None:
            d["keep"] = f"a{self.keep}"
        if self.values is not None:
            d["values"] = {f"a{j}": str(v) for j, v in sorted(self.values.items())}
            d["graded"] = False
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        lines = [f"mode {self.mode}, n = {self.n}, components = {self.components}"]
        if self.graded:
            for (i, j), r in sorted(self.table.items(), key=_tkey):
                lines.append(f"  H^{i},{j}: {r}")
        else:
            for (i, _), r in sorted(self.table.items(), key=_tkey):
                lines.append(f"  H^{i}: {r}  (ungraded)")
        a = f"a{self.keep if self.keep is not None else 0}"
        for i, j, k in sorted(self.torsion):
            lines.append(f"  torsion at i={i}, j={j}: Q[{a}]/({a}^{k})")
        lines.append(f"  euler: {format_laurent(self.euler)}")
        return "\n".join(lines)


def _tkey(item):
    (i, j), _ = item
    return (i, -10**9 if j is None else j)


def format_laurent(poly: dict) -> str:
    """Format {exponent: coefficient} as e.g. 'q^-1 + q' or '2 - q^4'."""
    parts = []
    for e in sorted(poly):
        c = poly[e]
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            qq = "q" if e == 1 else f"q^{e}"
            body = qq if mag == 1 else f"{mag}{qq}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out


def _add_term(poly, e, c):
    s = poly.get(e, 0) + c
    if s:
        poly[e] = s
    else:
        poly.pop(e, None)


# ---------------------------------------------------------------------------


def euler_characteristic(C: TotalComplex, normalize=False) -> dict:
    """Alternating sum of the graded ranks of the chain modules."""
    sh = _shift(C.n, normalize)
    out: dict = {}
    for i, degs in C.modules.items():
        for g in degs:
            _add_term(out, g + sh, (-1) ** (i % 2))
    return out


def table_euler(table: dict, torsion=(), weight=0) -> dict:
    """Euler characteristic recomputed from homology: free ranks plus, for a
    torsion summand Q[a]/(a^k) in degree j, the graded-rank difference
    q^j - q^(j + k*weight)."""
    out: dict = {}
    for (i, j), r in table.items():
        _add_term(out, j, (-1) ** (i % 2) * r)
    for i, j, k in torsion:
        _add_term(out, j, (-1) ** (i % 2))
        _add_term(out, j + k * weight, -((-1) ** (i % 2)))
    return out


def _slice_rank(M, src_idx):
    """Rank of the columns src_idx of a constant matrix M."""
    if M is None:
        return 0
    vecs = []
    for s in src_idx:
        v = {}
        for t, row in enumerate(M):
            e = row[s]
            if e:
                v[t] = e.constant_term()
        if v:
            vecs.append(v)
    return rank(vecs)


def homology_a_zero(C: TotalComplex, normalize=False) -> HomologyReport:
    if C.active:
        raise ValueError("a_zero homology needs a complex assembled with every a_j set to zero")
    sh = _shift(C.n, normalize)
    table = {}
    for i, degs in sorted(C.modules.items()):
        for j in sorted(set(degs)):
            cols = [s for s, g in enumerate(degs) if g == j]
            r_out = _slice_rank(C.differentials.get(i), cols)
            prev = C.modules.get(i - 1, [])
            r_in = _slice_rank(C.differentials.get(i - 1), [s for s, g in enumerate(prev) if g == j])
            h = len(cols) - r_out - r_in
            if h:
                table[(i, j + sh)] = h
    return HomologyReport("a_zero", C.n, table, [], euler_characteristic(C, normalize),
                          C.components, normalize)


def homology_pid(C: TotalComplex, keep: int = 0, normalize=False) -> HomologyReport:
    """Homology over Q[a_keep]; ``C`` must be assembled with only a_keep active."""
    code = a_code(keep)
    if list(C.active) != [code]:
        raise ValueError(f"pid homology needs a complex assembled with only a{keep} active")
    sh = _shift(C.n, normalize)
    H = graded_complex_homology(C.modules, C.differentials, code, C.n)
    table = {}
    for i, degs in H.free.items():
        for g in degs:
            table[(i, g + sh)] = table.get((i, g + sh), 0) + 1
    torsion = [(i, d + sh, k) for i, d, k in H.torsion]
    return HomologyReport("pid", C.n, table, torsion, euler_characteristic(C, normalize),
                          C.components, normalize, keep=keep)


def homology_specialized(C: TotalComplex, values: dict, normalize=False) -> HomologyReport:
    """Ungraded homology after setting a_j = values[j] (missing j mean 0).
    ``C`` must be assembled with exactly the nonzero a_j active."""
    vals = {a_code(j): Fraction(v) for j, v in values.items() if Fraction(v)}
    if sorted(vals) != sorted(C.active):
        raise ValueError("specialized homology needs exactly the nonzero coefficients active")
    ranks = {}
    for i, M in C.differentials.items():
        vecs = []
        for s in range(len(C.modules.get(i, []))):
            v = {}
            for t, row in enumerate(M):
                if row[s]:
                    x = row[s].evaluate(vals).constant_term()
                    if x:
                        v[t] = x
            if v:
                vecs.append(v)
        ranks[i] = rank(vecs)
    table = {}
    for i, degs in sorted(C.modules.items()):
        h = len(degs) - ranks.get(i, 0) - ranks.get(i - 1, 0)
        if h:
            table[(i, None)] = h
    return HomologyReport("specialized", C.n, table, [], euler_characteristic(C, normalize),
                          C.components, normalize,
                          values={j: Fraction(v) for j, v in sorted(values.items())})


def compute(D: LinkDiagram, n: int, mode: str = "a_zero", keep: int = 0, values=None,
            normalize=False, check=True) -> HomologyReport:
    """Assemble the complex of ``D`` and compute its homology in ``mode``."""
    if mode == "a_zero":
        return homology_a_zero(assemble(D, n, (), check), normalize)
    if mode == "pid":
        if not 0 <= keep <= n - 2:
            raise ValueError(f"a{keep} does not exist for n={n}")
        return homology_pid(assemble(D, n, [a_code(keep)], check), keep, normalize)
    if mode == "specialized":
        values = {int(j): Fraction(v) for j, v in (values or {}).items()}
        for j in values:
            if not 0 <= j <= n - 2:
                raise ValueError(f"a{j} does not exist for n={n}")
        active = [a_code(j) for j, v in values.items() if v]
        return homology_specialized(assemble(D, n, active, check), values, normalize)
    raise ValueError(f"unknown mode {mode!r}")


def homology_euler(report: HomologyReport) -> dict:
    """Euler characteristic recomputed from the homology in a report."""
    w = var_weight(a_code(report.keep), report.n) if report.mode == "pid" else 0
    return table_euler(report.table, report.torsion, w)


@dataclass
class InvarianceResult:
    ok: bool
    first: HomologyReport
    second: HomologyReport

    def __bool__(self):
        return self.ok

    def diff(self) -> str:
        if self.ok:
            return "identical"
        a, b = self.first, self.second
        lines = []
        for key in sorted(set(a.table) | set(b.table), key=lambda k: (k[0], k[1] or 0)):
            if a.table.get(key, 0) != b.table.get(key, 0):
                lines.append(f"{key}: {a.table.get(key, 0)} vs {b.table.get(key, 0)}")
        ta, tb = set(a.torsion), set(b.torsion)
        for t in sorted(ta ^ tb):
            lines.append(f"torsion {t} only in {'first' if t in ta else 'second'}")
        return "\n".join(lines)


def invariance_check(D1: LinkDiagram, D2: LinkDiagram, n: int, mode="a_zero", **kw) -> InvarianceResult:
    r1 = compute(D1, n, mode, **kw)
    r2 = compute(D2, n, mode, **kw)
    return InvarianceResult(r1.key() == r2.key(), r1, r2)
