"""Link diagrams, the cube of resolutions and the total complex.

PD convention: each crossing lists four edge labels counterclockwise starting
from the incoming under-strand, so the under-strand runs from slot 0 to slot
2.  For sign +1 the over-strand runs from slot 3 to slot 1, for sign -1 from
slot 1 to slot 3.

Every crossing gets four private marks (one per slot) and every PD edge
becomes a thin arc joining the slot where it leaves one crossing to the slot
where it enters the next; exclusion removes these extra marks again.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from .graphs import apply_local, arc_rows, chi_local, thick_rows
from .koszul import FreeHomology, KoszulMF
from .mf import InvariantError
from .ring import Poly


class DiagramError(ValueError):
    """Malformed PD code or braid word."""


@dataclass
class Crossing:
    sign: int
    edges: tuple

    def in_slots(self):
        return (0, 3) if self.sign > 0 else (0, 1)

    def out_slots(self):
        return (2, 1) if self.sign > 0 else (2, 3)

    def thick_slots(self):
        """Slots playing the roles of (x1, x2, x3, x4)."""
        return (1, 2, 3, 0) if self.sign > 0 else (3, 2, 1, 0)


@dataclass
class LinkDiagram:
    crossings: list
    loops: int = 0
    components: int = 0

    @property
    def n_plus(self):
        return sum(1 for c in self.crossings if c.sign > 0)

    @property
    def n_minus(self):
        return sum(1 for c in self.crossings if c.sign < 0)

    def edge_ends(self):
        """label -> (crossing, out slot) and label -> (crossing, in slot)."""
        outs, ins = {}, {}
        for k, c in enumerate(self.crossings):
            for s in c.out_slots():
                lab = c.edges[s]
                if lab in outs:
                    raise DiagramError(f"edge {lab} leaves two crossings")
                outs[lab] = (k, s)
            for s in c.in_slots():
                lab = c.edges[s]
                if lab in ins:
                    raise DiagramError(f"edge {lab} enters two crossings")
                ins[lab] = (k, s)
        if set(outs) != set(ins):
            raise DiagramError("inconsistent orientations: every edge must leave once and enter once")
        return outs, ins

    def validate(self):
        counts = {}
        for c in self.crossings:
            if c.sign not in (1, -1):
                raise DiagramError(f"crossing sign must be +1 or -1, got {c.sign}")
            if len(c.edges) != 4:
                raise DiagramError("each crossing needs four edge labels")
            for lab in c.edges:
                counts[lab] = counts.get(lab, 0) + 1
        bad = [lab for lab, k in counts.items() if k != 2]
        if bad:
            raise DiagramError(f"edge labels must appear exactly twice: {sorted(bad, key=str)}")
        self.edge_ends()
        self.components = self._count_components()
        return self

    def _count_components(self):
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        for c in self.crossings:
            e = c.edges
            union(e[0], e[2])
            union(e[1], e[3])
            for lab in e:
                find(lab)
        return len({find(x) for x in parent}) + self.loops

    def writhe(self):
        return self.n_plus - self.n_minus


def parse_pd(text) -> LinkDiagram:
    """Parse {"crossings": [{"sign": 1, "edges": [a, b, c, d]}, ...], "loops": k}."""
    try:
        obj = json.loads(text) if isinstance(text, str) else text
        crossings = [Crossing(int(c["sign"]), tuple(c["edges"])) for c in obj.get("crossings", [])]
        loops = int(obj.get("loops", 0))
    except (TypeError, KeyError, ValueError, AttributeError) as exc:
        raise DiagramError(f"malformed PD input: {exc}") from exc
    if loops < 0:
        raise DiagramError("negative loop count")
    return LinkDiagram(crossings, loops).validate()


def parse_braid(word, strands: int, closure: str = "trace") -> LinkDiagram:
    """Braid word like "1 -2 1" or "s1 s2^-1 s1" on the given number of strands."""
    if closure != "trace":
        raise DiagramError(f"unsupported closure {closure!r}; only 'trace' is available")
    if isinstance(word, (list, tuple)):
        word = " ".join(map(str, word))
    letters = []
    for tok in str(word).replace(",", " ").split():
        t = tok.lower().lstrip("s").replace("sigma", "")
        sign = 1
        if t.endswith("^-1"):
            sign, t = -1, t[:-3]
        try:
            v = int(t) * sign
        except ValueError as exc:
            raise DiagramError(f"bad braid letter {tok!r}") from exc
        if v == 0 or abs(v) >= strands:
            raise DiagramError(f"braid letter {tok!r} out of range for {strands} strands")
        letters.append(v)
    if strands < 1:
        raise DiagramError("need at least one strand")
    current = list(range(1, strands + 1))
    next_label = strands + 1
    raw = []
    for v in letters:
        i = abs(v) - 1
        left, right = current[i], current[i + 1]
        nw, ne = next_label, next_label + 1
        next_label += 2
        if v > 0:
            raw.append([1, [right, ne, nw, left]])
        else:
            raw.append([-1, [left, right, ne, nw]])
        current[i], current[i + 1] = nw, ne
    # trace closure: top label at position p is the bottom label p
    ren = {top: bottom for top, bottom in zip(current, range(1, strands + 1))}
    crossings = [Crossing(s, tuple(ren.get(x, x) for x in e)) for s, e in raw]
    used = {x for c in crossings for x in c.edges}
    loops = sum(1 for p in range(1, strands + 1) if p not in used)
    return LinkDiagram(crossings, loops).validate()


def parse_input(obj) -> LinkDiagram:
    """Accept either PD JSON or braid JSON (already decoded or as text)."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise DiagramError("input must be a JSON object")
    if "braid" in obj:
        try:
            strands = int(obj["strands"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DiagramError("braid input needs an integer 'strands'") from exc
        return parse_braid(obj["braid"], strands, obj.get("closure", "trace"))
    if "crossings" in obj or "loops" in obj:
        return parse_pd(obj)
    raise DiagramError("input must contain 'crossings' or 'braid'")


# ---------------------------------------------------------------------------
# the cube


# per-crossing (homological degree, q-shift) of the two resolutions, and the
# map between them.  Resolution 0 comes first in the two-term complex.
def crossing_data(sign, n):
    if sign > 0:
        return {"res": ("oriented", "thick"), "h": (0, 1), "q": (1 - n, -n), "map": "chi0"}
    return {"res": ("thick", "oriented"), "h": (-1, 0), "q": (n, n - 1), "map": "chi1"}


@dataclass
class CubeVertex:
    state: tuple
    koszul: KoszulMF
    h: int
    q_shift: int


@dataclass
class ResolutionCube:
    diagram: LinkDiagram
    n: int
    vertices: dict
    mark_of: dict          # (crossing, slot) -> mark index

    def edges(self):
        """Yield (v, w, crossing index, sign) for each cube edge."""
        c = len(self.diagram.crossings)
        for v in self.vertices:
            for k in range(c):
                if v[k] == 0:
                    w = v[:k] + (1,) + v[k + 1:]
                    yield v, w, k, (-1) ** sum(v[:k])


def vertex_koszul(D: LinkDiagram, state, n, zero_codes=()) -> KoszulMF:
    b, c, s = [], [], []
    base = 0
    mark = lambda k, slot: 4 * k + slot + 1
    for k, cr in enumerate(D.crossings):
        kind = crossing_data(cr.sign, n)["res"][state[k]]
        x1, x2, x3, x4 = (mark(k, slot) for slot in cr.thick_slots())
        if kind == "oriented":
            rows = [arc_rows(n, x4, x1), arc_rows(n, x3, x2)]
        else:
            rows = thick_rows(n, (x1, x2, x3, x4))
            base -= 1
        for r in rows:
            b.append(r[0]); c.append(r[1]); s.append(r[2])
    outs, ins = D.edge_ends()
    for lab in sorted(outs, key=str):
        ko, so = outs[lab]
        ki, si = ins[lab]
        r = arc_rows(n, mark(ko, so), mark(ki, si))
        b.append(r[0]); c.append(r[1]); s.append(r[2])
    fresh = 4 * len(D.crossings) + 1
    for j in range(D.loops):
        r = arc_rows(n, fresh + j, fresh + j)
        b.append(r[0]); c.append(r[1]); s.append(r[2])
    K = KoszulMF(n, b, c, s, base, 0)
    if zero_codes:
        K = K.map_entries(lambda p: p.set_zero(zero_codes))
    return K


def build_cube(D: LinkDiagram, n: int, zero_codes=()) -> ResolutionCube:
    c = len(D.crossings)
    verts = {}
    for state in product((0, 1), repeat=c):
        h = sum(state) - D.n_minus
        q = sum(crossing_data(cr.sign, n)["q"][state[k]] for k, cr in enumerate(D.crossings))
        verts[state] = CubeVertex(state, vertex_koszul(D, state, n, zero_codes), h, q)
    marks = {(k, s): 4 * k + s + 1 for k in range(c) for s in range(4)}
    return ResolutionCube(D, n, verts, marks)


# ---------------------------------------------------------------------------
# the total complex


@dataclass
class TotalComplex:
    n: int
    active: list                       # active coefficient codes
    modules: dict                      # i -> list of q-degrees of generators
    differentials: dict                # i -> matrix (rows: C^{i+1}, cols: C^i) of Poly
    components: int = 1
    labels: dict = field(default_factory=dict)

    def degrees(self):
        return sorted(self.modules)

    def check(self):
        """d o d = 0 and homogeneity of degree 0."""
        from .mf import mat_mul
        for i, M in self.differentials.items():
            src, tgt = self.modules.get(i, []), self.modules.get(i + 1, [])
            for t, row in enumerate(M):
                for s, e in enumerate(row):
                    if e and (not e.is_homogeneous() or e.degree() != src[s] - tgt[t]):
                        raise InvariantError(f"differential entry {e} is not of degree 0")
            N = self.differentials.get(i + 1)
            if N and M and M[0] and N[0]:
                P = mat_mul(N, M, self.n)
                if any(e for row in P for e in row):
                    raise InvariantError(f"d^2 != 0 at degree {i}")
        return self


class _VertexData:
    """Per-vertex reduction in two stages.  Stage one excludes the marks of
    the PD edge arcs; those rows are the same at every vertex, so the chi maps
    can be applied after substituting, without lifting through this stage.
    Stage two is specific to the vertex and ends at the residual factorization."""

    def __init__(self, vertex: CubeVertex, active, n_crossing_rows: int):
        K = vertex.koszul
        a_codes = {-(j + 1) for j in range(K.n - 1)}
        self.stage1 = K.simplify(protected=a_codes, min_row=n_crossing_rows)
        self.chain = self.stage1.result.simplify(protected=a_codes)
        self.homology = FreeHomology(self.chain.result, active)
        self.vertex = vertex


def vertex_homologies(cube: ResolutionCube, active):
    rows = 2 * len(cube.diagram.crossings)
    return {v: _VertexData(cube.vertices[v], active, rows) for v in sorted(cube.vertices)}


def assemble(D: LinkDiagram, n: int, active=(), check=True) -> TotalComplex:
    """Total complex of free Q[active a's]-modules; the other a's are set to zero."""
    active = sorted(set(active))
    zero = {-(j + 1) for j in range(n - 1)} - set(active)
    cube = build_cube(D, n, zero)
    data = vertex_homologies(cube, active)
    modules, labels, offset = {}, {}, {}
    for v, vd in data.items():
        i = vd.vertex.h
        mods = modules.setdefault(i, [])
        labels.setdefault(i, [])
        offset[v] = len(mods)
        for g in vd.homology.degrees():
            mods.append(g + vd.vertex.q_shift)
            labels[i].append(v)
    diffs = {}
    for i in modules:
        if i + 1 in modules:
            diffs[i] = [[Poly.zero(n) for _ in modules[i]] for _ in modules[i + 1]]
    chis = {}
    for v, w, k, sign in cube.edges():
        cr = D.crossings[k]
        kind = crossing_data(cr.sign, n)["map"]
        key = (k, kind)
        if key not in chis:
            marks = tuple(cube.mark_of[(k, s)] for s in cr.thick_slots())
            c0, c1, _ = chi_local(n, 1, 0, marks)
            sub = data[v].stage1.substitution()

            def fix(e):
                e = e.set_zero(zero)
                for code, val in sub.items():
                    e = e.substitute(code, val)
                return e

            chi = c0 if kind == "chi0" else c1
            chis[key] = {J: [(T, fix(e)) for T, e in lst] for J, lst in chi.items()}
        chi = chis[key]
        src, tgt = data[v], data[w]
        i = src.vertex.h
        for gi in range(src.homology.rank):
            z = src.homology.generator(gi)
            full = src.chain.lift(z)
            img = apply_local(chi, full, 2 * k)
            res = tgt.chain.project(img)
            deg = src.homology.gens[gi][0] + 1
            if not res:
                continue
            coords = tgt.homology.coordinates(res, deg)
            for gj, cf in enumerate(coords):
                if cf:
                    diffs[i][offset[w] + gj][offset[v] + gi] = cf * sign
    C = TotalComplex(n, active, modules, diffs, D.components, labels)
    if check:
        C.check()
    return C
