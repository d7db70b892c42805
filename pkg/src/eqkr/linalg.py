"""Sparse exact linear algebra over Q.

Vectors are plain dicts ``{index: Fraction}`` with no zero entries.  The
``Echelon`` class does incremental row reduction and can remember how each
stored row was built from the vectors fed to it, which is all we need for
kernels, images, quotients and coordinates.

Internally the echelon form works with gmpy2 rationals when gmpy2 is
installed (several times faster than Fraction); everything it hands back is
converted to Fraction again.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - plain Fractions also work
    _Q = Fraction


def _to_q(v: dict) -> dict:
    return {k: _Q(c.numerator, c.denominator) if isinstance(c, Fraction) else _Q(c)
            for k, c in v.items()}


def _to_frac(v: dict) -> dict:
    return {k: Fraction(int(c.numerator), int(c.denominator)) for k, c in v.items()}


def vec_add(u: dict, v: dict, scale=1) -> dict:
    """Return u + scale*v as a new dict."""
    out = dict(u)
    for k, c in v.items():
        s = out.get(k, 0) + scale * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _axpy(u: dict, v: dict, scale) -> None:
    for k, c in v.items():
        s = u.get(k, 0) + scale * c
        if s:
            u[k] = s
        else:
            u.pop(k, None)


class Echelon:
    """Incremental Gaussian elimination with optional combination tracking.

    Each stored row is kept fully reduced against the other pivots' columns
    only in the forward direction, which is enough for membership tests and
    coordinate extraction.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.rows: dict[Hashable, dict] = {}    # pivot column -> row (pivot coeff 1)
        self.combos: dict[Hashable, dict] = {}  # pivot column -> combination of inputs
        self.order: list = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict, combo: dict | None = None):
        """Reduce v against stored pivots.  Returns (residual, combo) where
        v = residual + sum combo[t] * input_t when tracking."""
        res, combo = self._reduce(_to_q(v), _to_q(combo) if combo else {})
        return _to_frac(res), _to_frac(combo)

    def _reduce(self, v: dict, combo: dict):
        if not v:
            return v, combo
        # eliminating a pivot only introduces columns of later pivots
        for col in self.order:
            c = v.get(col)
            if c:
                _axpy(v, self.rows[col], -c)
                if self.track:
                    _axpy(combo, self.combos[col], c)
        return v, combo

    def add(self, v: dict, tag: Hashable = None):
        """Insert v.  Returns None if v was independent, else the tracked
        combination expressing v in terms of earlier inputs."""
        res, combo = self._reduce(_to_q(v), {})
        if not res:
            return _to_frac(combo) if self.track else {}
        piv = min(res, key=_sort_key)
        c = res[piv]
        row = {k: x / c for k, x in res.items()}
        self.rows[piv] = row
        self.order.append(piv)
        if self.track:
            # row = (v - sum combo) / c, recorded in terms of inputs
            rec = {k: -x / c for k, x in combo.items()}
            rec[tag] = rec.get(tag, 0) + 1 / c
            if not rec[tag]:
                del rec[tag]
            self.combos[piv] = rec
        return None

    def contains(self, v: dict) -> bool:
        return not self._reduce(_to_q(v), {})[0]

    def coordinates(self, v: dict) -> dict:
        """Coordinates of v in terms of the tagged inputs; raises if v is
        outside the span."""
        res, combo = self._reduce(_to_q(v), {})
        if res:
            raise ValueError("vector is not in the span")
        return _to_frac(combo)


def _sort_key(k):
    return (str(type(k)), k)


def rank(vectors: Iterable[dict]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def kernel(images: list[dict]) -> list[dict]:
    """Basis of the kernel of the map sending basis vector i to images[i].
    Kernel vectors are dicts over the source indices."""
    e = Echelon(track=True)
    out = []
    for i, v in enumerate(images):
        dep = e.add(v, tag=i)
        if dep is not None:
            k = {j: -c for j, c in dep.items()}
            k[i] = k.get(i, 0) + 1
            out.append({j: c for j, c in k.items() if c})
    return out


def image_basis(images: list[dict]) -> list[dict]:
    e = Echelon()
    out = []
    for v in images:
        if e.add(v) is None:
            out.append(v)
    return out


def complement(space: list[dict], sub: list[dict]) -> list[dict]:
    """Vectors from ``space`` whose classes form a basis of span(space)/span(sub)."""
    e = Echelon()
    for v in sub:
        e.add(v)
    out = []
    for v in space:
        if e.add(v) is None:
            out.append(v)
    return out


def mat_vec(columns: list[dict], x: dict) -> dict:
    out: dict = {}
    for i, c in x.items():
        _axpy(out, columns[i], c)
    return out
