import random
from fractions import Fraction

import sympy

from eqkr.linalg import Echelon, complement, image_basis, kernel, mat_vec, rank


def _random_columns(rng, ncols, nrows, density=0.5):
    cols = []
    for _ in range(ncols):
        cols.append({r: Fraction(rng.randint(-3, 3)) for r in range(nrows) if rng.random() < density})
        cols[-1] = {r: c for r, c in cols[-1].items() if c}
    return cols


def _sympy_rank(cols, nrows):
    if not cols:
        return 0
    M = sympy.Matrix(nrows, len(cols), lambda r, c: cols[c].get(r, 0))
    return M.rank()


def test_rank_matches_sympy():
    rng = random.Random(3)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        cols = _random_columns(rng, ncols, nrows)
        assert rank(cols) == _sympy_rank(cols, nrows)


def test_kernel_vectors_are_killed():
    rng = random.Random(5)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 7)
        cols = _random_columns(rng, ncols, nrows)
        ker = kernel(cols)
        assert len(ker) == ncols - rank(cols)
        for k in ker:
            assert not mat_vec(cols, k)


def test_echelon_coordinates():
    e = Echelon(track=True)
    u, v = {0: Fraction(1), 1: Fraction(2)}, {1: Fraction(1), 2: Fraction(-1)}
    assert e.add(u, "u") is None and e.add(v, "v") is None
    w = {0: Fraction(2), 1: Fraction(1), 2: Fraction(3)}
    assert e.coordinates(w) == {"u": 2, "v": -3}
    assert e.contains(w)
    assert not e.contains({2: Fraction(1)})


def test_image_and_complement():
    a, b = {0: Fraction(1)}, {1: Fraction(1)}
    assert image_basis([a, a, b]) == [a, b]
    assert complement([a, b], [a]) == [b]
