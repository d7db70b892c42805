import random

import pytest

from eqkr.graphs import arc_rows, thick_rows
from eqkr.koszul import (FreeHomology, KoszulMF, NotRegular, koszul_local_cohomology,
                         quotient_hilbert, reduced_homology_dims)
from eqkr.mf import InvariantError, local_cohomology, simplify, tensor
from eqkr.ring import Poly


def rows_to_koszul(n, rows, base_shift=0):
    return KoszulMF(n, [r[0] for r in rows], [r[1] for r in rows], [r[2] for r in rows], base_shift)


def random_vector(rng, K, degree):
    from eqkr.mf import monomials_of_degree
    codes = sorted(c for c in K.variables() if c >= 0)
    v = {}
    for J in K.generators(0):
        monos = monomials_of_degree(codes, degree - K.degree(J), K.n)
        if monos:
            m = rng.choice(monos)
            v[J] = Poly({m: rng.randint(1, 4)}, K.n)
    return v


@pytest.mark.parametrize("n", [2, 3])
def test_to_mf_squares_to_potential(n):
    K = rows_to_koszul(n, thick_rows(n, (1, 2, 3, 4)) + [arc_rows(n, 3, 5)], -1)
    M = K.to_mf().check()
    assert M.potential == K.potential
    K.check(potential=M.potential)
    bad = K.map_entries(lambda e: e)
    bad.b = list(bad.b)
    bad.b[0] = bad.b[0] * 2
    with pytest.raises(InvariantError):
        bad.check(potential=M.potential)


def test_tensor_matches_mf_tensor():
    n = 2
    A = rows_to_koszul(n, [arc_rows(n, 1, 2)])
    B = rows_to_koszul(n, [arc_rows(n, 2, 3)])
    T1 = A.tensor(B).to_mf().check()
    T2 = tensor(A.to_mf(), B.to_mf()).check()
    assert sorted(T1.deg0) == sorted(T2.deg0) and T1.potential == T2.potential
    assert local_cohomology(simplify(T1), {2}) == local_cohomology(simplify(T2), {2})


@pytest.mark.parametrize("seed", range(5))
def test_exclusion_transport_is_a_chain_map(seed):
    rng = random.Random(seed)
    n = rng.choice((2, 3))
    K = rows_to_koszul(n, thick_rows(n, (1, 2, 3, 4)) + [arc_rows(n, 3, 5), arc_rows(n, 6, 1)], -1)
    chain = K.simplify(protected={2, 4, 5, 6})
    new = chain.result
    assert len(chain.steps) == 2 and new.k == K.k - 2
    for deg in (0, 2, 4):
        v = random_vector(rng, new, deg)
        up = chain.lift(v)
        assert chain.project(up) == v
        assert K.apply(up) == chain.lift(new.apply(v))
        w = random_vector(rng, K, deg)
        assert new.apply(chain.project(w)) == chain.project(K.apply(w))


def test_substitution_composes():
    n = 2
    K = rows_to_koszul(n, [arc_rows(n, 1, 2), arc_rows(n, 2, 3), arc_rows(n, 3, 4)])
    chain = K.simplify(protected={1, 4})
    sub = chain.substitution()
    assert set(sub) == {2, 3}
    for p in sub.values():
        assert p.variables() <= {1, 4}


def test_quotient_hilbert():
    x, y = Poly.x(1, 2), Poly.x(2, 2)
    assert quotient_hilbert([x ** 2, y ** 2], [1, 2], 2) == {0: 1, 2: 2, 4: 1}
    with pytest.raises(NotRegular):
        quotient_hilbert([x * y, x ** 2], [1, 2], 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_circle_free_homology(n):
    K = rows_to_koszul(n, [arc_rows(n, 1, 1)])
    lc = reduced_homology_dims(K, {-(j + 1) for j in range(n - 1)})
    assert sorted(lc.h1) == list(range(1 - n, n, 2)) and not lc.h0
    H = FreeHomology(K, active=[-1])
    assert H.rank == n and H.degrees() == list(range(1 - n, n, 2))
    for i in range(n):
        co = H.coordinates(H.generator(i), H.degrees()[i])
        assert [c == Poly.const(int(j == i), n) for j, c in enumerate(co)] == [True] * n


def test_two_arcs_glued():
    n = 3
    K = rows_to_koszul(n, [arc_rows(n, 1, 2), arc_rows(n, 2, 3)])
    L = rows_to_koszul(n, [arc_rows(n, 1, 3)])
    assert koszul_local_cohomology(K, {2}) == koszul_local_cohomology(L)
