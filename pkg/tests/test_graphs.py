import random

import pytest

from eqkr.graphs import (LoopAlgebra, MalformedGraph, MOYGraph, chi_maps, compile, dsd0_check,
                         dsdI_check, dsdII_check, dsdIII_check, dsdIV_check,
                         graph_local_cohomology, thick_braid_graph)
from eqkr.mf import MFMorphism, is_null_homotopic, mat_mul
from eqkr.ring import Poly
from oracles import dims_of, random_graph, slice_local_cohomology


def test_graph_validation():
    g = MOYGraph.from_json('{"boundary": [1, 2, 3, 4], "thick": [[1, 2, 3, 4]]}')
    assert g.internal() == set()
    assert g.boundary_signs() == {1: 1, 2: 1, 3: -1, 4: -1}
    with pytest.raises(MalformedGraph):
        MOYGraph.from_json('{"boundary": [1, 2], "thick": [[1, 1, 2, 2]]}')
    with pytest.raises(MalformedGraph):
        MOYGraph([1], [(1, 2)], []).validate()   # internal mark 2 entered but never left
    with pytest.raises(MalformedGraph):
        MOYGraph.from_json({"arcs": [["a", 2]]})
    assert MOYGraph.from_json(g.to_json()) == g


@pytest.mark.parametrize("n", [2, 3, 4])
def test_loop_algebra(n):
    A = LoopAlgebra(n)
    assert A.trace(A.x_power(n - 1)) == Poly.const(1, n)
    for i in range(n - 1):
        assert A.trace(A.x_power(i)).is_zero()
    # x^n = -(a_{n-2} x^{n-2} + ... + a_0)
    assert A.x_power(n) == [-Poly.a(j, n) for j in range(n - 1)] + [Poly.zero(n)]
    p, q, r = A.x_power(1), A.x_power(n - 1), A.x_power(2)
    assert A.mul(A.mul(p, q), r) == A.mul(p, A.mul(q, r))
    assert A.mul(p, q) == A.mul(q, p)
    assert A.mul(A.unit(), q) == q


def test_thick_edge_cohomology_matches_slices():
    n = 2
    g = thick_braid_graph([1], 2)
    M = compile(g, n)
    assert dims_of(graph_local_cohomology(g, n)) == slice_local_cohomology(M, (), range(-10, 11))


def test_random_graphs_are_valid():
    rng = random.Random(1)
    for _ in range(30):
        g = random_graph(rng)
        g.validate()
        M = compile(g, rng.choice((2, 3)))
        assert M.potential == g.potential(M.n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_chi_composites(n):
    pair = chi_maps(n)
    x = Poly.x(1, n) - Poly.x(3, n)
    for first, second in ((pair.chi0, pair.chi1), (pair.chi1, pair.chi0)):
        for A, B in ((second.f0, first.f0), (second.f1, first.f1)):
            P = mat_mul(A, B, n)
            for i, row in enumerate(P):
                for j, e in enumerate(row):
                    assert e == (x if i == j else Poly.zero(n))


@pytest.mark.parametrize("mu,lam", [(0, 0), (2, -1), (-3, 3)])
def test_chi_parameters_agree_up_to_homotopy(mu, lam):
    n = 2
    base, other = chi_maps(n), chi_maps(n, mu, lam)
    for a, b in ((base.chi0, other.chi0), (base.chi1, other.chi1)):
        d0 = [[p - q for p, q in zip(r, s)] for r, s in zip(a.f0, b.f0)]
        d1 = [[p - q for p, q in zip(r, s)] for r, s in zip(a.f1, b.f1)]
        assert is_null_homotopic(MFMorphism(a.source, a.target, d0, d1, 1))


def test_chi_is_not_null_homotopic():
    pair = chi_maps(2)
    assert not is_null_homotopic(pair.chi0)
    assert not is_null_homotopic(pair.chi1)


@pytest.mark.parametrize("check", [dsd0_check, dsdI_check, dsdII_check, dsdIII_check, dsdIV_check])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_direct_sum_decompositions(check, n):
    report = check(n)
    assert report.passed, report.summary()
