import pytest

from eqkr.graphs import arc_rows, gamma0, gamma1
from eqkr.koszul import KoszulMF, koszul_local_cohomology
from eqkr.mf import (InvariantError, LocalCohomology, MFMorphism, PotentialMismatch, dual, ext,
                     hom_complex, identity_morphism, is_homotopy_iso, is_null_homotopic, koszul,
                     local_cohomology, shift_c, shift_q, simplify, tensor, unit_mf)
from eqkr.ring import P, P_prime, Poly
from oracles import dims_of, slice_local_cohomology


def arc(n, j, i):
    b, c, s = arc_rows(n, j, i)
    return koszul([b], [c], [s]).check()


def same(M, N):
    return (M.deg0, M.deg1, M.d0, M.d1, M.potential) == (N.deg0, N.deg1, N.d0, N.d1, N.potential)


@pytest.mark.parametrize("n", [2, 3])
def test_arc_factorization(n):
    L = arc(n, 1, 2)
    assert L.potential == P(2, n) - P(1, n)
    assert local_cohomology(L) == LocalCohomology([0], [1 - n])


def test_orthogonal_pair_has_zero_potential():
    M = koszul([Poly.zero(2)], [Poly.x(1, 2)], [-1]).check()
    assert M.potential.is_zero()


def test_check_catches_bad_factorization():
    L = arc(2, 1, 2)
    bad = L.map_entries(lambda e: e)
    bad.d0 = [[bad.d0[0][0] * 2]]
    with pytest.raises(InvariantError):
        bad.check()


@pytest.mark.parametrize("n", [2, 3])
def test_tensor_potential_and_square(n):
    A, B = arc(n, 1, 2), arc(n, 3, 4)
    T = tensor(A, B).check()
    assert T.potential == A.potential + B.potential
    assert T.rank == (2, 2)
    U = tensor(A, unit_mf(n)).check()
    assert local_cohomology(U) == local_cohomology(A)


def test_tensor_associativity_up_to_cohomology():
    n = 2
    A, B, C = arc(n, 1, 2), arc(n, 2, 3), arc(n, 3, 1)
    L = tensor(tensor(A, B), C).check()
    R = tensor(A, tensor(B, C)).check()
    assert L.potential.is_zero() and R.potential.is_zero()
    assert dims_of(local_cohomology(simplify(L), ())) == dims_of(local_cohomology(simplify(R), ()))


def test_shifts():
    L = arc(3, 1, 2)
    assert same(shift_c(shift_c(L)), L)
    assert shift_c(L).potential == L.potential
    assert local_cohomology(shift_c(L)) == local_cohomology(L).swapped()
    assert same(shift_q(L, 0), L)
    assert same(shift_q(shift_q(L, 2), 3), shift_q(L, 5))
    assert same(shift_q(shift_c(L), 4), shift_c(shift_q(L, 4)))


def test_dual():
    M = gamma1(2).to_mf().check()
    D = dual(M).check()
    assert D.potential == -M.potential
    assert sorted(D.deg0) == sorted(-g for g in M.deg0)
    DD = dual(D).check()
    assert DD.potential == M.potential
    assert sorted(DD.deg0) == sorted(M.deg0) and sorted(DD.deg1) == sorted(M.deg1)


def test_hom_complex_potential():
    M = gamma1(2).to_mf()
    assert hom_complex(M, M).check().potential.is_zero()
    with pytest.raises(PotentialMismatch):
        ext(M, arc(2, 1, 2), [0])


@pytest.mark.parametrize("n,deg2", [(2, 2), (3, 3)])
def test_thick_edge_endomorphisms(n, deg2):
    G = gamma1(n).to_mf()
    e = ext(G, G, [-2, 0, 2])
    assert e[-2] == (0, 0)
    assert e[0][0] == 1
    assert e[2][0] == deg2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_closed_circle(n):
    circ = koszul([P_prime(1, n)], [Poly.zero(n)], [1 - n])
    assert local_cohomology(circ, {1}) == LocalCohomology([], list(range(1 - n, n, 2)))


def test_unit_entry_is_contractible():
    n = 2
    M = koszul([Poly.const(1, n)], [P(1, n)], [n + 1])
    assert local_cohomology(M) == LocalCohomology([], [])
    assert simplify(M).rank == (0, 0)


def test_simplify_glued_arcs():
    n = 3
    K = KoszulMF.build(*zip(arc_rows(n, 1, 2), arc_rows(n, 2, 3)))
    glued = koszul_local_cohomology(K, internal={2})
    assert glued == local_cohomology(arc(n, 1, 3))
    # a factorization without unit entries is a fixed point
    L = arc(n, 1, 3)
    assert same(simplify(L), L)


def test_simplify_agrees_with_slices():
    n = 2
    M = tensor(arc(n, 1, 2), arc(n, 2, 3)).check()
    window = range(-8, 9)
    assert dims_of(koszul_local_cohomology(
        KoszulMF.build(*zip(arc_rows(n, 1, 2), arc_rows(n, 2, 3))), {2})) == \
        slice_local_cohomology(M, {2}, window)


def test_homotopy_iso_criterion():
    L = arc(2, 1, 2)
    assert is_homotopy_iso(identity_morphism(L))
    zero = MFMorphism(L, L, [[Poly.zero(2)]], [[Poly.zero(2)]], 0)
    assert not is_homotopy_iso(zero)


def test_null_homotopy():
    L = arc(2, 1, 2)
    assert not is_null_homotopic(identity_morphism(L))
    zero = MFMorphism(L, L, [[Poly.zero(2)]], [[Poly.zero(2)]], 0)
    assert is_null_homotopic(zero)
    # multiplication by x2 - x1 is null-homotopic on the arc
    x = Poly.x(2, 2) - Poly.x(1, 2)
    assert is_null_homotopic(MFMorphism(L, L, [[x]], [[x]], 2).check())
    G0 = gamma0(2).to_mf()
    x1 = Poly.x(1, 2)
    F = MFMorphism(G0, G0, [[x1 if i == j else Poly.zero(2) for j in range(2)] for i in range(2)],
                   [[x1 if i == j else Poly.zero(2) for j in range(2)] for i in range(2)], 2).check()
    assert not is_null_homotopic(F)
