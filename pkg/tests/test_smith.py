import random
from fractions import Fraction

import pytest

from eqkr.smith import UPoly, graded_complex_homology, smith, umat_mul
from eqkr.ring import Poly


def _rand_upoly(rng, maxdeg=2):
    return UPoly([rng.randint(-3, 3) for _ in range(rng.randint(0, maxdeg + 1))])


def _is_diag(M, D):
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            want = D[i] if i == j and i < len(D) else UPoly()
            if x != want:
                return False
    return True


@pytest.mark.parametrize("seed", range(15))
def test_smith_transform_identity(seed):
    rng = random.Random(seed)
    m, k = rng.randint(1, 4), rng.randint(1, 4)
    A = [[_rand_upoly(rng) for _ in range(k)] for _ in range(m)]
    S = smith(A)
    assert _is_diag(umat_mul(umat_mul(S.U, A), S.V), S.D)
    ident = lambda r: [[UPoly.const(int(i == j)) for j in range(r)] for i in range(r)]
    assert umat_mul(S.U, S.Uinv) == ident(m)
    assert umat_mul(S.V, S.Vinv) == ident(k)
    # round trip: A = Uinv D Vinv
    assert umat_mul(umat_mul(S.Uinv, S.diagonal_matrix()), S.Vinv) == A
    for d, e in zip(S.D, S.D[1:]):
        assert not e.divmod(d)[1]
    for d in S.D:
        assert d.lead() == 1


def test_smith_known_example():
    t = UPoly.monomial(1)
    A = [[t, UPoly()], [UPoly(), t * t]]
    assert [d.c for d in smith(A).D] == [(0, 1), (0, 0, 1)]
    # diag(t, t+1) has invariant factors 1, t(t+1)
    B = [[t, UPoly()], [UPoly(), t + UPoly.const(1)]]
    assert [d.c for d in smith(B).D] == [(1,), (0, 1, 1)]


def test_upoly_divmod():
    p = UPoly([1, 0, 2, 3])
    d = UPoly([1, 1])
    q, r = p.divmod(d)
    assert q * d + r == p
    assert r.deg < d.deg


def test_graded_complex_homology_torsion():
    # entries have degree (source label) - (target label), as in the link complexes:
    # Q[a]{4} --a--> Q[a]{0} leaves Q[a]/(a) on the target generator
    n = 2
    a = Poly.a(0, n)
    H = graded_complex_homology({0: [4], 1: [0]}, {0: [[a]]}, -1, n)
    assert H.free == {}
    assert H.torsion == [(1, 0, 1)]
    H = graded_complex_homology({0: [0, 2], 1: [2]}, {0: [[Poly.zero(n), Poly.const(1, n)]]}, -1, n)
    assert H.free == {0: [0]} and H.torsion == []
    H = graded_complex_homology({0: [4, 0], 1: [0]}, {0: [[a, Poly.const(1, n)]]}, -1, n)
    assert H.free == {0: [4]} and H.torsion == []
