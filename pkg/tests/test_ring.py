import random
from fractions import Fraction

import pytest
import sympy

from eqkr.ring import (AmbientMismatch, NotDivisible, P, P_prime, Poly, big_u1, big_u2,
                       exact_divide, g_k, pi_ij, potential, substitute, u_dprime, u_prime)
from oracles import to_sympy

X = {i: sympy.Symbol(f"x{i}") for i in range(1, 7)}


def x(i, n=2):
    return Poly.x(i, n)


def a(j, n=2):
    return Poly.a(j, n)


def test_add_and_cancel():
    assert (x(1) + (-x(1))).is_zero()
    p = (a(0) + x(1) ** 2) + x(1) ** 2
    assert p == a(0) + x(1) ** 2 * 2


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        x(1, 2) + x(1, 3)


def test_mul_and_grading():
    assert (x(1) - x(2)) * (x(1) + x(2)) == x(1) ** 2 - x(2) ** 2
    p = x(1) * x(2) + a(0)
    assert Poly.const(1, 2) * p == p
    assert (a(0) * x(1)).degree() == 6
    assert a(0, 4).degree() == 8 and a(2, 4).degree() == 4


def test_exact_divide():
    assert exact_divide(x(1) ** 2 - x(2) ** 2, x(1) - x(2)) == x(1) + x(2)
    with pytest.raises(NotDivisible):
        exact_divide(x(1) * x(2), x(3))


def test_pi_ij_n2():
    expected = (x(1) ** 2 + x(1) * x(2) + x(2) ** 2) * Fraction(1, 3) + a(0)
    assert pi_ij(1, 2, 2) == expected
    assert pi_ij(1, 2, 2).set_zero([-1]) == expected - a(0)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_pi_ij_limit_is_derivative(n):
    assert pi_ij(1, 2, n).substitute(2, x(1, n)) == P_prime(1, n)
    assert P_prime(1, n) == P(1, n).derivative(1)


def test_substitute():
    y = x(2)
    assert substitute(x(1) - y, 2, x(1)).is_zero()
    assert potential(Poly.zero(2), 2).is_zero()
    p = x(1) * x(2) - x(3) * x(4)
    assert p.substitute(4, x(1)) == x(1) * x(2) - x(1) * x(3)


def test_g_k_small():
    s1, s2 = sympy.symbols("s1 s2")
    S1, S2 = x(1), x(2)   # stand-ins for s1, s2
    want = {1: s1, 2: s1 ** 2 - 2 * s2, 3: s1 ** 3 - 3 * s1 * s2}
    for k, w in want.items():
        got = to_sympy(g_k(k, S1, S2)).subs({X[1]: s1, X[2]: s2}, simultaneous=True)
        assert sympy.expand(got - w) == 0


def test_u_small():
    assert u_prime(2, 2) == x(1) + x(2) + x(3) + x(4)
    assert u_dprime(2, 2) == Poly.const(-2, 2)
    s, t = x(1) + x(2), x(3) + x(4)
    assert u_prime(3, 2) == s ** 2 + s * t + t ** 2 - x(1) * x(2) * 3


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_identities_against_sympy(n):
    x1, x2, x3, x4 = (X[i] for i in range(1, 5))
    for k in range(1, n + 2):
        lhs = to_sympy(g_k(k, x(1, n) + x(2, n), x(1, n) * x(2, n)))
        assert sympy.expand(lhs - x1 ** k - x2 ** k) == 0
        up, ud = to_sympy(u_prime(k, n)), to_sympy(u_dprime(k, n))
        assert sympy.expand((x1 + x2 - x3 - x4) * up + (x1 * x2 - x3 * x4) * ud
                            - (x1 ** k + x2 ** k - x3 ** k - x4 ** k)) == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_big_u_identity(n):
    lhs = (x(1, n) + x(2, n) - x(3, n) - x(4, n)) * big_u1(n) + (x(1, n) * x(2, n) - x(3, n) * x(4, n)) * big_u2(n)
    assert lhs == P(1, n) + P(2, n) - P(3, n) - P(4, n)
    assert big_u1(n).degree() == 2 * n and big_u2(n).degree() == 2 * n - 2
    assert P(1, n).degree() == 2 * n + 2 and pi_ij(1, 2, n).degree() == 2 * n


def test_big_u_n2_matches_definition():
    assert big_u1(2) == u_prime(3, 2) * Fraction(1, 3) + a(0)
    assert big_u2(2) == u_dprime(3, 2) * Fraction(1, 3)


def test_big_u_numeric_n2():
    rng = random.Random(7)
    vals = {c: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for c in (1, 2, 3, 4, -1)}
    ev = lambda p: p.evaluate(vals).constant_term()
    lhs = ev(x(1) + x(2) - x(3) - x(4)) * ev(big_u1(2)) + ev(x(1) * x(2) - x(3) * x(4)) * ev(big_u2(2))
    assert lhs == ev(P(1, 2) + P(2, 2) - P(3, 2) - P(4, 2))


def _random_homogeneous(rng, n, degree):
    from eqkr.mf import monomials_of_degree
    monos = list(monomials_of_degree([1, 2, 3, -1], degree, n))
    terms = {m: Fraction(rng.randint(-5, 5)) for m in rng.sample(monos, min(3, len(monos)))}
    return Poly(terms, n)


def test_exact_divide_round_trip():
    rng = random.Random(11)
    for _ in range(30):
        q = _random_homogeneous(rng, 3, rng.choice((2, 4, 6)))
        d = _random_homogeneous(rng, 3, rng.choice((2, 4)))
        if d.is_zero():
            continue
        assert exact_divide(q * d, d) == q
