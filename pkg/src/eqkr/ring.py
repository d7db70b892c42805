"""Exact graded polynomials over Q in marks x_i and coefficients a_j.

Variables are encoded as integers: a mark ``x_i`` has code ``i >= 0`` and a
coefficient ``a_j`` has code ``-(j + 1)``.  A monomial is a tuple of
``(code, exponent)`` pairs sorted by code.  Gradings follow ``deg x_i = 2``
and ``deg a_j = 2(n - j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class AmbientMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class VarId:
    kind: str  # "mark" or "coeff"
    index: int

    def __post_init__(self):
        if self.kind not in ("mark", "coeff"):
            raise ValueError(f"unknown variable kind {self.kind!r}")
        if self.index < 0:
            raise ValueError("variable index must be non-negative")

    @property
    def code(self) -> int:
        return self.index if self.kind == "mark" else -(self.index + 1)

    @classmethod
    def from_code(cls, code: int) -> "VarId":
        return cls("mark", code) if code >= 0 else cls("coeff", -code - 1)

    def __str__(self):
        return f"x{self.index}" if self.kind == "mark" else f"a{self.index}"


def var_weight(code: int, n: int) -> int:
    if code >= 0:
        return 2
    return 2 * (n + code + 1)


def mono_mul(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(m: tuple, n: int) -> int:
    return sum(var_weight(v, n) * e for v, e in m)


def _lex_key(m: tuple):
    return tuple((-v, e) for v, e in m)


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("terms", "n", "_hash")

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None, n: int = 2):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean
        self.n = n
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, c, n: int) -> "Poly":
        return cls({(): Fraction(c)}, n)

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls({}, n)

    @classmethod
    def var(cls, v: VarId | int, n: int) -> "Poly":
        code = v.code if isinstance(v, VarId) else v
        if code < 0 and -code - 1 > n - 2:
            raise ValueError(f"coefficient a{-code - 1} does not exist for n={n}")
        return cls({((code, 1),): Fraction(1)}, n)

    @classmethod
    def x(cls, i: int, n: int) -> "Poly":
        return cls.var(i, n)

    @classmethod
    def a(cls, j: int, n: int) -> "Poly":
        return cls.var(-(j + 1), n)

    # -- basic protocol -------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.n != self.n:
                raise AmbientMismatch(f"ambient n={self.n} vs n={other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.n)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.n)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Poly(t, self.n)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()}, self.n)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly.zero(self.n)
            return Poly({m: c * other for m, c in self.terms.items()}, self.n)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = t.get(m, 0) + c1 * c2
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        return Poly(t, self.n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return exact_divide(self, other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_mono(self, mono: tuple, coeff=1) -> "Poly":
        return Poly({mono_mul(m, mono): c * coeff for m, c in self.terms.items()}, self.n)

    # -- inspection -----------------------------------------------------
    def variables(self) -> set[int]:
        return {v for m in self.terms for v, _ in m}

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def degrees(self) -> set[int]:
        return {mono_degree(m, self.n) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """q-degree of a homogeneous polynomial; ``None`` for zero."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise ValueError(f"polynomial is not homogeneous: {self}")
        return ds.pop()

    def degree_in(self, code: int) -> int:
        return max((dict(m).get(code, 0) for m in self.terms), default=-1)

    def linear_in(self, code: int):
        """Return ``(lam, rest)`` if self = lam*var + rest with lam rational and
        rest free of the variable, else ``None``."""
        lam = Fraction(0)
        rest = {}
        for m, c in self.terms.items():
            e = dict(m).get(code, 0)
            if e == 0:
                rest[m] = c
            elif e == 1 and m == ((code, 1),):
                lam = c
            else:
                return None
        if not lam:
            return None
        return lam, Poly(rest, self.n)

    # -- evaluation -----------------------------------------------------
    def substitute(self, code: int | VarId, value: "Poly") -> "Poly":
        if isinstance(code, VarId):
            code = code.code
        if code not in self.variables():
            return self
        value = self._coerce(value)
        powers = {}
        out = Poly.zero(self.n)
        for m, c in self.terms.items():
            d = dict(m)
            e = d.pop(code, 0)
            rest = Poly({tuple(sorted(d.items())): c}, self.n)
            if e:
                if e not in powers:
                    powers[e] = value ** e
                rest = rest * powers[e]
            out = out + rest
        return out

    def set_zero(self, codes: Iterable[int]) -> "Poly":
        codes = set(codes)
        if not codes:
            return self
        return Poly({m: c for m, c in self.terms.items()
                     if not any(v in codes for v, _ in m)}, self.n)

    def evaluate(self, values: Mapping[int, Fraction]) -> "Poly":
        """Substitute rational values for some variables."""
        t: dict = {}
        for m, c in self.terms.items():
            keep = []
            for v, e in m:
                if v in values:
                    c = c * Fraction(values[v]) ** e
                else:
                    keep.append((v, e))
            if c:
                k = tuple(keep)
                s = t.get(k, 0) + c
                if s:
                    t[k] = s
                else:
                    t.pop(k, None)
        return Poly(t, self.n)

    def derivative(self, code: int) -> "Poly":
        t = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(code, 0)
            if e:
                if e == 1:
                    del d[code]
                else:
                    d[code] = e - 1
                t[tuple(sorted(d.items()))] = c * e
        return Poly(t, self.n)

    def leading_term(self):
        m = max(self.terms, key=_lex_key)
        return m, self.terms[m]

    # -- printing -------------------------------------------------------
    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_lex_key, reverse=True):
            c = self.terms[m]
            vs = "*".join(str(VarId.from_code(v)) + (f"^{e}" if e > 1 else "") for v, e in m)
            if not vs:
                parts.append(str(c))
            elif c == 1:
                parts.append(vs)
            elif c == -1:
                parts.append("-" + vs)
            else:
                parts.append(f"{c}*{vs}")
        return " + ".join(parts).replace("+ -", "- ")


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def substitute(p: Poly, v: VarId | int, q: Poly) -> Poly:
    return p.substitute(v, q)


def _mono_div(m: tuple, d: tuple):
    dm = dict(m)
    for v, e in d:
        if dm.get(v, 0) < e:
            return None
        dm[v] -= e
        if dm[v] == 0:
            del dm[v]
    return tuple(sorted(dm.items()))


def exact_divide(p: Poly, d: Poly) -> Poly:
    """Multivariate long division (lex order); any remainder is an error."""
    if p.n != d.n:
        raise AmbientMismatch(f"ambient n={p.n} vs n={d.n}")
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    dm, dc = d.leading_term()
    rem = dict(p.terms)
    quot: dict = {}
    while rem:
        m = max(rem, key=_lex_key)
        qm = _mono_div(m, dm)
        if qm is None:
            raise NotDivisible(f"{p} is not divisible by {d}")
        qc = rem[m] / dc
        quot[qm] = quot.get(qm, 0) + qc
        for m2, c2 in d.terms.items():
            mm = mono_mul(qm, m2)
            s = rem.get(mm, 0) - qc * c2
            if s:
                rem[mm] = s
            else:
                rem.pop(mm, None)
    return Poly(quot, p.n)


def check_homogeneous(p: Poly, degree: int | None = None, what: str = "polynomial") -> Poly:
    if not p.is_homogeneous():
        raise ValueError(f"{what} is not homogeneous: {p}")
    if degree is not None and not p.is_zero() and p.degree() != degree:
        raise ValueError(f"{what} has degree {p.degree()}, expected {degree}")
    return p


# ---------------------------------------------------------------------------
# Closed-form families


def potential(x: Poly, n: int) -> Poly:
    """P(x) = x^(n+1)/(n+1) + sum_j a_j x^(j+1)/(j+1), evaluated at a polynomial."""
    out = x ** (n + 1) * Fraction(1, n + 1)
    for j in range(n - 1):
        out = out + Poly.a(j, n) * x ** (j + 1) * Fraction(1, j + 1)
    return out


def P(i: int, n: int) -> Poly:
    return check_homogeneous(potential(Poly.x(i, n), n), 2 * n + 2, "P")


def P_prime(i: int, n: int) -> Poly:
    """x^n + a_{n-2} x^{n-2} + ... + a_0, the derivative of P."""
    x = Poly.x(i, n)
    out = x ** n
    for j in range(n - 1):
        out = out + Poly.a(j, n) * x ** j
    return out


def g_k(k: int, s1: Poly, s2: Poly) -> Poly:
    """The polynomial with g_k(x + y, xy) = x^k + y^k, evaluated at (s1, s2)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = s1 ** k
    for i in range(1, k // 2 + 1):
        coeff = Fraction(k * (-1) ** i, i) * comb(k - 1 - i, i - 1)
        out = out + s2 ** i * s1 ** (k - 2 * i) * coeff
    return out


def _thick_vars(marks, n):
    return [Poly.x(i, n) for i in marks]


def u_prime(k: int, n: int, marks=(1, 2, 3, 4)) -> Poly:
    x1, x2, x3, x4 = _thick_vars(marks, n)
    num = x1 ** k + x2 ** k - g_k(k, x3 + x4, x1 * x2)
    return exact_divide(num, x1 + x2 - x3 - x4)


def u_dprime(k: int, n: int, marks=(1, 2, 3, 4)) -> Poly:
    x1, x2, x3, x4 = _thick_vars(marks, n)
    num = g_k(k, x3 + x4, x1 * x2) - x3 ** k - x4 ** k
    return exact_divide(num, x1 * x2 - x3 * x4)


def big_u1(n: int, marks=(1, 2, 3, 4)) -> Poly:
    out = u_prime(n + 1, n, marks) * Fraction(1, n + 1)
    for j in range(n - 1):
        out = out + Poly.a(j, n) * u_prime(j + 1, n, marks) * Fraction(1, j + 1)
    return check_homogeneous(out, 2 * n, "U1")


def big_u2(n: int, marks=(1, 2, 3, 4)) -> Poly:
    out = u_dprime(n + 1, n, marks) * Fraction(1, n + 1)
    for j in range(n - 1):
        out = out + Poly.a(j, n) * u_dprime(j + 1, n, marks) * Fraction(1, j + 1)
    return check_homogeneous(out, 2 * n - 2, "U2")


def pi_ij(i: int, j: int, n: int) -> Poly:
    """(P(x_i) - P(x_j)) / (x_i - x_j); for i == j this is P'(x_i)."""
    if i == j:
        return P_prime(i, n)
    num = P(i, n) - P(j, n)
    return check_homogeneous(exact_divide(num, Poly.x(i, n) - Poly.x(j, n)), 2 * n, "P_ij")
