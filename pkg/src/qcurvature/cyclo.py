"""Exact arithmetic in Z[q]: q-numbers, Gaussian binomials, cyclotomic moduli.

All coefficients are arbitrary-precision integers and every operation is
exact.  "q is a primitive N-th root of unity" is modelled algebraically as
reduction modulo the N-th cyclotomic polynomial, which turns "this vanishes
at a primitive root" into a decidable remainder test.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable


@dataclass(frozen=True)
class QPoly:
    """Polynomial in the formal variable q with integer coefficients.

    ``coeffs[i]`` holds the coefficient of ``q**i``.  The tuple is kept
    canonical: empty for the zero polynomial, last entry nonzero otherwise.
    Instances are immutable and structural equality is ring equality.

    >>> QPoly((1, 1)) * QPoly((1, 1))
    QPoly('1 + 2*q + q^2')
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = tuple(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_int(cls, n: int) -> QPoly:
        return cls((n,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> QPoly:
        """The polynomial ``coefficient * q**exponent``."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * exponent + (coefficient,))

    # -- ring structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: QPoly | int) -> QPoly:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: QPoly | int) -> QPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: QPoly | int) -> QPoly:
        return _coerce(other) + (-self)

    def __mul__(self, other: QPoly | int) -> QPoly:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise ValueError("negative powers are not defined in Z[q]")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, divisor: QPoly) -> tuple[QPoly, QPoly]:
        """Long division; every leading-coefficient division must be exact.

        Sufficient for this package: all divisors in use are monic.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        quot = [0] * max(len(self.coeffs) - len(divisor.coeffs) + 1, 0)
        rem = list(self.coeffs)
        while len(rem) >= len(divisor.coeffs):
            head, r = divmod(rem[-1], lead)
            if r:
                raise ValueError(f"{rem[-1]} is not divisible by {lead}")
            shift = len(rem) - len(divisor.coeffs)
            quot[shift] = head
            for i, c in enumerate(divisor.coeffs):
                rem[shift + i] -= head * c
            while rem and rem[-1] == 0:
                rem.pop()
        return QPoly(tuple(quot)), QPoly(tuple(rem))

    def exact_div(self, divisor: QPoly) -> QPoly:
        """Quotient of an exact division; raises ValueError on a remainder."""
        quot, rem = divmod(self, divisor)
        if not rem.is_zero():
            raise ValueError(f"{self} is not divisible by {divisor}")
        return quot

    def evaluate(self, x: int) -> int:
        """Value at an integer point (Horner); used for q=1 specialisation."""
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif mag == 1:
                body = "q" if i == 1 else f"q^{i}"
            else:
                body = f"{mag}*q" if i == 1 else f"{mag}*q^{i}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def compact(self) -> str:
        """Whitespace-free rendering, e.g. ``1+q`` (for embedding in terms)."""
        return str(self).replace(" ", "")

    def latex(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "q" if i == 1 else f"q^{{{i}}}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+{body}" if c > 0 else f"-{body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"QPoly('{self}')"


def _coerce(value: QPoly | int) -> QPoly:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly((value,))
    return NotImplemented


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


def q_number(k: int) -> QPoly:
    """The q-integer 1 + q + ... + q^(k-1); zero for k = 0.

    >>> print(q_number(3))
    1 + q + q^2
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return QPoly((1,) * k)


@cache
def q_factorial(k: int) -> QPoly:
    """Product of the q-integers 1..k; the empty product 1 for k = 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return ONE
    return q_factorial(k - 1) * q_number(k)


@cache
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial coefficient, division-free.

    Uses the Pascal-type recurrence C(n,k) = C(n-1,k-1) + q^k * C(n-1,k)
    so no polynomial division is ever needed; agreement with the factorial
    quotient is checked in the test suite by exact division.
    Out-of-range k yields 0.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + QPoly.monomial(k) * q_binomial(n - 1, k)


def divisors(n: int) -> list[int]:
    """Positive divisors of n in ascending order."""
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


@cache
def cyclotomic(n: int) -> QPoly:
    """The n-th cyclotomic polynomial, by exact division of q^n - 1.

    >>> print(cyclotomic(4))
    1 + q^2
    """
    if n < 1:
        raise ValueError("n must be positive")
    numerator = QPoly.monomial(n) - ONE
    for d in divisors(n)[:-1]:
        numerator = numerator.exact_div(cyclotomic(d))
    return numerator


@dataclass(frozen=True)
class CycloModulus:
    """The quotient ring Z[q]/Phi_n(q), i.e. q as a primitive n-th root of unity."""

    n: int
    phi: QPoly

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("a primitive root of unity needs n >= 2")
        if self.phi.coeffs[-1:] != (1,):
            raise ValueError("modulus must be monic")

    @classmethod
    def of(cls, n: int) -> CycloModulus:
        return cls(n, cyclotomic(n))

    def reduce(self, p: QPoly) -> QPoly:
        return reduce(p, self)


def reduce(p: QPoly, m: CycloModulus) -> QPoly:
    """Unique remainder of p modulo the cyclotomic modulus.

    The modulus is monic, so the remainder keeps integer coefficients and
    has degree < deg(phi).
    """
    _, rem = divmod(p, m.phi)
    return rem


def coeffs_list(p: QPoly) -> list[int]:
    """JSON form: ascending coefficient list, ``[]`` for zero."""
    return list(p.coeffs)


def poly_from_coeffs(coeffs: Iterable[int]) -> QPoly:
    return QPoly(tuple(coeffs))
