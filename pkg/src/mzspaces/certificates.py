"""p-adic certificates that a polynomial stays outside the radical of a
moment functional's kernel.

Two moment rules are supported: the unit-interval rule sends t^i to 1/(i+1),
the exponential rule sends t^i to i!.  A certificate names a prime p and a
power m and pins the exact p-adic valuation of the m-th power moment; the
value is recomputed exactly, so the certificate never rests on the theory
that motivated the prime search.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError, SearchExhaustedError
from .scalars import PADIC_INF, is_prime, padic_valuation
from .upoly import Poly

DEFAULT_SEARCH_BOUND = 10**6


class MomentRule(enum.Enum):
    UNIT_INTERVAL = "unit"
    EXPONENTIAL = "exp"

    def moment(self, i: int) -> Fraction:
        if i < 0:
            raise DomainError("moment index must be >= 0")
        if self is MomentRule.UNIT_INTERVAL:
            return Fraction(1, i + 1)
        return Fraction(factorial(i))


@dataclass(frozen=True)
class PAdicCertificate:
    """L(f^exponent) has the pinned valuation at the prime, hence is nonzero."""

    prime: int
    exponent: int
    valuation: int
    value: Fraction

    def __post_init__(self):
        if self.value == 0:
            raise DomainError("certificate value must be nonzero")
        actual = padic_valuation(self.value, self.prime)
        if actual is PADIC_INF or actual != self.valuation:
            raise DomainError(
                f"claimed valuation {self.valuation} but value has {actual}"
            )


def _require_rational(f: Poly):
    if not all(isinstance(c, (int, Fraction)) for c in f.coeffs):
        raise DomainError("certificates need rational coefficients")


def power_moment(rule: MomentRule, f: Poly, power: int) -> Fraction:
    """Exact termwise moment of f**power."""
    if power < 0:
        raise DomainError("power must be >= 0")
    _require_rational(f)
    expanded = f**power
    total = Fraction(0)
    for i, c in enumerate(expanded.coeffs):
        if c != 0:
            total = total + c * rule.moment(i)
    return total


def _denominators(f: Poly):
    return tuple(Fraction(c).denominator for c in f.coeffs if c != 0)


def certify_unit_interval(f: Poly, m_min: int = 1,
                          search_bound: int = DEFAULT_SEARCH_BOUND) -> PAdicCertificate:
    """Certificate that no power of f from m up is killed by the
    unit-interval rule: at p = m*deg(f) + 1 the moment has valuation -1.

    The search walks m upward, trying primes p = m*deg(f)+1 that divide no
    coefficient denominator; each hit is verified by exact expansion.
    """
    _require_rational(f)
    if f.is_zero or f.degree < 1:
        raise DomainError("certificates need degree >= 1")
    if f.lead != 1:
        raise DomainError("polynomial must be monic")
    if m_min < 1:
        raise DomainError("m_min must be >= 1")
    degree = f.degree
    denominators = _denominators(f)
    m = m_min
    for _ in range(search_bound):
        p = m * degree + 1
        if is_prime(p) and all(den % p != 0 for den in denominators):
            value = power_moment(MomentRule.UNIT_INTERVAL, f, m)
            if value != 0 and padic_valuation(value, p) == -1:
                return PAdicCertificate(prime=p, exponent=m, valuation=-1, value=value)
        m += 1
    raise SearchExhaustedError(
        f"no unit-interval certificate within {search_bound} progression terms"
    )


def _factorial_valuation(n: int, p: int) -> int:
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def certify_exponential(f: Poly, m_min: int = 1,
                        search_bound: int = DEFAULT_SEARCH_BOUND) -> PAdicCertificate:
    """Certificate that no power of f from m up is killed by the factorial
    rule, for f = t^r + higher terms with r >= 1: at p = r*m + 1 the moment
    has the same valuation as (r*m)!.
    """
    _require_rational(f)
    if f.is_zero or f.degree < 1:
        raise DomainError("certificates need degree >= 1")
    if m_min < 1:
        raise DomainError("m_min must be >= 1")
    r = f.low_order
    if r < 1:
        raise DomainError("lowest term must be t^r with r >= 1 (nonzero constant term)")
    if f.coefficient(r) != 1:
        raise DomainError(
            "lowest-degree coefficient must be 1; divide the polynomial through first"
        )
    if f.degree == r:
        raise DomainError(
            "single monomial t^r needs no certificate: its factorial moments never vanish"
        )
    denominators = _denominators(f)
    m = m_min
    for _ in range(search_bound):
        p = r * m + 1
        if is_prime(p) and all(den % p != 0 for den in denominators):
            claimed = _factorial_valuation(r * m, p)
            value = power_moment(MomentRule.EXPONENTIAL, f, m)
            if value != 0 and padic_valuation(value, p) == claimed:
                return PAdicCertificate(prime=p, exponent=m, valuation=claimed, value=value)
        m += 1
    raise SearchExhaustedError(
        f"no exponential certificate within {search_bound} progression terms"
    )
