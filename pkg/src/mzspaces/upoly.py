"""Dense univariate polynomials over an exact field, plus the evaluation maps
built on them: substitution, derivative-operator application, and
Euler-operator application (t d/dt).

Coefficients may be Fraction, PrimeFieldScalar, or plain int; ints act as
universal integers and embed into whichever field the other coefficients live
in.  The zero polynomial has degree NEG_INF so degree comparisons never need a
special case.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DoesNotSplitError, DomainError
from .scalars import scalar_inverse

NEG_INF = float("-inf")


class Poly:
    """Coefficient tuple, index = exponent, no trailing zeros; immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def variable(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, exponent, coeff=1):
        if exponent < 0:
            raise DomainError("monomial exponent must be >= 0")
        return cls((0,) * exponent + (coeff,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def low_order(self):
        """Multiplicity of the root 0 (index of the first nonzero coefficient)."""
        if not self.coeffs:
            raise DomainError("zero polynomial has no order at 0")
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise AssertionError("unreachable: canonical form has a nonzero coefficient")

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def scale(self, c):
        if c == 0:
            return Poly()
        return Poly(tuple(a * c for a in self.coeffs))

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise DomainError("polynomial powers must be >= 0")
        result = Poly((1,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    def __divmod__(self, other):
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.degree < other.degree:
            return Poly(), self
        inv_lead = scalar_inverse(other.lead)
        rem = list(self.coeffs)
        width = len(other.coeffs)
        quo = [0] * (len(rem) - width + 1)
        for k in range(len(quo) - 1, -1, -1):
            c = rem[k + width - 1]
            if c == 0:
                continue
            q = c * inv_lead
            quo[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * b
        return Poly(quo), Poly(rem[: width - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly(tuple(self.coeffs[i] * i for i in range(1, len(self.coeffs))))

    def euler(self):
        """t d/dt: scales the degree-i coefficient by i."""
        return Poly(tuple(self.coeffs[i] * i for i in range(len(self.coeffs))))

    def monic(self):
        if self.is_zero:
            raise DomainError("zero polynomial cannot be made monic")
        return self.scale(scalar_inverse(self.lead))

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        bits = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            else:
                t = "t" if i == 1 else f"t^{i}"
                term = t if c == 1 else (f"-{t}" if c == -1 else f"{c}*{t}")
            bits.append(term)
        text = " + ".join(bits).replace("+ -", "- ")
        return f"Poly({text})"


def eval_at(g: Poly, point):
    """Substitute a scalar for the variable."""
    return g(point)


def apply_der_op(op_poly: Poly, g: Poly) -> Poly:
    """Apply sum_i c_i (d/dt)^i to g, where op_poly = sum_i c_i T^i."""
    total = Poly()
    work = g
    for c in op_poly.coeffs:
        if c != 0:
            total = total + work.scale(c)
        work = work.derivative()
    return total


def apply_euler_op(op_poly: Poly, g: Poly) -> Poly:
    """Apply sum_i c_i (t d/dt)^i to g, where op_poly = sum_i c_i T^i."""
    total = Poly()
    work = g
    for c in op_poly.coeffs:
        if c != 0:
            total = total + work.scale(c)
        work = work.euler()
    return total


def extended_gcd(a: Poly, b: Poly):
    """(u, v, g) with u*a + v*b = g, g the monic gcd.

    Degrees are minimal: deg u < deg b - deg g and deg v < deg a - deg g
    whenever both u and v are nonzero.
    """
    if a.is_zero and b.is_zero:
        raise DomainError("gcd of two zero polynomials")
    r0, r1 = a, b
    u0, u1 = Poly((1,)), Poly()
    v0, v1 = Poly(), Poly((1,))
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    c = scalar_inverse(r0.lead)
    return u0.scale(c), v0.scale(c), r0.scale(c)


class RootData:
    """Distinct roots with multiplicities >= 1; listed order is authoritative."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        cleaned = []
        for lam, mult in pairs:
            mult = int(mult)
            if mult < 1:
                raise DomainError(f"multiplicity {mult} of root {lam} must be >= 1")
            if any(lam == seen for seen, _ in cleaned):
                raise DomainError(f"repeated root {lam}")
            cleaned.append((lam, mult))
        if not cleaned:
            raise DomainError("empty root data")
        self.pairs = tuple(cleaned)

    @property
    def roots(self):
        return tuple(lam for lam, _ in self.pairs)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.pairs)

    def multiplicity(self, lam) -> int:
        for seen, m in self.pairs:
            if seen == lam:
                return m
        return 0

    def poly(self) -> Poly:
        out = Poly((1,))
        for lam, m in self.pairs:
            out = out * Poly((-lam, 1)) ** m
        return out

    def radical_poly(self) -> Poly:
        out = Poly((1,))
        for lam, _ in self.pairs:
            out = out * Poly((-lam, 1))
        return out

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, RootData):
            return NotImplemented
        return self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        inner = ", ".join(f"({lam}, {m})" for lam, m in self.pairs)
        return f"RootData([{inner}])"


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(f: Poly) -> RootData:
    """All rational roots with multiplicities, via the rational root theorem
    on the primitive integer form.  Raises DoesNotSplitError if a factor of
    degree > 0 remains."""
    if f.is_zero:
        raise DomainError("zero polynomial has every root")
    if f.degree == 0:
        raise DomainError("constant polynomial has no roots")
    if not all(isinstance(c, (int, Fraction)) for c in f.coeffs):
        raise DomainError("root finding needs rational coefficients")
    found = []
    zero_mult = f.low_order
    work = Poly(f.coeffs[zero_mult:])
    if zero_mult:
        found.append((Fraction(0), zero_mult))
    if work.degree > 0:
        denom_lcm = 1
        for c in work.coeffs:
            d = Fraction(c).denominator
            denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
        ints = [int(Fraction(c) * denom_lcm) for c in work.coeffs]
        content = 0
        for c in ints:
            content = gcd(content, c)
        ints = [c // content for c in ints]
        candidates = set()
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                candidates.add(Fraction(p, q))
                candidates.add(Fraction(-p, q))
        for r in sorted(candidates):
            mult = 0
            while work.degree > 0 and work(r) == 0:
                work = work // Poly((-r, 1))
                mult += 1
            if mult:
                found.append((r, mult))
    if work.degree > 0:
        raise DoesNotSplitError(work)
    found.sort(key=lambda pair: pair[0])
    return RootData(found)


class LaurentPoly:
    """Finite support map exponent -> coefficient; exponents may be negative."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exp, c in items:
            exp = int(exp)
            c = data.get(exp, 0) + c
            if c == 0:
                data.pop(exp, None)
            else:
                data[exp] = c
        self.terms = {k: data[k] for k in sorted(data)}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def exponents(self):
        return tuple(self.terms)

    def coefficient(self, exp):
        return self.terms.get(exp, 0)

    def __add__(self, other):
        merged = dict(self.terms)
        for exp, c in other.terms.items():
            merged[exp] = merged.get(exp, 0) + c
        return LaurentPoly(merged)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise DomainError("Laurent powers here must be >= 0")
        result = LaurentPoly({0: 1})
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        if self.is_zero:
            return "LaurentPoly(0)"
        inner = ", ".join(f"{e}: {c}" for e, c in self.terms.items())
        return f"LaurentPoly({{{inner}}})"


def poly_to_json(p: Poly):
    from .scalars import format_rational

    return [format_rational(c) for c in p.coeffs]


def poly_from_json(data) -> Poly:
    from .scalars import parse_rational

    if not isinstance(data, list):
        raise DomainError("polynomial JSON must be an array of rational strings")
    return Poly(tuple(parse_rational(c) for c in data))


def laurent_to_json(p: LaurentPoly):
    from .scalars import format_rational

    return {str(e): format_rational(c) for e, c in p.terms.items()}


def laurent_from_json(data) -> LaurentPoly:
    from .scalars import parse_rational

    if not isinstance(data, dict):
        raise DomainError("Laurent JSON must map exponent strings to rationals")
    out = {}
    for key, c in data.items():
        try:
            exp = int(key)
        except ValueError as exc:
            raise DomainError(f"bad Laurent exponent {key!r}") from exc
        out[exp] = parse_rational(c)
    return LaurentPoly(out)
