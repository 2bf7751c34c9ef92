"""Membership in the joint image of the twisted derivations d/dx_i - zeta_i
over F_p[zeta_1..zeta_n][x_1..x_n], decided exactly with reconstructible
certificates.

The decision walks the top x-degree layer of the working polynomial: a term
whose coefficient has a nonzero constant term in the zeta variables is an
obstruction (no image element has one, by the top-degree coefficient lemma);
otherwise each top term is divisible by some zeta_i and can be pushed one
x-degree down through the identity zeta_i*u = d_i(u) - (d_i - zeta_i)(u).
Termination is forced because the top x-degree strictly drops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .scalars import is_prime


class ZXPoly:
    """Polynomial over F_p in paired variable groups: n coefficient variables
    (zeta) and n operator variables (x).  Terms map an exponent pair
    (zeta exponents, x exponents) to a residue in [1, p)."""

    __slots__ = ("nvars", "modulus", "terms")

    def __init__(self, nvars: int, modulus: int, terms=()):
        if nvars < 1:
            raise DomainError("need at least one variable pair")
        if not isinstance(modulus, int) or not is_prime(modulus):
            raise DomainError(f"modulus {modulus!r} is not prime")
        self.nvars = nvars
        self.modulus = modulus
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for key, c in items:
            zexp, xexp = key
            zexp = tuple(int(e) for e in zexp)
            xexp = tuple(int(e) for e in xexp)
            if len(zexp) != nvars or len(xexp) != nvars:
                raise DomainError("exponent vectors must match the variable count")
            if any(e < 0 for e in zexp + xexp):
                raise DomainError("exponents must be >= 0")
            key = (zexp, xexp)
            c = (data.get(key, 0) + c) % modulus
            if c == 0:
                data.pop(key, None)
            else:
                data[key] = c
        self.terms = data

    @classmethod
    def zero(cls, nvars: int, modulus: int) -> "ZXPoly":
        return cls(nvars, modulus)

    @classmethod
    def one(cls, nvars: int, modulus: int) -> "ZXPoly":
        zeros = (0,) * nvars
        return cls(nvars, modulus, {(zeros, zeros): 1})

    @classmethod
    def monomial(cls, nvars: int, modulus: int, zeta_exps, x_exps, coeff=1) -> "ZXPoly":
        return cls(nvars, modulus, {(tuple(zeta_exps), tuple(x_exps)): coeff})

    def _check(self, other: "ZXPoly"):
        if self.nvars != other.nvars or self.modulus != other.modulus:
            raise DomainError("mixed variable counts or moduli")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def x_degree(self):
        """Top total degree in the x variables; None for the zero polynomial."""
        return max((sum(x) for _, x in self.terms), default=None)

    @property
    def total_degree(self):
        return max((sum(z) + sum(x) for z, x in self.terms), default=None)

    def __add__(self, other):
        self._check(other)
        merged = dict(self.terms)
        for key, c in other.terms.items():
            merged[key] = merged.get(key, 0) + c
        return ZXPoly(self.nvars, self.modulus, merged)

    def __neg__(self):
        return ZXPoly(self.nvars, self.modulus,
                      {k: self.modulus - c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for (z1, x1), c1 in self.terms.items():
            for (z2, x2), c2 in other.terms.items():
                key = (tuple(a + b for a, b in zip(z1, z2)),
                       tuple(a + b for a, b in zip(x1, x2)))
                out[key] = (out.get(key, 0) + c1 * c2) % self.modulus
        return ZXPoly(self.nvars, self.modulus, out)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise DomainError("powers must be >= 0")
        result = ZXPoly.one(self.nvars, self.modulus)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    def partial_x(self, index: int) -> "ZXPoly":
        if not 0 <= index < self.nvars:
            raise DomainError("variable index out of range")
        out = {}
        for (zexp, xexp), c in self.terms.items():
            if xexp[index] == 0:
                continue
            scaled = c * xexp[index] % self.modulus
            if scaled == 0:
                continue
            lowered = list(xexp)
            lowered[index] -= 1
            out[(zexp, tuple(lowered))] = scaled
        return ZXPoly(self.nvars, self.modulus, out)

    def shift_zeta(self, index: int) -> "ZXPoly":
        if not 0 <= index < self.nvars:
            raise DomainError("variable index out of range")
        out = {}
        for (zexp, xexp), c in self.terms.items():
            raised = list(zexp)
            raised[index] += 1
            out[(tuple(raised), xexp)] = c
        return ZXPoly(self.nvars, self.modulus, out)

    def __eq__(self, other):
        if not isinstance(other, ZXPoly):
            return NotImplemented
        return (self.nvars == other.nvars and self.modulus == other.modulus
                and self.terms == other.terms)

    def __repr__(self):
        return f"ZXPoly(n={self.nvars}, p={self.modulus}, {self.terms!r})"

    def to_json(self):
        out = []
        for (zexp, xexp) in sorted(self.terms):
            out.append({"zeta": list(zexp), "x": list(xexp),
                        "c": self.terms[(zexp, xexp)]})
        return out

    @classmethod
    def from_json(cls, data, nvars: int, modulus: int) -> "ZXPoly":
        if not isinstance(data, list):
            raise DomainError("polynomial JSON must be a list of term objects")
        terms = {}
        for item in data:
            if not isinstance(item, dict) or not {"zeta", "x", "c"} <= set(item):
                raise DomainError("each term needs zeta, x, and c fields")
            if not isinstance(item["c"], int):
                raise DomainError("coefficients must be integers")
            key = (tuple(item["zeta"]), tuple(item["x"]))
            terms[key] = terms.get(key, 0) + item["c"]
        return cls(nvars, modulus, terms)


def apply_d(index: int, q: ZXPoly) -> ZXPoly:
    """The twisted derivation for one variable pair: d/dx_index - zeta_index."""
    if not 0 <= index < q.nvars:
        raise DomainError("variable index out of range")
    return q.partial_x(index) - q.shift_zeta(index)


@dataclass(frozen=True)
class ImDCertificate:
    """Preimages q_1..q_n with sum_i (d/dx_i - zeta_i)(q_i) equal to the input."""

    preimages: tuple

    def reconstruct(self) -> ZXPoly:
        total = ZXPoly.zero(self.preimages[0].nvars, self.preimages[0].modulus)
        for i, q in enumerate(self.preimages):
            total = total + apply_d(i, q)
        return total


@dataclass(frozen=True)
class ObstructionReport:
    """A top-layer term with unit coefficient: proof of non-membership."""

    x_degree: int
    zeta_exps: tuple
    x_exps: tuple
    coefficient: int


def _accumulate(store, key, delta, modulus):
    value = (store.get(key, 0) + delta) % modulus
    if value == 0:
        store.pop(key, None)
    else:
        store[key] = value


def imd_decide(b: ZXPoly, var_order=None):
    """Total decision: an ImDCertificate when b lies in the joint image, an
    ObstructionReport otherwise.  The verdict does not depend on var_order
    (the tie-break for which variable absorbs a term); certificates may."""
    n, p = b.nvars, b.modulus
    if var_order is None:
        order = tuple(range(n))
    else:
        order = tuple(var_order)
        if sorted(order) != list(range(n)):
            raise DomainError("var_order must be a permutation of the variable indices")
    work = dict(b.terms)
    preimages = [dict() for _ in range(n)]
    while work:
        top_degree = max(sum(x) for _, x in work)
        layer = sorted(key for key in work if sum(key[1]) == top_degree)
        for zexp, xexp in layer:
            if all(e == 0 for e in zexp):
                return ObstructionReport(
                    x_degree=top_degree,
                    zeta_exps=zexp,
                    x_exps=xexp,
                    coefficient=work[(zexp, xexp)],
                )
        for key in layer:
            zexp, xexp = key
            c = work.pop(key)
            index = next(i for i in order if zexp[i] > 0)
            lowered_z = list(zexp)
            lowered_z[index] -= 1
            u_key = (tuple(lowered_z), xexp)
            _accumulate(preimages[index], u_key, -c, p)
            if xexp[index] > 0:
                scaled = c * xexp[index] % p
                if scaled:
                    lowered_x = list(xexp)
                    lowered_x[index] -= 1
                    _accumulate(work, (tuple(lowered_z), tuple(lowered_x)), scaled, p)
    certificate = ImDCertificate(
        preimages=tuple(ZXPoly(n, p, terms) for terms in preimages)
    )
    if certificate.reconstruct() != b:
        raise AssertionError("image certificate failed to reconstruct the input")
    return certificate


def j_ideal_witness(b: ZXPoly) -> Optional[ImDCertificate]:
    """Direct certificate when every term carries some zeta exponent >= p,
    via the operator identity (d/dx_i - zeta_i)^p = -zeta_i^p.  Returns None
    (no claim) when some term has all zeta exponents below p."""
    n, p = b.nvars, b.modulus
    preimages = [ZXPoly.zero(n, p) for _ in range(n)]
    for (zexp, xexp), c in sorted(b.terms.items()):
        index = next((i for i in range(n) if zexp[i] >= p), None)
        if index is None:
            return None
        lowered = list(zexp)
        lowered[index] -= p
        piece = ZXPoly.monomial(n, p, lowered, xexp, -c)
        for _ in range(p - 1):
            piece = apply_d(index, piece)
        preimages[index] = preimages[index] + piece
    certificate = ImDCertificate(preimages=tuple(preimages))
    if certificate.reconstruct() != b:
        raise AssertionError("high zeta-power certificate failed to reconstruct")
    return certificate


@dataclass(frozen=True)
class CorollaryReport:
    """p-th power membership forces every x-coefficient of f into the zeta
    ideal; the check reports a counterexample if one ever appeared."""

    power_member: bool
    obstruction: Optional[ObstructionReport]
    certificate: Optional[ImDCertificate]
    coefficients_in_ideal: Optional[bool]
    counterexample_x_exps: Optional[tuple]


def _coefficients_in_ideal(f: ZXPoly):
    """Each x-monomial coefficient of f is a zeta polynomial; it lies in the
    zeta ideal exactly when it has no constant term."""
    for (zexp, xexp) in sorted(f.terms):
        if all(e == 0 for e in zexp):
            return False, xexp
    return True, None


def corollary_check(f: ZXPoly) -> CorollaryReport:
    result = imd_decide(f**f.modulus)
    if isinstance(result, ObstructionReport):
        return CorollaryReport(
            power_member=False,
            obstruction=result,
            certificate=None,
            coefficients_in_ideal=None,
            counterexample_x_exps=None,
        )
    in_ideal, counterexample = _coefficients_in_ideal(f)
    return CorollaryReport(
        power_member=True,
        obstruction=None,
        certificate=result,
        coefficients_in_ideal=in_ideal,
        counterexample_x_exps=counterexample,
    )


@dataclass(frozen=True)
class TheoremReport:
    """If f^p is in the image, then g f^m is for every m >= p^2; checked at
    the boundary powers p^2 and p^2 + 1."""

    hypothesis_holds: bool
    obstruction: Optional[ObstructionReport]
    hypothesis_certificate: Optional[ImDCertificate]
    conclusion_holds: Optional[bool]
    boundary_certificates: Optional[tuple]


def charp_theorem_check(f: ZXPoly, g: ZXPoly) -> TheoremReport:
    f._check(g)
    p = f.modulus
    hypothesis = imd_decide(f**p)
    if isinstance(hypothesis, ObstructionReport):
        return TheoremReport(
            hypothesis_holds=False,
            obstruction=hypothesis,
            hypothesis_certificate=None,
            conclusion_holds=None,
            boundary_certificates=None,
        )
    f_p2 = f ** (p * p)
    first = imd_decide(g * f_p2)
    second = imd_decide(g * f_p2 * f)
    ok = isinstance(first, ImDCertificate) and isinstance(second, ImDCertificate)
    return TheoremReport(
        hypothesis_holds=True,
        obstruction=None,
        hypothesis_certificate=hypothesis,
        conclusion_holds=ok,
        boundary_certificates=(first, second) if ok else None,
    )
