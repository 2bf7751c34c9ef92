"""Normal form for linear functionals on k[t] that kill the ideal (f) of a
split polynomial f.

Every such functional is a combination of point evaluations composed with
operator polynomials: at the root 0 the operator variable acts as d/dt, at a
nonzero root it acts as t d/dt.  The operator polynomial attached to a root
must have degree below that root's multiplicity.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import DomainError
from .linalg import left_dependency, solve_linear_system
from .scalars import format_rational, parse_rational
from .upoly import Poly, RootData, apply_der_op, apply_euler_op, poly_from_json, poly_to_json


class FunctionalNF:
    """zero_part drives d/dt at the root 0; parts[root] drives t d/dt there."""

    __slots__ = ("roots", "zero_part", "parts")

    def __init__(self, roots: RootData, zero_part: Poly = Poly(), parts=None):
        self.roots = roots
        if not zero_part.is_zero:
            if roots.multiplicity(0) == 0:
                raise DomainError("operator at 0 given but 0 is not a root")
            if zero_part.degree >= roots.multiplicity(0):
                raise DomainError("operator degree at 0 must stay below the multiplicity")
        self.zero_part = zero_part
        cleaned = {}
        parts = dict(parts or {})
        for lam, mult in roots:
            if lam == 0:
                continue
            op = parts.pop(lam, Poly())
            if op.is_zero:
                continue
            if op.degree >= mult:
                raise DomainError(f"operator degree at root {lam} must stay below {mult}")
            cleaned[lam] = op
        if parts:
            raise DomainError(f"operator attached to non-root value(s): {list(parts)}")
        self.parts = cleaned

    @property
    def is_zero(self) -> bool:
        return self.zero_part.is_zero and not self.parts

    def operator_poly(self, lam) -> Poly:
        if lam == 0:
            return self.zero_part
        return self.parts.get(lam, Poly())

    def __eq__(self, other):
        if not isinstance(other, FunctionalNF):
            return NotImplemented
        return (self.roots == other.roots and self.zero_part == other.zero_part
                and self.parts == other.parts)

    def __repr__(self):
        return f"FunctionalNF(zero_part={self.zero_part!r}, parts={self.parts!r})"


class MomentSeq:
    """First deg(char_poly) values of n -> L(t^n); later values follow the
    linear recurrence read off the characteristic polynomial."""

    __slots__ = ("values", "char_poly")

    def __init__(self, values, char_poly: Poly):
        values = tuple(values)
        if char_poly.is_zero or char_poly.degree < 1:
            raise DomainError("characteristic polynomial must have degree >= 1")
        if len(values) != char_poly.degree:
            raise DomainError("moment count must equal the characteristic degree")
        self.values = values
        self.char_poly = char_poly

    def __eq__(self, other):
        if not isinstance(other, MomentSeq):
            return NotImplemented
        return self.values == other.values and self.char_poly == other.char_poly

    def __repr__(self):
        return f"MomentSeq({self.values!r})"


def evaluate(functional: FunctionalNF, g: Poly):
    """Apply the functional to a polynomial; exact scalar result."""
    total = 0
    if not functional.zero_part.is_zero:
        total = total + apply_der_op(functional.zero_part, g)(0)
    for lam, op in functional.parts.items():
        total = total + apply_euler_op(op, g)(lam)
    return total


def to_moments(functional: FunctionalNF, count: int):
    """The first `count` values of n -> L(t^n)."""
    if count < 1:
        raise DomainError("moment count must be >= 1")
    return tuple(evaluate(functional, Poly.monomial(n)) for n in range(count))


def from_moments(moments: MomentSeq, roots: RootData) -> FunctionalNF:
    """The unique functional in normal form whose moments extend the given
    values under the recurrence of the (fully split) characteristic polynomial."""
    if roots.poly() != moments.char_poly:
        raise DomainError("root data must split the characteristic polynomial exactly")
    n_total = roots.degree
    columns = []
    labels = []
    for lam, mult in roots:
        for i in range(mult):
            if lam == 0:
                columns.append([1 if n == i else 0 for n in range(n_total)])
            else:
                columns.append([Fraction(n) ** i * Fraction(lam) ** n for n in range(n_total)])
            labels.append((lam, i))
    matrix = [[columns[c][r] for c in range(n_total)] for r in range(n_total)]
    solution = solve_linear_system(matrix, list(moments.values))
    if solution is None:
        raise AssertionError("moment basis matrix is invertible for distinct roots")
    zero_coeffs = {}
    part_coeffs = {}
    for (lam, i), value in zip(labels, solution):
        if lam == 0:
            zero_coeffs[i] = value * Fraction(1, factorial(i))
        else:
            part_coeffs.setdefault(lam, {})[i] = value
    zero_part = Poly(tuple(zero_coeffs.get(i, 0) for i in range(roots.multiplicity(0))))
    parts = {}
    for lam, coeffs in part_coeffs.items():
        parts[lam] = Poly(tuple(coeffs.get(i, 0) for i in range(roots.multiplicity(lam))))
    return FunctionalNF(roots, zero_part, parts)


def largest_ideal_exponents(functionals):
    """Per root: one plus the top operator degree used by any functional
    (zero when no functional touches the root).  The ideal generated by
    prod (t-root)^exponent is the largest ideal inside the joint kernel."""
    functionals = list(functionals)
    if not functionals:
        raise DomainError("at least one functional required")
    roots = functionals[0].roots
    if any(fn.roots != roots for fn in functionals):
        raise DomainError("functionals must share one root data")
    out = {}
    for lam, _ in roots:
        top = -1
        for fn in functionals:
            op = fn.operator_poly(lam)
            if not op.is_zero:
                top = max(top, op.degree)
        out[lam] = top + 1
    return out


def moment_matrix(functionals, count: int):
    """Rows of L_i(t^j) for j < count; the rank witness for independence."""
    return [list(to_moments(fn, count)) for fn in functionals]


def dependency_relation(functionals, count: int):
    """Coefficients of a vanishing combination of the functionals, or None."""
    return left_dependency(moment_matrix(functionals, count))


def functional_to_json(fn: FunctionalNF):
    return {
        "P0": poly_to_json(fn.zero_part),
        "parts": {format_rational(lam): poly_to_json(op) for lam, op in fn.parts.items()},
    }


def functional_from_json(data, roots: RootData) -> FunctionalNF:
    if not isinstance(data, dict):
        raise DomainError("functional JSON must be an object with P0 and parts")
    zero_part = poly_from_json(data.get("P0", []))
    parts = {}
    for key, coeffs in (data.get("parts") or {}).items():
        parts[parse_rational(key)] = poly_from_json(coeffs)
    return FunctionalNF(roots, zero_part, parts)
