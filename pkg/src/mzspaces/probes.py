"""Radical and image probes on three side structures: rational matrices
(nilpotency via power traces), Laurent polynomials under the weighted
derivation d/dt + lam/t, and multivariate polynomials under constant
coefficient differential operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError
from .upoly import LaurentPoly


class MatrixQ:
    """Square matrix with exact rational entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(entry for entry in row) for row in rows)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise DomainError("matrix must be square and nonempty")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __mul__(self, other: "MatrixQ") -> "MatrixQ":
        if self.dimension != other.dimension:
            raise DomainError("matrix dimension mismatch")
        n = self.dimension
        cols = list(zip(*other.rows))
        return MatrixQ(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            )
        )

    def trace(self):
        return sum(self.rows[i][i] for i in range(self.dimension))

    @property
    def is_zero(self) -> bool:
        return all(entry == 0 for row in self.rows for entry in row)

    def __eq__(self, other):
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return f"MatrixQ({self.rows!r})"


@dataclass(frozen=True)
class TraceReport:
    in_radical: bool
    traces: tuple
    nilpotency_witness: Optional[int]


def trace_radical_test(matrix: MatrixQ) -> TraceReport:
    """Power traces tr(C^m) for m = 1..n: all zero exactly when C is
    nilpotent; then the least vanishing power is reported as witness."""
    n = matrix.dimension
    powers = []
    current = matrix
    for _ in range(n):
        powers.append(current)
        current = current * matrix
    traces = tuple(p.trace() for p in powers)
    if any(t != 0 for t in traces):
        return TraceReport(in_radical=False, traces=traces, nilpotency_witness=None)
    if not powers[-1].is_zero:
        raise AssertionError("vanishing power traces force nilpotency in char 0")
    witness = next(m + 1 for m, p in enumerate(powers) if p.is_zero)
    return TraceReport(in_radical=True, traces=traces, nilpotency_witness=witness)


def laurent_apply_op(lam, g: LaurentPoly) -> LaurentPoly:
    """The weighted derivation d/dt + lam/t: sends t^i to (lam + i) t^(i-1)."""
    lam = Fraction(lam)
    return LaurentPoly({e - 1: (lam + e) * c for e, c in g.terms.items()})


def laurent_image_membership(lam, g: LaurentPoly) -> bool:
    """Whether g is in the image of the weighted derivation: always for
    non-integer lam; for integer lam exactly when the t^(-lam-1) term is 0."""
    lam = Fraction(lam)
    if lam.denominator != 1:
        return True
    return g.coefficient(-int(lam) - 1) == 0


def laurent_preimage(lam, g: LaurentPoly) -> Optional[LaurentPoly]:
    """A termwise preimage under the weighted derivation, or None exactly
    when membership fails."""
    lam = Fraction(lam)
    out = {}
    for e, c in g.terms.items():
        denom = lam + e + 1
        if denom == 0:
            return None
        out[e + 1] = c / denom
    return LaurentPoly(out)


def laurent_mz_class(lam) -> bool:
    """Whether the weighted derivation's image is a Mathieu-Zhao subspace of
    the Laurent ring: yes for non-integer lam and for lam = -1 only."""
    lam = Fraction(lam)
    return lam.denominator != 1 or lam == -1


def radical_vminus1_membership(g: LaurentPoly) -> bool:
    """Radical membership for the lam = -1 image: supported entirely on
    positive exponents or entirely on negative exponents."""
    exps = g.exponents
    if not exps:
        return True
    return all(e > 0 for e in exps) or all(e < 0 for e in exps)


class MultiPolyQ:
    """Multivariate polynomial over Q: exponent tuple -> coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=()):
        if nvars < 1:
            raise DomainError("need at least one variable")
        self.nvars = nvars
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise DomainError(f"bad exponent vector {exps}")
            c = data.get(exps, 0) + c
            if c == 0:
                data.pop(exps, None)
            else:
                data[exps] = c
        self.terms = {k: data[k] for k in sorted(data)}

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPolyQ":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPolyQ":
        if not 0 <= index < nvars:
            raise DomainError("variable index out of range")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self):
        return max((sum(e) for e in self.terms), default=None)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise DomainError("variable count mismatch")

    def __add__(self, other):
        self._check(other)
        merged = dict(self.terms)
        for exps, c in other.terms.items():
            merged[exps] = merged.get(exps, 0) + c
        return MultiPolyQ(self.nvars, merged)

    def __neg__(self):
        return MultiPolyQ(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MultiPolyQ(self.nvars, out)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise DomainError("powers must be >= 0")
        result = MultiPolyQ.constant(self.nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, c):
        return MultiPolyQ(self.nvars, {e: v * c for e, v in self.terms.items()})

    def partial(self, index: int) -> "MultiPolyQ":
        if not 0 <= index < self.nvars:
            raise DomainError("variable index out of range")
        out = {}
        for exps, c in self.terms.items():
            if exps[index] == 0:
                continue
            lowered = list(exps)
            lowered[index] -= 1
            out[tuple(lowered)] = c * exps[index]
        return MultiPolyQ(self.nvars, out)

    def __eq__(self, other):
        if not isinstance(other, MultiPolyQ):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        return f"MultiPolyQ({self.nvars}, {self.terms!r})"


class ConstCoeffOp:
    """Constant coefficient operator: a polynomial in the partial-derivative
    symbols, one per variable."""

    __slots__ = ("symbol_poly",)

    def __init__(self, symbol_poly: MultiPolyQ):
        self.symbol_poly = symbol_poly

    @property
    def nvars(self) -> int:
        return self.symbol_poly.nvars

    def apply(self, f: MultiPolyQ) -> MultiPolyQ:
        if self.nvars != f.nvars:
            raise DomainError("operator and polynomial variable counts differ")
        total = MultiPolyQ(f.nvars)
        for exps, c in self.symbol_poly.terms.items():
            work = f
            for index, reps in enumerate(exps):
                for _ in range(reps):
                    work = work.partial(index)
                    if work.is_zero:
                        break
            if not work.is_zero:
                total = total + work.scale(c)
        return total

    def __repr__(self):
        return f"ConstCoeffOp({self.symbol_poly!r})"


def apply_op(op: ConstCoeffOp, f: MultiPolyQ) -> MultiPolyQ:
    return op.apply(f)


@dataclass(frozen=True)
class GvcProbeReport:
    m_max: int
    hypothesis_violations: tuple
    conclusion_violations: tuple
    conclusion_transition: Optional[int]


def gvc_probe(op: ConstCoeffOp, p_poly: MultiPolyQ, q_poly: MultiPolyQ,
              m_max: int) -> GvcProbeReport:
    """For m = 1..m_max, record whether op^m kills p^m (hypothesis) and
    whether op^m kills q*p^m (conclusion); the transition is the least m0
    from which the conclusion holds through m_max."""
    if m_max < 1:
        raise DomainError("m_max must be >= 1")
    hypothesis_violations = []
    conclusion_violations = []
    p_power = MultiPolyQ.constant(p_poly.nvars, 1)
    for m in range(1, m_max + 1):
        p_power = p_power * p_poly
        lhs = p_power
        for _ in range(m):
            lhs = op.apply(lhs)
        if not lhs.is_zero:
            hypothesis_violations.append(m)
        rhs = q_poly * p_power
        for _ in range(m):
            rhs = op.apply(rhs)
        if not rhs.is_zero:
            conclusion_violations.append(m)
    if not conclusion_violations:
        transition = 1
    elif conclusion_violations[-1] == m_max:
        transition = None
    else:
        transition = conclusion_violations[-1] + 1
    return GvcProbeReport(
        m_max=m_max,
        hypothesis_violations=tuple(hypothesis_violations),
        conclusion_violations=tuple(conclusion_violations),
        conclusion_transition=transition,
    )
