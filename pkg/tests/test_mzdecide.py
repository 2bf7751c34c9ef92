import random
from fractions import Fraction

import pytest

from mzspaces.errors import DependentFunctionalsError, DomainError
from mzspaces.functionals import FunctionalNF, evaluate
from mzspaces.mzdecide import (
    SubspaceSpec,
    decide_mz,
    normalize,
    oracle_decide_mz,
    radical_probe,
    strong_radical_membership,
)
from mzspaces.scalars import PrimeFieldScalar
from mzspaces.selftest import random_normalized_spec
from mzspaces.upoly import Poly, RootData


def _roots(*pairs):
    return RootData([(Fraction(a), m) for a, m in pairs])


def _sign_difference_spec():
    roots = _roots((1, 1), (-1, 1))
    fn = FunctionalNF(roots, parts={Fraction(1): Poly([1]), Fraction(-1): Poly([-1])})
    return normalize(SubspaceSpec([fn]))


def _sign_sum_spec():
    roots = _roots((1, 1), (-1, 1))
    fn = FunctionalNF(roots, parts={Fraction(1): Poly([1]), Fraction(-1): Poly([1])})
    return normalize(SubspaceSpec([fn]))


def test_normalize_shrinks_multiplicities():
    roots = _roots((0, 3), (1, 2))
    fn = FunctionalNF(roots, zero_part=Poly([0, 1]), parts={Fraction(1): Poly([3])})
    spec = normalize(SubspaceSpec([fn]))
    assert spec.normalized
    assert list(spec.roots) == [(Fraction(0), 2), (Fraction(1), 1)]
    # The functionals keep their operators, re-indexed over the shrunk roots.
    assert spec.functionals[0].zero_part == Poly([0, 1])
    assert spec.functionals[0].parts == {Fraction(1): Poly([3])}


def test_normalize_drops_untouched_roots():
    roots = _roots((0, 1), (1, 1), (2, 2))
    fn = FunctionalNF(roots, parts={Fraction(1): Poly([1])})
    spec = normalize(SubspaceSpec([fn]))
    assert list(spec.roots) == [(Fraction(1), 1)]


def test_normalize_rejects_zero_functional():
    roots = _roots((1, 1),)
    with pytest.raises(DomainError):
        normalize(SubspaceSpec([FunctionalNF(roots)]))


def test_normalize_rejects_dependent_functionals():
    roots = _roots((1, 1), (-1, 1))
    f1 = FunctionalNF(roots, parts={Fraction(1): Poly([1]), Fraction(-1): Poly([2])})
    f2 = FunctionalNF(roots, parts={Fraction(1): Poly([3]), Fraction(-1): Poly([6])})
    with pytest.raises(DependentFunctionalsError) as info:
        normalize(SubspaceSpec([f1, f2]))
    c1, c2 = info.value.relation
    for n in range(roots.degree):
        g = Poly.monomial(n)
        assert c1 * evaluate(f1, g) + c2 * evaluate(f2, g) == 0


def test_decide_requires_normalized_spec():
    roots = _roots((1, 1),)
    raw = SubspaceSpec([FunctionalNF(roots, parts={Fraction(1): Poly([1])})])
    with pytest.raises(DomainError):
        decide_mz(raw)
    with pytest.raises(DomainError):
        oracle_decide_mz(raw)


def test_sign_difference_kernel_is_not_mz():
    spec = _sign_difference_spec()
    verdict = decide_mz(spec)
    assert not verdict.is_mz
    assert verdict.witness_subset == (Fraction(1), Fraction(-1))
    assert verdict.witness_idempotent == Poly([1])
    assert verdict.witness_multiplier == Poly([0, 1])
    # Re-verify the witness by direct evaluation, not through the decider.
    fn = spec.functionals[0]
    assert evaluate(fn, verdict.witness_idempotent) == 0
    product = verdict.witness_multiplier * verdict.witness_idempotent
    assert evaluate(fn, product) == 2
    assert oracle_decide_mz(spec) is False


def test_sign_sum_kernel_is_mz():
    spec = _sign_sum_spec()
    assert decide_mz(spec).is_mz
    assert oracle_decide_mz(spec) is True


def test_double_root_with_pure_euler_term_is_not_mz():
    # Single root 2 with operator T: the constant term vanishes, so the
    # one-element subset is balanced.
    roots = _roots((2, 2),)
    fn = FunctionalNF(roots, parts={Fraction(2): Poly([0, 1])})
    spec = normalize(SubspaceSpec([fn]))
    verdict = decide_mz(spec)
    assert not verdict.is_mz
    assert verdict.witness_subset == (Fraction(2),)
    assert verdict.witness_idempotent == Poly([1])
    assert verdict.witness_multiplier == Poly([0, 1])
    assert evaluate(fn, Poly([0, 1])) == 2


def test_decide_matches_oracle_on_seeded_specs():
    rng = random.Random(123457)
    disagreements = 0
    negatives = 0
    for _ in range(60):
        spec = random_normalized_spec(rng)
        verdict = decide_mz(spec)
        if verdict.is_mz != oracle_decide_mz(spec):
            disagreements += 1
        if not verdict.is_mz:
            negatives += 1
            _check_witness(spec, verdict)
    assert disagreements == 0
    assert negatives > 0  # the sample must exercise both verdicts


def _check_witness(spec, verdict):
    modulus = spec.roots.poly()
    e = verdict.witness_idempotent
    assert ((e * e - e) % modulus).is_zero
    for fn in spec.functionals:
        assert evaluate(fn, e) == 0
    product = verdict.witness_multiplier * e
    assert any(evaluate(fn, product) != 0 for fn in spec.functionals)


def test_root_cap_is_enforced():
    roots = _roots((0, 1), (1, 1), (2, 1))
    fn = FunctionalNF(
        roots,
        zero_part=Poly([1]),
        parts={Fraction(1): Poly([1]), Fraction(2): Poly([1])},
    )
    spec = normalize(SubspaceSpec([fn]))
    with pytest.raises(DomainError):
        decide_mz(spec, max_roots=2)
    with pytest.raises(DomainError):
        oracle_decide_mz(spec, max_roots=2)
    assert decide_mz(spec, max_roots=3).is_mz in (True, False)


def test_decide_rejects_positive_characteristic():
    p7 = lambda r: PrimeFieldScalar(r, 7)
    roots = RootData([(p7(1), 1)])
    fn = FunctionalNF(roots, parts={p7(1): Poly([p7(1)])})
    spec = SubspaceSpec([fn], normalized=True)
    with pytest.raises(DomainError):
        decide_mz(spec)
    with pytest.raises(DomainError):
        oracle_decide_mz(spec)


def test_strong_radical_membership_is_divisibility():
    roots = _roots((0, 2), (1, 1))
    fn = FunctionalNF(roots, zero_part=Poly([0, 1]), parts={Fraction(1): Poly([1])})
    spec = normalize(SubspaceSpec([fn]))
    radical = Poly([0, -1, 1])  # t(t-1)
    assert strong_radical_membership(spec, Poly([]))
    assert strong_radical_membership(spec, radical)
    assert strong_radical_membership(spec, radical * Poly([3, 1]))
    assert not strong_radical_membership(spec, Poly([0, 1]))
    assert not strong_radical_membership(spec, Poly([1]))


def test_radical_gap_on_the_sign_difference_example():
    # The constant 1 stays in the kernel under every power (it is the
    # witness idempotent) but is not a strong-radical member: the gap that
    # makes the verdict negative.
    spec = _sign_difference_spec()
    report = radical_probe(spec, Poly([1]), 8)
    assert report.no_violation
    assert not strong_radical_membership(spec, Poly([1]))


def test_radical_probe_matches_direct_recomputation():
    rng = random.Random(9876)
    for _ in range(40):
        spec = random_normalized_spec(rng)
        modulus = spec.roots.poly()
        g = Poly([Fraction(rng.randint(-3, 3), rng.choice([1, 2]))
                  for _ in range(rng.randint(1, 4))])
        max_power = 6
        report = radical_probe(spec, g, max_power)
        expected = None
        power = Poly([1])
        for m in range(1, max_power + 1):
            power = (power * g) % modulus
            if any(evaluate(fn, power) != 0 for fn in spec.functionals):
                expected = m
                break
        assert report.first_violation == expected
        assert report.checked == max_power
        # A strong-radical member can only violate at powers below the
        # largest multiplicity; from there on f divides g^m.
        if strong_radical_membership(spec, g) and report.first_violation is not None:
            assert report.first_violation < max(m for _, m in spec.roots)


def test_radical_probe_rejects_bad_power():
    spec = _sign_sum_spec()
    with pytest.raises(DomainError):
        radical_probe(spec, Poly([1]), 0)
