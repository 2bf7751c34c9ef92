"""Seeded invariant battery behind `mz selftest`, plus the random instance
generators it shares with the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from .certificates import MomentRule, certify_unit_interval, power_moment
from .errors import DomainError
from .functionals import FunctionalNF, MomentSeq, evaluate, from_moments, to_moments
from .imagep import ImDCertificate, ZXPoly, apply_d, imd_decide, j_ideal_witness
from .mzdecide import SubspaceSpec, decide_mz, normalize, oracle_decide_mz
from .probes import (
    ConstCoeffOp,
    MatrixQ,
    MultiPolyQ,
    gvc_probe,
    laurent_apply_op,
    laurent_image_membership,
    laurent_preimage,
    trace_radical_test,
)
from .quotient import QuotientRing, all_idempotents, crt_idempotents
from .scalars import padic_valuation
from .upoly import LaurentPoly, Poly, RootData, extended_gcd


# ---------------------------------------------------------------------------
# random instance generators (shared with the test suite)

def random_rational(rng: random.Random, lo=-5, hi=5, max_den=3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_nonzero_rational(rng: random.Random, lo=-5, hi=5, max_den=3) -> Fraction:
    while True:
        q = random_rational(rng, lo, hi, max_den)
        if q != 0:
            return q


def random_poly(rng: random.Random, max_degree=4, lo=-5, hi=5, nonzero=False) -> Poly:
    degree = rng.randint(0, max_degree)
    coeffs = [Fraction(rng.randint(lo, hi)) for _ in range(degree + 1)]
    p = Poly(coeffs)
    if nonzero and p.is_zero:
        return Poly((Fraction(rng.randint(1, hi)),))
    return p


def random_root_data(rng: random.Random, max_roots=3, max_mult=3) -> RootData:
    count = rng.randint(1, max_roots)
    roots = []
    while len(roots) < count:
        lam = random_rational(rng, -4, 4, 2)
        if all(lam != seen for seen, _ in roots):
            roots.append((lam, rng.randint(1, max_mult)))
    return RootData(roots)


def random_functional(rng: random.Random, roots: RootData) -> FunctionalNF:
    while True:
        zero_part = Poly()
        parts = {}
        for lam, mult in roots:
            coeffs = [Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(0, mult))]
            op = Poly(coeffs)
            if op.is_zero:
                continue
            if lam == 0:
                zero_part = op
            else:
                parts[lam] = op
        fn = FunctionalNF(roots, zero_part, parts)
        if not fn.is_zero:
            return fn


def random_normalized_spec(rng: random.Random, max_roots=3, max_mult=3,
                           max_functionals=3) -> SubspaceSpec:
    while True:
        roots = random_root_data(rng, max_roots, max_mult)
        fns = [random_functional(rng, roots) for _ in range(rng.randint(1, max_functionals))]
        try:
            return normalize(SubspaceSpec(fns))
        except DomainError:
            continue


def random_zxpoly(rng: random.Random, nvars: int, modulus: int, max_terms=4,
                  max_exp=2, in_ideal=False) -> ZXPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        zexp = [rng.randint(0, max_exp) for _ in range(nvars)]
        if in_ideal and all(e == 0 for e in zexp):
            zexp[rng.randrange(nvars)] = rng.randint(1, max_exp)
        xexp = [rng.randint(0, max_exp) for _ in range(nvars)]
        key = (tuple(zexp), tuple(xexp))
        terms[key] = terms.get(key, 0) + rng.randint(1, modulus - 1)
    return ZXPoly(nvars, modulus, terms)


def random_matrix(rng: random.Random, n=4, lo=-3, hi=3) -> MatrixQ:
    return MatrixQ([[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)])


# ---------------------------------------------------------------------------
# invariant checks

def _check_valuation_laws(rng):
    for _ in range(200):
        p = rng.choice([2, 3, 5, 7])
        x = random_nonzero_rational(rng, -20, 20, 12)
        y = random_nonzero_rational(rng, -20, 20, 12)
        assert padic_valuation(x * y, p) == padic_valuation(x, p) + padic_valuation(y, p)
        if x + y != 0:
            lhs = padic_valuation(x + y, p)
            low = min(padic_valuation(x, p), padic_valuation(y, p))
            assert lhs >= low
            if padic_valuation(x, p) != padic_valuation(y, p):
                assert lhs == low


def _check_extended_gcd(rng):
    for _ in range(100):
        a = random_poly(rng, 5, nonzero=True)
        b = random_poly(rng, 5, nonzero=True)
        u, v, g = extended_gcd(a, b)
        assert u * a + v * b == g
        assert (a % g).is_zero and (b % g).is_zero
        assert g.lead == 1


def _check_point_evaluation_laws(rng):
    from .upoly import apply_der_op, apply_euler_op

    for _ in range(50):
        lam = random_nonzero_rational(rng, -4, 4, 2)
        i = rng.randint(1, 3)
        j = rng.randint(i + 1, i + 3)
        u = random_poly(rng, 3)
        annihilated = Poly((-lam, 1)) ** j * u
        assert apply_euler_op(Poly.monomial(i), annihilated)(lam) == 0
        shifted = Poly.monomial(j) * u
        assert apply_der_op(Poly.monomial(i), shifted)(0) == 0


def _check_idempotent_laws(rng):
    for _ in range(30):
        ring = QuotientRing(random_root_data(rng))
        base = crt_idempotents(ring)
        items = list(base.values())
        total = ring.zero
        for e in items:
            assert e * e == e
            total = total + e
        assert total == ring.one
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                assert (items[i] * items[j]).is_zero
        assert len(all_idempotents(ring)) == 2 ** len(ring.roots)


def _check_moment_roundtrip(rng):
    for _ in range(30):
        roots = random_root_data(rng)
        fn = random_functional(rng, roots)
        values = to_moments(fn, roots.degree)
        back = from_moments(MomentSeq(values, roots.poly()), roots)
        assert back == fn


def _check_kernel_law(rng):
    for _ in range(20):
        roots = random_root_data(rng)
        fn = random_functional(rng, roots)
        g = random_poly(rng, 6)
        assert evaluate(fn, g * roots.poly()) == 0


def _check_decision_agreement(rng):
    for _ in range(50):
        spec = random_normalized_spec(rng)
        verdict = decide_mz(spec)
        assert verdict.is_mz == oracle_decide_mz(spec)
        if not verdict.is_mz:
            g = verdict.witness_idempotent
            f = spec.roots.poly()
            assert ((g * g) % f) == (g % f)
            assert all(v == 0 for v in (evaluate(fn, g) for fn in spec.functionals))
            product = (verdict.witness_multiplier * g) % f
            assert any(evaluate(fn, product) != 0 for fn in spec.functionals)


def _check_certificates(rng):
    derangements = [1, 0, 1, 2, 9, 44, 265, 1854, 14833]
    for m, expected in enumerate(derangements):
        assert power_moment(MomentRule.EXPONENTIAL, Poly((-1, 1)), m) == expected
    for coeffs in [(Fraction(-1, 2), 1), (1, 1, 1), (2, -1, 0, 1)]:
        cert = certify_unit_interval(Poly(coeffs), 1, 600)
        assert cert.exponent <= 500
        assert padic_valuation(cert.value, cert.prime) == -1


def _check_trace_probe(rng):
    for _ in range(10):
        strict = [[Fraction(0)] * 4 for _ in range(4)]
        for i in range(4):
            for j in range(i + 1, 4):
                strict[i][j] = Fraction(rng.randint(-3, 3))
        report = trace_radical_test(MatrixQ(strict))
        assert report.in_radical and report.nilpotency_witness is not None
    for _ in range(10):
        m = random_matrix(rng)
        power4 = m * m * m * m
        if not power4.is_zero:
            assert not trace_radical_test(m).in_radical


def _check_laurent_probe(rng):
    for _ in range(20):
        lam = rng.choice([Fraction(-2), Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(7, 3)])
        g = LaurentPoly({rng.randint(-4, 4): Fraction(rng.randint(-5, 5)) for _ in range(3)})
        member = laurent_image_membership(lam, g)
        h = laurent_preimage(lam, g)
        assert member == (h is not None)
        if h is not None:
            assert laurent_apply_op(lam, h) == g


def _check_gvc_probe(rng):
    op = ConstCoeffOp(MultiPolyQ(2, {(1, 1): Fraction(1)}))
    p = MultiPolyQ(2, {(1, 0): Fraction(1), (0, 1): Fraction(1)})
    q = MultiPolyQ(2, {(1, 0): Fraction(1)})
    report = gvc_probe(op, p, q, 6)
    assert report.hypothesis_violations == ()
    assert report.conclusion_violations == (1,)
    assert report.conclusion_transition == 2


def _check_image_roundtrip(rng):
    for _ in range(50):
        nvars = rng.randint(1, 2)
        p = rng.choice([2, 3])
        qs = [random_zxpoly(rng, nvars, p) for _ in range(nvars)]
        b = ZXPoly.zero(nvars, p)
        for i, q in enumerate(qs):
            b = b + apply_d(i, q)
        result = imd_decide(b)
        assert isinstance(result, ImDCertificate)
        assert result.reconstruct() == b


def _check_image_theorem(rng):
    from .imagep import charp_theorem_check

    for _ in range(10):
        nvars = rng.randint(1, 2)
        p = rng.choice([2, 3])
        f = random_zxpoly(rng, nvars, p, max_terms=3, max_exp=1, in_ideal=True)
        g = random_zxpoly(rng, nvars, p, max_terms=2, max_exp=1)
        report = charp_theorem_check(f, g)
        assert report.hypothesis_holds and report.conclusion_holds
        witness = j_ideal_witness(f**p)
        assert witness is not None and witness.reconstruct() == f**p


_CHECKS = (
    ("valuation-laws", _check_valuation_laws),
    ("extended-gcd", _check_extended_gcd),
    ("point-evaluation-laws", _check_point_evaluation_laws),
    ("idempotent-laws", _check_idempotent_laws),
    ("moment-roundtrip", _check_moment_roundtrip),
    ("kernel-law", _check_kernel_law),
    ("decision-agreement", _check_decision_agreement),
    ("certificates", _check_certificates),
    ("trace-probe", _check_trace_probe),
    ("laurent-probe", _check_laurent_probe),
    ("gvc-probe", _check_gvc_probe),
    ("image-roundtrip", _check_image_roundtrip),
    ("image-theorem", _check_image_theorem),
)


def run_selftest(seed: int):
    """Run every invariant check with its own derived seed; returns
    (all_passed, per-check list)."""
    results = []
    passed = True
    for name, check in _CHECKS:
        rng = random.Random(f"{seed}:{name}")
        try:
            check(rng)
            results.append({"name": name, "ok": True})
        except AssertionError as exc:
            passed = False
            results.append({"name": name, "ok": False, "detail": str(exc) or "assertion failed"})
    return passed, results
