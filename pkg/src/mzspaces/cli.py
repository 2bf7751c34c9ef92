"""Command line front end: JSON in, JSON out.

Exit codes: 0 on success, 2 when the input is rejected (malformed JSON or a
failed precondition), 1 on internal errors.  Output on stdout is
byte-identical for identical inputs and seed; wall time goes to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from .certificates import certify_exponential, certify_unit_interval
from .errors import DomainError
from .functionals import (
    FunctionalNF,
    MomentSeq,
    from_moments,
    functional_from_json,
    functional_to_json,
    to_moments,
)
from .imagep import ImDCertificate, ObstructionReport, ZXPoly, charp_theorem_check, imd_decide
from .mzdecide import (
    DEFAULT_MAX_SUBSET_ROOTS,
    SubspaceSpec,
    decide_mz,
    normalize,
    oracle_decide_mz,
)
from .probes import (
    ConstCoeffOp,
    MatrixQ,
    MultiPolyQ,
    gvc_probe,
    laurent_image_membership,
    laurent_mz_class,
    radical_vminus1_membership,
    trace_radical_test,
)
from .quotient import QuotientRing, all_idempotents, crt_idempotents
from .scalars import format_rational, parse_rational
from .selftest import run_selftest
from .upoly import (
    RootData,
    laurent_from_json,
    poly_from_json,
    poly_to_json,
    rational_roots,
)

MAX_ROOTS_ENV = "MZ_MAX_SUBSET_ROOTS"
_IMAGEP_PRIMES = (2, 3, 5)
_IMAGEP_MAX_VARS = 3
_IMAGEP_MAX_DEGREE = 24


def _load_json_arg(text: str):
    """Accept inline JSON (starts with { or [) or a file path."""
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        return json.loads(stripped)
    with open(text, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _roots_from_json(data) -> RootData:
    if not isinstance(data, list) or not data:
        raise DomainError("roots must be a nonempty array of [root, multiplicity] pairs")
    pairs = []
    for item in data:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise DomainError("each root entry must be a [root, multiplicity] pair")
        pairs.append((parse_rational(item[0]), item[1]))
    return RootData(pairs)


def _spec_from_json(data) -> SubspaceSpec:
    if not isinstance(data, dict):
        raise DomainError("spec must be an object with functionals and roots")
    if "roots" not in data or "functionals" not in data:
        raise DomainError("spec needs both a functionals array and a roots array")
    roots = _roots_from_json(data["roots"])
    fns = data["functionals"]
    if not isinstance(fns, list) or not fns:
        raise DomainError("functionals must be a nonempty array")
    return SubspaceSpec([functional_from_json(fn, roots) for fn in fns])


def _roots_to_json(roots: RootData):
    return [[format_rational(lam), mult] for lam, mult in roots]


def _verdict_payload(spec: SubspaceSpec, verdict):
    payload = {"isMZ": verdict.is_mz}
    if not verdict.is_mz:
        payload["witnessSubset"] = [format_rational(lam) for lam in verdict.witness_subset]
        payload["witnessIdempotent"] = poly_to_json(verdict.witness_idempotent)
        payload["witnessMultiplier"] = poly_to_json(verdict.witness_multiplier)
    payload["normalizedRoots"] = _roots_to_json(spec.roots)
    return payload


def _max_roots() -> int:
    raw = os.environ.get(MAX_ROOTS_ENV)
    if raw is None:
        return DEFAULT_MAX_SUBSET_ROOTS
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"{MAX_ROOTS_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise DomainError(f"{MAX_ROOTS_ENV} must be >= 1")
    return value


def _cmd_decide(args):
    data = _load_json_arg(args.spec)
    spec = normalize(_spec_from_json(data))
    verdict = decide_mz(spec, max_roots=_max_roots())
    payload = _verdict_payload(spec, verdict)
    if args.oracle:
        payload["oracleIsMZ"] = oracle_decide_mz(spec, max_roots=_max_roots())
        payload["oracleAgrees"] = payload["oracleIsMZ"] == verdict.is_mz
    return payload, data


def _cmd_oracle(args):
    data = _load_json_arg(args.spec)
    spec = normalize(_spec_from_json(data))
    return {"isMZ": oracle_decide_mz(spec, max_roots=_max_roots())}, data


def _cmd_idempotents(args):
    if (args.roots is None) == (args.modulus is None):
        raise DomainError("give exactly one of --roots or --modulus")
    if args.roots is not None:
        data = _load_json_arg(args.roots)
        roots = _roots_from_json(data)
    else:
        data = _load_json_arg(args.modulus)
        roots = rational_roots(poly_from_json(data))
    ring = QuotientRing(roots)
    base = crt_idempotents(ring)
    payload = {
        "roots": _roots_to_json(roots),
        "idempotents": {format_rational(lam): poly_to_json(e.rep) for lam, e in base.items()},
    }
    if args.all:
        payload["allIdempotents"] = [poly_to_json(e.rep) for e in all_idempotents(ring)]
    return payload, data


def _cmd_moments(args):
    data = _load_json_arg(args.input)
    if not isinstance(data, dict):
        raise DomainError("input must be an object")
    if "values" in data:
        if "roots" in data:
            roots = _roots_from_json(data["roots"])
        elif "charPoly" in data:
            roots = rational_roots(poly_from_json(data["charPoly"]))
        else:
            raise DomainError("moment input needs roots or charPoly")
        values = [parse_rational(v) for v in data["values"]]
        fn = from_moments(MomentSeq(values, roots.poly()), roots)
        payload = dict(functional_to_json(fn))
        payload["roots"] = _roots_to_json(roots)
        return payload, data
    if "P0" in data or "parts" in data:
        if "roots" not in data:
            raise DomainError("functional input needs a roots array")
        roots = _roots_from_json(data["roots"])
        fn = functional_from_json(data, roots)
        count = args.count if args.count is not None else roots.degree
        values = to_moments(fn, count)
        return {"values": [format_rational(v) for v in values]}, data
    raise DomainError("input must carry either moment values or a functional")


def _cmd_certify(args):
    data = _load_json_arg(args.poly)
    f = poly_from_json(data)
    if args.rule == "unit":
        cert = certify_unit_interval(f, args.m_min, args.search_bound)
    else:
        cert = certify_exponential(f, args.m_min, args.search_bound)
    payload = {
        "rule": args.rule,
        "p": cert.prime,
        "m": cert.exponent,
        "valuation": cert.valuation,
        "value": format_rational(cert.value),
    }
    return payload, data


def _cmd_trace_test(args):
    data = _load_json_arg(args.matrix)
    if not isinstance(data, list):
        raise DomainError("matrix must be an array of rows")
    matrix = MatrixQ([[parse_rational(v) for v in row] for row in data])
    report = trace_radical_test(matrix)
    payload = {
        "inRadical": report.in_radical,
        "traces": [format_rational(t) for t in report.traces],
        "nilpotencyWitness": report.nilpotency_witness,
    }
    return payload, data


def _cmd_laurent(args):
    lam = parse_rational(args.lam)
    payload = {"lambda": format_rational(lam), "mzClass": laurent_mz_class(lam)}
    inputs = {"lambda": args.lam}
    if args.poly is not None:
        data = _load_json_arg(args.poly)
        g = laurent_from_json(data)
        payload["imageMember"] = laurent_image_membership(lam, g)
        payload["radicalVminus1Member"] = radical_vminus1_membership(g)
        inputs["poly"] = data
    return payload, inputs


def _multipoly_from_json(data, label: str) -> MultiPolyQ:
    if not isinstance(data, list) or not data:
        raise DomainError(f"{label} must be a nonempty array of term objects")
    nvars = None
    terms = {}
    for item in data:
        if not isinstance(item, dict) or "exps" not in item or "c" not in item:
            raise DomainError(f"each {label} term needs exps and c fields")
        exps = tuple(int(e) for e in item["exps"])
        if nvars is None:
            nvars = len(exps)
        elif len(exps) != nvars:
            raise DomainError(f"{label} exponent vectors disagree in length")
        terms[exps] = terms.get(exps, 0) + parse_rational(item["c"])
    return MultiPolyQ(nvars, terms)


def _cmd_gvc_probe(args):
    op_data = _load_json_arg(args.op)
    p_data = _load_json_arg(args.p_poly)
    q_data = _load_json_arg(args.q_poly)
    op = ConstCoeffOp(_multipoly_from_json(op_data, "operator"))
    p_poly = _multipoly_from_json(p_data, "p-poly")
    q_poly = _multipoly_from_json(q_data, "q-poly")
    report = gvc_probe(op, p_poly, q_poly, args.m_max)
    payload = {
        "mMax": report.m_max,
        "hypothesisViolations": list(report.hypothesis_violations),
        "conclusionViolations": list(report.conclusion_violations),
        "conclusionTransition": report.conclusion_transition,
    }
    return payload, {"op": op_data, "p": p_data, "q": q_data, "mMax": args.m_max}


def _check_imagep_caps(polys, p: int, nvars: int):
    if p not in _IMAGEP_PRIMES:
        raise DomainError(f"p must be one of {_IMAGEP_PRIMES}")
    if not 1 <= nvars <= _IMAGEP_MAX_VARS:
        raise DomainError(f"n must be between 1 and {_IMAGEP_MAX_VARS}")
    for poly in polys:
        degree = poly.total_degree
        if degree is not None and degree > _IMAGEP_MAX_DEGREE:
            raise DomainError(f"total degree {degree} exceeds the cap {_IMAGEP_MAX_DEGREE}")


def _obstruction_payload(obstruction: ObstructionReport):
    return {
        "xDegree": obstruction.x_degree,
        "zeta": list(obstruction.zeta_exps),
        "x": list(obstruction.x_exps),
        "coefficient": obstruction.coefficient,
    }


def _certificate_payload(certificate: ImDCertificate):
    return [q.to_json() for q in certificate.preimages]


def _cmd_imagep(args):
    data = _load_json_arg(args.input)
    if args.mode == "decide":
        b = ZXPoly.from_json(data, args.n, args.p)
        _check_imagep_caps([b], args.p, args.n)
        result = imd_decide(b)
        if isinstance(result, ImDCertificate):
            payload = {"member": True, "certificate": _certificate_payload(result)}
        else:
            payload = {"member": False, "obstruction": _obstruction_payload(result)}
        return payload, data
    if not isinstance(data, dict) or "f" not in data:
        raise DomainError("theorem input must be an object with f (and optional g)")
    f = ZXPoly.from_json(data["f"], args.n, args.p)
    if "g" in data:
        g = ZXPoly.from_json(data["g"], args.n, args.p)
    else:
        g = ZXPoly.one(args.n, args.p)
    _check_imagep_caps([f, g], args.p, args.n)
    report = charp_theorem_check(f, g)
    payload = {"hypothesisHolds": report.hypothesis_holds}
    if report.hypothesis_holds:
        payload["conclusionHolds"] = report.conclusion_holds
        if report.boundary_certificates is not None:
            payload["certificates"] = [
                _certificate_payload(c) for c in report.boundary_certificates
            ]
    else:
        payload["obstruction"] = _obstruction_payload(report.obstruction)
    return payload, data


def _cmd_selftest(args):
    passed, results = run_selftest(args.seed)
    payload = {"seed": args.seed, "passed": passed, "checks": results}
    return payload, {"seed": args.seed}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mz",
        description="Exact Mathieu-Zhao subspace decisions, certificates, and probes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide whether a spec's kernel is Mathieu-Zhao")
    p.add_argument("--spec", required=True, help="spec JSON (inline or file path)")
    p.add_argument("--oracle", action="store_true",
                   help="also run the idempotent-enumeration oracle")
    p.set_defaults(handler=_cmd_decide)

    p = sub.add_parser("oracle", help="idempotent-enumeration oracle only")
    p.add_argument("--spec", required=True)
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("idempotents", help="orthogonal idempotents of k[t]/(f)")
    p.add_argument("--roots", help="roots JSON: [[root, multiplicity], ...]")
    p.add_argument("--modulus", help="polynomial JSON; must split over Q")
    p.add_argument("--all", action="store_true", help="include all subset sums")
    p.set_defaults(handler=_cmd_idempotents)

    p = sub.add_parser("moments", help="convert between functionals and moment values")
    p.add_argument("--input", required=True,
                   help="JSON with values+roots (to functional) or P0/parts+roots (to moments)")
    p.add_argument("--count", type=int, help="number of moments to emit")
    p.set_defaults(handler=_cmd_moments)

    p = sub.add_parser("certify", help="p-adic non-radical certificate search")
    p.add_argument("--rule", required=True, choices=["unit", "exp"])
    p.add_argument("--poly", required=True, help="polynomial JSON (inline or file path)")
    p.add_argument("--m-min", type=int, default=1, dest="m_min")
    p.add_argument("--search-bound", type=int, default=10**6, dest="search_bound")
    p.set_defaults(handler=_cmd_certify)

    p = sub.add_parser("trace-test", help="nilpotency via power traces")
    p.add_argument("--matrix", required=True, help="matrix JSON: rows of rationals")
    p.set_defaults(handler=_cmd_trace_test)

    p = sub.add_parser("laurent", help="weighted-derivation image probes")
    p.add_argument("--lam", required=True, help="the weight, a rational")
    p.add_argument("--poly", help="Laurent JSON: {exponent: rational}")
    p.set_defaults(handler=_cmd_laurent)

    p = sub.add_parser("gvc-probe", help="operator-power vanishing probe")
    p.add_argument("--op", required=True, help="operator JSON: terms in derivative symbols")
    p.add_argument("--p-poly", required=True, dest="p_poly")
    p.add_argument("--q-poly", required=True, dest="q_poly")
    p.add_argument("--m-max", type=int, default=12, dest="m_max")
    p.set_defaults(handler=_cmd_gvc_probe)

    p = sub.add_parser("imagep", help="characteristic-p twisted-derivation image engine")
    p.add_argument("mode", choices=["decide", "theorem"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--input", required=True, help="term-list JSON (decide) or {f, g} (theorem)")
    p.set_defaults(handler=_cmd_imagep)

    p = sub.add_parser("selftest", help="run the seeded invariant battery")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(handler=_cmd_selftest)

    return parser


def _digest(inputs) -> str:
    canonical = json.dumps(inputs, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        payload, inputs = args.handler(args)
    except json.JSONDecodeError as exc:
        error = {
            "error": {
                "kind": "parse",
                "message": exc.msg,
                "line": exc.lineno,
                "column": exc.colno,
            }
        }
        print(json.dumps(error, indent=2))
        return 2
    except (DomainError, FileNotFoundError) as exc:
        error = {"error": {"kind": "domain", "message": str(exc)}}
        print(json.dumps(error, indent=2))
        return 2
    except Exception as exc:  # noqa: BLE001 - single internal-error funnel
        error = {"error": {"kind": "internal", "message": f"{type(exc).__name__}: {exc}"}}
        print(json.dumps(error, indent=2))
        import traceback

        traceback.print_exc(file=sys.stderr)
        return 1
    report = dict(payload)
    report["command"] = args.command
    report["inputsDigest"] = _digest(inputs)
    print(json.dumps(report, indent=2))
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    print(f"elapsed_ms={elapsed_ms:.1f}", file=sys.stderr)
    if args.command == "selftest" and not payload["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
