"""Command-line front end emitting deterministic JSON reports.

Exit status: 0 on success, 2 on a domain error (the report is a
machine-readable error object), 64 on a usage error.  Identical inputs
produce byte-identical output: keys are sorted and rationals rendered
as decimal-free strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .chern import solve_cancellation
from .core.qseries import QSeries
from .errors import DomainError
from .induction import averaged_elliptic_genera, averaged_witten_genus, trace_series
from .lambda_ring import VirtualChar, eval_bundle_expr
from .lefschetz import lefschetz_twisted, p_series
from .theta_modforms import (
    MODFORM_NAMES,
    THETA_KINDS,
    modform_qexp,
    theta_qexp,
    verify_modform_transforms,
    verify_theta_transforms,
)

USAGE_ERROR = 64
DOMAIN_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _parse_weights(text: str) -> list[int]:
    try:
        return [int(w) for w in text.split(",") if w != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad weight list {text!r}") from exc


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad complex {text!r}") from exc


def build_parser() -> _Parser:
    parser = _Parser(prog="propergenus")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=10, help="truncation order N")
    common.add_argument("--tol", type=float, default=1e-9, help="numeric tolerance")
    common.add_argument("--json-indent", type=int, default=2)
    common.add_argument("--output", default=None, help="write JSON here instead of stdout")
    weighted = argparse.ArgumentParser(add_help=False)
    weighted.add_argument("--weights", type=_parse_weights, required=True)
    weighted.add_argument("--unsigned", action="store_true",
                          help="use the literal unsigned fixed-point formula")

    sub = parser.add_subparsers(dest="verb", required=True)
    sub.add_parser("witten-genus", parents=[common, weighted])
    sub.add_parser("elliptic-genera", parents=[common, weighted])
    lf = sub.add_parser("lefschetz", parents=[common, weighted])
    lf.add_argument("--operator", choices=["dirac", "signature"], default="dirac")
    lf.add_argument("--twist", choices=["none", "theta", "theta1", "theta2"], default="theta")
    sub.add_parser("p-series", parents=[common, weighted])

    theta = sub.add_parser("theta")
    tsub = theta.add_subparsers(dest="action", required=True)
    tcheck = tsub.add_parser("check", parents=[common])
    tcheck.add_argument("--v", type=_parse_complex, required=True)
    tcheck.add_argument("--tau", type=_parse_complex, required=True)
    texp = tsub.add_parser("expand", parents=[common])
    texp.add_argument("--kind", choices=list(THETA_KINDS), required=True)
    texp.add_argument("--z-order", type=int, default=None)

    mf = sub.add_parser("modforms")
    msub = mf.add_subparsers(dest="action", required=True)
    mexp = msub.add_parser("expand", parents=[common])
    mexp.add_argument("--name", choices=list(MODFORM_NAMES), required=True)
    mcheck = msub.add_parser("check", parents=[common])
    mcheck.add_argument("--tau", type=_parse_complex, required=True)

    bundle = sub.add_parser("bundle")
    bsub = bundle.add_subparsers(dest="action", required=True)
    bexp = bsub.add_parser("expand", parents=[common])
    bexp.add_argument("--expr", required=True, help="S-expression, e.g. (theta1 (tilde (rep 2)))")

    canc = sub.add_parser("cancellation", parents=[common])
    canc.add_argument("--k", type=int, required=True)
    return parser


def _series_json(series: QSeries) -> dict:
    return series.to_json()


def _run_witten(args) -> dict:
    if args.unsigned:
        series = trace_series(p_series(args.weights, args.order, signed=False))
    else:
        series = averaged_witten_genus(args.weights, args.order)
    return {
        "verb": "witten-genus",
        "weights": sorted(args.weights),
        "order": args.order,
        "series": _series_json(series),
        "identically_zero": series.is_zero(),
    }


def _run_elliptic(args) -> dict:
    phi1, phi2 = averaged_elliptic_genera(args.weights, args.order)
    return {
        "verb": "elliptic-genera",
        "weights": sorted(args.weights),
        "order": args.order,
        "phi1": _series_json(phi1),
        "phi2": _series_json(phi2),
        "identically_zero": phi1.is_zero() and phi2.is_zero(),
    }


def _run_lefschetz(args) -> dict:
    twist = None if args.twist == "none" else args.twist
    series = lefschetz_twisted(args.weights, args.operator, twist,
                               args.order, signed=not args.unsigned)
    return {
        "verb": "lefschetz",
        "weights": sorted(args.weights),
        "operator": args.operator,
        "twist": args.twist,
        "order": args.order,
        "signed": not args.unsigned,
        "series": _series_json(series),
    }


def _run_p_series(args) -> dict:
    series = p_series(args.weights, args.order, signed=not args.unsigned)
    return {
        "verb": "p-series",
        "weights": sorted(args.weights),
        "order": args.order,
        "signed": not args.unsigned,
        "series": _series_json(series),
    }


def _run_theta(args) -> dict:
    if args.action == "check":
        report = verify_theta_transforms(args.v, args.tau, args.order, args.tol)
        return {
            "verb": "theta-check",
            "v": [args.v.real, args.v.imag],
            "tau": [args.tau.real, args.tau.imag],
            "order": args.order,
            "tolerance": args.tol,
            "residuals": report["residuals"],
            "failed": report["failed"],
            "all_passed": report["all_passed"],
        }
    exp = theta_qexp(args.kind, args.order, args.z_order)
    return {
        "verb": "theta-expand",
        "kind": exp.kind,
        "prefactor_exponent": str(exp.prefactor_exponent),
        "trig": exp.trig or "none",
        "z_order": exp.z_order,
        "series": _series_json(exp.series),
    }


def _run_modforms(args) -> dict:
    if args.action == "check":
        report = verify_modform_transforms(args.tau, args.order, args.tol)
        return {
            "verb": "modforms-check",
            "tau": [args.tau.real, args.tau.imag],
            "order": args.order,
            "tolerance": args.tol,
            "residuals": report["residuals"],
            "failed": report["failed"],
            "all_passed": report["all_passed"],
        }
    mf = modform_qexp(args.name, args.order)
    return {
        "verb": "modforms-expand",
        "name": mf.name,
        "weight": mf.weight,
        "group": mf.group,
        "series": _series_json(mf.series),
    }


def _run_bundle(args) -> dict:
    value = eval_bundle_expr(args.expr, args.order)
    if isinstance(value, VirtualChar):
        body = {"type": "character", "character": value.char.to_json(),
                "rank": str(Fraction(value.rank))}
    else:
        body = {"type": "series", "series": _series_json(value)}
    return {"verb": "bundle-expand", "expr": args.expr, "order": args.order, **body}


def _run_cancellation(args) -> dict:
    report = solve_cancellation(args.k, args.order)
    return {
        "verb": "cancellation",
        "k": report.k,
        "h": [str(h) for h in report.h_coeffs],
        "exponents": report.exponents,
        "schedule": report.schedule,
        "residual_is_zero": report.residual_is_zero,
        "combinations": [
            {"*".join(map(str, p)) or "1": str(Fraction(c)) for p, c in sorted(c.terms.items())}
            for c in report.combinations
        ],
    }


_RUNNERS = {
    "witten-genus": _run_witten,
    "elliptic-genera": _run_elliptic,
    "lefschetz": _run_lefschetz,
    "p-series": _run_p_series,
    "theta": _run_theta,
    "modforms": _run_modforms,
    "bundle": _run_bundle,
    "cancellation": _run_cancellation,
}


def _emit(doc: dict, args) -> None:
    text = json.dumps(doc, sort_keys=True, indent=args.json_indent) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = _RUNNERS[args.verb](args)
    except DomainError as exc:
        _emit({"error": {"code": exc.code, "message": str(exc)}}, args)
        return DOMAIN_ERROR
    except ValueError as exc:
        parser.error(str(exc))
    _emit(doc, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
