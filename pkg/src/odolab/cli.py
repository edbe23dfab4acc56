"""Command line front end.

Every run is deterministic given its input files: enumeration and summation
orders are fixed and output is canonical JSON.  Exit codes: 0 on success,
1 on a domain error (reported as {"error": <name>, ...} with the error
class name verbatim), 2 on a usage error.  The environment variable
ODOLAB_TOLERANCE overrides the 1e-9 default used by binary64 comparisons;
exact-mode computations never consult it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cohomology import solve_coboundary
from .errors import OdolabError
from .fredholm import index_pairing, spectral_commutator_bound
from .harmonic import EXACT, exp_i, fourier, rd_norm, sup_norm
from .io import (axiom_report_to_doc, canonical_json, coeffs_from_doc,
                 coeffs_to_doc, fourier_to_doc, function_from_doc,
                 function_to_doc, length_spec_from_doc, length_spec_to_doc,
                 length_table_from_doc, load_json, scale_from_doc, scale_to_doc)
from .ktheory import decompose, pair
from .lengths import classify, verify_axioms
from .scales import scale_lcm
from .selftest import run_selftest


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    tol = float(os.environ.get("ODOLAB_TOLERANCE", "1e-9"))
    try:
        doc, code = args.handler(args, tol)
    except OdolabError as exc:
        _write({"error": type(exc).__name__, "message": str(exc)}, args)
        return 1
    except (OSError, ValueError, KeyError, TypeError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write(doc, args)
    return code


def _write(doc, args) -> None:
    text = canonical_json(doc) + "\n"
    output = getattr(args, "output", None)
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="odolab",
        description="exact computations on odometer groups at finite truncation")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write the result document to a file")

    fn_opts = argparse.ArgumentParser(add_help=False)
    fn_opts.add_argument("--mode", choices=["exact", "float"],
                         help="coerce the loaded function's numeric mode")
    fn_opts.add_argument("--level", type=int,
                         help="promote the loaded function to this level")

    p = sub.add_parser("scale", help="scale file operations")
    scale_sub = p.add_subparsers(dest="subcommand", required=True)
    q = scale_sub.add_parser("validate", parents=[common])
    q.add_argument("scale_file")
    q.set_defaults(handler=_cmd_scale_validate)

    p = sub.add_parser("length", help="length table operations")
    length_sub = p.add_subparsers(dest="subcommand", required=True)
    q = length_sub.add_parser("classify", parents=[common])
    q.add_argument("table_file")
    q.set_defaults(handler=_cmd_length_classify)
    q = length_sub.add_parser("verify", parents=[common])
    q.add_argument("table_file")
    q.set_defaults(handler=_cmd_length_verify)

    p = sub.add_parser("fn", help="level function operations")
    fn_sub = p.add_subparsers(dest="subcommand", required=True)
    q = fn_sub.add_parser("fourier", parents=[common, fn_opts])
    q.add_argument("function_file")
    q.add_argument("--scale", required=True, dest="scale_file")
    q.set_defaults(handler=_cmd_fn_fourier)
    q = fn_sub.add_parser("norm", parents=[common, fn_opts])
    q.add_argument("function_file")
    q.add_argument("--spec", required=True, dest="spec_file")
    q.add_argument("--N", type=int, default=0)
    q.set_defaults(handler=_cmd_fn_norm)
    q = fn_sub.add_parser("exp", parents=[common, fn_opts])
    q.add_argument("function_file")
    q.add_argument("--scale", required=True, dest="scale_file")
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(handler=_cmd_fn_exp)

    p = sub.add_parser("cohomology", help="cohomological equation")
    coh_sub = p.add_subparsers(dest="subcommand", required=True)
    q = coh_sub.add_parser("solve", parents=[common, fn_opts])
    q.add_argument("function_file")
    q.add_argument("--scale", required=True, dest="scale_file")
    q.add_argument("--method", choices=["prefix_sum", "fourier"],
                   default="prefix_sum")
    q.set_defaults(handler=_cmd_cohomology_solve)

    p = sub.add_parser("k0", help="integer class operations")
    k0_sub = p.add_subparsers(dest="subcommand", required=True)
    q = k0_sub.add_parser("decompose", parents=[common, fn_opts])
    q.add_argument("function_file")
    q.add_argument("--scale", required=True, dest="scale_file")
    q.set_defaults(handler=_cmd_k0_decompose)
    q = k0_sub.add_parser("pair", parents=[common, fn_opts])
    q.add_argument("phi_file")
    q.add_argument("function_file")
    q.add_argument("--scale", required=True, dest="scale_file")
    q.set_defaults(handler=_cmd_k0_pair)

    p = sub.add_parser("khom", help="homomorphism pairings")
    khom_sub = p.add_subparsers(dest="subcommand", required=True)
    q = khom_sub.add_parser("index", parents=[common, fn_opts])
    q.add_argument("phi_file")
    q.add_argument("projection_file")
    q.add_argument("--scale", required=True, dest="scale_file")
    q.set_defaults(handler=_cmd_khom_index)

    p = sub.add_parser("spectral", help="commutator bounds")
    spectral_sub = p.add_subparsers(dest="subcommand", required=True)
    q = spectral_sub.add_parser("bound", parents=[common, fn_opts])
    q.add_argument("function_file")
    q.add_argument("--spec", required=True, dest="spec_file")
    q.add_argument("--Y", type=int, default=256)
    q.set_defaults(handler=_cmd_spectral_bound)

    q = sub.add_parser("selftest", parents=[common])
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(handler=_cmd_selftest)

    return parser


def _load_function(args, scale):
    f = function_from_doc(load_json(args.function_file), scale)
    mode = getattr(args, "mode", None)
    if mode == "float":
        f = f.to_binary64()
    elif mode == "exact" and f.mode != EXACT:
        raise ValueError("file holds binary64 values; cannot coerce to exact")
    level = getattr(args, "level", None)
    if level is not None:
        f = f.promote(level)
    return f


def _load_scale(args):
    return scale_from_doc(load_json(args.scale_file))


def _load_spec(args):
    return length_spec_from_doc(load_json(args.spec_file))


def _cmd_scale_validate(args, _tol):
    scale = scale_from_doc(load_json(args.scale_file))
    doc = scale_to_doc(scale)
    doc["lcm"] = str(scale_lcm(scale))
    return doc, 0


def _cmd_length_classify(args, _tol):
    spec = classify(length_table_from_doc(load_json(args.table_file)))
    return length_spec_to_doc(spec), 0


def _cmd_length_verify(args, _tol):
    report = verify_axioms(length_table_from_doc(load_json(args.table_file)))
    return axiom_report_to_doc(report), 0


def _cmd_fn_fourier(args, _tol):
    f = _load_function(args, _load_scale(args))
    return fourier_to_doc(fourier(f)), 0


def _cmd_fn_norm(args, _tol):
    spec = _load_spec(args)
    f = _load_function(args, spec.scale)
    return {"N": args.N,
            "rd_norm": rd_norm(f, args.N, spec),
            "sup_norm": sup_norm(f)}, 0


def _cmd_fn_exp(args, _tol):
    f = _load_function(args, _load_scale(args))
    return function_to_doc(exp_i(f, args.n)), 0


def _cmd_cohomology_solve(args, tol):
    f = _load_function(args, _load_scale(args))
    return function_to_doc(solve_coboundary(f, args.method, tol)), 0


def _cmd_k0_decompose(args, _tol):
    f = _load_function(args, _load_scale(args))
    return coeffs_to_doc(decompose(f)), 0


def _cmd_k0_pair(args, _tol):
    scale = _load_scale(args)
    phi = coeffs_from_doc(load_json(args.phi_file))
    f = _load_function(args, scale)
    return {"pairing": pair(phi, f)}, 0


def _cmd_khom_index(args, _tol):
    scale = _load_scale(args)
    phi = coeffs_from_doc(load_json(args.phi_file))
    args.function_file = args.projection_file
    proj = _load_function(args, scale)
    idx = index_pairing(phi, proj)
    pairing = pair(phi, proj)
    return {"index": idx, "pairing": pairing, "agree": idx == pairing}, 0


def _cmd_spectral_bound(args, tol):
    spec = _load_spec(args)
    f = _load_function(args, spec.scale)
    bound = spectral_commutator_bound(f, spec, args.Y)
    norm1 = rd_norm(f, 1, spec)
    return {"Y": args.Y, "bound": bound, "norm1": norm1,
            "within": bound <= 2.0 * norm1 + tol}, 0


def _cmd_selftest(args, tol):
    results = run_selftest(seed=args.seed, tol=tol)
    for result in results:
        status = "pass" if result.ok else "FAIL"
        print(f"{result.name}: {status} ({result.passed} passed, "
              f"{result.failed} failed)", file=sys.stderr)
        for note in result.notes:
            print(f"  {note}", file=sys.stderr)
    doc = {"suites": {r.name: {"passed": r.passed, "failed": r.failed}
                      for r in results},
           "ok": all(r.ok for r in results)}
    return doc, 0 if doc["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
