"""Command-line front end.

Output goes to stdout as compact JSON (or plain text with --output text);
errors go to stderr as JSON objects. Exit codes: 0 success / positive
verdict, 1 negative verdict, 2 malformed input, 3 work budget exceeded.
"""

import argparse
import json
import sys
from pathlib import Path

from .box import delta_from_box, enumerate_box
from .classify import (
    admissible,
    enumerate_admissible,
    exhaustive_search,
    witness,
)
from .constraints import run_all_checks
from .ehrhart import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    cell_estimate,
    ehrhart_delta,
    ehrhart_table,
)
from .hnf import HNFSpec, build_simplex, closed_form_delta
from .lattice import Simplex

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_JSON_INT_LIMIT = 2**53


def _jsonable(obj):
    """Make a payload JSON-safe; integers beyond 2**53 become decimal strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < _JSON_INT_LIMIT else str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _text_lines(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, (dict, list)) and value and not _is_scalar_list(value):
                yield f"{pad}{key}:"
                yield from _text_lines(value, indent + 1)
            else:
                yield f"{pad}{key}: {_scalar_text(value)}"
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                yield f"{pad}-"
                yield from _text_lines(item, indent + 1)
            else:
                yield f"{pad}- {_scalar_text(item)}"
    else:
        yield f"{pad}{_scalar_text(obj)}"


def _is_scalar_list(value):
    return isinstance(value, list) and all(not isinstance(x, (dict, list)) for x in value)


def _scalar_text(value):
    if isinstance(value, list):
        return ",".join(str(x) for x in value)
    return str(value)


def _emit(payload, args):
    payload = _jsonable(payload)
    if args.output == "json":
        print(json.dumps(payload))
    else:
        print("\n".join(_text_lines(payload)))


def _error(kind, message, **extra):
    body = {"error": {"type": kind, "message": message, **extra}}
    print(json.dumps(_jsonable(body)), file=sys.stderr)


def _parse_int_list(text, what):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"{what} must be a comma-separated list of integers") from None


def _load_simplex(path):
    text = Path(path).read_text(encoding="utf-8")
    return Simplex.from_json_dict(json.loads(text))


def _report_dict(report):
    return {"ok": report.ok, "violations": [list(v) if isinstance(v, tuple) else v for v in report.violations]}


def _cmd_delta(args):
    delta = delta_from_box(_load_simplex(args.simplex))
    _emit(list(delta), args)
    return EXIT_OK


def _cmd_box(args):
    group = enumerate_box(_load_simplex(args.simplex))
    payload = [
        {
            "coeffs": [f"{n}/{group.denominator}" for n in point.numerators],
            "degree": point.degree,
        }
        for point in group.points
    ]
    _emit(payload, args)
    return EXIT_OK


def _cmd_oracle(args):
    simplex = _load_simplex(args.simplex)
    table = ehrhart_table(simplex, budget=args.budget, threads=args.threads)
    delta = ehrhart_delta(simplex, budget=args.budget, threads=args.threads)
    _emit(
        {
            "dim": simplex.dim,
            "normalized_volume": simplex.normalized_volume,
            "counts": list(table.counts),
            "interior_counts": list(table.interior_counts),
            "delta": list(delta),
        },
        args,
    )
    return EXIT_OK


def _cmd_hnf(args):
    spec = HNFSpec(args.m, _parse_int_list(args.coeffs, "--coeffs"), args.dim)
    simplex = build_simplex(spec)
    closed = closed_form_delta(spec)
    via_box = delta_from_box(simplex)
    _emit(
        {
            "spec": {"m": spec.m, "coeffs": list(spec.coeffs), "dim": spec.dim},
            "simplex": simplex.to_json_dict(),
            "delta_closed_form": list(closed),
            "delta_box": list(via_box),
            "agree": closed == via_box,
        },
        args,
    )
    return EXIT_OK if closed == via_box else EXIT_NEGATIVE


def _cmd_check(args):
    report = run_all_checks(_parse_int_list(args.delta, "--delta"))
    payload = dict(report)
    payload["checks"] = {name: _report_dict(r) for name, r in report["checks"].items()}
    _emit(payload, args)
    return EXIT_OK if report["all_pass"] else EXIT_NEGATIVE


def _cmd_classify(args):
    delta = _parse_int_list(args.delta, "--delta")
    verdict = admissible(delta, args.volume)
    if not verdict.ok:
        _emit(
            {
                "admissible": False,
                "violations": [list(v) for v in verdict.violations],
                "case": None,
                "witness": None,
                "verified": False,
            },
            args,
        )
        return EXIT_NEGATIVE
    found = witness(delta, args.volume)
    verified = delta_from_box(build_simplex(found.spec)) == found.delta
    _emit(
        {
            "admissible": True,
            "case": {"label": found.case.label, "branch": found.case.branch},
            "witness": {
                "m": found.spec.m,
                "coeffs": list(found.spec.coeffs),
                "dim": found.spec.dim,
            },
            "verified": verified,
        },
        args,
    )
    return EXIT_OK


def _cmd_enumerate(args):
    witnesses = enumerate_admissible(args.volume, args.dim)
    payload = {
        "volume": args.volume,
        "dim": args.dim,
        "count": len(witnesses),
        "entries": [
            {
                "delta": list(w.delta),
                "case": w.case.label,
                "witness": {"m": w.spec.m, "coeffs": list(w.spec.coeffs), "dim": w.spec.dim},
            }
            for w in witnesses
        ],
    }
    code = EXIT_OK
    if args.exhaustive_crosscheck:
        searched = exhaustive_search(args.dim, args.volume, budget=args.budget)
        admissible_set = {w.delta for w in witnesses}
        match = set(searched) == admissible_set
        payload["crosscheck"] = {
            "match": match,
            "search_only": sorted(list(d) for d in set(searched) - admissible_set),
            "enumerate_only": sorted(list(d) for d in admissible_set - set(searched)),
        }
        if not match:
            code = EXIT_NEGATIVE
    _emit(payload, args)
    return code


def _cmd_search(args):
    deltas = exhaustive_search(
        args.dim, args.volume, budget=args.budget, shards=max(1, args.threads)
    )
    _emit(
        {
            "dim": args.dim,
            "volume": args.volume,
            "count": len(deltas),
            "deltas": [list(d) for d in deltas],
        },
        args,
    )
    return EXIT_OK


def _cmd_verify(args):
    have_spec = args.m is not None or args.coeffs is not None or args.dim is not None
    if args.simplex is not None and have_spec:
        raise ValueError("give either --simplex or --m/--coeffs/--dim, not both")
    closed = None
    if args.simplex is not None:
        simplex = _load_simplex(args.simplex)
    elif have_spec:
        if args.m is None or args.coeffs is None or args.dim is None:
            raise ValueError("--m, --coeffs and --dim must be given together")
        spec = HNFSpec(args.m, _parse_int_list(args.coeffs, "--coeffs"), args.dim)
        simplex = build_simplex(spec)
        closed = closed_form_delta(spec)
    else:
        raise ValueError("give --simplex or --m/--coeffs/--dim")

    methods = {"box": list(delta_from_box(simplex))}
    if closed is not None:
        methods["closed_form"] = list(closed)
    estimate = cell_estimate(simplex, simplex.dim)
    skipped = None
    if estimate <= args.budget:
        methods["oracle"] = list(ehrhart_delta(simplex, budget=args.budget, threads=args.threads))
    else:
        methods["oracle"] = None
        skipped = estimate
    computed = [tuple(v) for v in methods.values() if v is not None]
    agree = all(v == computed[0] for v in computed)
    payload = {"methods": methods, "agree": agree}
    if skipped is not None:
        payload["oracle_skipped_estimate"] = skipped
    _emit(payload, args)
    return EXIT_OK if agree else EXIT_NEGATIVE


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help="work budget in bounding-box cells / matrices")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker threads / shards for the parallel paths")
    common.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="deltasimplex",
        description="Delta-vectors of lattice simplices: compute, validate, classify.",
    )
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--output", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delta", parents=[common], help="delta-vector via the parallelepiped group")
    p.add_argument("--simplex", required=True, metavar="FILE")
    p.set_defaults(handler=_cmd_delta)

    p = sub.add_parser("box", parents=[common], help="list the parallelepiped points")
    p.add_argument("--simplex", required=True, metavar="FILE")
    p.set_defaults(handler=_cmd_box)

    p = sub.add_parser("oracle", parents=[common], help="dilate counts and delta-vector by brute force")
    p.add_argument("--simplex", required=True, metavar="FILE")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("hnf", parents=[common], help="build a one-row family member and its delta-vector")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--coeffs", required=True)
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(handler=_cmd_hnf)

    p = sub.add_parser("check", parents=[common], help="run all applicable delta-vector checks")
    p.add_argument("--delta", required=True)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("classify", parents=[common], help="admissibility and witness for volume 5 or 7")
    p.add_argument("--delta", required=True)
    p.add_argument("--volume", type=int, choices=(5, 7), required=True)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("enumerate", parents=[common], help="all admissible delta-vectors at a dimension")
    p.add_argument("--volume", type=int, choices=(5, 7), required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--exhaustive-crosscheck", action="store_true")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("search", parents=[common], help="exhaustive delta-vector search over vertex matrices")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--volume", type=int, required=True)
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("verify", parents=[common], help="compare all applicable delta-vector methods")
    p.add_argument("--simplex", metavar="FILE")
    p.add_argument("--m", type=int)
    p.add_argument("--coeffs")
    p.add_argument("--dim", type=int)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        _error("budget-exceeded", str(exc), estimate=exc.estimate, budget=exc.budget)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        _error(type(exc).__name__, str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
