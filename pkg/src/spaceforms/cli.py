"""Command-line front end: decide / expand / reduce / rank / search / verify.

Every command writes one JSON document to stdout; --pretty indents it.
Validation problems (bad flags, unparsable forms, malformed input files)
exit with code 2 and a JSON error object on stderr; internal assertion
failures exit with code 3.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .decider import decide_relatives
from .errors import ModeError
from .expansion import expand_fubini_power
from .forms import parse_form
from .germs import TruncatedGerm, taylor_matrix_rank
from .hermitian import HermitianSeries
from .reduction import inertia, signature_reduce
from .scalars import rational_str


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="spaceforms", add_help=True)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_pretty(p):
        p.add_argument("--pretty", action="store_true", help="indent the JSON output")

    p = sub.add_parser("decide", help="classify a pair of space forms")
    p.add_argument("--form1", required=True)
    p.add_argument("--form2", required=True)
    add_pretty(p)

    p = sub.add_parser("expand", help="diagonal expansion of (1+b|Z|^2)^r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", required=True, help='positive rational, e.g. "3/2"')
    p.add_argument("--r", type=int, required=True)
    add_pretty(p)

    p = sub.add_parser("reduce", help="signature-reduce a Hermitian series file")
    p.add_argument("--input", required=True, help="HermitianSeries JSON file")
    add_pretty(p)

    p = sub.add_parser("rank", help="exact rank of a germ family's Taylor matrix")
    p.add_argument("--input", required=True, help='JSON file {"germs": [...]}')
    p.add_argument("--degree", type=int, required=True)
    add_pretty(p)

    p = sub.add_parser("search", help="numeric feasibility search for witness curves")
    p.add_argument("--form1", required=True)
    p.add_argument("--form2", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iters", type=int, default=250)
    add_pretty(p)

    p = sub.add_parser("verify", help="exactly verify a witness candidate file")
    p.add_argument("--form1", required=True)
    p.add_argument("--form2", required=True)
    p.add_argument("--witness", required=True, help="Candidate JSON file")
    add_pretty(p)

    return parser


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path} is not valid JSON: {exc}") from exc


def _run_decide(args) -> dict:
    f1 = parse_form(args.form1)
    f2 = parse_form(args.form2)
    return decide_relatives(f1, f2).to_json()


def _run_expand(args) -> dict:
    return expand_fubini_power(args.n, Fraction(args.b), args.r).to_json()


def _run_reduce(args) -> dict:
    series = HermitianSeries.from_json(_load_json(args.input))
    system = signature_reduce(series)
    return {"inertia": inertia(series).to_json(), "system": system.to_json()}


def _run_rank(args) -> dict:
    obj = _load_json(args.input)
    germs = [TruncatedGerm.from_json(g) for g in obj.get("germs", [])]
    rank, independent = taylor_matrix_rank(germs, args.degree)
    return {"num_germs": len(germs), "rank": rank, "independent": independent}


def _make_problem(args):
    from .search import SearchProblem

    f1 = parse_form(args.form1)
    f2 = parse_form(args.form2)
    return SearchProblem(f1, f2, degree=args.degree)


def _run_search(args) -> dict:
    from .search import search_isometry, search_report

    problem = _make_problem(args)
    result = search_isometry(
        problem,
        restarts=args.restarts,
        max_iters=args.max_iters,
        seed=args.seed,
        tol=args.tol,
    )
    return search_report(problem, result)


def _run_verify(args) -> dict:
    from .search import Candidate, SearchProblem, verify_witness_exact

    f1 = parse_form(args.form1)
    f2 = parse_form(args.form2)
    candidate = Candidate.from_json(_load_json(args.witness))
    problem = SearchProblem(f1, f2, degree=candidate.degree)
    ok, mismatch = verify_witness_exact(candidate, problem)
    out = {"ok": ok, "first_mismatch": None}
    if not ok:
        alpha, beta, lhs, rhs = mismatch
        out["first_mismatch"] = {
            "alpha": list(alpha),
            "beta": list(beta),
            "lhs": {"re": rational_str(lhs.re), "im": rational_str(lhs.im)},
            "rhs": {"re": rational_str(rhs.re), "im": rational_str(rhs.im)},
        }
    return out


_RUNNERS = {
    "decide": _run_decide,
    "expand": _run_expand,
    "reduce": _run_reduce,
    "rank": _run_rank,
    "search": _run_search,
    "verify": _run_verify,
}


def _emit_error(message: str) -> None:
    print(json.dumps({"error": message}), file=sys.stderr)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        _emit_error(str(exc))
        return 2
    try:
        out = _RUNNERS[args.verb](args)
    except _UsageError as exc:
        _emit_error(str(exc))
        return 2
    except (ValueError, ModeError, TypeError, KeyError, ZeroDivisionError) as exc:
        _emit_error(f"{type(exc).__name__}: {exc}")
        return 2
    except AssertionError as exc:
        _emit_error(f"internal assertion failure: {exc}")
        return 3
    indent = 2 if getattr(args, "pretty", False) else None
    print(json.dumps(out, indent=indent))
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
