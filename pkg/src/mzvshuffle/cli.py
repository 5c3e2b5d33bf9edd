"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 parse/usage error,
3 domain error (inadmissible words, method not applicable, ...).
"""

from __future__ import annotations

import argparse
import json
import sys

from .closed_form import expand_general
from .lincomb import LinComb
from .shuffle import shuffle_permutation, shuffle_recursive
from .words import (
    ExponentOverflowError,
    NotAdmissibleError,
    NotInH1Error,
    Word,
    WordSyntaxError,
    parse_mzv_index,
    parse_word,
    to_exponent_form,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzvshuffle",
        description="Shuffle products of words over {x, y} and zeta-value identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_shuffle = sub.add_parser("shuffle", help="shuffle two words")
    p_shuffle.add_argument("word1")
    p_shuffle.add_argument("word2")
    p_shuffle.add_argument(
        "--method",
        choices=("recursive", "permutation", "general", "auto"),
        default="auto",
    )
    p_shuffle.add_argument("--format", choices=("plain", "latex", "json"), default="plain")

    p_verify = sub.add_parser("verify", help="run an exhaustive verification suite")
    p_verify.add_argument(
        "suite",
        choices=("general", "res11", "res12", "res22", "nfold", "appendixA", "appendixB", "all"),
    )
    p_verify.add_argument("--max-weight", type=int, default=None)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--json", action="store_true", dest="as_json")

    p_zeta = sub.add_parser("zeta", help="evaluate a multiple zeta value numerically")
    p_zeta.add_argument("index", help="comma-separated positive integers, e.g. 3,1")
    p_zeta.add_argument("--terms", type=int, default=None)

    p_identity = sub.add_parser("identity", help="numeric check of zeta(u)zeta(v) = zeta(u.v)")
    p_identity.add_argument("word1")
    p_identity.add_argument("word2")
    p_identity.add_argument("--tol", type=float, default=None)
    p_identity.add_argument("--terms", type=int, default=None)

    return parser


def _cmd_shuffle(args) -> int:
    try:
        u = parse_word(args.word1)
        v = parse_word(args.word2)
    except (WordSyntaxError, ExponentOverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    method = args.method
    applicable = u.ends_with_y and v.ends_with_y
    if method == "auto":
        method = "general" if applicable else "recursive"
    if method == "general":
        if not applicable:
            print(
                "error: the general closed form needs both words nonempty and ending in y",
                file=sys.stderr,
            )
            return EXIT_DOMAIN
        result = expand_general(to_exponent_form(u), to_exponent_form(v))
    elif method == "permutation":
        result = shuffle_permutation(u, v)
    else:
        result = shuffle_recursive(u, v)
    print(result.render(args.format))
    return EXIT_OK


def _cmd_verify(args) -> int:
    from . import verify

    names = verify.SUITE_NAMES if args.suite == "all" else (args.suite,)
    reports = []
    for name in names:
        try:
            reports.append(verify.run_suite(name, args.max_weight, jobs=args.jobs))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
    if args.as_json:
        print(json.dumps([r.to_json_obj() for r in reports], indent=2))
    else:
        for report in reports:
            status = "PASS" if report.ok else "FAIL"
            print(f"{report.suite}: {report.checked} checked, "
                  f"{len(report.failures)} failures [{status}] ({report.grid})")
            if report.failures:
                print(f"  first failure: {report.failures[0]}")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VERIFY_FAILED


def _cmd_zeta(args) -> int:
    from . import numeric

    try:
        ks = parse_mzv_index(args.index)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    terms = args.terms if args.terms is not None else numeric.DEFAULT_TERMS
    try:
        result = numeric.mzv_eval(ks, terms)
    except (NotAdmissibleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(f"zeta({args.index.strip()}) = {result.value:.12g} +/- {result.err_est:.3g}")
    return EXIT_OK


def _cmd_identity(args) -> int:
    from . import numeric

    try:
        u = parse_word(args.word1)
        v = parse_word(args.word2)
    except (WordSyntaxError, ExponentOverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    terms = args.terms if args.terms is not None else numeric.DEFAULT_TERMS
    try:
        residual, adaptive = numeric.identity_residual_with_bound(u, v, terms)
    except (NotAdmissibleError, NotInH1Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    bound = args.tol if args.tol is not None else adaptive
    ok = residual <= bound
    print(f"residual = {residual:.6g} (tolerance {bound:.6g}) "
          f"[{'PASS' if ok else 'FAIL'}]")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "shuffle": _cmd_shuffle,
        "verify": _cmd_verify,
        "zeta": _cmd_zeta,
        "identity": _cmd_identity,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
