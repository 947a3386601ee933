"""Command-line entry point.

Exit codes: 0 explanation found (or command succeeded), 1 no explanation,
2 unsupported class pair, 3 parse or validation error, 4 oracle
disagreement under ``solve --verify``.
"""

from __future__ import annotations

import argparse
import sys

from . import oracle
from .dnf import UnsupportedClass
from .engine import (
    Best,
    InvalidProblem,
    NoExplanation,
    Unsupported,
    enumerate_full,
    is_explanation,
    is_necessary,
    minimize,
    solve,
)
from .fileformat import (
    ParseError,
    ValidationError,
    format_hypothesis,
    outcome_status,
    parse_hypothesis,
    parse_problem,
    serialize_outcome,
    serialize_problem,
)
from .generate import KB_CLASSES, QUERY_CLASSES, InstanceConfig, random_problem

EXIT_OK, EXIT_NONE, EXIT_UNSUPPORTED, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3, 4


def _load(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    pf = parse_problem(text)
    for w in pf.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return pf.problem


def cmd_solve(args) -> int:
    problem = _load(args.file)
    outcome = solve(problem)
    if isinstance(outcome, Best):
        print(outcome_status(outcome))
    print(serialize_outcome(outcome))
    if args.verify and not isinstance(outcome, Unsupported):
        best = oracle.oracle_best_explanations(problem, cap=args.cap)
        ok = (outcome.hypothesis in best) if isinstance(outcome, Best) else not best
        print(f"VERIFY {'OK' if ok else 'FAILED'}")
        if not ok:
            return EXIT_VERIFY
    if isinstance(outcome, Best):
        return EXIT_OK
    if isinstance(outcome, NoExplanation):
        return EXIT_NONE
    return EXIT_UNSUPPORTED


def cmd_check(args) -> int:
    problem = _load(args.file)
    E = parse_hypothesis(args.hypothesis)
    if not is_explanation(problem, E):
        print("NOT EXPLANATION")
        return EXIT_NONE
    best = minimize(problem, E) == E
    print("BEST EXPLANATION" if best else "EXPLANATION")
    return EXIT_OK


def cmd_necessity(args) -> int:
    problem = _load(args.file)
    print("NECESSARY" if is_necessary(problem, args.var) else "NOT NECESSARY")
    return EXIT_OK


def cmd_enum_full(args) -> int:
    problem = _load(args.file)
    found = enumerate_full(problem, args.limit)
    for F in found:
        print(format_hypothesis(F))
    return EXIT_OK if found else EXIT_NONE


def _sorted_hyps(hyps):
    return sorted(hyps, key=lambda h: (len(h), h.sort_key()))


def cmd_oracle(args) -> int:
    problem = _load(args.file)
    if args.relevance is not None:
        rel = oracle.oracle_relevance(problem, args.relevance, cap=args.cap)
        print("RELEVANT" if rel else "NOT RELEVANT")
        return EXIT_OK
    if args.full:
        hyps = sorted(oracle.oracle_full_explanations(problem, cap=args.cap), key=lambda h: h.sort_key())
    else:
        hyps = _sorted_hyps(oracle.oracle_best_explanations(problem, cap=args.cap))
    for h in hyps:
        print(format_hypothesis(h))
    return EXIT_OK if hyps else EXIT_NONE


def cmd_gen(args) -> int:
    cfg = InstanceConfig(
        kb_class=args.kb_class,
        query_class=args.query,
        n=args.vars,
        terms=args.terms,
        query_size=args.query_size,
        abducibles=args.abducibles if args.abducibles is not None else max(1, args.vars // 2),
        max_width=args.width,
        seed=args.seed,
    )
    sys.stdout.write(serialize_problem(random_problem(cfg)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="abduce", description="Subset-minimal propositional abduction.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="find one best explanation")
    s.add_argument("file")
    s.add_argument("--verify", action="store_true", help="cross-check against the truth-table oracle")
    s.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("check", help="test whether a hypothesis explains the query")
    s.add_argument("file")
    s.add_argument("--hypothesis", required=True, help='signed integers, e.g. "1 -3"')
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("necessity", help="is an abducible in every best explanation")
    s.add_argument("file")
    s.add_argument("--var", type=int, required=True)
    s.set_defaults(func=cmd_necessity)

    s = sub.add_parser("enum-full", help="list full explanations lexicographically")
    s.add_argument("file")
    s.add_argument("--limit", type=int, default=None)
    s.set_defaults(func=cmd_enum_full)

    s = sub.add_parser("oracle", help="brute-force reference answers")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--best", action="store_true", help="all best explanations (default)")
    g.add_argument("--full", action="store_true", help="all full explanations")
    g.add_argument("--relevance", type=int, metavar="VAR")
    s.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("gen", help="print a seeded random problem")
    s.add_argument("--class", dest="kb_class", choices=KB_CLASSES, required=True)
    s.add_argument("--query", choices=QUERY_CLASSES, default=None)
    s.add_argument("--vars", type=int, required=True)
    s.add_argument("--terms", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--query-size", type=int, default=2)
    s.add_argument("--abducibles", type=int, default=None)
    s.add_argument("--width", type=int, default=3)
    s.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValidationError, InvalidProblem, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedClass as exc:
        print(f"UNSUPPORTED: {exc}")
        return EXIT_UNSUPPORTED
    except oracle.CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        # e.g. a hypothesis or variable outside the abducibles
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
