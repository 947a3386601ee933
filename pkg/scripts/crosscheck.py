"""Compare solve, enumerate_full and is_necessary with the truth-table oracle.

    python3 scripts/crosscheck.py [--instances 200] [--max-n 10]
"""

import argparse
from collections import Counter

from abduction.engine import Best, NoExplanation, enumerate_full, is_explanation, is_necessary, solve
from abduction.generate import SUPPORTED_PAIRS, random_small_problem
from abduction.oracle import oracle_best_explanations, oracle_full_explanations, oracle_necessity


def check(problem) -> list[str]:
    errors = []
    out = solve(problem)
    best = oracle_best_explanations(problem)
    if best:
        if not (isinstance(out, Best) and out.hypothesis in best and is_explanation(problem, out.hypothesis)):
            errors.append(f"solve gave {out}, oracle best {sorted(map(str, best))}")
    elif not isinstance(out, NoExplanation):
        errors.append(f"solve gave {out}, oracle finds none")
    if set(enumerate_full(problem)) != oracle_full_explanations(problem):
        errors.append("enumerate_full differs")
    if best:
        for x in sorted(problem.abducibles):
            if is_necessary(problem, x) != oracle_necessity(problem, x):
                errors.append(f"necessity of x{x} differs")
    return errors


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()

    total = 0
    for pair in SUPPORTED_PAIRS:
        tally = Counter()
        for seed in range(args.instances):
            problem = random_small_problem(*pair, seed, max_n=args.max_n)
            tally[type(solve(problem)).__name__] += 1
            for err in check(problem):
                total += 1
                print(f"{pair} seed {seed}: {err}")
        print(f"{pair[0]:15s} x {pair[1]:17s} {dict(sorted(tally.items()))}")
    print(f"{total} disagreements")


if __name__ == "__main__":
    main()
