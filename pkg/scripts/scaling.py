"""Time the affine and Horn pipelines and print a doubling table.

    python3 scripts/scaling.py [--seeds 3] [--repeats 3]
"""

import argparse
from dataclasses import replace

from abduction.bench import AffineSize, HornSize, doubling, time_solve


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    seeds = tuple(range(args.seeds))

    for full in (AffineSize(), HornSize()):
        name = type(full).__name__.replace("Size", "")
        t = time_solve(full, seeds, args.repeats)
        print(f"{name:6s} {full}: {t.seconds / len(seeds):.3f}s per instance  outcomes={t.outcomes}")
        half = replace(full, n=full.n // 2, k=full.k // 2, k_query=full.k_query // 2, a=full.a // 2)
        ratios = doubling(half, seeds, args.repeats)
        print(f"{'':6s} doubling from {half}:")
        for param, r in ratios.items():
            print(f"{'':8s}{param:8s} x{r:5.2f}")


if __name__ == "__main__":
    main()
