"""Wall-clock timing of the polynomial pipelines and the doubling experiment."""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

from .engine import Best, is_explanation, solve
from .generate import scaling_affine, scaling_horn


@dataclass(frozen=True)
class AffineSize:
    n: int = 500
    k: int = 200
    k_query: int = 20
    a: int = 100


@dataclass(frozen=True)
class HornSize:
    n: int = 500
    k: int = 300
    k_query: int = 20
    a: int = 100


@dataclass
class Timing:
    label: str
    seconds: float
    outcomes: list[str] = field(default_factory=list)


def _build(size, seed: int):
    if isinstance(size, AffineSize):
        return scaling_affine(size.n, size.k, size.k_query, size.a, seed)
    return scaling_horn(size.n, size.k, size.k_query, size.a, seed)


def time_solve(size, seeds=(0, 1, 2), repeats: int = 3, check: bool = True) -> Timing:
    """Total over ``seeds`` of the best-of-``repeats`` solve time."""
    total = 0.0
    outcomes = []
    for seed in seeds:
        problem = _build(size, seed)
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            out = solve(problem)
            best = min(best, time.perf_counter() - t0)
        if check and isinstance(out, Best) and not is_explanation(problem, out.hypothesis):
            raise AssertionError(f"invalid explanation at {size} seed {seed}")
        outcomes.append(type(out).__name__)
        total += best
    return Timing(repr(size), total, outcomes)


def doubling(base, seeds=(0, 1, 2), repeats: int = 3) -> dict[str, float]:
    """Time ratio when each size parameter is doubled on its own."""
    t0 = time_solve(base, seeds, repeats).seconds
    ratios = {}
    for name in ("n", "k", "k_query", "a"):
        bigger = replace(base, **{name: 2 * getattr(base, name)})
        if bigger.a > bigger.n:
            continue
        ratios[name] = time_solve(bigger, seeds, repeats).seconds / t0
    return ratios
