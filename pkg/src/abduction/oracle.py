"""Truth-table reference semantics for small variable counts.

Everything here is exhaustive enumeration on purpose. Assignments are coded
as integers with x1 as the most significant bit, so ``0110`` is code 6 and
numeric order equals the order of the bit strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator

import numpy as np

from .affine import AffineSystem, EquationDisjunction, LinearEquation
from .engine import AbductionProblem, Hypothesis
from .formula import Assignment, Clause, Cnf, Dnf, Term

DEFAULT_CAP = 20


class CapExceeded(ValueError):
    pass


def _cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the oracle cap of {cap} variables")


@dataclass(frozen=True)
class ModelSet:
    n: int
    codes: frozenset[int]

    def __contains__(self, m) -> bool:
        if isinstance(m, Assignment):
            m = m.code()
        return m in self.codes

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[Assignment]:
        return self.assignments()

    def assignments(self) -> Iterator[Assignment]:
        for c in sorted(self.codes):
            yield Assignment.from_code(self.n, c)

    def strings(self) -> list[str]:
        return [str(m) for m in self.assignments()]

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "ModelSet":
        strings = list(strings)
        n = len(strings[0]) if strings else 0
        return cls(n, frozenset(Assignment.from_string(s).code() for s in strings))

    def __and__(self, other: "ModelSet") -> "ModelSet":
        return ModelSet(self.n, self.codes & other.codes)

    def __or__(self, other: "ModelSet") -> "ModelSet":
        return ModelSet(self.n, self.codes | other.codes)

    def __sub__(self, other: "ModelSet") -> "ModelSet":
        return ModelSet(self.n, self.codes - other.codes)

    def complement(self) -> "ModelSet":
        return ModelSet(self.n, frozenset(range(1 << self.n)) - self.codes)


def _table(n: int) -> np.ndarray:
    """Row c holds the bits of assignment code c; column v-1 is x_v."""
    codes = np.arange(1 << n, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((codes[:, None] >> shifts[None, :]) & 1).astype(bool)


def _lit(table: np.ndarray, lit: int) -> np.ndarray:
    col = table[:, abs(lit) - 1]
    return col if lit > 0 else ~col


def _eq(table: np.ndarray, e: LinearEquation) -> np.ndarray:
    acc = np.zeros(table.shape[0], dtype=bool)
    for v in e.variables:
        acc ^= table[:, v - 1]
    return acc == bool(e.rhs)


def _evaluate(phi, table: np.ndarray) -> np.ndarray:
    rows = table.shape[0]
    if isinstance(phi, Term):
        out = np.ones(rows, dtype=bool)
        for l in phi.literals:
            out &= _lit(table, l)
        return out
    if isinstance(phi, Clause):
        out = np.zeros(rows, dtype=bool)
        for l in phi.literals:
            out |= _lit(table, l)
        return out
    if isinstance(phi, Dnf):
        out = np.zeros(rows, dtype=bool)
        for t in phi.terms:
            out |= _evaluate(t, table)
        return out
    if isinstance(phi, Cnf):
        out = np.ones(rows, dtype=bool)
        for c in phi.clauses:
            out &= _evaluate(c, table)
        return out
    if isinstance(phi, AffineSystem):
        out = np.ones(rows, dtype=bool)
        for e in phi.rows:
            out &= _eq(table, e)
        return out
    if isinstance(phi, EquationDisjunction):
        out = np.zeros(rows, dtype=bool)
        for e in phi.eqs:
            out |= _eq(table, e)
        return out
    raise TypeError(f"cannot evaluate {type(phi).__name__}")


def models(phi, n: int | None = None, cap: int = DEFAULT_CAP) -> ModelSet:
    """Every model of ``phi`` over x1..xn, by evaluating all 2^n assignments."""
    if n is None:
        n = phi.n
    _cap(n, cap)
    sat = _evaluate(phi, _table(n))
    return ModelSet(n, frozenset(int(c) for c in np.flatnonzero(sat)))


def _mask(n: int, A: Iterable[int]) -> int:
    m = 0
    for v in A:
        m |= 1 << (n - v)
    return m


def project_models(M: ModelSet, A: Iterable[int]) -> ModelSet:
    """All assignments agreeing on A with some member of M."""
    A = list(A)
    if any(v < 1 or v > M.n for v in A):
        raise ValueError("projection variables out of range")
    mask = _mask(M.n, A)
    seen = {c & mask for c in M.codes}
    return ModelSet(M.n, frozenset(c for c in range(1 << M.n) if c & mask in seen))


def _select_code(n: int, code: int, A: Iterable[int]) -> Hypothesis:
    return Hypothesis(tuple(v if (code >> (n - v)) & 1 else -v for v in A))


def _sigma_and_counter(problem: AbductionProblem, cap: int) -> tuple[ModelSet, ModelSet]:
    n = problem.n
    sigma = models(problem.kb, n, cap)
    alpha = models(problem.query, n, cap)
    return sigma, sigma - alpha


def oracle_full_explanations(problem: AbductionProblem, cap: int = DEFAULT_CAP) -> set[Hypothesis]:
    sigma, counter = _sigma_and_counter(problem, cap)
    allowed = sigma - project_models(counter, problem.abducibles)
    return {_select_code(problem.n, c, problem.abducibles) for c in allowed.codes}


def all_hypotheses(A: Iterable[int]) -> Iterator[Hypothesis]:
    A = sorted(A)
    for signs in product((0, -1, 1), repeat=len(A)):
        yield Hypothesis(tuple(s * v for s, v in zip(signs, A) if s))


def oracle_explanations(problem: AbductionProblem, cap: int = DEFAULT_CAP) -> set[Hypothesis]:
    """Every hypothesis E with Σ ∧ E satisfiable and Σ ∧ E ⊨ α."""
    n = problem.n
    if len(problem.abducibles) > 10:
        raise CapExceeded("more than 10 abducibles")
    sigma, counter = _sigma_and_counter(problem, cap)
    sig = np.fromiter(sigma.codes, dtype=np.int64, count=len(sigma.codes))
    cnt = np.fromiter(counter.codes, dtype=np.int64, count=len(counter.codes))
    hyps = list(all_hypotheses(problem.abducibles))
    masks = np.array([_mask(n, h.variables) for h in hyps], dtype=np.int64)
    vals = np.array([_mask(n, [l for l in h.literals if l > 0]) for h in hyps], dtype=np.int64)
    consistent = ((sig[None, :] & masks[:, None]) == vals[:, None]).any(axis=1)
    refuted = ((cnt[None, :] & masks[:, None]) == vals[:, None]).any(axis=1)
    return {h for h, ok, bad in zip(hyps, consistent, refuted) if ok and not bad}


def oracle_best_explanations(problem: AbductionProblem, cap: int = DEFAULT_CAP) -> set[Hypothesis]:
    """Explanations none of whose proper subsets explain."""
    expl = oracle_explanations(problem, cap)
    best = set()
    for E in expl:
        lits = E.literals
        subsets = (
            Hypothesis(sub) for r in range(len(lits)) for sub in combinations(lits, r)
        )
        if not any(s in expl for s in subsets):
            best.add(E)
    return best


def oracle_relevance(problem: AbductionProblem, x: int, cap: int = DEFAULT_CAP) -> bool:
    return any(x in E.variables for E in oracle_best_explanations(problem, cap))


def oracle_necessity(problem: AbductionProblem, x: int, cap: int = DEFAULT_CAP) -> bool:
    """Every best explanation mentions x (vacuously false when there is none)."""
    best = oracle_best_explanations(problem, cap)
    return bool(best) and all(x in E.variables for E in best)
