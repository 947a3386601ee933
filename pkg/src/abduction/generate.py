"""Seeded random abduction problems for every supported class pair."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .affine import AffineSystem, EquationDisjunction, LinearEquation
from .dnf import cnf_satisfiable
from .engine import AbductionProblem
from .formula import Clause, Cnf, Dnf, Term

KB_CLASSES = ("affine", "horn", "reverse-horn", "positive", "negative", "2dnf", "horn-renamable")
QUERY_CLASSES = (
    "eqdisj",
    "clause",
    "literal",
    "positive-cnf",
    "negative-cnf",
    "horn-cnf",
    "reverse-horn-cnf",
    "mixed-cnf",
)

SUPPORTED_PAIRS = (
    ("affine", "eqdisj"),
    ("affine", "clause"),
    ("affine", "literal"),
    ("horn", "clause"),
    ("reverse-horn", "clause"),
    ("horn-renamable", "clause"),
    ("2dnf", "clause"),
    ("horn", "positive-cnf"),
    ("reverse-horn", "negative-cnf"),
    ("positive", "horn-cnf"),
    ("negative", "reverse-horn-cnf"),
)

DEFAULT_QUERY = {"affine": "eqdisj"}


@dataclass
class InstanceConfig:
    kb_class: str = "horn"
    query_class: str | None = None
    n: int = 6
    terms: int = 4
    query_size: int = 2
    abducibles: int = 3
    max_width: int = 3
    seed: int = 0

    def __post_init__(self):
        if self.kb_class not in KB_CLASSES:
            raise ValueError(f"unknown knowledge-base class {self.kb_class!r}")
        if self.query_class is None:
            self.query_class = DEFAULT_QUERY.get(self.kb_class, "clause")
        if self.query_class not in QUERY_CLASSES:
            raise ValueError(f"unknown query class {self.query_class!r}")
        if self.n < 1:
            raise ValueError("need at least one variable")


def _sign_term(rng: random.Random, vs: list[int], kb_class: str) -> list[int]:
    if kb_class == "positive":
        return list(vs)
    if kb_class == "negative":
        return [-v for v in vs]
    if kb_class in ("horn", "reverse-horn", "horn-renamable"):
        # at most one literal keeps the minority sign
        majority = -1 if kb_class != "reverse-horn" else 1
        lits = [majority * v for v in vs]
        if lits and rng.random() < 0.6:
            i = rng.randrange(len(lits))
            lits[i] = -lits[i]
        return lits
    return [v if rng.random() < 0.5 else -v for v in vs]


def random_dnf(
    rng: random.Random,
    n: int,
    kb_class: str,
    n_terms: int,
    max_width: int = 3,
    empty_prob: float = 0.05,
) -> Dnf:
    """Random DNF in a syntactic class; may have no terms only if n_terms is 0."""
    width = min(2, max_width) if kb_class == "2dnf" else max_width
    terms = []
    for _ in range(n_terms):
        k = rng.randint(0 if rng.random() < empty_prob else 1, min(width, n))
        vs = rng.sample(range(1, n + 1), k)
        terms.append(_sign_term(rng, vs, kb_class))
    if kb_class == "horn-renamable":
        flipped = {v for v in range(1, n + 1) if rng.random() < 0.5}
        terms = [[-l if abs(l) in flipped else l for l in t] for t in terms]
    return Dnf.of(n, terms)


def _random_dnf(rng: random.Random, cfg: InstanceConfig) -> Dnf:
    return random_dnf(rng, cfg.n, cfg.kb_class, max(1, cfg.terms), cfg.max_width)


def _random_affine(rng: random.Random, cfg: InstanceConfig) -> AffineSystem:
    # plant a model so the system is always consistent
    planted = [rng.randint(0, 1) for _ in range(cfg.n)]
    rows = []
    for _ in range(max(0, cfg.terms)):
        k = rng.randint(1, min(cfg.max_width, cfg.n))
        vs = rng.sample(range(1, cfg.n + 1), k)
        rows.append(LinearEquation(tuple(vs), sum(planted[v - 1] for v in vs) % 2))
    return AffineSystem(cfg.n, tuple(rows))


def _clause_lits(rng: random.Random, n: int, width: int, kind: str) -> list[int]:
    k = rng.randint(1, min(width, n))
    vs = rng.sample(range(1, n + 1), k)
    if kind == "positive":
        return vs
    if kind == "negative":
        return [-v for v in vs]
    if kind in ("horn", "reverse-horn"):
        majority = -1 if kind == "horn" else 1
        lits = [majority * v for v in vs]
        if rng.random() < 0.5:
            lits[0] = -lits[0]
        return lits
    return [v if rng.random() < 0.5 else -v for v in vs]


def _random_query(rng: random.Random, cfg: InstanceConfig):
    n, size, q = cfg.n, max(1, cfg.query_size), cfg.query_class
    if q == "eqdisj":
        eqs = []
        for _ in range(size):
            k = rng.randint(1, min(cfg.max_width, n))
            eqs.append(LinearEquation(tuple(rng.sample(range(1, n + 1), k)), rng.randint(0, 1)))
        return EquationDisjunction(n, tuple(eqs))
    if q == "clause":
        return Clause(tuple(_clause_lits(rng, n, size, "mixed")))
    if q == "literal":
        v = rng.randint(1, n)
        return Term((v if rng.random() < 0.5 else -v,))
    kind = q[: -len("-cnf")]
    while True:
        clauses = tuple(Clause(tuple(_clause_lits(rng, n, cfg.max_width, kind))) for _ in range(size))
        cnf = Cnf(n, clauses)
        if cnf_satisfiable(cnf) is not False:
            return cnf


def random_problem(cfg: InstanceConfig) -> AbductionProblem:
    rng = random.Random(cfg.seed)
    if cfg.kb_class == "affine":
        kb = _random_affine(rng, cfg)
    else:
        kb = _random_dnf(rng, cfg)
        while not kb.satisfiable:
            kb = _random_dnf(rng, cfg)
    query = _random_query(rng, cfg)
    A = frozenset(rng.sample(range(1, cfg.n + 1), min(cfg.abducibles, cfg.n)))
    return AbductionProblem(cfg.n, kb, query, A)


def random_small_problem(kb_class: str, query_class: str, seed: int, max_n: int = 10, max_abducibles: int = 6) -> AbductionProblem:
    """Sizes drawn from the seed too; used by the oracle cross-check suites."""
    rng = random.Random(f"{kb_class}/{query_class}/{seed}")
    n = rng.randint(2, max_n)
    cfg = InstanceConfig(
        kb_class=kb_class,
        query_class=query_class,
        n=n,
        terms=rng.randint(1, 2 * n) if kb_class == "affine" else rng.randint(1, 6),
        query_size=rng.randint(1, 3),
        abducibles=rng.randint(0, min(max_abducibles, n)),
        max_width=rng.randint(1, 4),
        seed=rng.randrange(1 << 30),
    )
    return random_problem(cfg)


def scaling_affine(n: int, k: int, k_query: int, a: int, seed: int = 0, width: int = 3) -> AbductionProblem:
    """Sparse affine knowledge base with a disjunctive equation query, for timing runs."""
    rng = random.Random(seed)
    A = sorted(rng.sample(range(1, n + 1), a))
    planted = [rng.randint(0, 1) for _ in range(n)]
    rows = []
    for _ in range(k):
        vs = rng.sample(range(1, n + 1), width)
        rows.append(LinearEquation(tuple(vs), sum(planted[v - 1] for v in vs) % 2))
    eqs = []
    for _ in range(k_query):
        vs = rng.sample(range(1, n + 1), 2)
        eqs.append(LinearEquation(tuple(vs), rng.randint(0, 1)))
    return AbductionProblem(n, AffineSystem(n, tuple(rows)), EquationDisjunction(n, tuple(eqs)), frozenset(A))


def scaling_horn(n: int, k: int, k_query: int, a: int, seed: int = 0, width: int = 6) -> AbductionProblem:
    """Horn DNF knowledge base with a positive CNF query, for timing runs.

    Terms draw half their variables from the abducibles and query clauses
    draw only from them, so projections stay nontrivial and explanations
    usually exist.
    """
    rng = random.Random(seed)
    A = sorted(rng.sample(range(1, n + 1), a))
    rest = [v for v in range(1, n + 1) if v not in set(A)]
    terms = []
    for _ in range(k):
        w = rng.randint(2, width)
        vs = rng.sample(A, w // 2) + rng.sample(rest, w - w // 2)
        lits = [-v for v in vs]
        if rng.random() < 0.5:
            i = rng.randrange(w)
            lits[i] = vs[i]
        terms.append(lits)
    clauses = tuple(Clause(tuple(rng.sample(A, 3))) for _ in range(k_query))
    return AbductionProblem(n, Dnf.of(n, terms), Cnf(n, clauses), frozenset(A))
