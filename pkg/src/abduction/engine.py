"""Best-explanation search through projection.

A full hypothesis F over the abducibles A explains the query iff F is the
A-part of a model of Σ that lies outside the projection of M(Σ ∧ ¬α) onto
A. Each plan below builds that projection in a form its class can handle,
extracts one such model, then drops literals greedily.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from .affine import (
    AffineSystem,
    Echelon,
    EquationDisjunction,
    LinearEquation,
    affine_sat,
    clause_to_eqdisj,
    complement_affine,
    negate_eqdisj,
    project_affine,
    unit_rows,
)
from .dnf import (
    DnfClass,
    Flag,
    GuardedDnf,
    UnsupportedClass,
    _Conditioned,
    _decider,
    classify,
    cnf_classes,
    cnf_satisfiable,
    find_falsifying_assignment,
)
from .formula import (
    Clause,
    Cnf,
    Dnf,
    Hypothesis,
    PartialAssignment,
    Term,
    condition_dnf,
    dedupe,
    dnf_entails_cnf,
    is_consistent,
)

KnowledgeBase = Union[Dnf, AffineSystem]
Query = Union[Clause, Cnf, Term, EquationDisjunction]


class InvalidProblem(ValueError):
    """The triple violates the definition of an abduction problem."""


@dataclass(frozen=True)
class AbductionProblem:
    n: int
    kb: KnowledgeBase
    query: Query
    abducibles: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "abducibles", frozenset(self.abducibles))

    def with_abducibles(self, abducibles: Iterable[int]) -> "AbductionProblem":
        return AbductionProblem(self.n, self.kb, self.query, frozenset(abducibles))


@dataclass(frozen=True)
class Best:
    hypothesis: Hypothesis


@dataclass(frozen=True)
class NoExplanation:
    pass


@dataclass(frozen=True)
class Unsupported:
    reason: str


SolveOutcome = Union[Best, NoExplanation, Unsupported]


# -- validation ---------------------------------------------------------------


def _query_satisfiable(q: Query, n: int) -> bool | None:
    if isinstance(q, Clause):
        return bool(q.literals)
    if isinstance(q, Term):
        return True
    if isinstance(q, EquationDisjunction):
        return any(not e.is_contradiction for e in q.eqs)
    return cnf_satisfiable(q)


def validate(problem: AbductionProblem) -> None:
    n = problem.n
    if n < 0:
        raise InvalidProblem("negative variable count")
    if problem.kb.n != n:
        raise InvalidProblem(f"knowledge base declares n={problem.kb.n}, problem has n={n}")
    for v in problem.abducibles:
        if not 1 <= v <= n:
            raise InvalidProblem(f"abducible {v} outside 1..{n}")
    for v in problem.query.variables:
        if not 1 <= v <= n:
            raise InvalidProblem(f"query variable {v} outside 1..{n}")
    if getattr(problem.query, "n", n) != n:
        raise InvalidProblem("query and problem disagree on n")
    if isinstance(problem.kb, Dnf):
        if not problem.kb.satisfiable:
            raise InvalidProblem("knowledge base is unsatisfiable (no consistent term)")
    elif affine_sat(problem.kb) is None:
        raise InvalidProblem("knowledge base is unsatisfiable (elimination derives 0=1)")
    if _query_satisfiable(problem.query, n) is False:
        raise InvalidProblem("query is unsatisfiable")


# -- query normalization -------------------------------------------------------


def _as_eqdisj(q: Query, n: int) -> EquationDisjunction:
    if isinstance(q, EquationDisjunction):
        return q
    if isinstance(q, Cnf) and len(q.clauses) == 1:
        q = q.clauses[0]
    if isinstance(q, Clause):
        return clause_to_eqdisj(q, n)
    if isinstance(q, Term) and len(q) <= 1:
        if not q.literals:
            return EquationDisjunction(n, (LinearEquation((), 0),))
        return clause_to_eqdisj(Clause(q.literals), n)
    if isinstance(q, Cnf) and not q.clauses:
        return EquationDisjunction(n, (LinearEquation((), 0),))
    raise UnsupportedClass(
        f"affine knowledge base needs a query reducible to one disjunction of equations, got {_describe(q)}"
    )


def _as_cnf(q: Query, n: int) -> Cnf:
    if isinstance(q, Cnf):
        return q
    if isinstance(q, Clause):
        return Cnf(n, (q,))
    if isinstance(q, Term):
        return Cnf(n, tuple(Clause((l,)) for l in q.literals))
    raise UnsupportedClass(f"DNF knowledge base cannot take a {_describe(q)} query")


def _describe(q) -> str:
    if isinstance(q, Cnf):
        return f"CNF of {len(q.clauses)} clauses"
    if isinstance(q, Term):
        return f"term of {len(q)} literals"
    return type(q).__name__


# -- plans ---------------------------------------------------------------------


def _a_part(lits: Iterable[int], A: frozenset[int]) -> frozenset[int]:
    return frozenset(l for l in lits if abs(l) in A)


class _AffinePlan:
    def __init__(self, problem: AbductionProblem):
        self.problem = problem
        self.A = problem.abducibles
        self.sigma = problem.kb
        self.query = _as_eqdisj(problem.query, problem.n)
        negated = negate_eqdisj(self.query)
        both = AffineSystem(problem.n, self.sigma.rows + negated.rows)
        self.projection = project_affine(both, self.A)
        # Σ ∧ ¬α unsatisfiable: every model of Σ is a full explanation
        self.entailed = any(e.is_contradiction for e in self.projection.rows)
        self.disjuncts = [] if self.entailed else list(complement_affine(self.projection).eqs)
        self._sigma_ech = Echelon(problem.n)
        self._sigma_ech.add_all(e.row for e in self.sigma.rows)
        self._proj_ech = Echelon(problem.n)
        self._proj_ech.add_all(e.row for e in self.projection.rows)

    def _witness(self, fixed: Iterable[int]) -> Hypothesis | None:
        base = self._sigma_ech.copy()
        if not base.add_all(unit_rows(fixed)):
            return None
        if self.entailed:
            m = base.model()
            return _select(m, self.A)
        for d in self.disjuncts:
            ech = base.copy()
            if ech.add(d.row):
                return _select(ech.model(), self.A)
        return None

    def full_explanation(self) -> Hypothesis | None:
        return self._witness(())

    def feasible(self, prefix: frozenset[int]) -> bool:
        return self._witness(prefix) is not None

    def entails(self, E: Iterable[int]) -> bool:
        """Σ ∧ E ⊨ α, i.e. E is inconsistent with the projection."""
        if self.entailed:
            return True
        return not self._proj_ech.copy().add_all(unit_rows(E))


class _DnfPlan:
    def __init__(self, problem: AbductionProblem):
        self.problem = problem
        n = problem.n
        A = self.A = problem.abducibles
        sigma = [frozenset(t.literals) for t in problem.kb.terms]
        self.sigma = sigma
        cnf = _as_cnf(problem.query, n)
        negated = [frozenset(-l for l in c.literals) for c in cnf.clauses]
        cls = classify(problem.kb)
        kinds = cnf_classes(cnf)

        if len(negated) == 1 and (Flag.HORN_RENAMABLE in cls or Flag.TWO_DNF in cls):
            # clause query: the projection of ⋁ (T ∧ t) is t|A ∧ ⋁ T|A over the
            # terms T compatible with t, and the body stays in Σ's class
            t_alpha = negated[0]
            self.route = "clause"
            if not is_consistent(t_alpha):
                guard, body = frozenset(), []
            else:
                neg = frozenset(-l for l in t_alpha)
                guard = _a_part(t_alpha, A)
                body = dedupe(_a_part(t, A) for t in sigma if t.isdisjoint(neg))
            self.hint = cls
        else:
            route = None
            if Flag.HORN in cls and "positive" in kinds:
                route, flag = "horn/positive-cnf", Flag.HORN
            elif Flag.REVERSE_HORN in cls and "negative" in kinds:
                route, flag = "reverse-horn/negative-cnf", Flag.REVERSE_HORN
            elif Flag.POSITIVE in cls and "horn" in kinds:
                route, flag = "positive/horn-cnf", Flag.REVERSE_HORN
            elif Flag.NEGATIVE in cls and "reverse-horn" in kinds:
                route, flag = "negative/reverse-horn-cnf", Flag.HORN
            if route is None:
                flags = ",".join(sorted(f.value for f in cls.flags)) or "none"
                raise UnsupportedClass(
                    f"DNF knowledge base (classes: {flags}) with a CNF query of "
                    f"{len(negated)} clauses (classes: {','.join(sorted(kinds)) or 'none'})"
                )
            self.route = route
            guard = frozenset()
            body = dedupe(
                _a_part(t | tn, A)
                for t in sigma
                for tn in negated
                if is_consistent(t | tn)
            )
            self.hint = DnfClass(frozenset((flag,)))
        self.projection = GuardedDnf(Term(tuple(guard)), Dnf(n, tuple(Term(tuple(t)) for t in body)))
        self._proj = _Conditioned(guard, body)
        self._decide = _decider(self.hint, n)
        self._memo: dict[frozenset[int], bool] = {}

    def _open(self, q: frozenset[int]) -> bool:
        """Some assignment over A extending q falsifies the projection."""
        hit = self._memo.get(q)
        if hit is None:
            hit = not self._proj.condition(q).tautology(self._decide)
            self._memo[q] = hit
        return hit

    def full_explanation(self) -> Hypothesis | None:
        for t in self.sigma:
            q = _a_part(t, self.A)
            if not self._open(q):
                continue
            m = find_falsifying_assignment(self.projection, self.hint, PartialAssignment(tuple(q)))
            # the projection only mentions A, so overriding with t keeps it false
            bits = list(m.bits)
            for l in t:
                bits[abs(l) - 1] = 1 if l > 0 else 0
            return Hypothesis(tuple(v if bits[v - 1] else -v for v in self.A))
        return None

    def feasible(self, prefix: frozenset[int]) -> bool:
        neg = frozenset(-l for l in prefix)
        for t in self.sigma:
            if not t.isdisjoint(neg):
                continue
            if self._open(prefix | _a_part(t, self.A)):
                return True
        return False

    def entails(self, E: Iterable[int]) -> bool:
        return not self._proj.condition(frozenset(E)).satisfiable()


def _select(m, A) -> Hypothesis:
    return Hypothesis(tuple(v if m[v] else -v for v in A))


def plan(problem: AbductionProblem) -> Union[_AffinePlan, _DnfPlan]:
    """Validate ``problem`` and build its projection; raises InvalidProblem or UnsupportedClass."""
    validate(problem)
    if isinstance(problem.kb, AffineSystem):
        return _AffinePlan(problem)
    return _DnfPlan(problem)


# -- operations ----------------------------------------------------------------


def _check_hypothesis(problem: AbductionProblem, E: Hypothesis) -> None:
    outside = E.variables - problem.abducibles
    if outside:
        raise ValueError(f"hypothesis mentions non-abducible variables {sorted(outside)}")


def is_explanation(problem: AbductionProblem, E: Hypothesis) -> bool:
    """Σ ∧ E is satisfiable and entails α, checked directly on Σ (no projection)."""
    plan(problem)  # support matrix and validation
    _check_hypothesis(problem, E)
    n = problem.n
    if isinstance(problem.kb, AffineSystem):
        base = Echelon(n)
        base.add_all(e.row for e in problem.kb.rows)
        if not base.add_all(unit_rows(E)):
            return False
        q = _as_eqdisj(problem.query, n)
        with_neg = base.copy()
        return not with_neg.add_all(e.row for e in negate_eqdisj(q).rows)
    restricted = condition_dnf(problem.kb, E)
    if not restricted.satisfiable:
        return False
    widened = Dnf(n, tuple(Term(t.literals + E.literals) for t in restricted.terms))
    return dnf_entails_cnf(widened, _as_cnf(problem.query, n))


def find_full_explanation(problem: AbductionProblem) -> Hypothesis | None:
    return plan(problem).full_explanation()


def _minimize(p, F: Hypothesis) -> Hypothesis:
    current = list(F.literals)
    for lit in F.literals:
        trial = [l for l in current if l != lit]
        if p.entails(trial):
            current = trial
    return Hypothesis(tuple(current))


def minimize(problem: AbductionProblem, F: Hypothesis) -> Hypothesis:
    """Greedily drop literals, ascending by variable, while entailment survives."""
    if not is_explanation(problem, F):
        raise ValueError(f"{F} is not an explanation")
    return _minimize(plan(problem), F)


def solve(problem: AbductionProblem) -> SolveOutcome:
    try:
        p = plan(problem)
    except UnsupportedClass as exc:
        return Unsupported(str(exc))
    F = p.full_explanation()
    if F is None:
        return NoExplanation()
    return Best(_minimize(p, F))


def enumerate_full(problem: AbductionProblem, limit: int | None = None) -> list[Hypothesis]:
    """Full explanations in lexicographic order, by branching with exact pruning."""
    p = plan(problem)
    A = sorted(problem.abducibles)
    out: list[Hypothesis] = []

    def branch(i: int, prefix: frozenset[int]) -> None:
        if limit is not None and len(out) >= limit:
            return
        if not p.feasible(prefix):
            return
        if i == len(A):
            out.append(Hypothesis(tuple(prefix)))
            return
        branch(i + 1, prefix | {-A[i]})
        branch(i + 1, prefix | {A[i]})

    if limit is None or limit > 0:
        branch(0, frozenset())
    return out


def is_necessary(problem: AbductionProblem, x: int) -> bool:
    """x is necessary iff dropping it from the abducibles leaves no explanation."""
    if x not in problem.abducibles:
        raise ValueError(f"variable {x} is not an abducible")
    outcome = solve(problem.with_abducibles(problem.abducibles - {x}))
    if isinstance(outcome, Unsupported):
        raise UnsupportedClass(outcome.reason)
    return isinstance(outcome, NoExplanation)
