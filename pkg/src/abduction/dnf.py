"""DNF classes with polynomial TAUTOLOGY, and falsifier search on top of them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, Union

from .formula import (
    Assignment,
    Clause,
    Cnf,
    Dnf,
    PartialAssignment,
    Term,
    condition_terms,
)
from .sat import horn_sat, two_sat


class UnsupportedClass(Exception):
    """The input falls outside every class this solver handles in polynomial time."""


class Flag(str, enum.Enum):
    HORN = "horn"
    REVERSE_HORN = "reverse-horn"
    POSITIVE = "positive"
    NEGATIVE = "negative"
    TWO_DNF = "2dnf"
    HORN_RENAMABLE = "horn-renamable"


# cheapest decider first
DECIDER_PRIORITY = (
    Flag.POSITIVE,
    Flag.NEGATIVE,
    Flag.HORN,
    Flag.REVERSE_HORN,
    Flag.HORN_RENAMABLE,
    Flag.TWO_DNF,
)


@dataclass(frozen=True)
class Renaming:
    flipped: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "flipped", frozenset(self.flipped))

    def lit(self, lit: int) -> int:
        return -lit if abs(lit) in self.flipped else lit


@dataclass(frozen=True)
class DnfClass:
    flags: frozenset[Flag] = frozenset()
    renaming: Renaming | None = None

    def __contains__(self, flag: Flag) -> bool:
        return flag in self.flags

    @property
    def tractable(self) -> bool:
        return bool(self.flags)


@dataclass(frozen=True)
class GuardedDnf:
    """``guard ∧ body``; keeps a conjunction with a term inside a tractable class."""

    guard: Term
    body: Dnf


# -- raw helpers on lists of frozensets ---------------------------------------

Terms = Sequence[frozenset[int]]


def _raw(phi: Dnf) -> list[frozenset[int]]:
    return [frozenset(t.literals) for t in phi.terms]


def _positives(t: Iterable[int]) -> int:
    return sum(1 for l in t if l > 0)


def _negatives(t: Iterable[int]) -> int:
    return sum(1 for l in t if l < 0)


def _is_horn(terms: Terms) -> bool:
    return all(_positives(t) <= 1 for t in terms)


def _is_reverse_horn(terms: Terms) -> bool:
    return all(_negatives(t) <= 1 for t in terms)


def _rename_terms(terms: Terms, flipped: frozenset[int]) -> list[frozenset[int]]:
    if not flipped:
        return list(terms)
    return [frozenset(-l if abs(l) in flipped else l for l in t) for t in terms]


def _horn_renaming(terms: Terms, n: int) -> frozenset[int] | None:
    if _is_horn(terms):
        return frozenset()
    # flip variable f_v true means x_v is renamed. A literal stays positive
    # after renaming iff the f-literal with the same sign is false, so "not
    # both positive" for a pair of literals is the 2-clause made of the pair.
    clauses = [pair for t in terms for pair in combinations(sorted(t), 2)]
    model = two_sat(n, clauses)
    if model is None:
        return None
    return frozenset(v for v, flip in model.items() if flip)


def _taut_horn(terms: Terms) -> bool:
    # The negation of a Horn DNF is a CNF with at most one negative literal
    # per clause. Renaming every variable turns it back into a Horn CNF whose
    # clauses carry exactly the literals of the original terms.
    return horn_sat(terms) is None


def _taut_reverse_horn(terms: Terms) -> bool:
    return horn_sat([[-l for l in t] for t in terms]) is None


def _taut_two(terms: Terms, n: int) -> bool:
    return two_sat(n, [[-l for l in t] for t in terms]) is None


def _decider(hint: DnfClass, n: int):
    for flag in DECIDER_PRIORITY:
        if flag not in hint.flags:
            continue
        if flag in (Flag.POSITIVE, Flag.NEGATIVE):
            # all-zeros (resp. all-ones) falsifies every nonempty term
            return lambda terms: any(not t for t in terms)
        if flag is Flag.HORN:
            return _taut_horn
        if flag is Flag.REVERSE_HORN:
            return _taut_reverse_horn
        if flag is Flag.HORN_RENAMABLE:
            if hint.renaming is None:
                continue
            flipped = hint.renaming.flipped
            return lambda terms: _taut_horn(_rename_terms(terms, flipped))
        if flag is Flag.TWO_DNF:
            return lambda terms: _taut_two(terms, n)
    raise UnsupportedClass(f"no polynomial tautology decider for flags {sorted(f.value for f in hint.flags)}")


# -- public operations ---------------------------------------------------------


def find_horn_renaming(phi: Dnf) -> Renaming | None:
    flipped = _horn_renaming(_raw(phi), phi.n)
    return None if flipped is None else Renaming(flipped)


def classify(phi: Dnf) -> DnfClass:
    terms = _raw(phi)
    flags = set()
    if _is_horn(terms):
        flags.add(Flag.HORN)
    if _is_reverse_horn(terms):
        flags.add(Flag.REVERSE_HORN)
    if all(l > 0 for t in terms for l in t):
        flags.add(Flag.POSITIVE)
    if all(l < 0 for t in terms for l in t):
        flags.add(Flag.NEGATIVE)
    if all(len(t) <= 2 for t in terms):
        flags.add(Flag.TWO_DNF)
    renaming = find_horn_renaming(phi)
    if renaming is not None:
        flags.add(Flag.HORN_RENAMABLE)
    return DnfClass(frozenset(flags), renaming)


def is_tautology(phi: Dnf, hint: DnfClass | None = None) -> bool:
    """TAUTOLOGY for a DNF in one of the tractable classes.

    ``hint`` is trusted; pass None to classify ``phi`` first.
    """
    if hint is None:
        hint = classify(phi)
    return _decider(hint, phi.n)(_raw(phi))


def is_tautology_guarded(g: GuardedDnf, hint: DnfClass | None = None) -> bool:
    # a nonempty consistent term is never valid, and a conjunction is valid
    # iff both conjuncts are
    if g.guard.literals:
        return False
    return is_tautology(g.body, hint)


class _Conditioned:
    """A guarded DNF in raw form, narrowed step by step by fixing literals."""

    __slots__ = ("guard", "body", "false")

    def __init__(self, guard: frozenset[int], body: list[frozenset[int]], false: bool = False):
        self.guard = guard
        self.body = body
        self.false = false

    @classmethod
    def of(cls, phi: Union[Dnf, GuardedDnf]) -> "_Conditioned":
        if isinstance(phi, GuardedDnf):
            return cls(frozenset(phi.guard.literals), _raw(phi.body))
        return cls(frozenset(), _raw(phi))

    def condition(self, p: frozenset[int]) -> "_Conditioned":
        if self.false:
            return self
        if any(-l in p for l in self.guard):
            return _Conditioned(frozenset(), [], True)
        return _Conditioned(self.guard - p, condition_terms(self.body, p))

    def satisfiable(self) -> bool:
        return not self.false and bool(self.body)

    def tautology(self, decide) -> bool:
        if self.false or self.guard:
            return False
        return decide(self.body)

    def literals(self) -> set[int]:
        return set(self.guard).union(*self.body)


def find_falsifying_assignment(
    phi: Union[Dnf, GuardedDnf],
    hint: DnfClass | None = None,
    fixed: PartialAssignment = PartialAssignment(),
) -> Assignment | None:
    """A total assignment extending ``fixed`` that falsifies ``phi``.

    Self-reduction over the decision procedure: unfixed variables are visited
    in ascending order, each tentatively set to 0 and kept there unless that
    makes the rest valid. Variables the current formula no longer mentions
    cannot change the answer, so they take 0 directly.
    """
    body = phi.body if isinstance(phi, GuardedDnf) else phi
    n = body.n
    if hint is None:
        hint = classify(body)
    decide = _decider(hint, n)
    cur = _Conditioned.of(phi).condition(frozenset(fixed.literals))
    if cur.tautology(decide):
        return None
    bits = [0] * n
    for lit in fixed:
        bits[abs(lit) - 1] = 1 if lit > 0 else 0
    fixed_vars = fixed.variables
    lits = cur.literals()
    for v in range(1, n + 1):
        if v in fixed_vars or cur.false:
            continue
        if v not in lits and -v not in lits:
            continue
        trial = cur.condition(frozenset((-v,)))
        if not trial.tautology(decide):
            cur = trial
        else:
            cur = cur.condition(frozenset((v,)))
            bits[v - 1] = 1
        lits = cur.literals()
    return Assignment(tuple(bits))


def apply_renaming(rho: Renaming, x):
    """Flip the polarity of every renamed variable throughout ``x``."""
    if isinstance(x, Dnf):
        return Dnf(x.n, tuple(apply_renaming(rho, t) for t in x.terms))
    if isinstance(x, Cnf):
        return Cnf(x.n, tuple(apply_renaming(rho, c) for c in x.clauses))
    if isinstance(x, GuardedDnf):
        return GuardedDnf(apply_renaming(rho, x.guard), apply_renaming(rho, x.body))
    if isinstance(x, (Term, Clause, PartialAssignment)):
        return type(x)(tuple(rho.lit(l) for l in x.literals))
    if isinstance(x, Assignment):
        return Assignment(tuple(1 - b if v in rho.flipped else b for v, b in enumerate(x.bits, start=1)))
    raise TypeError(f"cannot rename {type(x).__name__}")


def cnf_classes(cnf: Cnf) -> set[str]:
    """Syntactic classes of a CNF: positive, negative, horn, reverse-horn, 2cnf."""
    clauses = [c.literals for c in cnf.clauses]
    out = set()
    if all(l > 0 for c in clauses for l in c):
        out.add("positive")
    if all(l < 0 for c in clauses for l in c):
        out.add("negative")
    if all(_positives(c) <= 1 for c in clauses):
        out.add("horn")
    if all(_negatives(c) <= 1 for c in clauses):
        out.add("reverse-horn")
    if all(len(c) <= 2 for c in clauses):
        out.add("2cnf")
    return out


def cnf_satisfiable(cnf: Cnf) -> bool | None:
    """Satisfiability when the CNF is in a class with a polynomial decider, else None."""
    clauses = [c.literals for c in cnf.clauses if not c.tautological]
    if any(not c for c in clauses):
        return False
    kinds = cnf_classes(Cnf(cnf.n, tuple(Clause(c) for c in clauses)))
    if kinds & {"positive", "negative"}:
        return True
    if "horn" in kinds:
        return horn_sat(clauses) is not None
    if "reverse-horn" in kinds:
        return horn_sat([[-l for l in c] for c in clauses]) is not None
    if "2cnf" in kinds:
        return two_sat(cnf.n, clauses) is not None
    return None
