"""Propositional building blocks shared by every engine.

Variables are dense 1-based integers and literals are signed integers in the
DIMACS style: ``3`` is x3, ``-3`` is its negation. Terms, clauses and partial
assignments keep their literals sorted by (variable, sign) so that equal
objects serialize identically.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

log = logging.getLogger(__name__)


def lit_key(lit: int) -> tuple[int, int]:
    return (abs(lit), lit)


def normalize_literals(lits: Iterable[int]) -> tuple[int, ...]:
    lits = tuple(lits)
    for lit in lits:
        if not isinstance(lit, int) or lit == 0:
            raise ValueError(f"invalid literal {lit!r}")
    return tuple(sorted(set(lits), key=lit_key))


def is_consistent(lits: Iterable[int]) -> bool:
    """True when no variable occurs with both signs."""
    seen = set(lits)
    return not any(-lit in seen for lit in seen)


def _check_range(lits: Iterable[int], n: int, what: str) -> None:
    for lit in lits:
        if abs(lit) > n:
            raise ValueError(f"{what}: variable {abs(lit)} exceeds n={n}")


@dataclass(frozen=True)
class _LiteralSet:
    literals: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "literals", normalize_literals(self.literals))

    def __iter__(self) -> Iterator[int]:
        return iter(self.literals)

    def __len__(self) -> int:
        return len(self.literals)

    def __contains__(self, lit: int) -> bool:
        return lit in self.literals

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(abs(lit) for lit in self.literals)

    def __str__(self) -> str:
        return " ".join(str(lit) for lit in self.literals)


class _Consistent(_LiteralSet):
    def __post_init__(self):
        super().__post_init__()
        if not is_consistent(self.literals):
            raise ValueError(f"complementary literals in {type(self).__name__}: {self.literals}")


@dataclass(frozen=True)
class Term(_Consistent):
    """Conjunction of literals; the empty term is ``true``."""

    def satisfied_by(self, m: "Assignment") -> bool:
        return all(m.satisfies(lit) for lit in self.literals)


@dataclass(frozen=True)
class Clause(_LiteralSet):
    """Disjunction of literals; the empty clause is ``false``."""

    @property
    def tautological(self) -> bool:
        return not is_consistent(self.literals)

    def satisfied_by(self, m: "Assignment") -> bool:
        return any(m.satisfies(lit) for lit in self.literals)


@dataclass(frozen=True)
class PartialAssignment(_Consistent):
    """A consistent set of literals, e.g. ``Select_A(m)`` or a hypothesis."""

    def value(self, v: int) -> int | None:
        if v in self.literals:
            return 1
        if -v in self.literals:
            return 0
        return None

    def without(self, lit: int) -> "PartialAssignment":
        return PartialAssignment(tuple(l for l in self.literals if l != lit))

    def sort_key(self) -> tuple:
        """Lexicographic order on (variable, value) pairs, 0 before 1."""
        return tuple((abs(l), l > 0) for l in self.literals)


Hypothesis = PartialAssignment


@dataclass(frozen=True)
class Assignment:
    """Total assignment to x1..xn, stored as a tuple of bits."""

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("assignment bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @property
    def n(self) -> int:
        return len(self.bits)

    @classmethod
    def from_string(cls, s: str) -> "Assignment":
        return cls(tuple(int(c) for c in s))

    @classmethod
    def from_literals(cls, n: int, lits: Iterable[int], default: int = 0) -> "Assignment":
        bits = [default] * n
        for lit in lits:
            bits[abs(lit) - 1] = 1 if lit > 0 else 0
        return cls(tuple(bits))

    @classmethod
    def from_code(cls, n: int, code: int) -> "Assignment":
        # x1 is the most significant bit, so codes order like the bit strings
        return cls(tuple((code >> (n - i)) & 1 for i in range(1, n + 1)))

    def code(self) -> int:
        c = 0
        for b in self.bits:
            c = (c << 1) | b
        return c

    def __getitem__(self, v: int) -> int:
        if v < 1:
            raise IndexError(v)
        return self.bits[v - 1]

    def satisfies(self, lit: int) -> bool:
        return self.bits[abs(lit) - 1] == (1 if lit > 0 else 0)

    def literals(self) -> tuple[int, ...]:
        return tuple(v if b else -v for v, b in enumerate(self.bits, start=1))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class Dnf:
    n: int
    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        terms = tuple(t if isinstance(t, Term) else Term(tuple(t)) for t in self.terms)
        for t in terms:
            _check_range(t, self.n, "dnf")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, n: int, terms: Iterable[Iterable[int]]) -> "Dnf":
        """Build a DNF, silently dropping inconsistent terms (they denote false)."""
        kept = []
        for t in terms:
            lits = normalize_literals(t)
            if is_consistent(lits):
                kept.append(Term(lits))
            else:
                log.warning("dropping inconsistent term %s", lits)
        return cls(n, tuple(kept))

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(abs(l) for t in self.terms for l in t)

    @property
    def satisfiable(self) -> bool:
        return bool(self.terms)

    def evaluate(self, m: Assignment) -> bool:
        return any(t.satisfied_by(m) for t in self.terms)


@dataclass(frozen=True)
class Cnf:
    n: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        clauses = tuple(c if isinstance(c, Clause) else Clause(tuple(c)) for c in self.clauses)
        for c in clauses:
            _check_range(c, self.n, "cnf")
        object.__setattr__(self, "clauses", clauses)

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(abs(l) for c in self.clauses for l in c)

    def evaluate(self, m: Assignment) -> bool:
        return all(c.satisfied_by(m) for c in self.clauses)


def select(m: Assignment, A: Iterable[int]) -> PartialAssignment:
    """The literals of ``m`` formed upon the variables ``A``."""
    return PartialAssignment(tuple(v if m[v] else -v for v in A))


def condition_terms(terms: Iterable[frozenset[int]], p: frozenset[int]) -> list[frozenset[int]]:
    """Raw-form conditioning used by the engines' inner loops."""
    neg = frozenset(-l for l in p)
    return [t - p for t in terms if t.isdisjoint(neg)]


def condition_dnf(phi: Dnf, p: PartialAssignment) -> Dnf:
    """Drop terms clashing with ``p`` and delete the literals ``p`` makes true."""
    _check_range(p, phi.n, "condition")
    lits = frozenset(p.literals)
    out = condition_terms((frozenset(t.literals) for t in phi.terms), lits)
    return Dnf(phi.n, tuple(Term(tuple(t)) for t in out))


def dedupe(terms: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    seen = set()
    out = []
    for t in terms:
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def project_dnf(phi: Dnf, A: Iterable[int]) -> Dnf:
    """Forget every variable outside ``A`` by deleting its literals from each term.

    Projection distributes over disjunction and a consistent term projects to
    its own restriction, so this is exact. Duplicate terms are merged.
    """
    keep = frozenset(A)
    _check_range(keep, phi.n, "project")
    out = dedupe(frozenset(l for l in t if abs(l) in keep) for t in phi.terms)
    return Dnf(phi.n, tuple(Term(tuple(t)) for t in out))


def dnf_entails_cnf(phi: Dnf, psi: Cnf) -> bool:
    """M(phi) ⊆ M(psi), decided termwise: each term must hit each clause."""
    clauses = [frozenset(c.literals) for c in psi.clauses if not c.tautological]
    for t in phi.terms:
        lits = frozenset(t.literals)
        if any(lits.isdisjoint(c) for c in clauses):
            return False
    return True
