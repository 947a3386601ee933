"""XOR constraint systems over GF(2).

A row is packed into one Python int: bit ``v`` holds the coefficient of x_v
and bit 0 holds the right-hand side, so adding two equations is a single
``^``. Elimination keeps rows in reduced row-echelon form; since that form is
unique for a given column order, incremental and batch elimination agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .formula import Assignment, Clause, PartialAssignment


@dataclass(frozen=True)
class LinearEquation:
    """``x_{v1} ⊕ ... ⊕ x_{vk} = rhs``; with no variables it is 0=rhs."""

    variables: tuple[int, ...] = ()
    rhs: int = 0

    def __post_init__(self):
        vs = tuple(self.variables)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate variable in equation {vs}")
        if any(v < 1 for v in vs):
            raise ValueError(f"invalid variable in equation {vs}")
        if self.rhs not in (0, 1):
            raise ValueError("rhs must be 0 or 1")
        object.__setattr__(self, "variables", tuple(sorted(vs)))

    @classmethod
    def from_row(cls, row: int) -> "LinearEquation":
        vs = []
        body = row >> 1
        v = 1
        while body:
            if body & 1:
                vs.append(v)
            body >>= 1
            v += 1
        return cls(tuple(vs), row & 1)

    @property
    def row(self) -> int:
        r = self.rhs
        for v in self.variables:
            r |= 1 << v
        return r

    @property
    def is_contradiction(self) -> bool:
        return not self.variables and self.rhs == 1

    def flipped(self) -> "LinearEquation":
        return LinearEquation(self.variables, 1 - self.rhs)

    def satisfied_by(self, m: Assignment) -> bool:
        return sum(m[v] for v in self.variables) % 2 == self.rhs

    def __str__(self) -> str:
        lhs = " ".join(str(v) for v in self.variables)
        return f"{lhs} = {self.rhs}" if lhs else f"= {self.rhs}"


def _check(n: int, eqs: Iterable[LinearEquation]) -> None:
    for e in eqs:
        if e.variables and e.variables[-1] > n:
            raise ValueError(f"equation {e} mentions a variable above n={n}")


@dataclass(frozen=True)
class AffineSystem:
    """Conjunction of linear equations; no rows means ``true``."""

    n: int
    rows: tuple[LinearEquation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        _check(self.n, self.rows)

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(v for e in self.rows for v in e.variables)

    def evaluate(self, m: Assignment) -> bool:
        return all(e.satisfied_by(m) for e in self.rows)


@dataclass(frozen=True)
class EquationDisjunction:
    """Disjunction of linear equations; no equations means ``false``."""

    n: int
    eqs: tuple[LinearEquation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "eqs", tuple(self.eqs))
        _check(self.n, self.eqs)

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(v for e in self.eqs for v in e.variables)

    def evaluate(self, m: Assignment) -> bool:
        return any(e.satisfied_by(m) for e in self.eqs)


class Echelon:
    """Rows in reduced row-echelon form under a fixed column order.

    ``order`` lists the variables from leftmost to rightmost; the pivot of a
    row is its leftmost variable. Rows are stored permuted so that column
    rank ``r`` lives at bit ``r + 1``, which makes the leftmost variable the
    lowest set bit.
    """

    def __init__(self, n: int, order: Sequence[int] | None = None):
        self.n = n
        self.order = list(order) if order is not None else list(range(1, n + 1))
        if sorted(self.order) != list(range(1, n + 1)):
            raise ValueError("order must be a permutation of 1..n")
        self._identity = order is None or self.order == list(range(1, n + 1))
        self._rank = {v: r for r, v in enumerate(self.order)}
        self.pivots: dict[int, int] = {}  # pivot bit -> row
        self._pivot_mask = 0
        self.consistent = True

    def copy(self) -> "Echelon":
        e = Echelon.__new__(Echelon)
        e.n, e.order, e._identity, e._rank = self.n, self.order, self._identity, self._rank
        e.pivots = dict(self.pivots)
        e._pivot_mask = self._pivot_mask
        e.consistent = self.consistent
        return e

    def _to_internal(self, row: int) -> int:
        if self._identity:
            return row
        out = row & 1
        body = row >> 1
        v = 1
        while body:
            if body & 1:
                out |= 1 << (self._rank[v] + 1)
            body >>= 1
            v += 1
        return out

    def _to_external(self, row: int) -> int:
        if self._identity:
            return row
        out = row & 1
        body = row >> 1
        r = 0
        while body:
            if body & 1:
                out |= 1 << self.order[r]
            body >>= 1
            r += 1
        return out

    def reduce(self, row: int) -> int:
        """Reduce an internal-layout row against the current pivots."""
        hit = row & self._pivot_mask
        while hit:
            b = hit & -hit
            row ^= self.pivots[b]
            hit = row & self._pivot_mask
        return row

    def add(self, row: int) -> bool:
        """Insert one equation (external layout); returns the new consistency."""
        if not self.consistent:
            return False
        row = self.reduce(self._to_internal(row))
        body = row & ~1
        if not body:
            if row & 1:
                self.consistent = False
            return self.consistent
        b = body & -body
        for p, other in self.pivots.items():
            if other & b:
                self.pivots[p] = other ^ row
        self.pivots[b] = row
        self._pivot_mask |= b
        return True

    def add_all(self, rows: Iterable[int]) -> bool:
        for r in rows:
            if not self.add(r):
                return False
        return True

    def rows(self) -> list[int]:
        """External-layout rows ordered by pivot position."""
        return [self._to_external(self.pivots[b]) for b in sorted(self.pivots)]

    def model(self) -> Assignment | None:
        """Pivot variables take their row's rhs; every free variable is 0."""
        if not self.consistent:
            return None
        bits = [0] * self.n
        for b, row in self.pivots.items():
            v = self.order[b.bit_length() - 2]
            bits[v - 1] = row & 1
        return Assignment(tuple(bits))


def _rows(S: AffineSystem) -> list[int]:
    return [e.row for e in S.rows]


def gauss_triangulate(S: AffineSystem, order: Sequence[int] | None = None) -> AffineSystem | None:
    """Reduced echelon form of ``S`` under ``order``, or None if it derives 0=1."""
    ech = Echelon(S.n, order)
    if not ech.add_all(_rows(S)):
        return None
    return AffineSystem(S.n, tuple(LinearEquation.from_row(r) for r in ech.rows()))


def affine_sat(S: AffineSystem) -> Assignment | None:
    ech = Echelon(S.n)
    ech.add_all(_rows(S))
    return ech.model()


CONTRADICTION = LinearEquation((), 1)


def projection_order(n: int, A: Iterable[int]) -> list[int]:
    a = set(A)
    return [v for v in range(1, n + 1) if v not in a] + sorted(a)


def project_affine(S: AffineSystem, A: Iterable[int]) -> AffineSystem:
    """Forget the variables outside ``A``.

    Eliminate with the variables of A rightmost; rows whose pivot lies in A
    then mention A only, and they alone constrain the projection. An
    inconsistent system projects to the single row 0=1.
    """
    A = frozenset(A)
    if any(v < 1 or v > S.n for v in A):
        raise ValueError("abducibles out of range")
    ech = Echelon(S.n, projection_order(S.n, A))
    if not ech.add_all(_rows(S)):
        return AffineSystem(S.n, (CONTRADICTION,))
    mask_a = 1
    for v in A:
        mask_a |= 1 << v
    kept = [r for r in ech.rows() if r & ~mask_a == 0]
    return AffineSystem(S.n, tuple(LinearEquation.from_row(r) for r in kept))


def negate_eqdisj(q: EquationDisjunction) -> AffineSystem:
    return AffineSystem(q.n, tuple(e.flipped() for e in q.eqs))


def complement_affine(S: AffineSystem) -> EquationDisjunction:
    return EquationDisjunction(S.n, tuple(e.flipped() for e in S.rows))


def clause_to_eqdisj(c: Clause, n: int) -> EquationDisjunction:
    return EquationDisjunction(
        n, tuple(LinearEquation((abs(l),), 1 if l > 0 else 0) for l in c.literals)
    )


def unit_rows(p: PartialAssignment | Iterable[int]) -> list[int]:
    """Rows ``x_v = b`` for each literal of a partial assignment."""
    return [(1 << abs(l)) | (1 if l > 0 else 0) for l in p]
