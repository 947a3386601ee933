"""Hypothesis strategies for formulas over small variable counts."""

from hypothesis import strategies as st

from abduction.affine import AffineSystem, EquationDisjunction, LinearEquation
from abduction.formula import Clause, Cnf, Dnf, PartialAssignment

KINDS = ("any", "horn", "reverse-horn", "positive", "negative", "2dnf")


@st.composite
def literal_sets(draw, n, kind="any", max_width=4):
    width = 2 if kind == "2dnf" else max_width
    vs = draw(st.lists(st.integers(1, n), unique=True, max_size=min(width, n)))
    if kind == "positive":
        return vs
    if kind == "negative":
        return [-v for v in vs]
    if kind in ("horn", "reverse-horn"):
        base = -1 if kind == "horn" else 1
        lits = [base * v for v in vs]
        if lits:
            odd = draw(st.none() | st.integers(0, len(lits) - 1))
            if odd is not None:
                lits[odd] = -lits[odd]
        return lits
    return [v * draw(st.sampled_from((1, -1))) for v in vs]


@st.composite
def dnfs(draw, n=None, kind="any", max_n=8, max_terms=6, max_width=4):
    if n is None:
        n = draw(st.integers(1, max_n))
    terms = draw(st.lists(literal_sets(n, kind, max_width), max_size=max_terms))
    return Dnf.of(n, terms)


@st.composite
def cnfs(draw, n=None, kind="any", max_n=8, max_clauses=5, max_width=4):
    if n is None:
        n = draw(st.integers(1, max_n))
    clauses = draw(st.lists(literal_sets(n, kind, max_width), max_size=max_clauses))
    return Cnf(n, tuple(Clause(tuple(c)) for c in clauses))


@st.composite
def equations(draw, n, max_width=4):
    vs = draw(st.lists(st.integers(1, n), unique=True, max_size=min(max_width, n)))
    return LinearEquation(tuple(vs), draw(st.integers(0, 1)))


@st.composite
def affine_systems(draw, n=None, max_n=8, max_rows=8):
    if n is None:
        n = draw(st.integers(1, max_n))
    rows = draw(st.lists(equations(n), max_size=max_rows))
    return AffineSystem(n, tuple(rows))


@st.composite
def eq_disjunctions(draw, n=None, max_n=8, max_eqs=4):
    if n is None:
        n = draw(st.integers(1, max_n))
    return EquationDisjunction(n, tuple(draw(st.lists(equations(n), max_size=max_eqs))))


@st.composite
def subsets(draw, n):
    return frozenset(draw(st.lists(st.integers(1, n), unique=True, max_size=n))) if n else frozenset()


@st.composite
def partial_assignments(draw, n, max_size=None):
    vs = draw(st.lists(st.integers(1, n), unique=True, max_size=max_size or n))
    return PartialAssignment(tuple(v * draw(st.sampled_from((1, -1))) for v in vs))
