import random
import time

from hypothesis import given
from hypothesis import strategies as st

from abduction.affine import (
    AffineSystem,
    EquationDisjunction,
    LinearEquation,
    affine_sat,
    clause_to_eqdisj,
    complement_affine,
    gauss_triangulate,
    negate_eqdisj,
    project_affine,
)
from abduction.formula import Assignment, Clause
from abduction.oracle import models, project_models

from strategies import affine_systems, eq_disjunctions, literal_sets, subsets

E = LinearEquation
# the affine formula used as the running example: x1⊕x3=1 ∧ x1⊕x2⊕x4=0
EXAMPLE = AffineSystem(4, (E((1, 3), 1), E((1, 2, 4), 0)))


def test_equation_rows_round_trip():
    e = E((4, 1, 2), 1)
    assert e.variables == (1, 2, 4)
    assert E.from_row(e.row) == e
    assert str(e) == "1 2 4 = 1"
    assert str(E((), 0)) == "= 0"


def test_triangulate_examples():
    assert gauss_triangulate(AffineSystem(1, (E((1,), 1), E((1,), 0)))) is None
    assert gauss_triangulate(AffineSystem(3, ())) == AffineSystem(3, ())


@given(affine_systems(max_n=8).flatmap(lambda S: st.tuples(st.just(S), st.permutations(range(1, S.n + 1)))))
def test_triangulate_preserves_models(case):
    S, order = case
    T = gauss_triangulate(S, order)
    if T is None:
        assert len(models(S)) == 0
        return
    assert models(T) == models(S)
    assert len(T.rows) <= min(len(S.rows), S.n)
    # echelon: leftmost variables under the order are distinct pivots
    rank = {v: i for i, v in enumerate(order)}
    pivots = [min(e.variables, key=rank.get) for e in T.rows]
    assert len(set(pivots)) == len(pivots)
    for e in T.rows:
        assert all(p not in e.variables for p in pivots if p != min(e.variables, key=rank.get))


def test_affine_sat_examples():
    assert affine_sat(AffineSystem(2, (E((1, 2), 1),))) == Assignment.from_string("10")
    assert affine_sat(AffineSystem(1, (E((1,), 1), E((1,), 0)))) is None
    assert affine_sat(AffineSystem(3, ())) == Assignment.from_string("000")


@given(affine_systems(max_n=8))
def test_affine_sat_matches_truth_table(S):
    m = affine_sat(S)
    if m is None:
        assert len(models(S)) == 0
    else:
        assert S.evaluate(m)


def test_project_example_formula():
    P = project_affine(EXAMPLE, {1, 2, 4})
    assert P == AffineSystem(4, (E((1, 2, 4), 0),))
    assert models(P) == project_models(models(EXAMPLE), {1, 2, 4})


def test_project_identity_and_empty():
    assert models(project_affine(EXAMPLE, {1, 2, 3, 4})) == models(EXAMPLE)
    bad = AffineSystem(2, (E((1,), 1), E((1,), 0)))
    assert project_affine(bad, {2}) == AffineSystem(2, (E((), 1),))


@given(affine_systems(max_n=9).flatmap(lambda S: st.tuples(st.just(S), subsets(S.n))))
def test_project_affine_matches_definition(case):
    S, A = case
    P = project_affine(S, A)
    assert models(P) == project_models(models(S), A)
    if len(models(S)):
        assert len(P.rows) <= min(len(S.rows), len(A))
        assert all(set(e.variables) <= A for e in P.rows)


def test_negation_examples():
    assert negate_eqdisj(EquationDisjunction(2, (E((2,), 1),))) == AffineSystem(2, (E((2,), 0),))
    q = EquationDisjunction(2, (E((1,), 1), E((2,), 0)))
    assert negate_eqdisj(q) == AffineSystem(2, (E((1,), 0), E((2,), 1)))
    assert complement_affine(AffineSystem(2, (E((1, 2), 0),))) == EquationDisjunction(2, (E((1, 2), 1),))
    assert complement_affine(AffineSystem(2, ())) == EquationDisjunction(2, ())


@given(eq_disjunctions(max_n=8))
def test_negate_is_model_complement(q):
    assert models(negate_eqdisj(q)) == models(q).complement()


@given(affine_systems(max_n=8))
def test_complement_involution(S):
    assert models(complement_affine(S)) == models(S).complement()
    assert models(negate_eqdisj(complement_affine(S))) == models(S)


def test_clause_embedding_examples():
    assert clause_to_eqdisj(Clause((1, -2)), 2) == EquationDisjunction(2, (E((1,), 1), E((2,), 0)))
    assert clause_to_eqdisj(Clause(()), 2) == EquationDisjunction(2, ())


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.just(n), literal_sets(n))))
def test_clause_embedding_models(case):
    n, lits = case
    c = Clause(tuple(lits))
    assert models(clause_to_eqdisj(c, n)) == models(c, n)


def test_elimination_cost_grows_polynomially():
    # smoke check of the k^2 n/w row-operation cost, not a proof
    def run(k, n):
        rng = random.Random(k * 7919 + n)
        rows = tuple(E(tuple(rng.sample(range(1, n + 1), n // 2)), rng.randint(0, 1)) for _ in range(k))
        t0 = time.perf_counter()
        gauss_triangulate(AffineSystem(n, rows))
        return time.perf_counter() - t0

    small = min(run(100, 400) for _ in range(3))
    large = min(run(200, 800) for _ in range(3))
    assert large / small < 20
