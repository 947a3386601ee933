import pytest
from hypothesis import given
from hypothesis import strategies as st

from abduction.affine import AffineSystem, EquationDisjunction, LinearEquation
from abduction.dnf import UnsupportedClass, apply_renaming, find_horn_renaming
from abduction.engine import (
    AbductionProblem,
    Best,
    InvalidProblem,
    NoExplanation,
    Unsupported,
    enumerate_full,
    find_full_explanation,
    is_explanation,
    is_necessary,
    minimize,
    solve,
    validate,
)
from abduction.formula import Clause, Cnf, Dnf, Hypothesis, Term
from abduction.generate import SUPPORTED_PAIRS, random_small_problem
from abduction.oracle import (
    all_hypotheses,
    oracle_best_explanations,
    oracle_explanations,
    oracle_full_explanations,
    oracle_necessity,
)

P, Q, R = 1, 2, 3
SIGMA = Dnf.of(3, [[-P], [Q]])  # p -> q
XOR_KB = AffineSystem(4, (LinearEquation((1, 3), 1), LinearEquation((1, 2, 4), 0)))


def intro(A, n=3):
    return AbductionProblem(n, Dnf.of(n, [[-P], [Q]]), Clause((Q,)), frozenset(A))


def H(*lits):
    return Hypothesis(lits)


def test_is_explanation_examples():
    assert is_explanation(intro({P}), H(P))
    assert not is_explanation(intro({P}), H())
    # Σ ∧ E unsatisfiable
    prob = AbductionProblem(2, Dnf.of(2, [[P, Q]]), Clause((Q,)), frozenset({P}))
    assert not is_explanation(prob, H(-P))


def test_is_explanation_rejects_non_abducibles():
    with pytest.raises(ValueError):
        is_explanation(intro({P}), H(Q))


def test_full_explanation_examples():
    prob = AbductionProblem(4, XOR_KB, EquationDisjunction(4, (LinearEquation((3,), 0),)), {1})
    assert find_full_explanation(prob) == H(1)
    assert find_full_explanation(intro({P}, n=2)) == H(P)
    prob = AbductionProblem(4, XOR_KB, EquationDisjunction(4, (LinearEquation((2,), 1),)), {1, 3})
    assert find_full_explanation(prob) is None


def test_minimize_examples():
    prob = intro({P, R})
    assert minimize(prob, H(P, R)) == H(P)
    assert minimize(prob, H(P)) == H(P)
    entailed = AbductionProblem(2, Dnf.of(2, [[Q]]), Clause((Q,)), frozenset({P}))
    assert minimize(entailed, H(-P)) == H()


def test_minimize_requires_explanation():
    with pytest.raises(ValueError):
        minimize(intro({P, R}), H(-P))


def test_solve_examples():
    assert solve(intro({P}, n=2)) == Best(H(P))
    prob = AbductionProblem(4, XOR_KB, EquationDisjunction(4, (LinearEquation((2,), 1),)), {1, 3})
    assert solve(prob) == NoExplanation()
    mixed = Dnf.of(3, [[1, -2, 3], [-1, 2, 3], [1, 2, -3]])
    query = Cnf(3, (Clause((1, -2)), Clause((-1, 3))))
    assert isinstance(solve(AbductionProblem(3, mixed, query, {1, 2})), Unsupported)


def test_solve_entailed_query_gives_empty_best():
    prob = AbductionProblem(2, Dnf.of(2, [[Q]]), Clause((Q,)), frozenset({P}))
    assert solve(prob) == Best(H())


def test_solve_with_no_abducibles():
    assert solve(intro(set())) == NoExplanation()
    prob = AbductionProblem(2, Dnf.of(2, [[Q]]), Clause((Q,)), frozenset())
    assert solve(prob) == Best(H())
    assert enumerate_full(prob) == [H()]


def test_enumerate_full_examples():
    prob = intro({P, Q}, n=2)
    assert enumerate_full(prob) == [H(-P, Q), H(P, Q)]
    assert enumerate_full(prob, limit=1) == [H(-P, Q)]
    assert enumerate_full(prob, limit=0) == []
    none = AbductionProblem(4, XOR_KB, EquationDisjunction(4, (LinearEquation((2,), 1),)), {1, 3})
    assert enumerate_full(none) == []


def test_is_necessary_examples():
    prob = intro({P, R})
    assert is_necessary(prob, P)
    assert not is_necessary(prob, R)
    entailed = AbductionProblem(2, Dnf.of(2, [[Q]]), Clause((Q,)), frozenset({P}))
    assert not is_necessary(entailed, P)
    with pytest.raises(ValueError):
        is_necessary(prob, Q)


@pytest.mark.parametrize(
    "problem",
    [
        AbductionProblem(2, Dnf.of(2, [[1]]), Clause((1,)), frozenset({3})),
        AbductionProblem(2, Dnf.of(2, [[1]]), Clause((5,)), frozenset({1})),
        AbductionProblem(2, Dnf(2, ()), Clause((1,)), frozenset({1})),
        AbductionProblem(2, AffineSystem(2, (LinearEquation((1,), 1), LinearEquation((1,), 0))), Clause((1,)), {2}),
        AbductionProblem(2, Dnf.of(2, [[1]]), Clause(()), frozenset({1})),
        AbductionProblem(3, Dnf.of(2, [[1]]), Clause((1,)), frozenset({1})),
    ],
    ids=["abducible-range", "query-range", "empty-kb", "inconsistent-affine", "empty-clause", "n-mismatch"],
)
def test_invalid_problems(problem):
    with pytest.raises(InvalidProblem):
        validate(problem)
    with pytest.raises(InvalidProblem):
        solve(problem)


def test_affine_term_query_with_several_literals_is_unsupported():
    prob = AbductionProblem(3, AffineSystem(3, ()), Term((1, 2)), {3})
    assert isinstance(solve(prob), Unsupported)
    with pytest.raises(UnsupportedClass):
        enumerate_full(prob)


def test_affine_accepts_clause_and_literal_queries():
    prob = AbductionProblem(4, XOR_KB, Clause((-3,)), {1})
    assert solve(prob) == Best(H(1))
    prob = AbductionProblem(4, XOR_KB, Term((-3,)), {1})
    assert solve(prob) == Best(H(1))


def test_solve_is_deterministic():
    for pair in SUPPORTED_PAIRS:
        for seed in range(5):
            prob = random_small_problem(*pair, seed)
            assert solve(prob) == solve(prob)


# -- oracle agreement on random supported instances ---------------------------

cases = st.tuples(st.sampled_from(SUPPORTED_PAIRS), st.integers(0, 10**6))


@given(cases)
def test_solve_agrees_with_oracle(case):
    (kb, q), seed = case
    prob = random_small_problem(kb, q, seed, max_n=8)
    out = solve(prob)
    best = oracle_best_explanations(prob)
    if best:
        assert isinstance(out, Best)
        assert out.hypothesis in best
        assert is_explanation(prob, out.hypothesis)
    else:
        assert out == NoExplanation()


@given(cases)
def test_enumerate_full_agrees_with_oracle(case):
    (kb, q), seed = case
    prob = random_small_problem(kb, q, seed, max_n=8)
    found = enumerate_full(prob)
    assert set(found) == oracle_full_explanations(prob)
    assert found == sorted(found, key=lambda h: h.sort_key())
    k = len(found) // 2
    assert enumerate_full(prob, limit=k) == found[:k]


@given(cases)
def test_is_explanation_agrees_with_oracle(case):
    (kb, q), seed = case
    prob = random_small_problem(kb, q, seed, max_n=7, max_abducibles=4)
    expl = oracle_explanations(prob)
    for E in all_hypotheses(prob.abducibles):
        assert is_explanation(prob, E) == (E in expl)


@given(cases)
def test_minimize_output_is_best(case):
    (kb, q), seed = case
    prob = random_small_problem(kb, q, seed, max_n=8)
    full = enumerate_full(prob)
    best = oracle_best_explanations(prob)
    for F in full:
        E = minimize(prob, F)
        assert E in best
        assert set(E.literals) <= set(F.literals)


@given(cases)
def test_is_necessary_agrees_with_oracle(case):
    (kb, q), seed = case
    prob = random_small_problem(kb, q, seed, max_n=8)
    if not oracle_best_explanations(prob):
        return
    for x in sorted(prob.abducibles):
        assert is_necessary(prob, x) == oracle_necessity(prob, x)


@given(st.integers(0, 10**6))
def test_renaming_transport(seed):
    prob = random_small_problem("horn-renamable", "clause", seed, max_n=8)
    rho = find_horn_renaming(prob.kb)
    renamed = AbductionProblem(prob.n, apply_renaming(rho, prob.kb), apply_renaming(rho, prob.query), prob.abducibles)
    out = solve(renamed)
    if isinstance(out, Best):
        assert is_explanation(prob, apply_renaming(rho, out.hypothesis))
    else:
        assert out == NoExplanation() == solve(prob)
