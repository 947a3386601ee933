import pytest
from hypothesis import given
from hypothesis import strategies as st

from abduction.affine import AffineSystem, EquationDisjunction, LinearEquation
from abduction.engine import Best, NoExplanation, Unsupported
from abduction.fileformat import (
    ParseError,
    ValidationError,
    format_hypothesis,
    outcome_status,
    parse_hypothesis,
    parse_problem,
    serialize_outcome,
    serialize_problem,
)
from abduction.formula import Clause, Cnf, Dnf, Hypothesis, Term
from abduction.generate import QUERY_CLASSES, InstanceConfig, random_problem

GRAMMAR = """\
problem
vars 4
abducibles 1 3
kb affine
1 3 = 1
1 2 4 = 0
end
query eqdisj
3 = 0
end
"""


def test_grammar_example(fixtures_dir):
    pf = parse_problem(GRAMMAR)
    prob = pf.problem
    assert prob.n == 4
    assert prob.kb == AffineSystem(4, (LinearEquation((1, 3), 1), LinearEquation((1, 2, 4), 0)))
    assert prob.query == EquationDisjunction(4, (LinearEquation((3,), 0),))
    assert prob.abducibles == {1, 3}
    assert pf.warnings == []
    assert parse_problem((fixtures_dir / "grammar.abd").read_text()).problem == prob


def test_abducible_out_of_range():
    with pytest.raises(ValidationError):
        parse_problem(GRAMMAR.replace("abducibles 1 3", "abducibles 9"))


def test_inconsistent_term_dropped_with_warning(caplog):
    text = "problem\nvars 2\nabducibles 1\nkb dnf\n1 -1\n2\nend\nquery clause\n2\nend\n"
    pf = parse_problem(text)
    assert pf.problem.kb == Dnf.of(2, [[2]])
    assert len(pf.warnings) == 1 and "line 5" in pf.warnings[0]
    assert "inconsistent" in caplog.text


def test_comments_zeros_and_empty_lines():
    text = """
    # leading comment
    problem
    vars 3
    abducibles
    kb dnf
    0          # the empty term
    1 -2 0
    end
    query cnf
    1 3 0
    end
    """
    prob = parse_problem(text).problem
    assert prob.kb == Dnf(3, (Term(()), Term((1, -2))))
    assert prob.query == Cnf(3, (Clause((1, 3)),))
    assert prob.abducibles == frozenset()


@pytest.mark.parametrize(
    "text, line",
    [
        ("vars 2\n", 1),
        ("problem\nvars x\n", 2),
        ("problem\nvars 2\nvars 3\n", 3),
        ("problem\nvars 2\nabducibles 1\nkb dnf\n1 2\n", 4),
        ("problem\nvars 2\nabducibles 1\nkb dnf\n1 0 2\nend\nquery clause\n1\nend\n", 5),
        ("problem\nvars 2\nabducibles 1\nkb dnf\n1 3\nend\nquery clause\n1\nend\n", 5),
        ("problem\nvars 2\nabducibles 1\nkb affine\n1 2 = 2\nend\nquery clause\n1\nend\n", 5),
        ("problem\nvars 2\nabducibles 1\nkb cnf\nend\n", 4),
        ("problem\nvars 2\nabducibles 1\nkb dnf\n1\nend\nquery clause\n1\n2\nend\n", 9),
        ("problem\nvars 2\nwhat 1\n", 3),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as err:
        parse_problem(text)
    assert err.value.line == line


def test_missing_sections():
    with pytest.raises(ParseError):
        parse_problem("problem\nvars 2\nkb dnf\n1\nend\nquery clause\n1\nend\n")
    with pytest.raises(ParseError):
        parse_problem("")


def test_inconsistent_query_term():
    text = "problem\nvars 2\nabducibles 1\nkb dnf\n1\nend\nquery term\n2 -2\nend\n"
    with pytest.raises(ValidationError):
        parse_problem(text)


@given(st.sampled_from(["affine", "horn", "reverse-horn", "2dnf", "positive", "negative"]), st.sampled_from(QUERY_CLASSES), st.integers(0, 10**6))
def test_round_trip(kb, q, seed):
    if kb == "affine" and q not in ("eqdisj", "clause", "literal"):
        q = "eqdisj"
    prob = random_problem(InstanceConfig(kb_class=kb, query_class=q, n=6, terms=5, seed=seed))
    text = serialize_problem(prob)
    again = parse_problem(text).problem
    assert again == prob
    assert serialize_problem(again) == text


def test_serialize_outcome_examples():
    assert serialize_outcome(Best(Hypothesis((1,)))) == "1"
    assert serialize_outcome(Best(Hypothesis(()))) == ""
    assert outcome_status(Best(Hypothesis(()))) == "BEST"
    assert serialize_outcome(NoExplanation()) == "NO EXPLANATION"
    assert serialize_outcome(Unsupported("why")) == "UNSUPPORTED: why"


def test_hypothesis_text():
    assert parse_hypothesis("3 -1") == Hypothesis((-1, 3))
    assert format_hypothesis(parse_hypothesis("3 -1 0")) == "-1 3"
    assert parse_hypothesis("") == Hypothesis(())
    with pytest.raises(ParseError):
        parse_hypothesis("1 -1")
    with pytest.raises(ParseError):
        parse_hypothesis("x")


def test_fixture_round_trip(fixtures_dir):
    files = sorted(fixtures_dir.glob("*.abd"))
    assert files
    for f in files:
        prob = parse_problem(f.read_text()).problem
        text = serialize_problem(prob)
        assert parse_problem(text).problem == prob
        assert serialize_problem(parse_problem(text).problem) == text
