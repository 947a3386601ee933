"""Line-oriented problem files and deterministic result text.

::

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

``#`` starts a comment. Term and clause lines are signed integers; a
trailing ``0`` is accepted DIMACS-style and a lone ``0`` is the empty
term or clause. Equations are ``v v ... = b``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

from .affine import AffineSystem, EquationDisjunction, LinearEquation
from .engine import (
    AbductionProblem,
    Best,
    InvalidProblem,
    NoExplanation,
    SolveOutcome,
    Unsupported,
    validate,
)
from .formula import Clause, Cnf, Dnf, PartialAssignment, Term, is_consistent

log = logging.getLogger(__name__)

KB_KINDS = ("dnf", "affine")
QUERY_KINDS = ("clause", "term", "cnf", "eqdisj")


class ParseError(ValueError):
    def __init__(self, line: int | None, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ValidationError(ValueError):
    """Well-formed file describing an invalid abduction problem."""


@dataclass
class ProblemFile:
    problem: AbductionProblem
    locations: dict[str, int] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None
    if vals and vals[-1] == 0:
        vals = vals[:-1]
    if any(v == 0 for v in vals):
        raise ParseError(lineno, "0 may only end a line")
    return vals


def _equation(tokens: list[str], lineno: int) -> LinearEquation:
    if tokens.count("=") != 1 or len(tokens) < 2 or tokens[-2] != "=":
        raise ParseError(lineno, "equation must read 'v v ... = b'")
    try:
        vs = [int(t) for t in tokens[:-2]]
        rhs = int(tokens[-1])
    except ValueError:
        raise ParseError(lineno, f"malformed equation {' '.join(tokens)!r}") from None
    if rhs not in (0, 1):
        raise ParseError(lineno, "equation right-hand side must be 0 or 1")
    if any(v < 1 for v in vs):
        raise ParseError(lineno, "equation variables must be positive")
    if len(set(vs)) != len(vs):
        raise ParseError(lineno, "repeated variable in equation")
    return LinearEquation(tuple(vs), rhs)


def parse_problem(text: str) -> ProblemFile:
    lines = []
    for i, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            lines.append((i, tokens))

    locations: dict[str, int] = {}
    warnings: list[str] = []
    n = None
    abducibles: list[int] = []
    kb_kind = query_kind = None
    kb_body: list[tuple[int, list[str]]] = []
    query_body: list[tuple[int, list[str]]] = []

    it = iter(lines)
    first = next(it, None)
    if first is None or first[1] != ["problem"]:
        raise ParseError(first[0] if first else None, "file must start with 'problem'")
    locations["problem"] = first[0]

    for lineno, tokens in it:
        key = tokens[0]
        if key in locations:
            raise ParseError(lineno, f"duplicate section {key!r}")
        locations[key] = lineno
        if key == "vars":
            if len(tokens) != 2:
                raise ParseError(lineno, "expected 'vars <n>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(lineno, f"bad variable count {tokens[1]!r}") from None
            if n < 0:
                raise ParseError(lineno, "variable count must be nonnegative")
        elif key == "abducibles":
            try:
                abducibles = [int(t) for t in tokens[1:]]
            except ValueError:
                raise ParseError(lineno, "abducibles must be integers") from None
            if any(v < 1 for v in abducibles):
                raise ParseError(lineno, "abducibles must be positive variable indices")
            if len(set(abducibles)) != len(abducibles):
                raise ParseError(lineno, "repeated abducible")
        elif key in ("kb", "query"):
            kinds = KB_KINDS if key == "kb" else QUERY_KINDS
            if len(tokens) != 2 or tokens[1] not in kinds:
                raise ParseError(lineno, f"expected '{key} {'|'.join(kinds)}'")
            body = kb_body if key == "kb" else query_body
            for blineno, btokens in it:
                if btokens == ["end"]:
                    break
                body.append((blineno, btokens))
            else:
                raise ParseError(lineno, f"{key} section is missing 'end'")
            if key == "kb":
                kb_kind = tokens[1]
            else:
                query_kind = tokens[1]
        else:
            raise ParseError(lineno, f"unknown section {key!r}")

    for required in ("vars", "kb", "query"):
        if required not in locations:
            raise ParseError(None, f"missing '{required}' section")
    if "abducibles" not in locations:
        raise ParseError(None, "missing 'abducibles' section")

    def in_range(vs: Iterable[int], lineno: int) -> None:
        for v in vs:
            if abs(v) > n:
                raise ParseError(lineno, f"variable {abs(v)} out of range 1..{n}")

    if kb_kind == "dnf":
        terms = []
        for lineno, tokens in kb_body:
            lits = _ints(tokens, lineno)
            in_range(lits, lineno)
            if not is_consistent(lits):
                msg = f"line {lineno}: dropping inconsistent term {' '.join(map(str, lits))}"
                log.warning(msg)
                warnings.append(msg)
                continue
            terms.append(Term(tuple(lits)))
        kb = Dnf(n, tuple(terms))
    else:
        rows = []
        for lineno, tokens in kb_body:
            eq = _equation(tokens, lineno)
            in_range(eq.variables, lineno)
            rows.append(eq)
        kb = AffineSystem(n, tuple(rows))

    if query_kind in ("clause", "term"):
        if len(query_body) > 1:
            raise ParseError(query_body[1][0], f"{query_kind} query takes a single line")
        lits = _ints(query_body[0][1], query_body[0][0]) if query_body else []
        lineno = query_body[0][0] if query_body else locations["query"]
        in_range(lits, lineno)
        if query_kind == "clause":
            query = Clause(tuple(lits))
        else:
            if not is_consistent(lits):
                raise ValidationError(f"line {lineno}: query term is inconsistent (unsatisfiable)")
            query = Term(tuple(lits))
    elif query_kind == "cnf":
        clauses = []
        for lineno, tokens in query_body:
            lits = _ints(tokens, lineno)
            in_range(lits, lineno)
            clauses.append(Clause(tuple(lits)))
        query = Cnf(n, tuple(clauses))
    else:
        eqs = []
        for lineno, tokens in query_body:
            eq = _equation(tokens, lineno)
            in_range(eq.variables, lineno)
            eqs.append(eq)
        query = EquationDisjunction(n, tuple(eqs))

    problem = AbductionProblem(n, kb, query, frozenset(abducibles))
    try:
        validate(problem)
    except InvalidProblem as exc:
        raise ValidationError(str(exc)) from None
    return ProblemFile(problem, locations, warnings)


def _lits_line(lits: Iterable[int]) -> str:
    lits = list(lits)
    return " ".join(str(l) for l in lits) if lits else "0"


def serialize_problem(problem: AbductionProblem) -> str:
    out = ["problem", f"vars {problem.n}"]
    out.append(" ".join(["abducibles"] + [str(v) for v in sorted(problem.abducibles)]))
    kb = problem.kb
    if isinstance(kb, Dnf):
        out.append("kb dnf")
        out.extend(_lits_line(t.literals) for t in kb.terms)
    else:
        out.append("kb affine")
        out.extend(str(e) for e in kb.rows)
    out.append("end")
    q = problem.query
    if isinstance(q, Clause):
        out += ["query clause", _lits_line(q.literals)]
    elif isinstance(q, Term):
        out += ["query term", _lits_line(q.literals)]
    elif isinstance(q, Cnf):
        out.append("query cnf")
        out.extend(_lits_line(c.literals) for c in q.clauses)
    else:
        out.append("query eqdisj")
        out.extend(str(e) for e in q.eqs)
    out.append("end")
    return "\n".join(out) + "\n"


def format_hypothesis(E: PartialAssignment) -> str:
    return " ".join(str(l) for l in E.literals)


def parse_hypothesis(text: str) -> PartialAssignment:
    try:
        lits = [int(t) for t in text.split()]
    except ValueError:
        raise ParseError(None, f"hypothesis must be signed integers, got {text!r}") from None
    if lits and lits[-1] == 0:
        lits = lits[:-1]
    try:
        return PartialAssignment(tuple(lits))
    except ValueError as exc:
        raise ParseError(None, str(exc)) from None


def outcome_status(outcome: SolveOutcome) -> str:
    if isinstance(outcome, Best):
        return "BEST"
    if isinstance(outcome, NoExplanation):
        return "NO EXPLANATION"
    return "UNSUPPORTED"


def serialize_outcome(outcome: SolveOutcome) -> str:
    """The hypothesis line for Best, otherwise the status line itself."""
    if isinstance(outcome, Best):
        return format_hypothesis(outcome.hypothesis)
    if isinstance(outcome, NoExplanation):
        return "NO EXPLANATION"
    if isinstance(outcome, Unsupported):
        return f"UNSUPPORTED: {outcome.reason}"
    raise TypeError(type(outcome).__name__)
