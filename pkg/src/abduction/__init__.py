"""Subset-minimal propositional abduction through projection (variable forgetting)."""

from .affine import (
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
from .dnf import (
    DnfClass,
    Flag,
    GuardedDnf,
    Renaming,
    UnsupportedClass,
    apply_renaming,
    classify,
    find_falsifying_assignment,
    find_horn_renaming,
    is_tautology,
    is_tautology_guarded,
)
from .engine import (
    AbductionProblem,
    Best,
    InvalidProblem,
    NoExplanation,
    SolveOutcome,
    Unsupported,
    enumerate_full,
    find_full_explanation,
    is_explanation,
    is_necessary,
    minimize,
    solve,
)
from .formula import (
    Assignment,
    Clause,
    Cnf,
    Dnf,
    Hypothesis,
    PartialAssignment,
    Term,
    condition_dnf,
    dnf_entails_cnf,
    project_dnf,
    select,
)

__version__ = "0.1.0"
