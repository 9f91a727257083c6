"""Max-min fuzzy relations, fuzzy relation equations and learning assessment."""
from ._kernels import BACKEND
from .assessment import (
    GradeDistribution,
    GradeScale,
    LearnerProfile,
    ProfileReport,
    StageScale,
    distribution_to_fuzzy_set,
    inverse_assessment,
    learner_profile,
    profile_report,
)
from .errors import (
    DegreeError,
    EnumerationLimitError,
    FuzzyRelError,
    LabelError,
    LabelMismatchError,
    ParseError,
    ShapeError,
)
from .relation import (
    FuzzyRelation,
    FuzzySet,
    LabelSet,
    compose_maxmin,
    fuzzyset_as_row,
    identity_relation,
    new_relation,
    relation_leq,
    row_as_fuzzyset,
)
from .solver import (
    Containment,
    FreProblem,
    SolutionSet,
    SolvabilityVerdict,
    check_solvable,
    greatest_solution,
    is_solution,
    minimal_solutions,
    solution_set_contains,
    solve,
)

__version__ = "0.1.0"
