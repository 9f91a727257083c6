"""Inverse max-min equations: find rows ``p`` with ``p @ q == r``.

When the solution set is non-empty it is a union of lattice intervals
``[minimal, greatest]`` sharing one top element. The top is the meet of
the min-residuum over the columns; the bottoms are found by choosing, for
every positive column, one row that attains the target degree.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .errors import EnumerationLimitError, FuzzyRelError, LabelMismatchError, ShapeError
from .relation import FuzzyRelation

DEFAULT_TOLERANCE = 1e-9
DEFAULT_CAP = (12, 12)

__all__ = [
    "DEFAULT_TOLERANCE",
    "DEFAULT_CAP",
    "FreProblem",
    "SolvabilityVerdict",
    "SolutionSet",
    "Containment",
    "is_solution",
    "greatest_solution",
    "check_solvable",
    "minimal_solutions",
    "solve",
    "solution_set_contains",
]


def _check_row_problem(q, r, p=None):
    if r.shape[0] != 1:
        raise ShapeError(f"right-hand side must be a single row, got {r.shape[0]} rows")
    if q.col_labels != r.col_labels:
        raise LabelMismatchError(
            f"columns of q {list(q.col_labels)} differ from columns of r {list(r.col_labels)}"
        )
    if p is not None:
        if p.shape[0] != 1:
            raise ShapeError(f"candidate must be a single row, got {p.shape[0]} rows")
        if p.col_labels != q.row_labels:
            raise LabelMismatchError(
                f"candidate labels {list(p.col_labels)} differ from rows of q {list(q.row_labels)}"
            )


@dataclass(frozen=True)
class FreProblem:
    """An instance of ``p @ q == r`` with ``q`` (m x s) and the row ``r`` (1 x s) known."""

    q: FuzzyRelation
    r: FuzzyRelation
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        if not self.tolerance >= 0:
            raise FuzzyRelError(f"tolerance must be non-negative, got {self.tolerance!r}")
        _check_row_problem(self.q, self.r)

    @property
    def variables(self):
        """Labels of the unknown row (the rows of ``q``)."""
        return self.q.row_labels

    @property
    def row_label(self):
        return self.r.row_labels[0]

    def as_row(self, values):
        return FuzzyRelation([self.row_label], self.variables, np.asarray(values)[None, :])


@dataclass(frozen=True)
class SolvabilityVerdict:
    solvable: bool
    violated_columns: tuple = ()
    residual_check_passed: bool = False


@dataclass(frozen=True)
class SolutionSet:
    """Greatest and minimal solutions; together they describe every solution."""

    solvable: bool
    greatest: Optional[FuzzyRelation] = None
    minimals: tuple = ()
    violated_columns: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "minimals", tuple(self.minimals))
        object.__setattr__(self, "violated_columns", tuple(self.violated_columns))
        if not self.solvable and (self.greatest is not None or self.minimals):
            raise FuzzyRelError("an unsolvable set carries no solutions")
        if self.solvable and self.greatest is None:
            raise FuzzyRelError("a solvable set needs its greatest solution")


@dataclass(frozen=True)
class Containment:
    """Outcome of :func:`solution_set_contains`; truthy iff ``p`` is a solution.

    ``below_greatest`` and ``above_minimal`` report where the solution sits
    in the characterization; both must hold for every solution.
    """

    is_solution: bool
    below_greatest: bool = False
    above_minimal: Optional[FuzzyRelation] = None

    @property
    def consistent(self):
        if not self.is_solution:
            return True
        return self.below_greatest and self.above_minimal is not None

    def __bool__(self):
        return self.is_solution


def is_solution(p: FuzzyRelation, q: FuzzyRelation, r: FuzzyRelation, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    """True iff ``|(p @ q)[k] - r[k]| <= tolerance`` for every column ``k``."""
    _check_row_problem(q, r, p)
    got = _kernels.maxmin(p.entries, q.entries)
    return bool(np.all(np.abs(got - r.entries) <= tolerance))


def _greatest_candidate(problem):
    r = problem.r.entries[0]
    return _kernels.residual_bound(problem.q.entries, r, problem.tolerance)


def _residual_ok(problem, rows):
    got = _kernels.maxmin(np.atleast_2d(rows), problem.q.entries)
    return np.all(np.abs(got - problem.r.entries[0]) <= problem.tolerance, axis=1)


def greatest_solution(problem: FreProblem) -> Optional[FuzzyRelation]:
    """Componentwise-greatest solution, or None when there is no solution."""
    cand = _greatest_candidate(problem)
    if not _residual_ok(problem, cand)[0]:
        return None
    return problem.as_row(cand)


def check_solvable(problem: FreProblem) -> SolvabilityVerdict:
    q, r = problem.q.entries, problem.r.entries[0]
    colmax = q.max(axis=0)
    violated = tuple(
        lab for lab, hi, want in zip(problem.q.col_labels, colmax, r) if hi < want - problem.tolerance
    )
    passed = bool(_residual_ok(problem, _greatest_candidate(problem))[0])
    return SolvabilityVerdict(solvable=passed, violated_columns=violated, residual_check_passed=passed)


def _cover_search(witnesses, targets, m):
    """Distinct candidate rows reachable by assigning one witness row per column.

    A column already attained by the partial row is skipped rather than
    branched on; the skipped branch would reproduce the same row or a
    larger one, so no minimal candidate is lost.
    """
    found = set()
    order = sorted(range(len(targets)), key=lambda k: (len(witnesses[k]), -targets[k]))

    def walk(pos, row):
        if pos == len(order):
            found.add(tuple(row))
            return
        k = order[pos]
        if any(row[j] >= targets[k] for j in witnesses[k]):
            walk(pos + 1, row)
            return
        for j in witnesses[k]:
            old = row[j]
            row[j] = max(old, targets[k])
            walk(pos + 1, row)
            row[j] = old

    walk(0, [0.0] * m)
    return found


def _minimal_elements(rows):
    """Rows not strictly dominated by another row, sorted lexicographically."""
    rows = sorted(set(rows))
    if not rows:
        return []
    arr = np.array(rows, dtype=np.float64).reshape(len(rows), -1)
    keep = []
    for i, row in enumerate(arr):
        below = np.all(arr <= row, axis=1)
        below[i] = False
        if not below.any():
            keep.append(rows[i])
    return keep


def minimal_solutions(problem: FreProblem, cap=DEFAULT_CAP) -> list:
    """All minimal solutions, lexicographically sorted; empty when unsolvable.

    ``cap`` bounds the problem size (rows of q, columns of q); pass None to
    lift it. Exceeding it raises :class:`EnumerationLimitError`.
    """
    m, s = problem.q.shape
    if cap is not None and (m > cap[0] or s > cap[1]):
        raise EnumerationLimitError(
            f"problem is {m}x{s}, enumeration cap is {cap[0]}x{cap[1]}; raise the cap explicitly"
        )
    great = _greatest_candidate(problem)
    if not _residual_ok(problem, great)[0]:
        return []
    q, r, tol = problem.q.entries, problem.r.entries[0], problem.tolerance
    attained = np.abs(np.minimum(great[:, None], q) - r[None, :]) <= tol
    positive = [k for k in range(s) if r[k] > tol]
    witnesses = [tuple(int(j) for j in np.flatnonzero(attained[:, k])) for k in positive]
    targets = [float(r[k]) for k in positive]
    cands = _cover_search(witnesses, targets, m)
    if not cands:
        return []
    cands = sorted(cands)
    ok = _residual_ok(problem, np.array(cands))
    valid = [c for c, good in zip(cands, ok) if good]
    return [problem.as_row(row) for row in _minimal_elements(valid)]


def solve(problem: FreProblem, cap=DEFAULT_CAP) -> SolutionSet:
    verdict = check_solvable(problem)
    if not verdict.solvable:
        return SolutionSet(False, violated_columns=verdict.violated_columns)
    return SolutionSet(
        True,
        greatest=greatest_solution(problem),
        minimals=minimal_solutions(problem, cap),
        violated_columns=verdict.violated_columns,
    )


def solution_set_contains(
    solset: SolutionSet, p: FuzzyRelation, q: FuzzyRelation, r: FuzzyRelation, tolerance: float = DEFAULT_TOLERANCE
) -> Containment:
    if not is_solution(p, q, r, tolerance):
        return Containment(False)
    if not solset.solvable:
        # the set was built from other inputs or a stricter tolerance
        return Containment(True)
    # compare on values only; the unknown row may carry a different row label
    below = bool(np.all(p.entries <= solset.greatest.entries))
    under = next((mn for mn in solset.minimals if np.all(mn.entries <= p.entries)), None)
    return Containment(True, below, under)
