"""Class-level learning assessment with max-min relations.

A grade distribution becomes a fuzzy set on the grades (share of students
per grade). Composing it with a grade-to-stage relation gives a learner
profile over the learning stages; the inverse problem recovers the grade
sets compatible with a given profile.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import FuzzyRelError, LabelMismatchError
from .relation import FuzzyRelation, FuzzySet, LabelSet, compose_maxmin, fuzzyset_as_row
from .solver import DEFAULT_CAP, DEFAULT_TOLERANCE, FreProblem, SolutionSet, solve

GRADE_NAMES = {"A": "Excellent", "B": "Very Good", "C": "Good", "D": "Fair", "F": "Failed"}
STAGE_NAMES = {
    "R": "Representation",
    "I": "Interpretation",
    "G": "Generalization",
    "Ca": "Categorization",
}


@dataclass(frozen=True)
class Scale:
    """Ordered labels with optional human-readable names."""

    labels: LabelSet
    names: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.labels, LabelSet):
            object.__setattr__(self, "labels", LabelSet(self.labels))

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def name(self, label):
        return self.names.get(label, label)


class GradeScale(Scale):
    @classmethod
    def default(cls):
        return cls(LabelSet(GRADE_NAMES), dict(GRADE_NAMES))

    @classmethod
    def from_labels(cls, labels):
        return cls(LabelSet(labels), {k: v for k, v in GRADE_NAMES.items() if k in labels})


class StageScale(Scale):
    @classmethod
    def default(cls):
        return cls(LabelSet(STAGE_NAMES), dict(STAGE_NAMES))

    @classmethod
    def from_labels(cls, labels):
        return cls(LabelSet(labels), {k: v for k, v in STAGE_NAMES.items() if k in labels})


@dataclass(frozen=True)
class GradeDistribution:
    """Number of students per grade, aligned with the scale order."""

    scale: GradeScale
    counts: tuple

    def __post_init__(self):
        counts = tuple(self.counts)
        if len(counts) != len(self.scale):
            raise FuzzyRelError(f"{len(counts)} counts for a scale of {len(self.scale)} grades")
        for lab, c in zip(self.scale, counts):
            if isinstance(c, bool) or not isinstance(c, (int, np.integer)) or c < 0:
                raise FuzzyRelError(f"count for grade {lab!r} must be a non-negative integer, got {c!r}")
        counts = tuple(int(c) for c in counts)
        if sum(counts) < 1:
            raise FuzzyRelError("a grade distribution needs at least one student")
        object.__setattr__(self, "counts", counts)

    @property
    def total(self):
        return sum(self.counts)

    def items(self):
        return list(zip(self.scale, self.counts))


@dataclass(frozen=True)
class LearnerProfile:
    """Degree reached at each learning stage."""

    stages: StageScale
    degrees: tuple

    def __post_init__(self):
        if not isinstance(self.stages, StageScale):
            object.__setattr__(self, "stages", StageScale.from_labels(self.stages))
        fs = FuzzySet(self.stages.labels, self.degrees)
        object.__setattr__(self, "degrees", tuple(float(d) for d in fs.degrees))

    def as_fuzzy_set(self):
        return FuzzySet(self.stages.labels, self.degrees)

    def as_row(self, row_label="M"):
        return fuzzyset_as_row(self.as_fuzzy_set(), row_label)

    def __getitem__(self, stage):
        return self.degrees[self.stages.labels.index(stage)]


@dataclass(frozen=True)
class ProfileReport:
    profile: LearnerProfile
    stage_fractions: tuple
    # (from_stage, to_stage, ratio or None) for each pair of successive stages
    retention_ratios: tuple
    narrative: str

    def retention(self, src, dst):
        """Degree at ``dst`` relative to ``src``; None when ``src`` has degree 0."""
        base = self.profile[src]
        return self.profile[dst] / base if base > 0 else None

    def ratio(self, dst):
        """Ratio of ``dst`` to the stage right before it."""
        for _, to, value in self.retention_ratios:
            if to == dst:
                return value
        raise KeyError(dst)


def _round_half_up(frac, digits):
    scale = 10**digits
    return Fraction(int(frac * scale + Fraction(1, 2)), scale)


def distribution_to_fuzzy_set(dist: GradeDistribution, round_digits: Optional[int] = None) -> FuzzySet:
    """Share of students per grade, ``n_i / n``, optionally rounded half-up."""
    fracs = [Fraction(c, dist.total) for c in dist.counts]
    if round_digits is not None:
        if round_digits < 0:
            raise FuzzyRelError("round_digits must be non-negative")
        fracs = [_round_half_up(f, round_digits) for f in fracs]
    return FuzzySet(dist.scale.labels, [float(f) for f in fracs])


def learner_profile(m: FuzzySet, q: FuzzyRelation) -> LearnerProfile:
    if m.domain != q.row_labels:
        raise LabelMismatchError(
            f"grade labels {list(m.domain)} differ from the rows of q {list(q.row_labels)}"
        )
    r = compose_maxmin(fuzzyset_as_row(m), q)
    return LearnerProfile(StageScale.from_labels(q.col_labels.labels), r.row())


def inverse_assessment(
    q: FuzzyRelation, profile: LearnerProfile, tolerance: float = DEFAULT_TOLERANCE, cap=DEFAULT_CAP
) -> SolutionSet:
    """Grade fuzzy sets compatible with ``profile`` under ``q``."""
    if profile.stages.labels != q.col_labels:
        raise LabelMismatchError(
            f"profile stages {list(profile.stages)} differ from the columns of q {list(q.col_labels)}"
        )
    return solve(FreProblem(q, profile.as_row(), tolerance), cap)


def _fmt(x):
    return f"{x:.3f}".rstrip("0").rstrip(".") if x != int(x) else str(int(x))


def profile_report(profile: LearnerProfile) -> ProfileReport:
    stages = profile.stages
    ratios = []
    for prev, cur in zip(stages.labels, stages.labels[1:]):
        base = profile[prev]
        ratios.append((prev, cur, profile[cur] / base if base > 0 else None))

    lines = []
    for lab, deg in zip(stages, profile.degrees):
        lines.append(f"{stages.name(lab)} ({lab}): degree {_fmt(deg)}")
    for prev, cur, value in ratios:
        if value is None:
            lines.append(f"{prev} -> {cur}: no ratio, {stages.name(prev)} has degree 0")
        else:
            lines.append(f"{prev} -> {cur}: {value:.3f} of the {stages.name(prev)} level carried over")

    # retention from the last stage attaining the peak degree to the final stage
    degrees = profile.degrees
    peak = max(degrees)
    if len(degrees) > 1 and peak > 0:
        last_peak = max(i for i, d in enumerate(degrees) if d == peak)
        if last_peak < len(degrees) - 1:
            src, dst = stages.labels[last_peak], stages.labels[-1]
            kept = degrees[-1] / peak
            lines.append(
                f"{src} -> {dst}: {kept:.3f} of the peak level {_fmt(peak)} reaches "
                f"{stages.name(dst)}, a loss of {1 - kept:.3f}"
            )
    return ProfileReport(
        profile=profile,
        stage_fractions=tuple(degrees),
        retention_ratios=tuple(ratios),
        narrative="\n".join(lines),
    )
