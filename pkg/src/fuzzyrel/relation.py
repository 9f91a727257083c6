"""Labeled fuzzy sets and fuzzy binary relations under max-min composition.

Degrees are stored as read-only float64 arrays. Composition only ever
selects input values, so results compare exactly against hand-computed
matrices without any tolerance.
"""
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import DegreeError, LabelError, LabelMismatchError, ShapeError

__all__ = [
    "LabelSet",
    "FuzzySet",
    "FuzzyRelation",
    "new_relation",
    "compose_maxmin",
    "identity_relation",
    "relation_leq",
    "fuzzyset_as_row",
    "row_as_fuzzyset",
]


@dataclass(frozen=True)
class LabelSet:
    """Ordered, non-empty collection of distinct text labels."""

    labels: tuple

    def __post_init__(self):
        labels = self.labels
        if isinstance(labels, str):
            raise LabelError("label set must be a sequence of labels, not a single string")
        labels = tuple(labels)
        if not labels:
            raise LabelError("label set is empty")
        for lab in labels:
            if not isinstance(lab, str) or not lab:
                raise LabelError(f"labels must be non-empty strings, got {lab!r}")
        if len(set(labels)) != len(labels):
            dup = sorted({lab for lab in labels if labels.count(lab) > 1})
            raise LabelError(f"duplicate labels: {', '.join(dup)}")
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __getitem__(self, i):
        return self.labels[i]

    def __contains__(self, label):
        return label in self.labels

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise LabelError(f"unknown label {label!r}") from None

    def __repr__(self):
        return f"LabelSet({list(self.labels)!r})"


def _labelset(labels):
    return labels if isinstance(labels, LabelSet) else LabelSet(labels)


def _degrees(values, shape=None):
    try:
        arr = np.array(values, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise DegreeError(f"degrees must be numbers: {exc}") from None
    if shape is not None and arr.shape != shape:
        raise ShapeError(f"expected degrees of shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DegreeError("degrees must be finite")
    bad = np.argwhere((arr < 0.0) | (arr > 1.0))
    if bad.size:
        idx = tuple(int(i) for i in bad[0])
        raise DegreeError(f"degree {arr[idx]!r} at position {idx} is outside [0, 1]")
    arr.setflags(write=False)
    return arr


class FuzzySet:
    """A membership degree for each label of a finite domain."""

    __slots__ = ("domain", "degrees")

    def __init__(self, domain, degrees):
        domain = _labelset(domain)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "degrees", _degrees(degrees, (len(domain),)))

    def __setattr__(self, name, value):
        raise AttributeError("FuzzySet is immutable")

    def __getitem__(self, label):
        return float(self.degrees[self.domain.index(label)])

    def items(self):
        return [(lab, float(d)) for lab, d in zip(self.domain, self.degrees)]

    def __eq__(self, other):
        if not isinstance(other, FuzzySet):
            return NotImplemented
        return self.domain == other.domain and np.array_equal(self.degrees, other.degrees)

    def __hash__(self):
        return hash((self.domain, self.degrees.tobytes()))

    def __repr__(self):
        body = ", ".join(f"{lab}: {d:g}" for lab, d in self.items())
        return f"FuzzySet({{{body}}})"


class FuzzyRelation:
    """Membership matrix of a fuzzy binary relation between two label sets.

    ``entries[i, j]`` is the degree relating ``row_labels[i]`` to
    ``col_labels[j]``. Instances are immutable; ``P @ Q`` is the max-min
    composition.
    """

    __slots__ = ("row_labels", "col_labels", "entries")

    def __init__(self, row_labels, col_labels, entries):
        rows, cols = _labelset(row_labels), _labelset(col_labels)
        object.__setattr__(self, "row_labels", rows)
        object.__setattr__(self, "col_labels", cols)
        object.__setattr__(self, "entries", _degrees(entries, (len(rows), len(cols))))

    def __setattr__(self, name, value):
        raise AttributeError("FuzzyRelation is immutable")

    @property
    def shape(self):
        return self.entries.shape

    def degree(self, row, col):
        return float(self.entries[self.row_labels.index(row), self.col_labels.index(col)])

    def row(self, i=0):
        return tuple(float(v) for v in self.entries[i])

    def tolist(self):
        return self.entries.tolist()

    def __matmul__(self, other):
        if not isinstance(other, FuzzyRelation):
            return NotImplemented
        return compose_maxmin(self, other)

    def __eq__(self, other):
        if not isinstance(other, FuzzyRelation):
            return NotImplemented
        return (
            self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.row_labels, self.col_labels, self.entries.tobytes()))

    def __repr__(self):
        return (
            f"FuzzyRelation(rows={list(self.row_labels)!r}, "
            f"cols={list(self.col_labels)!r}, entries={self.tolist()!r})"
        )


def new_relation(rows: Iterable[str], cols: Iterable[str], entries: Sequence[Sequence[float]]) -> FuzzyRelation:
    """Build a validated relation. Out-of-range degrees raise, they are never clamped."""
    return FuzzyRelation(rows, cols, entries)


def compose_maxmin(p: FuzzyRelation, q: FuzzyRelation) -> FuzzyRelation:
    """Max-min composition: ``r[i, k] = max_j min(p[i, j], q[j, k])``.

    The inner label sets must be identical, order included.
    """
    if p.col_labels != q.row_labels:
        raise LabelMismatchError(
            f"cannot compose: left columns {list(p.col_labels)} "
            f"differ from right rows {list(q.row_labels)}"
        )
    return FuzzyRelation(p.row_labels, q.col_labels, _kernels.maxmin(p.entries, q.entries))


def identity_relation(labels) -> FuzzyRelation:
    labels = _labelset(labels)
    return FuzzyRelation(labels, labels, np.eye(len(labels)))


def relation_leq(a: FuzzyRelation, b: FuzzyRelation) -> bool:
    """Componentwise order: True iff every degree of ``a`` is <= the matching degree of ``b``."""
    if a.row_labels != b.row_labels or a.col_labels != b.col_labels:
        raise LabelMismatchError("relation_leq needs relations over the same label sets")
    return bool(np.all(a.entries <= b.entries))


def fuzzyset_as_row(m: FuzzySet, row_label: str = "M") -> FuzzyRelation:
    """The 1 x |domain| relation induced by a fuzzy set."""
    return FuzzyRelation([row_label], m.domain, m.degrees[None, :])


def row_as_fuzzyset(rel: FuzzyRelation, row=0) -> FuzzySet:
    if isinstance(row, str):
        row = rel.row_labels.index(row)
    return FuzzySet(rel.col_labels, rel.entries[row])
