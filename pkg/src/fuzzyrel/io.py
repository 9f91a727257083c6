"""Text formats for relations, grade data, solution sets and reports.

Tables are comma-separated UTF-8 with a dot as decimal separator. Degrees
are written with the shortest decimal that reads back to the same double,
so ``parse(write(x)) == x`` and rewriting is byte-stable.
"""
import csv
import json
import math

import numpy as np

from .assessment import GradeDistribution, GradeScale, ProfileReport
from .errors import FuzzyRelError, ParseError
from .relation import FuzzyRelation, FuzzySet
from .solver import SolutionSet

__all__ = [
    "format_degree",
    "parse_relation",
    "write_relation",
    "parse_grade_counts",
    "write_grade_counts",
    "parse_roster",
    "roster_to_counts",
    "serialize_solution_set",
    "parse_solution_set",
    "fuzzy_set_to_dict",
    "report_to_dict",
]

HEADER_CORNERS = ("", "label")


def format_degree(x):
    """Shortest decimal text that round-trips ``x`` ("0.1", "1", "0.33")."""
    return np.format_float_positional(float(x), unique=True, trim="-")


def _rows(text):
    """Yield (line_number, cells) for non-blank lines, cells stripped."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        cells = next(csv.reader([line]))
        yield lineno, [c.strip() for c in cells]


def _degree(cell, lineno):
    try:
        value = float(cell)
    except ValueError:
        raise ParseError(f"not a number: {cell!r}", lineno) from None
    if not math.isfinite(value) or not 0.0 <= value <= 1.0:
        raise ParseError(f"degree {cell} is outside [0, 1]", lineno)
    return value


def parse_relation(text: str) -> FuzzyRelation:
    rows = list(_rows(text))
    if not rows:
        raise ParseError("empty relation document")
    head_line, header = rows[0]
    if header[0].lower() not in HEADER_CORNERS:
        raise ParseError(f"first header cell must be empty or 'label', got {header[0]!r}", head_line)
    cols = header[1:]
    if not cols:
        raise ParseError("header names no columns", head_line)
    _check_labels(cols, head_line, "column")
    if len(rows) < 2:
        raise ParseError("relation has no rows", head_line)

    labels, grid, seen = [], [], {}
    for lineno, cells in rows[1:]:
        if len(cells) != len(cols) + 1:
            raise ParseError(f"expected {len(cols) + 1} cells, got {len(cells)}", lineno)
        lab = cells[0]
        if not lab:
            raise ParseError("empty row label", lineno)
        if lab in seen:
            raise ParseError(f"duplicate row label {lab!r} (first on line {seen[lab]})", lineno)
        seen[lab] = lineno
        labels.append(lab)
        grid.append([_degree(c, lineno) for c in cells[1:]])
    return FuzzyRelation(labels, cols, grid)


def _check_labels(labels, lineno, what):
    seen = set()
    for lab in labels:
        if not lab:
            raise ParseError(f"empty {what} label", lineno)
        if lab in seen:
            raise ParseError(f"duplicate {what} label {lab!r}", lineno)
        seen.add(lab)


def _csv_line(cells):
    # quote only when a label needs it; keeps plain tables plain
    out = []
    for c in cells:
        if any(ch in c for ch in ',"\n\r'):
            c = '"' + c.replace('"', '""') + '"'
        out.append(c)
    return ",".join(out)


def write_relation(rel: FuzzyRelation) -> str:
    lines = [_csv_line(["label", *rel.col_labels])]
    for lab, row in zip(rel.row_labels, rel.entries):
        lines.append(_csv_line([lab, *(format_degree(v) for v in row)]))
    return "\n".join(lines) + "\n"


def _count(cell, lineno):
    try:
        value = int(cell)
    except ValueError:
        raise ParseError(f"count must be a non-negative integer, got {cell!r}", lineno) from None
    if value < 0:
        raise ParseError(f"count must be a non-negative integer, got {cell!r}", lineno)
    return value


def parse_grade_counts(text: str, scale: GradeScale = None) -> GradeDistribution:
    """Two-column ``grade,count`` table; grades absent from the table count 0."""
    scale = scale or GradeScale.default()
    counts = dict.fromkeys(scale.labels, 0)
    seen = {}
    for pos, (lineno, cells) in enumerate(_rows(text)):
        if len(cells) != 2:
            raise ParseError(f"expected 2 cells (grade,count), got {len(cells)}", lineno)
        grade, cell = cells
        if pos == 0 and grade not in scale.labels and not cell.lstrip("+-").isdigit():
            continue  # header
        if grade not in scale.labels:
            raise ParseError(f"unknown grade {grade!r}; scale is {list(scale.labels)}", lineno)
        if grade in seen:
            raise ParseError(f"grade {grade!r} listed twice (first on line {seen[grade]})", lineno)
        seen[grade] = lineno
        counts[grade] = _count(cell, lineno)
    if not any(counts.values()):
        raise ParseError("grade counts are all zero or missing")
    return GradeDistribution(scale, tuple(counts[g] for g in scale.labels))


def write_grade_counts(dist: GradeDistribution) -> str:
    lines = ["grade,count"] + [_csv_line([g, str(c)]) for g, c in dist.items()]
    return "\n".join(lines) + "\n"


def parse_roster(text: str, scale: GradeScale = None) -> list:
    """``student,grade`` rows as a list of pairs. A first row whose grade
    is not on the scale and reads ``grade`` is taken as a header."""
    scale = scale or GradeScale.default()
    roster = []
    for pos, (lineno, cells) in enumerate(_rows(text)):
        if len(cells) != 2:
            raise ParseError(f"expected 2 cells (student,grade), got {len(cells)}", lineno)
        student, grade = cells
        if pos == 0 and grade not in scale.labels and grade.lower() == "grade":
            continue
        if not student:
            raise ParseError("empty student identifier", lineno)
        roster.append((lineno, student, grade))
    return roster


def roster_to_counts(roster, scale: GradeScale = None) -> GradeDistribution:
    """Aggregate a roster into per-grade counts.

    ``roster`` is text or the output of :func:`parse_roster`; plain
    ``(student, grade)`` pairs are accepted too.
    """
    scale = scale or GradeScale.default()
    if isinstance(roster, str):
        roster = parse_roster(roster, scale)
    counts = dict.fromkeys(scale.labels, 0)
    seen = {}
    for i, entry in enumerate(roster, start=1):
        lineno, student, grade = entry if len(entry) == 3 else (i, *entry)
        if grade not in scale.labels:
            raise ParseError(f"unknown grade {grade!r} for student {student!r}", lineno)
        if student in seen:
            raise ParseError(f"student {student!r} listed twice (first on line {seen[student]})", lineno)
        seen[student] = lineno
        counts[grade] += 1
    if not seen:
        raise ParseError("roster is empty")
    return GradeDistribution(scale, tuple(counts[g] for g in scale.labels))


def _row_values(rel):
    return [float(v) for v in rel.entries[0]]


def serialize_solution_set(solset: SolutionSet, variables=None, row_label="M") -> str:
    """JSON document for a solution set; minimals in lexicographic order.

    ``variables`` labels the unknown row. It is read from the solutions when
    there are any; an unsolvable set needs it passed explicitly to carry it.
    """
    if solset.greatest is not None:
        variables = solset.greatest.col_labels
        row_label = solset.greatest.row_labels[0]
    doc = {
        "solvable": solset.solvable,
        "row_label": row_label,
        "variables": list(variables) if variables is not None else [],
        "greatest": _row_values(solset.greatest) if solset.greatest is not None else None,
        "minimals": sorted(_row_values(m) for m in solset.minimals),
        "violated_columns": list(solset.violated_columns),
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_solution_set(text: str) -> SolutionSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    try:
        solvable = doc["solvable"]
        variables = doc["variables"]
        row_label = doc["row_label"]
        greatest = doc["greatest"]
        minimals = doc["minimals"]
        violated = doc["violated_columns"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"solution set document lacks key {exc}") from None
    try:
        def row(values):
            return FuzzyRelation([row_label], variables, [values])

        return SolutionSet(
            bool(solvable),
            greatest=row(greatest) if greatest is not None else None,
            minimals=[row(m) for m in minimals],
            violated_columns=violated,
        )
    except FuzzyRelError as exc:
        raise ParseError(f"invalid solution set: {exc}") from None


def fuzzy_set_to_dict(m: FuzzySet) -> dict:
    return {lab: d for lab, d in m.items()}


def report_to_dict(report: ProfileReport) -> dict:
    stages = report.profile.stages
    return {
        "stages": [
            {"label": lab, "name": stages.name(lab), "degree": d}
            for lab, d in zip(stages, report.stage_fractions)
        ],
        "retention_ratios": [
            {"from": a, "to": b, "ratio": v} for a, b, v in report.retention_ratios
        ],
        "narrative": report.narrative.splitlines(),
    }
