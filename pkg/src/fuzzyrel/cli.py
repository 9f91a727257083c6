"""Command-line front end.

Exit codes: 0 affirmative result, 1 well-formed negative result (no
solution, not a solution), 2 input or operational error.
"""
import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import datasets
from .assessment import (
    GradeScale,
    distribution_to_fuzzy_set,
    inverse_assessment,
    learner_profile,
    profile_report,
)
from .errors import EnumerationLimitError, FuzzyRelError
from .io import (
    format_degree,
    fuzzy_set_to_dict,
    parse_grade_counts,
    parse_relation,
    report_to_dict,
    roster_to_counts,
    serialize_solution_set,
    write_relation,
)
from .relation import compose_maxmin, fuzzyset_as_row
from .solver import DEFAULT_CAP, DEFAULT_TOLERANCE, FreProblem, solution_set_contains, solve

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2

FORMATS_HELP = """\
file formats:
  relation     CSV; header 'label,<col>,...' (first cell may be empty),
               then one '<row>,<degree>,...' line per row; degrees in [0,1]
  grade counts CSV 'grade,count' lines, optional header; missing grades count 0
  roster       CSV 'student,grade' lines, optional header 'student,grade'

exit codes:
  0  affirmative result
  1  well-formed negative result (no solution / not a solution)
  2  input, parse or label error, or enumeration cap exceeded
"""


@dataclass
class CliConfig:
    tolerance: float = DEFAULT_TOLERANCE
    round_digits: Optional[int] = 2
    enumeration_cap: tuple = DEFAULT_CAP
    output_path: Optional[str] = None
    structured: bool = False

    def __post_init__(self):
        if not self.tolerance >= 0:
            raise FuzzyRelError(f"--tol must be non-negative, got {self.tolerance}")
        if self.round_digits is not None and not 0 <= self.round_digits <= 9:
            raise FuzzyRelError(f"--round must be in 0..9, got {self.round_digits}")


class CliError(Exception):
    pass


def _cap(text):
    try:
        rows, cols = text.lower().split("x")
        cap = (int(rows), int(cols))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cap must look like 12x12, got {text!r}") from None
    if min(cap) < 1:
        raise argparse.ArgumentTypeError("cap dimensions must be positive")
    return cap


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _load_relation(path):
    try:
        return parse_relation(_read(path))
    except FuzzyRelError as exc:
        raise CliError(f"{path}: {exc}") from None


def _row(values):
    return "[" + ", ".join(format_degree(v) for v in values) + "]"


def _relation_dict(rel):
    return {"row_labels": list(rel.row_labels), "col_labels": list(rel.col_labels), "entries": rel.tolist()}


def _dump(doc):
    return json.dumps(doc, indent=2) + "\n"


def cmd_compose(args, cfg):
    p, q = _load_relation(args.p_file), _load_relation(args.q_file)
    r = compose_maxmin(p, q)
    return EXIT_OK, _dump(_relation_dict(r)) if cfg.structured else write_relation(r)


def cmd_profile(args, cfg):
    q = _load_relation(args.q_file)
    scale = GradeScale.from_labels(q.row_labels)
    try:
        if args.grades:
            dist = parse_grade_counts(_read(args.grades), scale)
        else:
            dist = roster_to_counts(_read(args.roster), scale)
    except FuzzyRelError as exc:
        raise CliError(f"{args.grades or args.roster}: {exc}") from None
    m = distribution_to_fuzzy_set(dist, cfg.round_digits)
    profile = learner_profile(m, q)
    report = profile_report(profile)
    if cfg.structured:
        doc = {
            "students": dist.total,
            "grades": fuzzy_set_to_dict(m),
            "profile": fuzzy_set_to_dict(profile.as_fuzzy_set()),
            "report": report_to_dict(report),
        }
        return EXIT_OK, _dump(doc)
    out = [
        f"students: {dist.total}",
        "grade fuzzy set:",
        write_relation(fuzzyset_as_row(m)).rstrip("\n"),
        "learner profile:",
        write_relation(profile.as_row()).rstrip("\n"),
        "report:",
        report.narrative,
    ]
    return EXIT_OK, "\n".join(out) + "\n"


def _solution_text(solset, q, r):
    out = [f"solvable: {'yes' if solset.solvable else 'no'}"]
    if solset.violated_columns:
        colmax = q.entries.max(axis=0)
        for lab in solset.violated_columns:
            k = q.col_labels.index(lab)
            out.append(
                f"violated column {lab}: column maximum {format_degree(colmax[k])} "
                f"< required {format_degree(r.entries[0, k])}"
            )
    if solset.solvable:
        out.append(f"variables: {', '.join(q.row_labels)}")
        out.append(f"greatest: {_row(solset.greatest.entries[0])}")
        out.append(f"minimal solutions: {len(solset.minimals)}")
        out.extend(f"  {_row(mn.entries[0])}" for mn in solset.minimals)
    return "\n".join(out) + "\n"


def cmd_solve(args, cfg):
    q, r = _load_relation(args.q_file), _load_relation(args.r_file)
    problem = FreProblem(q, r, cfg.tolerance)
    solset = solve(problem, cfg.enumeration_cap)
    if cfg.structured:
        text = serialize_solution_set(solset, q.row_labels, r.row_labels[0])
    else:
        text = _solution_text(solset, q, r)
    return (EXIT_OK if solset.solvable else EXIT_NEGATIVE), text


def cmd_check(args, cfg):
    p, q, r = (_load_relation(f) for f in (args.p_file, args.q_file, args.r_file))
    problem = FreProblem(q, r, cfg.tolerance)
    solset = solve(problem, cfg.enumeration_cap)
    found = solution_set_contains(solset, p, q, r, cfg.tolerance)
    got = compose_maxmin(p, q)
    if cfg.structured:
        doc = {
            "is_solution": found.is_solution,
            "composition": got.tolist()[0],
            "target": r.tolist()[0],
            "below_greatest": found.below_greatest if found else None,
            "above_minimal": found.above_minimal.tolist()[0] if found.above_minimal is not None else None,
        }
        return (EXIT_OK if found else EXIT_NEGATIVE), _dump(doc)
    out = [
        f"solution: {'yes' if found else 'no'}",
        f"composition: {_row(got.entries[0])}",
        f"target:      {_row(r.entries[0])}",
    ]
    if found:
        out.append(f"greatest:    {_row(solset.greatest.entries[0])}")
        if found.above_minimal is not None:
            out.append(f"dominates minimal {_row(found.above_minimal.entries[0])}")
    return (EXIT_OK if found else EXIT_NEGATIVE), "\n".join(out) + "\n"


def cmd_paper_demo(args, cfg):
    dist = datasets.classroom_counts()
    q = datasets.load_relation("classroom_q")
    m = distribution_to_fuzzy_set(dist, cfg.round_digits)
    profile = learner_profile(m, q)
    report = profile_report(profile)
    solset = inverse_assessment(q, profile, cfg.tolerance, cfg.enumeration_cap)
    bad = datasets.load_relation("unsolvable_r")
    nosol = solve(FreProblem(q, bad, cfg.tolerance), cfg.enumeration_cap)
    if cfg.structured:
        doc = {
            "counts": dict(dist.items()),
            "grades": fuzzy_set_to_dict(m),
            "profile": fuzzy_set_to_dict(profile.as_fuzzy_set()),
            "report": report_to_dict(report),
            "inverse": json.loads(serialize_solution_set(solset)),
            "unsolvable": json.loads(serialize_solution_set(nosol, q.row_labels)),
        }
        return EXIT_OK, _dump(doc)
    out = [
        "grade counts: " + ", ".join(f"{g}={c}" for g, c in dist.items()) + f" (n={dist.total})",
        "grade fuzzy set:",
        write_relation(fuzzyset_as_row(m)).rstrip("\n"),
        "grade-to-stage relation (example data):",
        write_relation(q).rstrip("\n"),
        "learner profile:",
        write_relation(profile.as_row()).rstrip("\n"),
        "report:",
        report.narrative,
        "",
        "inverse problem for the profile above:",
        _solution_text(solset, q, profile.as_row()).rstrip("\n"),
        "",
        f"inverse problem for target {_row(bad.entries[0])}:",
        _solution_text(nosol, q, bad).rstrip("\n"),
    ]
    return EXIT_OK, "\n".join(out) + "\n"


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE,
                        help="tolerance for degree equality (default %(default)g)")
    common.add_argument("--cap", type=_cap, default=DEFAULT_CAP, metavar="RxC",
                        help="largest q (rows x columns) for minimal-solution enumeration (default 12x12)")
    common.add_argument("--output", metavar="PATH", help="write the result here instead of stdout")
    common.add_argument("--format", choices=("text", "structured"), default="text",
                        help="plain tables or a JSON document (default text)")

    parser = argparse.ArgumentParser(
        prog="fuzzyrel",
        description="Max-min fuzzy relations and fuzzy relation equations.",
        epilog=FORMATS_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text, description=help_text,
                            epilog=FORMATS_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.set_defaults(func=func)
        return sp

    sp = add("compose", cmd_compose, "Max-min composition P o Q of two relation files.")
    sp.add_argument("p_file")
    sp.add_argument("q_file")

    sp = add("profile", cmd_profile,
             "Grade counts or roster -> grade fuzzy set -> learner profile over the columns of Q.")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--grades", metavar="FILE", help="grade counts file")
    src.add_argument("--roster", metavar="FILE", help="student,grade roster file")
    sp.add_argument("q_file", help="grade-to-stage relation; its row labels are the grades")
    _rounding(sp)

    sp = add("solve", cmd_solve, "Solve P o Q = R for the row P: greatest and all minimal solutions. "
                                 "Exit 1 when there is no solution.")
    sp.add_argument("q_file")
    sp.add_argument("r_file", help="single-row relation over the columns of Q")

    sp = add("check", cmd_check, "Check whether the row P solves P o Q = R. Exit 1 when it does not.")
    sp.add_argument("p_file")
    sp.add_argument("q_file")
    sp.add_argument("r_file")

    sp = add("paper-demo", cmd_paper_demo,
             "Run the bundled classroom example end to end: counts -> grade set -> profile -> inverse.")
    _rounding(sp)
    return parser


def _rounding(sp):
    sp.add_argument("--round", type=int, default=2, metavar="N", dest="round_digits",
                    help="round grade shares half-up to N decimals before composing (default 2)")
    sp.add_argument("--exact", action="store_true", help="compose unrounded shares n_i/n")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        round_digits = getattr(args, "round_digits", None)
        if getattr(args, "exact", False):
            round_digits = None
        cfg = CliConfig(args.tol, round_digits, args.cap, args.output, args.format == "structured")
        code, text = args.func(args, cfg)
    except EnumerationLimitError as exc:
        print(f"error: enumeration cap exceeded: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (CliError, FuzzyRelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if cfg.output_path:
        try:
            with open(cfg.output_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {cfg.output_path}: {exc.strerror}", file=sys.stderr)
            return EXIT_ERROR
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
