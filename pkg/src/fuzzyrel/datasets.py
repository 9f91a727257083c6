"""Example data shipped with the package.

The classroom set is one worked example (60 students, five grades, four
learning stages). Its grade-to-stage matrix is illustrative data, not a
default for other classes.
"""
from importlib import resources

FILES = {
    "classroom_counts": "classroom_counts.csv",
    "classroom_q": "classroom_q.csv",
    "classroom_p": "classroom_p.csv",
    "classroom_r": "classroom_r.csv",
    "unsolvable_r": "unsolvable_r.csv",
    "composition_p": "composition_p.csv",
    "composition_q": "composition_q.csv",
}


def path(name):
    return resources.files("fuzzyrel") / "data" / FILES[name]


def read_text(name):
    return path(name).read_text(encoding="utf-8")


def load_relation(name):
    from .io import parse_relation

    return parse_relation(read_text(name))


def classroom_counts():
    from .io import parse_grade_counts

    return parse_grade_counts(read_text("classroom_counts"))
