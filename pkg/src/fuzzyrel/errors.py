class FuzzyRelError(ValueError):
    """Base class for invalid input to fuzzyrel operations."""


class DegreeError(FuzzyRelError):
    """A membership degree is not a finite number in [0, 1]."""


class LabelError(FuzzyRelError):
    """Empty, duplicate or otherwise invalid labels."""


class LabelMismatchError(FuzzyRelError):
    """Two operands do not share the label sets an operation requires."""


class ShapeError(FuzzyRelError):
    """Grid dimensions disagree with the label sets."""


class EnumerationLimitError(FuzzyRelError):
    """Minimal-solution enumeration was asked to exceed its configured cap."""


class ParseError(FuzzyRelError):
    """Malformed document. ``line`` is 1-based, or None for whole-document problems."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
