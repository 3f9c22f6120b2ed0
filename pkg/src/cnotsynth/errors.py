"""Exception hierarchy shared by every layer of the toolkit.

Each exception carries a short ``category`` string; the command-line front
end prints it on stderr so callers can branch on it without parsing prose.
"""

from __future__ import annotations


class SynthError(Exception):
    category = "error"


class ValidationError(SynthError):
    """Input does not describe a valid permutation, gate or circuit."""

    category = "validation"


class LengthNotPowerOfTwo(ValidationError):
    category = "length-not-power-of-two"


class DuplicateImage(ValidationError):
    category = "duplicate-image"


class IndexOutOfRange(ValidationError):
    category = "index-out-of-range"


class NonBinaryEntry(ValidationError):
    category = "non-binary-entry"

    def __init__(self, message: str, row: int, column: int):
        super().__init__(message)
        self.row = row
        self.column = column


class RowOrColumnWeightNotOne(ValidationError):
    category = "row-or-column-weight"

    def __init__(self, message: str, axis: str, index: int):
        super().__init__(message)
        self.axis = axis
        self.index = index


class WidthOverflow(ValidationError):
    category = "width-overflow"


class WidthMismatch(ValidationError):
    category = "width-mismatch"


class LineOutOfRange(ValidationError):
    category = "line-out-of-range"


class LinesNotDistinct(ValidationError):
    category = "lines-not-distinct"


class LengthMismatch(ValidationError):
    category = "length-mismatch"


class WidthTooLarge(ValidationError):
    category = "width-too-large"


class ParseError(ValidationError):
    """Malformed text input; ``line``/``column`` are 1-based."""

    category = "parse"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class DepthExhausted(SynthError):
    category = "depth-exhausted"
