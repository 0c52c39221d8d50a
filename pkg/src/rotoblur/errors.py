"""Exception types shared across the package.

Every domain failure raises a subclass of RotoblurError so callers (and the
CLI) can separate bad data from programming errors.
"""


class RotoblurError(Exception):
    """Base class for all rotoblur domain errors."""


class InvalidConfig(RotoblurError):
    """A controller config parameter is out of its legal range, or a config
    document contains an unknown or duplicated key."""


class NonMonotonicTime(RotoblurError):
    """A timestamp did not strictly increase."""


class NonFiniteInput(RotoblurError):
    """An input delta was NaN or infinite."""


class NegativeSigma(RotoblurError):
    """Blur strength below zero."""


class NonFiniteSigma(RotoblurError):
    """Blur strength was NaN or infinite."""


class EmptyImage(RotoblurError):
    """Image with zero pixels where content is required."""


class MalformedImage(RotoblurError):
    """Unreadable or unsupported PPM/PGM data."""


class MalformedHeader(RotoblurError):
    """CSV header row does not match the expected schema."""


class NonNumericField(RotoblurError):
    """A CSV field failed to parse as the expected type."""


class ItemOutOfRange(RotoblurError):
    """Questionnaire item outside the 0..3 response scale."""


class WrongItemCount(RotoblurError):
    """Questionnaire response does not have exactly 16 items."""


class NegativeTs(RotoblurError):
    """Total sickness score below zero."""


class RatingOutOfRange(RotoblurError):
    """Motion sickness rating outside the 0..6 scale."""


class EmptyInput(RotoblurError):
    """An operation that needs at least one element received none."""


class AllZeroDifferences(RotoblurError):
    """Signed-rank test is undefined: every paired difference is zero."""
