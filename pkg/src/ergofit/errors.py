"""Exception hierarchy shared by every module in the toolkit.

Two broad families matter to callers: problems with what the user handed
us (files, schemas, argument ranges) and problems that only surface once
the numbers are on the table (degenerate variance, undefined correlation).
The CLI maps the first family to exit code 2 and the second to exit code 1.
"""


class ErgofitError(Exception):
    """Base class for all toolkit errors."""


class InputError(ErgofitError):
    """Bad user-supplied input: missing files, malformed rows, out-of-range arguments."""


class DatasetError(InputError):
    """Dataset-level problem: schema mismatch, unparseable row, invariant violation."""


class AnalysisError(ErgofitError):
    """Input was admitted but is statistically unusable."""


class DegenerateVarianceError(AnalysisError):
    """A variance that must be positive came out zero."""


class UndefinedCorrelationError(AnalysisError):
    """Rank correlation requested for a constant input vector."""
