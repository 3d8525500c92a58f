"""Exception types and error codes shared across the package.

Every user-facing failure carries a stable ``code`` string so that callers
(and the command line front end) can react without parsing messages.
"""

from __future__ import annotations

# Input / validation codes
SCHEMA = "SCHEMA"
UNKNOWN_TERM = "UNKNOWN_TERM"
WEIGHT_SPEC = "WEIGHT_SPEC"
PROFILE_OVERLAP = "PROFILE_OVERLAP"
PROFILE_DOMINANCE = "PROFILE_DOMINANCE"
MISSING_EVALUATION = "MISSING_EVALUATION"
EVALUATION_BOUNDS = "EVALUATION_BOUNDS"
THRESHOLD = "THRESHOLD"
IO = "IO"

# Runtime codes
SAMPLING = "SAMPLING"
BOUNDARY = "BOUNDARY"
INVARIANT = "INVARIANT"


class SmaaFlowError(Exception):
    """Base class for all package errors."""

    code = "ERROR"


class InputError(SmaaFlowError):
    """A problem description failed validation.

    Parameters
    ----------
    code : str
        One of the module-level code constants.
    message : str
        Human readable explanation.
    at : str, optional
        Slash-separated location of the offending field, e.g.
        ``"tree/children/2/weights"``.
    """

    def __init__(self, code: str, message: str, at: str | None = None):
        self.code = code
        self.at = at
        if at is not None:
            message = f"{message} (at {at})"
        super().__init__(message)

    def __reduce__(self):
        # location is already folded into the message
        return (InputError, (self.code, str(self), None))


class SamplingError(SmaaFlowError):
    """Rejection sampling exhausted its attempt budget."""

    code = SAMPLING


class BoundaryViolation(SmaaFlowError):
    """An element's flow fell outside the span of the limiting profiles."""

    code = BOUNDARY


class InvariantError(SmaaFlowError):
    """An internal consistency check failed."""

    code = INVARIANT
