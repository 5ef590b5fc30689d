"""Exception hierarchy.

Every domain error carries an exit code so the CLI can map failures without
inspecting messages.
"""

from typing import Any, Dict, Optional


class AssoformError(Exception):
    """Base class for all domain errors."""
    exit_code: int = 2


class ParseError(AssoformError):
    """Input text does not conform to the form grammar."""
    exit_code = 3

    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class DegreeError(AssoformError, ValueError):
    """Forms of mismatched side, arity or degree were combined."""


class NoSolution(AssoformError):
    """A linear system is inconsistent."""


class SocleDegenerate(AssoformError):
    """The Jacobian lies in the ideal piece of top degree."""


class NotFiniteColength(AssoformError):
    """The tuple has a common zero away from the origin (its resultant vanishes)."""


class GenericityFailure(AssoformError):
    """Random coordinate changes never produced a nonsingular Macaulay minor."""


class ChartNotFound(AssoformError):
    """No (K-n)-minor of the catalecticant matrix is nonzero."""


class PreconditionError(AssoformError, ValueError):
    """An operation was called outside its domain."""


class VerificationFailure(AssoformError):
    """A verification suite found a counterexample."""
    exit_code = 1

    def __init__(self, message: str, counterexample: Optional[Dict[str, Any]] = None):
        self.counterexample = counterexample or {}
        super().__init__(message)
