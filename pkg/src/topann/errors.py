"""Exception hierarchy shared by all topann modules.

The CLI maps these onto process exit codes: parse/usage errors and bad
operands exit 1, hypothesis violations exit 2, verification failures
exit 3, resource limits exit 4.
"""


class TopAnnError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TopAnnError):
    """Malformed textual input; carries the offending position."""

    def __init__(self, message: str, text: str = "", pos: int = -1):
        self.text = text
        self.pos = pos
        if pos >= 0:
            message = f"{message} (at position {pos} in {text!r})"
        super().__init__(message)


class RingMismatch(TopAnnError):
    """Operands live in different rings or have wrong exponent length."""


class SquarefreeRequired(TopAnnError):
    """Operation is defined only for squarefree monomial ideals."""


class UndefinedOperation(TopAnnError):
    """Operation applied outside its domain (colon by zero, unit-ideal
    decomposition, non-prime characteristic, ...)."""


class HypothesisError(TopAnnError):
    """A stated hypothesis of the underlying statement fails to hold."""


class LimitExceeded(TopAnnError):
    """Configured size limit (variables, generators, exponents) exceeded."""


class VerificationFailure(TopAnnError):
    """A cross-check that must hold for a correct build has failed."""
