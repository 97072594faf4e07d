"""Exception types."""


class CliffordError(Exception):
    """Base class for domain errors raised by this package."""


class SignatureError(CliffordError, ValueError):
    pass


class SemisimpleError(SignatureError):
    """Raised for Cl(p,q) with p - q = 1 mod 4, which is not simple."""

    def __init__(self, p, q):
        super().__init__(
            f"Cl({p},{q}) is semisimple (p - q = 1 mod 4); semisimple not supported"
        )
        self.p = p
        self.q = q


class ContextMismatchError(CliffordError, ValueError):
    pass


class DimensionError(CliffordError, ValueError):
    pass


class NotIdempotentError(CliffordError, ValueError):
    pass


class UnsupportedFieldError(CliffordError, ValueError):
    pass


class SingularSystemError(CliffordError, ArithmeticError):
    """An exact linear system had no solution where one was required."""


class ConvergenceError(CliffordError):
    def __init__(self, message, last_step=None, n_used=None):
        super().__init__(message)
        self.last_step = last_step
        self.n_used = n_used


class InternalError(CliffordError, RuntimeError):
    """A structural invariant failed; indicates a bug, not bad input."""


class ParseError(ValueError):
    """Malformed textual input.  ``position`` is a 0-based character offset."""

    def __init__(self, message, text=None, position=None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.text = text
        self.position = position
