"""Exception types shared across the package.

Two families, matching the CLI's exit-code contract: bad input (exit 2)
versus a computation that ran but failed its own consistency checks (exit 3).
"""


class ValidationError(ValueError):
    """Input violates a documented precondition."""


class VerificationError(RuntimeError):
    """A verification or consistency check failed."""


class ConvergenceError(VerificationError):
    """A numerical evaluation could not reach the requested accuracy.

    Carries a human-readable diagnostic naming the region/strategy used.
    """
