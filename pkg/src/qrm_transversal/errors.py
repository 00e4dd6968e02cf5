"""Exception types shared across the package."""


class UsageError(ValueError):
    """Malformed input: bad syntax, mismatched dimensions, out-of-range arguments."""


class DomainError(ValueError):
    """Well-formed input that names something the theory does not cover."""


class VerificationFailure(Exception):
    """The oracle disagreed with a claim; ``witness`` says where."""

    def __init__(self, message: str, witness: dict):
        super().__init__(message)
        self.witness = witness
