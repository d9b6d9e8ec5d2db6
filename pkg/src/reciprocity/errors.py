"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ResourceError(RuntimeError):
    """An enumeration guard would be exceeded."""


class ConsistencyError(AssertionError):
    """An internal uniqueness or consistency check failed."""


class ReciprocityPreconditionError(DomainError):
    """A reciprocity check was given an invalid pair.

    ``reason`` is a short machine-readable tag such as 'not-primary',
    'ramified-norm', 'equal-norms' or 'not-coprime'.
    """

    def __init__(self, reason: str, message: str) -> None:
        super().__init__(f"{reason}: {message}")
        self.reason = reason
