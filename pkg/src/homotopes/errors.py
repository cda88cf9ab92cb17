class DomainError(ValueError):
    """Input is well formed but outside the domain of the operation."""


class PreconditionWarning(UserWarning):
    """A hypothesis of the underlying statement fails; the result is still
    computed but carries no guarantee."""
