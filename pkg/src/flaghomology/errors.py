"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidCodeError(DomainError):
    """A Lehmer code entry is out of its allowed range."""


class NotCoveringError(DomainError):
    """The pair of permutations is not a Bruhat covering pair."""


class IntegrityError(RuntimeError):
    """An internal consistency check failed (d∘d != 0, inexact division, ...)."""
