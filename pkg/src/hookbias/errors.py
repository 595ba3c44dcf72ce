class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ExactnessError(ArithmeticError):
    """A division that was required to be exact left a remainder."""
