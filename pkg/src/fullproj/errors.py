"""Exception types raised by fullproj."""


class FullprojError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FullprojError, ValueError):
    """An argument lies outside the domain of the operation."""


class LimitExceededError(FullprojError):
    """A brute-force or inclusion-exclusion computation would exceed its configured size bound."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds limit {limit}")
