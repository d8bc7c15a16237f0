"""Exception types shared across the package."""


class BranchlatError(Exception):
    """Base class for all package errors."""


class PreconditionError(BranchlatError, ValueError):
    """An input violates a documented precondition (bad shape, range, family)."""


class StableRangeError(PreconditionError):
    """A branching query lies outside the stable range and is refused."""


class InconsistencyError(BranchlatError, RuntimeError):
    """An internal check failed: a computed object contradicts a structural theorem."""
