"""Exception types shared across quotloc."""


class UsageError(ValueError):
    """Bad input: a violated precondition the caller can fix."""


class InvariantError(RuntimeError):
    """An internal invariant failed (should never happen on valid input)."""
