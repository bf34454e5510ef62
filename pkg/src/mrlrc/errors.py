"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A parameter combination is invalid (divisibility, ranges, malformed partition)."""


class SizeRefusal(ValueError):
    """An exhaustive operation was asked to run above its size limit.

    We refuse outright instead of sampling: silent sampling would make
    oracle-backed tests meaningless.
    """
