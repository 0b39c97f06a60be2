"""Exception hierarchy shared by every module in the package."""


class LinkRankError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(LinkRankError, ValueError):
    """Arguments fall outside the domain of the requested operation."""


class InternalConsistencyError(LinkRankError):
    """Two independent computations of the same quantity disagree.

    This always indicates a bug in the library (or a broken invariant),
    never bad user input.
    """


class ResourceLimitError(LinkRankError):
    """A brute-force computation would exceed its configured size budget."""
