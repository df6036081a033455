"""Exception types shared by the solvers and the command line front end."""


class LocalCrossError(Exception):
    """Base class for all errors raised by this package."""


class InputError(LocalCrossError, ValueError):
    """Malformed or out-of-contract input (bad file, non-bipartite graph, ...)."""


class ResourceError(LocalCrossError):
    """A configured cap (memo table size, enumeration size) was exceeded."""


class OracleMismatch(LocalCrossError):
    """A solver and its brute-force oracle disagreed."""


class InvariantViolation(LocalCrossError, AssertionError):
    """An internal invariant of a dynamic program did not hold."""
