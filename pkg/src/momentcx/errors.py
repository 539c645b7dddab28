"""Exception hierarchy shared by the library and the command line."""


class MomentError(Exception):
    """Base class for all errors raised by momentcx."""


class InputError(MomentError, ValueError):
    """Malformed or inconsistent input (maps to CLI exit code 2)."""


class ResourceLimitError(MomentError):
    """A configured size limit was exceeded (maps to CLI exit code 3)."""


class PreconditionError(MomentError, ValueError):
    """A mathematical precondition failed (maps to CLI exit code 1).

    ``cell`` optionally names the offending cell (as a tuple of component
    indices) so callers can report it.
    """

    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class ConePreconditionError(PreconditionError, InputError):
    """A hypothesis of the cone-class calculus fails (zero weight, a cone
    that is not strictly convex, a ray without a weight). It is both a
    precondition failure and an input error."""
