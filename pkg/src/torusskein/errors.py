class TorusSkeinError(Exception):
    pass


class ParseError(TorusSkeinError, ValueError):
    """Input text is not a matrix literal, word, or class label."""


class DomainError(TorusSkeinError, ValueError):
    """Input parses but lies outside the operation's domain (e.g. det != 1)."""


class ConsistencyError(TorusSkeinError, RuntimeError):
    """Two independent computations of the same quantity disagree.

    This always indicates an implementation bug and is never caught internally.
    """
