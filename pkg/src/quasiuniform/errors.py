"""Exception taxonomy shared by the whole package.

User-input problems (bad spec strings, malformed selections, inconsistent
files) are ``ValueError`` subclasses; ``InvariantError`` is reserved for
internal cross-checks that can only fail on a construction bug.
"""


class GroupParseError(ValueError):
    """A group spec, element name, or subgroup selector failed to parse."""


class GroupTableError(ValueError):
    """A multiplication table or member set violates the group axioms."""


class CapExceededError(ValueError):
    """A requested computation exceeds the configured size cap."""


class AnalysisError(ValueError):
    """An analysis operation received input outside its contract."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
