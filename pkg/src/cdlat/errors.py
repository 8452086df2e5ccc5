"""Exception types raised by the engine."""


class CDLatError(Exception):
    """Base class for all engine errors."""


class NotAGroup(CDLatError):
    """A multiplication table violates one of the group axioms."""


class BadParameter(CDLatError):
    """Invalid parameter for a named group family."""


class OrderCapExceeded(CDLatError):
    """A construction would exceed the configured order cap."""


class EnumerationLimitExceeded(CDLatError):
    """Group too large for exhaustive subgroup enumeration."""


class SubgroupCapExceeded(CDLatError):
    """Subgroup enumeration grew past the configured cap."""


class TooLargeForIso(CDLatError):
    """Lattice has too many members for brute-force isomorphism search."""


class UnknownFixture(CDLatError):
    """Requested corpus fixture is not registered."""


class ParseError(CDLatError):
    """Group-spec text failed to parse."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += " (expected " + " | ".join(self.expected) + ")"
        super().__init__(detail)
