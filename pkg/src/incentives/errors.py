"""Exception hierarchy.

DomainError and its subclasses signal violated mathematical preconditions
on user-supplied data; the command line maps any of them to exit status 1.
InternalInvariant is different in kind: it marks a broken invariant inside
the library itself and is a bug, never an input problem.
"""


class DomainError(Exception):
    """Base class for precondition violations on input data."""


class InvalidGenerators(DomainError):
    """A generating or seed set contains non-positive or non-integer values."""


class ValueOutOfRange(DomainError):
    """An input exceeds the 2**31 magnitude cap."""


class GcdNotOne(DomainError):
    """The generators have gcd > 1, so the complement in N is infinite."""


class NotAdmissible(DomainError):
    """No monoid honouring the constraint set contains the given seed set."""


class InvalidModel(DomainError):
    """A purchase/adjustment model violates its construction rules."""


class InvalidSequence(DomainError):
    """A list is not an alternating purchase/adjustment sequence."""


class InvalidRemoval(DomainError):
    """The requested generator cannot be removed from this semigroup."""


class BoundTooLarge(DomainError):
    """An exhaustive-search bound exceeds the supported ceiling."""


class RootMissesX(DomainError):
    """The required seed set lies outside the largest numerical candidate."""


class InternalInvariant(RuntimeError):
    """A library invariant failed; indicates a bug, not bad input."""
