"""Exception and warning types shared across the package."""


class MonoidError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MonoidError):
    """Malformed input document or CLI argument (exit code 1)."""


class EmptyGenerators(MonoidError):
    """A monoid specification carried no generators."""


class NonPositivePuiseuxGenerator(MonoidError):
    """Puiseux/numerical generators must be positive rationals."""


class NotPointed(MonoidError):
    """No strictly positive grading exists; enumeration would not terminate."""


class ElementNotInMonoid(MonoidError):
    """An element-indexed invariant was requested for x outside the monoid."""


class NotPLS(MonoidError):
    """Operation requires a monoid with both purely long and purely short atoms."""


class BoundRequiredForInfiniteGroup(MonoidError):
    """Atom enumeration over a class group with free part needs a degree bound."""


class PropertyAssertionError(MonoidError):
    """An internal cross-check that must hold by theorem failed (exit code 2)."""


class BoundTooSmallWarning(UserWarning):
    """A bounded sweep found relations touching the boundary of the sweep."""
