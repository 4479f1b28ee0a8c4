"""Exception types shared across the package."""


class WeylError(Exception):
    """Base class for all package-specific failures."""


class IntegrityError(WeylError):
    """An invariant that must hold by construction was violated."""


class UnsupportedRootSystem(WeylError):
    """The requested family/rank combination is not a finite root system."""


class ParseError(WeylError):
    """A file or argument could not be parsed."""
