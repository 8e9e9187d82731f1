"""Exception hierarchy shared by the library and the command line."""


class GaussCoverError(ValueError):
    """Base class for every domain error raised by this package."""


class GaussSyntaxError(GaussCoverError):
    """Malformed Gauss-code or polynomial text."""


class ArityError(GaussCoverError):
    """A chord does not appear exactly once as a tail and once as a head."""


class SignError(GaussCoverError):
    """Missing, duplicated or invalid chord sign."""


class KindError(GaussCoverError):
    """Wrong diagram kind (linear vs circular) for an operation."""


class UnknownChordError(GaussCoverError, KeyError):
    """A chord id that does not occur in the diagram."""

    def __str__(self):
        return ValueError.__str__(self)


class InvalidMoveError(GaussCoverError):
    """A move site that does not apply to the given diagram."""


class RealizabilityError(GaussCoverError):
    """A Laurent polynomial that is not the writhe polynomial of any knot."""
