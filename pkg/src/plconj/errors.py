"""Exception types shared across the package.

Every domain-level failure raises one of these, so callers (and the
command-line front end) can map failures to outcomes without parsing
messages.  Messages name the violated invariant.
"""


class PLConjError(Exception):
    """Base class for all errors raised by this package."""


class InvalidMapError(PLConjError, ValueError):
    """A breakpoint list violates one of the map invariants."""


class DomainError(PLConjError, ValueError):
    """An argument lies outside the domain of the map or germ."""


class FunctionFileError(PLConjError, ValueError):
    """A map file is malformed; the message carries the line number."""


class SlopeMismatch(PLConjError):
    """The two maps disagree in an endpoint slope."""


class NotOneBump(PLConjError):
    """The operation needs maps with no interior fixed points."""


class ClassMismatch(PLConjError):
    """The two maps lie on opposite sides of the diagonal."""


class NotAboveDiagonal(PLConjError):
    """The germ construction needs an above-diagonal map."""


class PrefixMismatch(PLConjError):
    """The two maps do not agree on the stated initial interval."""


class InvalidSlope(PLConjError):
    """A prescribed conjugator slope must be positive."""


class ScaleMismatch(PLConjError):
    """The two germs live on circles with different scale factors."""


class OutOfRange(PLConjError):
    """Germ evaluation exceeded the configured period bound."""


class InternalConsistencyError(PLConjError):
    """A certified internal invariant failed.  Always a bug, never data."""
