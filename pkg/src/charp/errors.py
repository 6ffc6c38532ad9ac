"""Exception hierarchy shared by every charp module.

The CLI maps these onto its documented exit codes: usage and parse
problems exit 1, violated preconditions exit 2, exceeded resource caps
exit 3.  Anything not raised from this hierarchy is a bug.
"""

from __future__ import annotations


class CharpError(Exception):
    """Base class for all errors raised by charp."""


class ParseError(CharpError):
    """Polynomial text does not conform to the input grammar."""


class UnknownVariable(ParseError):
    """An identifier in polynomial text is not among the declared variables."""


class InvalidField(CharpError):
    """The requested characteristic is not a prime in the supported range."""


class PreconditionError(CharpError):
    """A documented operation precondition does not hold for the input."""


class MismatchedRing(PreconditionError):
    """Operands live over different fields or variable counts."""


class NotInMaximalIdeal(PreconditionError):
    """The hypersurface equation has a nonzero constant term."""


class ZeroPolynomial(PreconditionError):
    """The operation refuses the zero polynomial."""


class InvalidChartIndex(PreconditionError):
    """Blowup chart index outside 1..n."""


class ResourceCapExceeded(CharpError):
    """Term count or elimination fill-in grew past the configured cap."""


class DimensionCapExceeded(ResourceCapExceeded):
    """A bracket-power quotient space would exceed the dimension cap."""
