"""Exception types shared across the package."""


class GnkError(Exception):
    """Base class for every error raised by this package."""


class NonzeroRemainder(GnkError, ArithmeticError):
    """An exact polynomial (or integer) division left a remainder.

    Every rational expression evaluated here is supposed to be a polynomial,
    so this signals a falsified identity or a bug, never a value.
    """


class NonIntegerValue(GnkError, ArithmeticError):
    """A closed-form limit polynomial did not evaluate to an integer."""


class ZeroPolynomial(GnkError, ValueError):
    """An operation undefined on the zero polynomial (e.g. darga) got zero."""


class NotSymmetricUnimodal(GnkError, ValueError):
    pass


class NotSymmetric(GnkError, ValueError):
    pass


class UnsupportedShape(GnkError, ValueError):
    """No closed form is known for this partition shape."""


class OutOfValidityRange(GnkError, ValueError):
    """A closed form was requested below its stated range of ``n``."""


class OutOfCoverage(GnkError, ValueError):
    """The depth formula is not proven for this ``(n, k)``."""


class SingularLine(GnkError, ZeroDivisionError):
    """The forward size-``s`` recurrence reached ``n = k + s - 1``."""
