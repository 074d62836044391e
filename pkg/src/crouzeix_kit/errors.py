"""Exception hierarchy.

Errors fall in two groups.  :class:`InputError` subclasses flag violated
preconditions (bad parameters, malformed input) and also derive from
:class:`ValueError`.  :class:`NumericError` subclasses flag a computation
that could not deliver its contract on otherwise valid input.  The CLI maps
the first group to exit code 2 and the second to exit code 3.
"""


class CrouzeixKitError(Exception):
    """Base class for all package errors."""


class InputError(CrouzeixKitError, ValueError):
    pass


class NumericError(CrouzeixKitError, ArithmeticError):
    pass


# linalg
class NonHermitianError(InputError):
    pass


class DimensionTooLargeError(InputError):
    pass


class NotSingleBlockError(InputError):
    pass


class DimensionMismatchError(InputError):
    pass


# blaschke / disks
class PoleProximityError(NumericError):
    pass


class OutsideDiskError(InputError):
    pass


class NotInsideUnitDiskError(InputError):
    pass


class ZeroOutsideDiskError(InputError):
    pass


class ParameterOutOfRangeError(InputError):
    pass


# numrange
class NotUnitVectorError(InputError):
    pass


# disks
class NonSymmetricCurveError(NumericError):
    pass


class CenterOutsideCurveError(NumericError):
    pass


class UnknownFormulaError(InputError):
    pass


# levelset
class RangeNotInDiskError(InputError):
    pass


class DegreeOrderError(InputError):
    pass


# crouzeix
class NotInvertibleAtZeroError(InputError):
    pass


class ComplexRootsError(NumericError):
    pass


class DegenerateCubicError(NumericError):
    pass


class MethodUnavailableError(InputError):
    pass
