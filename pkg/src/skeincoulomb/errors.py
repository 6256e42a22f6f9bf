"""Exception hierarchy shared by every module of the package."""


class SkeinCoulombError(Exception):
    """Base class for all errors raised by skeincoulomb."""


# exact arithmetic
class DegenerateScalar(SkeinCoulombError, ZeroDivisionError):
    pass


class TableMismatch(SkeinCoulombError, ValueError):
    pass


class ZeroToNegativePower(SkeinCoulombError, ZeroDivisionError):
    pass


class UnmappedSymbol(SkeinCoulombError, KeyError):
    pass


# operators and representations
class QuadraticRelationFails(SkeinCoulombError):
    pass


class BraidRelationFails(SkeinCoulombError):
    pass


class AmbiguityUnresolved(SkeinCoulombError):
    pass


class ClosedFormMismatch(SkeinCoulombError):
    pass


class UnmappedGenerator(SkeinCoulombError, KeyError):
    pass


class RangeError(SkeinCoulombError, ValueError):
    pass


# monopole operators
class DressingNotSymmetric(SkeinCoulombError, ValueError):
    pass


class IndexOutOfRange(SkeinCoulombError, IndexError):
    pass


class NotInvariant(SkeinCoulombError, ValueError):
    pass


class UnmappedParameter(SkeinCoulombError, KeyError):
    pass


# theorem checks
class MismatchBeyondScalar(SkeinCoulombError):
    pass


class MismatchExact(SkeinCoulombError):
    pass


class ConfigError(SkeinCoulombError, ValueError):
    pass
