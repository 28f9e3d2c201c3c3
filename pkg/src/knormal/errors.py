"""Exception hierarchy.

Three families, matching the CLI exit codes:

* ``ParseError`` -- malformed user input (exit 1).
* ``PreconditionError`` -- a mathematical precondition does not hold (exit 2).
* ``InternalInvariantError`` -- a computed object contradicts a theorem;
  always a bug (exit 3).
"""


class KNormalError(Exception):
    """Base class for every error raised by this package."""


class ParseError(KNormalError, ValueError):
    pass


class PreconditionError(KNormalError, ValueError):
    pass


class InternalInvariantError(KNormalError, RuntimeError):
    pass


# field_core
class NonPrimeP(PreconditionError):
    pass


class ReducibleModulus(PreconditionError):
    pass


class DegreeMismatch(PreconditionError):
    pass


class DivisionByZero(PreconditionError, ZeroDivisionError):
    pass


class DNotDividingN(PreconditionError):
    pass


class ZeroElement(PreconditionError):
    pass


class CoercionFailure(InternalInvariantError):
    pass


# poly_ring
class MixedFields(PreconditionError):
    pass


class GcdOfZeros(PreconditionError):
    pass


class NonCoprimeModuli(PreconditionError):
    pass


class InternalDescentFailure(InternalInvariantError):
    pass


# linearized
class ZeroDivisor(PreconditionError):
    pass


class NoAnnihilator(InternalInvariantError):
    pass


# cyclo_idem / normality
class NotCoprime(PreconditionError):
    pass


class PDividesN(PreconditionError):
    pass


class NNotPrime(PreconditionError):
    pass


class OrderMismatch(PreconditionError):
    pass


class SingularM(InternalInvariantError):
    pass


class FieldTooLarge(PreconditionError):
    pass
