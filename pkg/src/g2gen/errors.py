"""Exception hierarchy shared across the package."""


class G2GenError(Exception):
    """Base class for all package errors."""


# -- field construction / arithmetic ---------------------------------------

class NotPrime(G2GenError):
    pass


class DegreeTooLarge(G2GenError):
    pass


class DivisionByZero(G2GenError):
    pass


class NotADivisor(G2GenError):
    """A field/divisor level m was requested with m not dividing the ambient degree."""


# -- curves and divisors ----------------------------------------------------

class Singular(G2GenError):
    pass


class BadDegree(G2GenError):
    pass


class EvenCharacteristic(G2GenError):
    pass


class RngExhausted(G2GenError):
    pass


# -- zeta / classification ---------------------------------------------------

class TooLarge(G2GenError):
    pass


class InternalInconsistency(G2GenError):
    pass


class Overflow(G2GenError):
    pass


class BadInput(G2GenError):
    pass


class DoesNotSplit(G2GenError):
    pass


class NotDivisible(G2GenError):
    pass


class ZeroEigenvalue(G2GenError):
    pass


class PreconditionFailed(G2GenError):
    pass


# -- pairing ------------------------------------------------------------------

class SharedSupport(G2GenError):
    """A Miller-step function had a zero or pole at an evaluation point."""


class NotTorsion(G2GenError):
    pass


class RetriesExhausted(G2GenError):
    pass


class NotInMu(G2GenError):
    pass


# -- torsion basis machinery ---------------------------------------------------

class GeneratorSearchFailure(G2GenError):
    """The randomized generator search ran out of budget (the probabilistic
    failure output, distinct from a precondition or internal error)."""


class NotABasis(G2GenError):
    pass


class ReconstructionMismatch(G2GenError):
    pass


class NonCyclicRational(G2GenError):
    """The rational ell-torsion subgroup is not cyclic, violating the standing
    assumption of the generator-finding procedures."""


# -- CLI -----------------------------------------------------------------------

class ParseError(G2GenError):
    pass
