"""Exception types shared across the library."""


class StiefelCodesError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(StiefelCodesError):
    """Two operands do not share the same shape or scalar field."""


class InvalidParameter(StiefelCodesError, ValueError):
    """A parameter violates an operation's basic preconditions."""


class InfeasibleParameters(StiefelCodesError):
    """The requested parameters lie outside the construction's feasible range."""


class UnsupportedResidue(StiefelCodesError):
    """Block length r = 1 (mod 4), for which no Plotkin-cap construction is known."""


class UnsupportedDimension(StiefelCodesError):
    """No built-in Hurwitz-Radon generator family for this dimension."""


class NoKnownConstruction(StiefelCodesError):
    """None of the implemented strategies produces the requested object.

    This is weaker than a nonexistence claim.
    """


class UnknownDesign(StiefelCodesError):
    """Requested built-in block design name does not exist."""


class NotAnSSC(StiefelCodesError):
    """Input code does not certify as a Stiefel simplex code."""


class WrongField(StiefelCodesError):
    """Operation applied to a code over the wrong scalar field."""


class ParameterMismatch(StiefelCodesError):
    """Combined ingredients have incompatible parameters."""


class BudgetExceeded(StiefelCodesError):
    """A search exhausted its node budget before reaching a conclusion."""


class NumericalFailure(StiefelCodesError):
    """The optimizer produced a non-finite value."""


class SchemaError(StiefelCodesError, ValueError):
    """A code or design file does not match the expected JSON schema."""
