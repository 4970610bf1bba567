"""Exception hierarchy shared by all dmgeo modules.

Errors are grouped into three families so callers (and the CLI exit-code
mapping) can distinguish invalid data, unmet preconditions, and numerical
failures without matching on concrete classes.
"""

from __future__ import annotations


class DmgeoError(Exception):
    """Base class for all library errors."""

    #: short machine-readable code, e.g. "TraceNotOne"
    code = "Error"

    def __str__(self) -> str:
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


class ValidationError(DmgeoError):
    """A value does not satisfy the invariants of its type."""

    code = "ValidationError"


class PreconditionError(DmgeoError):
    """An operation was called on inputs outside its domain."""

    code = "PreconditionError"


class NumericalError(DmgeoError):
    """A numerical procedure failed or produced an ambiguous result."""

    code = "NumericalError"


class DocumentError(DmgeoError):
    """A JSON document could not be parsed into a typed value."""

    code = "DocumentError"


# --- validation ---------------------------------------------------------


class NotFiniteError(ValidationError):
    code = "NotFinite"


class NotSquareError(ValidationError):
    code = "NotSquare"


class NotHermitianError(ValidationError):
    code = "NotHermitian"

    def __init__(self, deviation: float):
        super().__init__(f"max |M - M^dag| = {deviation:.3e}")
        self.deviation = deviation


class TraceNotOneError(ValidationError):
    code = "TraceNotOne"

    def __init__(self, trace: complex):
        super().__init__(f"trace = {trace}")
        self.trace = trace


class NotPositiveError(ValidationError):
    code = "NotPositive"

    def __init__(self, min_eigenvalue: float):
        super().__init__(f"most negative eigenvalue = {min_eigenvalue:.3e}")
        self.min_eigenvalue = min_eigenvalue


class NotNormalizedError(ValidationError):
    code = "NotNormalized"


class NotUnitaryError(ValidationError):
    code = "NotUnitary"


# --- preconditions ------------------------------------------------------


class DimensionMismatchError(PreconditionError):
    code = "DimensionMismatch"


class DimensionNotTwoError(PreconditionError):
    code = "DimensionNotTwo"


class RankOutOfRangeError(PreconditionError):
    code = "RankOutOfRange"


class PartialTraceMismatchError(PreconditionError):
    code = "PartialTraceMismatch"

    def __init__(self, deviation: float, tol: float):
        super().__init__(f"max entrywise deviation {deviation:.3e} exceeds tol {tol:.3e}")
        self.deviation = deviation
        self.tol = tol


class NonGenericSpectrumError(PreconditionError):
    code = "NonGenericSpectrum"


class AlreadyPureError(PreconditionError):
    code = "AlreadyPure"


class DegenerateTotalWeightError(PreconditionError):
    code = "DegenerateTotalWeight"


class OutsideBallError(PreconditionError):
    code = "OutsideBall"


# --- numerical ----------------------------------------------------------


class DecompositionFailureError(NumericalError):
    code = "DecompositionFailure"


class AmbiguousRankError(NumericalError):
    code = "AmbiguousRank"


class SamplingExhaustedError(NumericalError):
    code = "SamplingExhausted"
