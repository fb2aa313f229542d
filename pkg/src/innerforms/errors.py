"""Library errors with stable machine-readable codes.

Every domain error carries a ``code`` string that the command-line
front end forwards verbatim; the codes are part of the public contract.
"""


class InnerFormsError(Exception):
    """Base class for all domain errors."""

    code = "domain-error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class UnknownIrreducibleError(InnerFormsError):
    code = "unknown-irreducible"


class InvalidBrauerClassError(InnerFormsError):
    code = "invalid-class"


class MissingSplittingDataError(InnerFormsError):
    code = "missing-splitting-data"


class DegreeMismatchError(InnerFormsError):
    code = "degree-mismatch"


class InvalidCharPolyError(InnerFormsError):
    code = "invalid-charpoly"


class CharPolyMismatchError(InnerFormsError):
    code = "charpoly-mismatch"


class AlgebraMismatchError(InnerFormsError):
    code = "algebra-mismatch"


class MissingCoefficientsError(InnerFormsError):
    code = "missing-coefficients"


class UnregisteredFactorError(InnerFormsError):
    code = "unregistered-factor"


class InvalidCompositionError(InnerFormsError):
    code = "invalid-composition"


class NotARootError(InnerFormsError):
    code = "not-a-root"


class NotNestedError(InnerFormsError):
    code = "not-nested"
