"""CY4Vertex error hierarchy

Every failure raised by the library derives from `Cy4VertexError`.
The three families map onto command exit codes:

    ScopeViolation        2  input outside the supported (no-moduli) scope
    MathematicalFailure   3  a verification or specialization did not work out
    InternalAssertion     4  an identity that must hold exactly was violated

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


#####################################################################
# Exit codes

EXIT_OK = 0
EXIT_SCOPE = 2
EXIT_MATH = 3
EXIT_INTERNAL = 4


#####################################################################
# Base classes

class Cy4VertexError(Exception):
    """Root of all library errors."""

    exit_code = EXIT_INTERNAL

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def as_record(self) -> dict:
        record = {"error": type(self).__name__, "message": self.message}
        record.update({key: str(value) for key, value in self.details.items()})
        return record


class ScopeViolation(Cy4VertexError):
    exit_code = EXIT_SCOPE


class MathematicalFailure(Cy4VertexError):
    exit_code = EXIT_MATH


class InternalAssertion(Cy4VertexError):
    exit_code = EXIT_INTERNAL


#####################################################################
# Scope violations

class ModuliPresent(ScopeViolation):
    pass


class InconsistentAsymptotics(ScopeViolation):
    pass


class UnsupportedGeometry(ScopeViolation):
    pass


class InputError(ScopeViolation):
    pass


#####################################################################
# Mathematical failures

class VerificationFailed(MathematicalFailure):
    pass


class SpecializationPole(MathematicalFailure):
    pass


class NonGenericCocharacter(MathematicalFailure):
    pass


class SearchBudgetExhausted(MathematicalFailure):
    pass


#####################################################################
# Internal assertions

class NotLaurentPolynomial(InternalAssertion):
    pass


class RedistributionFailed(InternalAssertion):
    pass


class PositiveFixedTerm(InternalAssertion):
    pass


class PoleAtFixedWeight(InternalAssertion):
    pass


class DegenerateSubstitution(InternalAssertion):
    pass


class DegenerateSquareRoot(InternalAssertion):
    pass


class FaceGluingError(InternalAssertion):
    pass


class RankMismatch(InternalAssertion):
    pass
