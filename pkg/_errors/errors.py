"""
Exception hierarchy for membrane profile computations.

Input problems derive from ValidationError (a ValueError), numerical breakdowns
from NumericalFailure (a RuntimeError), file problems from IoFailure.
"""


class MembraneError(Exception):
    """ Base class of every error raised by this project """


class ValidationError(MembraneError, ValueError):
    """ An input is outside the domain of the requested operation """


class NumericalFailure(MembraneError, RuntimeError):
    """ A numerical stage broke down """


class DegenerateInitialHeight(ValidationError):
    """ Initial height z0 = 0 does not define a profile """


class InvalidInitialHeight(ValidationError):
    """ Initial height in (-1/c0, 0), where the boundary condition cannot hold """


class NegativeSpontaneousCurvature(ValidationError):
    """ c0 < 0 must be normalized away by z -> -z before integration """


class InvalidParameter(ValidationError):
    """ A numerical control is outside its admissible range """


class EmptyRange(ValidationError):
    """ Scan window with z_min >= z_max """


class NonPositiveRadius(ValidationError):
    """ A radius that must be positive is not """


class NonPositiveModulus(ValidationError):
    """ Bending modulus a <= 0 """


class DegenerateResolution(ValidationError):
    """ Mesh resolution too small to triangulate """


class C0Zero(ValidationError):
    """ Operation needs c0 > 0 but was given c0 = 0 """


class NotAdmissible(ValidationError):
    """ Surface does not meet the plane z = 0 orthogonally """


class SingularEvaluation(NumericalFailure):
    """ ODE right-hand side evaluated on the axis or on the boundary plane """


class IntegrationFailure(NumericalFailure):
    """ Profile integration stopped before reaching the boundary """

    def __init__(self, message: str, z0: float | None = None):
        super().__init__(message)
        self.z0 = z0


class SigmaMaxExceeded(IntegrationFailure):
    """ Arc length cap reached before the boundary event """


class AxisReturn(IntegrationFailure):
    """ Generating curve returned to the axis above the plane """


class StepFailure(IntegrationFailure):
    """ Step size collapsed inside the integrator """


class NoBoundaryData(NumericalFailure):
    """ Boundary quantities requested from a profile that never hit z = 0 """


class LostBracket(NumericalFailure):
    """ Residual signs at a bracket's ends are no longer opposite """

    def __init__(self, message: str, z0: float | None = None):
        super().__init__(message)
        self.z0 = z0


class NonConvergence(NumericalFailure):
    """ Root refinement ended with a residual above tolerance """


class BudgetExceeded(NumericalFailure):
    """ Scan budget exhausted before the requested number of roots """


class WindowEmpty(NumericalFailure):
    """ Evaluation window of a verifier contains too few points """


class PointAtSouthPoleSingularity(NumericalFailure):
    """ Ball-model map evaluated at (0, 0, -1) """


class IoFailure(MembraneError, OSError):
    """ Writing or reading an artifact failed """

    def __init__(self, path: str, cause: BaseException):
        super().__init__(f"{path}: {cause}")
        self.path = path
        self.cause = cause
