""" Enum for profile integration termination """
from enum import Enum


class Termination(Enum):
    """ How an integration of the generating curve ended """
    HIT_BOUNDARY = "HitBoundary"
    SIGMA_MAX_EXCEEDED = "SigmaMaxExceeded"
    AXIS_RETURN = "AxisReturn"
    STEP_FAILURE = "StepFailure"

    def is_boundary(self) -> bool:
        """ Whether the profile reached the plane z = 0 """
        return self == Termination.HIT_BOUNDARY
