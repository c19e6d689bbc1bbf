""" Enum for the two equilibrium residuals """
from enum import Enum


class ResidualKind(Enum):
    """ Mean-curvature excess integral or boundary value of phi'' """
    MEAN = "residual_mean"
    PHI2 = "residual_phi2"
