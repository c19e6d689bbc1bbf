""" Enum for the model of hyperbolic space a mesh lives in """
from enum import Enum


class MeshModel(Enum):
    """ Upper half-space or Poincare ball """
    HALF_SPACE = "HalfSpace"
    BALL = "Ball"
