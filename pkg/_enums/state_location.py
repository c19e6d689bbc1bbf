""" Enum for where on a profile a state sits """
from enum import Enum, auto


class StateLocation(Enum):
    """ Interior states use the ODE directly, pole and boundary use limits """
    INTERIOR = auto()
    POLE = auto()
    BOUNDARY = auto()
