"""
Contains the ProfileState class representing one point of a generating curve
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class ProfileState:
    """
    A single point of the arc-length parametrized generating curve

    Attributes:
        sigma: Arc length measured from the pole
        r: Distance from the axis of revolution (>= 0)
        z: Height above the plane z = 0 (> 0 in the interior)
        phi: Angle between the positive r-axis and the tangent, in radians
    """
    sigma: float
    r: float
    z: float
    phi: float
