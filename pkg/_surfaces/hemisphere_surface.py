"""
Closed-form hemisphere of radius R centered on the plane z = 0
"""
import numpy as np
from _errors.errors import NonPositiveRadius
from _surfaces.quadrature_grid import QuadratureGrid, gauss_legendre
from _surfaces.surface import AxisymmetricSurface

PANELS = 64


class HemisphereSurface(AxisymmetricSurface):
    """
    r = R sin(sigma/R), z = R cos(sigma/R), phi = -sigma/R on [0, pi R/2]
    """

    def __init__(self, R: float, c0: float):
        if not R > 0:
            raise NonPositiveRadius(f"hemisphere radius R = {R} must be positive")
        super().__init__(c0)
        self.R = R

    @property
    def sigma_b(self) -> float:
        return 0.5 * np.pi * self.R

    @property
    def phi_b(self) -> float:
        return -0.5 * np.pi

    @property
    def length_scale(self) -> float:
        return self.R

    def state_at(self, sigma):
        t = np.asarray(sigma, dtype=float) / self.R
        return self.R * np.sin(t), self.R * np.cos(t), -t

    def sigma_at_height(self, height: float) -> float:
        return float(self.R * np.arccos(height / self.R))

    def quadrature_grid(self) -> QuadratureGrid:
        s, w = gauss_legendre(self.breakpoints())
        r, z, phi = self.state_at(s)
        curvature = np.full_like(s, -1.0 / self.R)
        return QuadratureGrid(s, w, r, z, phi, curvature, curvature.copy(),
                              np.full_like(s, 1.0 / self.R))

    def breakpoints(self) -> np.ndarray:
        return np.linspace(0.0, self.sigma_b, PANELS + 1)
