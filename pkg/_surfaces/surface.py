"""
Models a generic surface of revolution meeting the plane z = 0
"""
import math
import numpy as np
from scipy.optimize import brentq
from _errors.errors import NegativeSpontaneousCurvature, NotAdmissible
from _surfaces.quadrature_grid import QuadratureGrid, gauss_legendre


class AxisymmetricSurface:
    """
    General surface of revolution in the upper half-space, given by its
    generating curve (r, z, phi) over sigma in [0, sigma_b]
    """

    def __init__(self, c0: float):
        """
        Initialize the surface

        Args:
            c0: Spontaneous curvature used by the functionals
        """
        if c0 < 0:
            raise NegativeSpontaneousCurvature(f"c0 = {c0} < 0")
        self.c0 = c0

    def __repr__(self):
        """
        String representation of the surface

        Returns:
            Class name with c0 and sigma_b
        """
        return f"{type(self).__name__}(c0={self.c0}, sigma_b={self.sigma_b:.6g})"

    @property
    def sigma_b(self) -> float:
        """ Arc length of the generating curve from pole to boundary """
        raise NotImplementedError

    @property
    def phi_b(self) -> float:
        """ Tangent angle where the curve meets z = 0 """
        raise NotImplementedError

    @property
    def length_scale(self) -> float:
        """ Smallest geometric length of the surface, used to size height ladders """
        raise NotImplementedError

    @property
    def min_height(self) -> float:
        """ Lowest height at which interior data is trustworthy """
        return 0.0

    def state_at(self, sigma):
        """
        Generating curve at arbitrary arc lengths

        Args:
            sigma: Scalar or array in [0, sigma_b]
        Returns:
            (r, z, phi)
        """
        raise NotImplementedError

    def quadrature_grid(self) -> QuadratureGrid:
        """
        Quadrature nodes covering [0, sigma_b] with all integrand ingredients

        Returns:
            QuadratureGrid for this surface
        """
        raise NotImplementedError

    def breakpoints(self) -> np.ndarray:
        """ Arc lengths where the curve representation changes piece """
        return np.linspace(0.0, self.sigma_b, 65)

    def sigma_at_height(self, height: float) -> float:
        """
        Arc length at which the curve reaches a height

        Args:
            height: Height in (0, z(0))
        Returns:
            sigma with z(sigma) = height
        """
        return brentq(lambda s: self.state_at(s)[1] - height, 0.0, self.sigma_b,
                      xtol=1e-15, maxiter=200)

    def integrate(self, fn, start: float, stop: float) -> float:
        """
        Composite Gauss-Legendre integral of fn(sigma, r, z, phi) on [start, stop]

        Args:
            fn: Vectorized integrand of arc length and curve data
            start: Lower arc length
            stop: Upper arc length
        Returns:
            Integral value
        """
        inner = self.breakpoints()
        inner = inner[(inner > start) & (inner < stop)]
        nodes, weights = gauss_legendre(np.concatenate(([start], inner, [stop])))
        r, z, phi = self.state_at(nodes)
        return float(np.dot(weights, fn(nodes, r, z, phi)))

    def check_admissible(self, tol: float = 1e-6):
        """
        Require the surface to meet z = 0 orthogonally

        Args:
            tol: Allowed |phi_b + pi/2|
        Raises:
            NotAdmissible: the intersection angle is off by more than tol
        """
        gap = abs(self.phi_b + 0.5 * math.pi)
        if not gap < tol:
            raise NotAdmissible(
                f"{self!r} meets z = 0 at |phi_b + pi/2| = {gap:.3e} > {tol:.1e}")
