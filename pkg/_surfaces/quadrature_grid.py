"""
Contains the QuadratureGrid class and composite Gauss-Legendre helpers
"""
import math
from dataclasses import dataclass
import numpy as np

GAUSS_ORDER = 8
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(GAUSS_ORDER)


def gauss_legendre(edges) -> tuple[np.ndarray, np.ndarray]:
    """
    Composite Gauss-Legendre rule over consecutive intervals

    Args:
        edges: Increasing interval endpoints
    Returns:
        (nodes, weights), GAUSS_ORDER nodes per interval
    """
    edges = np.asarray(edges, dtype=float)
    left, right = edges[:-1], edges[1:]
    keep = right > left
    left, right = left[keep], right[keep]
    half = 0.5 * (right - left)[:, None]
    nodes = 0.5 * (right + left)[:, None] + half * _NODES[None, :]
    weights = half * _WEIGHTS[None, :]
    return nodes.ravel(), weights.ravel()


@dataclass
class QuadratureGrid:
    """
    Quadrature nodes along a generating curve with every integrand ingredient

    Attributes:
        sigma: Arc-length nodes
        weights: Quadrature weights, so that sum(weights * f) ~ integral of f
        r, z, phi: Curve data at the nodes
        dphi: Meridian curvature phi' at the nodes
        kappa_parallel: sin(phi)/r, with its pole and boundary limits
        u: nu3/z = cos(phi)/z, with its pole and boundary limits
    """
    sigma: np.ndarray
    weights: np.ndarray
    r: np.ndarray
    z: np.ndarray
    phi: np.ndarray
    dphi: np.ndarray
    kappa_parallel: np.ndarray
    u: np.ndarray

    @property
    def H(self) -> np.ndarray:
        """ Mean curvature (phi' + sin(phi)/r) / 2 """
        return 0.5 * (self.dphi + self.kappa_parallel)

    @property
    def K(self) -> np.ndarray:
        """ Gaussian curvature phi' sin(phi)/r """
        return self.dphi * self.kappa_parallel

    @property
    def nu3(self) -> np.ndarray:
        """ Vertical component of the unit normal """
        return np.cos(self.phi)

    def integral(self, values) -> float:
        """
        Integrate sampled values against the arc length

        Args:
            values: Integrand at the nodes
        Returns:
            Weighted sum of the values
        """
        values = np.broadcast_to(np.asarray(values, dtype=float), self.weights.shape)
        return math.fsum(self.weights * values)

    def surface_integral(self, values) -> float:
        """ 2 pi times the integral of values * r, i.e. an integral over the surface """
        return 2.0 * np.pi * self.integral(np.asarray(values) * self.r)

    def reflected(self, sigma_b: float) -> "QuadratureGrid":
        """
        Mirror image of the grid through the plane z = 0

        Args:
            sigma_b: Arc length of the boundary, the reflection point
        Returns:
            Grid over [sigma_b, 2 sigma_b] of the curve (r, -z, -pi - phi),
            ordered by increasing arc length
        """
        # phi', sin(phi)/r and cos(phi)/z are invariant under the reflection
        order = slice(None, None, -1)
        return QuadratureGrid(2.0 * sigma_b - self.sigma[order], self.weights[order],
                              self.r[order], -self.z[order], -np.pi - self.phi[order],
                              self.dphi[order], self.kappa_parallel[order], self.u[order])

    @classmethod
    def concatenate(cls, parts: list["QuadratureGrid"]) -> "QuadratureGrid":
        """ Join grids of adjacent arc-length pieces """
        fields = ("sigma", "weights", "r", "z", "phi", "dphi", "kappa_parallel", "u")
        return cls(*(np.concatenate([getattr(p, name) for p in parts]) for name in fields))
