"""
Surface of revolution rebuilt from tabulated profile samples
"""
import numpy as np
from scipy.interpolate import CubicSpline
from _errors.errors import InvalidParameter
from _surfaces.quadrature_grid import QuadratureGrid, gauss_legendre
from _surfaces.surface import AxisymmetricSurface


class SampledSurface(AxisymmetricSurface):
    """
    Profile samples (sigma, r, z, phi, H) with a pole row first and a boundary
    row (z = 0) last, interpolated by cubic splines
    """

    def __init__(self, sigma, r, z, phi, H, c0: float):
        """
        Initialize from sample columns

        Args:
            sigma, r, z, phi: Generating curve samples, sigma strictly increasing
            H: Mean curvature at the samples
            c0: Spontaneous curvature used by the functionals
        """
        super().__init__(c0)
        self.sigma = np.asarray(sigma, dtype=float)
        self.r = np.asarray(r, dtype=float)
        self.z = np.asarray(z, dtype=float)
        self.phi = np.asarray(phi, dtype=float)
        self.H = np.asarray(H, dtype=float)
        if self.sigma.size < 4 or np.any(np.diff(self.sigma) <= 0):
            raise InvalidParameter("need at least 4 samples with increasing sigma")
        if self.r[0] != 0.0 or self.z[-1] != 0.0:
            raise InvalidParameter("samples must run from the pole (r = 0) to z = 0")

        # limits at the pole (umbilic) and at the boundary (kappa_parallel = -1/r_b)
        kappa_parallel = np.empty_like(self.r)
        kappa_parallel[1:-1] = np.sin(self.phi[1:-1]) / self.r[1:-1]
        kappa_parallel[0] = self.H[0]
        kappa_parallel[-1] = -1.0 / self.r[-1]
        dphi = 2.0 * self.H - kappa_parallel
        u = np.empty_like(self.r)
        u[:-1] = np.cos(self.phi[:-1]) / self.z[:-1]
        u[-1] = -dphi[-1]
        self._splines = {name: CubicSpline(self.sigma, values) for name, values in
                         (("r", self.r), ("z", self.z), ("phi", self.phi),
                          ("dphi", dphi), ("kappa_parallel", kappa_parallel), ("u", u))}

    @classmethod
    def from_columns(cls, columns: dict, c0: float) -> "SampledSurface":
        """ Build from a dict of CSV columns keyed sigma, r, z, phi, H """
        return cls(columns["sigma"], columns["r"], columns["z"], columns["phi"],
                   columns["H"], c0)

    @property
    def sigma_b(self) -> float:
        return float(self.sigma[-1])

    @property
    def phi_b(self) -> float:
        return float(self.phi[-1])

    @property
    def length_scale(self) -> float:
        scale = min(self.z[0], self.r[-1])
        return min(scale, 1.0 / self.c0) if self.c0 > 0 else scale

    @property
    def min_height(self) -> float:
        return 10.0 * float(self.z[-2])

    def state_at(self, sigma):
        s = np.asarray(sigma, dtype=float)
        return self._splines["r"](s), self._splines["z"](s), self._splines["phi"](s)

    def breakpoints(self) -> np.ndarray:
        return self.sigma

    def quadrature_grid(self) -> QuadratureGrid:
        s, w = gauss_legendre(self.sigma)
        values = {name: spline(s) for name, spline in self._splines.items()}
        return QuadratureGrid(s, w, values["r"], values["z"], values["phi"],
                              values["dphi"], values["kappa_parallel"], values["u"])
