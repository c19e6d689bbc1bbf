"""
Surface of revolution generated by an integrated reduced-membrane profile
"""
import numpy as np
from _errors.errors import NotAdmissible
from _profile.profile_ode import dphi_array
from _profile.profile_solution import HALF_PI, ProfileSolution
from _surfaces.quadrature_grid import QuadratureGrid, gauss_legendre
from _surfaces.surface import AxisymmetricSurface


class ProfileSurface(AxisymmetricSurface):
    """
    Surface spanned by a ProfileSolution that hit the boundary
    """

    def __init__(self, sol: ProfileSolution, c0: float | None = None):
        """
        Initialize a profile surface

        Args:
            sol: Integrated profile
            c0: Spontaneous curvature of the functionals, defaults to the ODE's
        """
        super().__init__(sol.c0 if c0 is None else c0)
        self.sol = sol

    @property
    def sigma_b(self) -> float:
        return self._trace().sigma_b

    @property
    def phi_b(self) -> float:
        return self._trace().phi_b

    @property
    def length_scale(self) -> float:
        trace = self._trace()
        scale = min(self.sol.z0, trace.r_b)
        if self.sol.c0 > 0:
            scale = min(scale, 1.0 / self.sol.c0)
        return scale

    @property
    def min_height(self) -> float:
        return 10.0 * self.sol.z_cut

    def _trace(self):
        if not self.sol.has_boundary():
            raise NotAdmissible(
                f"profile z0={self.sol.z0} ended with {self.sol.termination.value}")
        return self.sol.require_boundary()

    def state_at(self, sigma):
        return self.sol.evaluate(sigma)

    def breakpoints(self) -> np.ndarray:
        return self.sol.sigma[1:]

    def sigma_at_height(self, height: float) -> float:
        return self.sol.sigma_at_height(height)

    def check_admissible(self, tol: float | None = None):
        self._trace()
        super().check_admissible(self.sol.params.orthogonality_tol if tol is None else tol)

    def quadrature_grid(self) -> QuadratureGrid:
        """
        Pole series on [0, sigma0], 8-point Gauss-Legendre on every arc-length
        step and, in height, on every tail step, then Gauss-Legendre on
        [sigma_cut, sigma_b] with the boundary series
        """
        sol, trace = self.sol, self._trace()
        c0, k = sol.c0, sol.pole_curvature

        s, w = gauss_legendre([0.0, sol.sigma_start])
        phi = k * s
        z = sol.z0 + 0.5 * k * s * s
        pole = QuadratureGrid(s, w, s.copy(), z, phi, np.full_like(s, k),
                              np.sin(phi) / s, np.cos(phi) / z)

        body_edges = sol.sigma[(sol.sigma > 0.0) & (sol.sigma <= sol.sigma_switch)]
        s, w = gauss_legendre(body_edges)
        r, z, phi = sol.dense(s)
        body = QuadratureGrid(s, w, r, z, phi, dphi_array(r, z, phi, c0),
                              np.sin(phi) / r, np.cos(phi) / z)

        heights, w = gauss_legendre(sol.tail.heights[::-1])
        s, r, psi = sol.tail.states(heights)
        cos_psi, sin_psi = np.cos(psi), np.sin(psi)
        tail = QuadratureGrid(s[::-1], (w / cos_psi)[::-1], r[::-1], heights[::-1],
                              (psi - HALF_PI)[::-1],
                              (-2.0 * sin_psi / heights + cos_psi / r - 2.0 * c0)[::-1],
                              (-cos_psi / r)[::-1], (sin_psi / heights)[::-1])

        s, w = gauss_legendre([sol.sigma_cut, trace.sigma_b])
        r, z, psi = sol.evaluate_offset(s)
        end = QuadratureGrid(s, w, r, z, psi - HALF_PI,
                             trace.dphi_b - trace.d2phi_b * (trace.sigma_b - s),
                             -np.cos(psi) / r, np.sin(psi) / z)
        return QuadratureGrid.concatenate([pole, body, tail, end])
