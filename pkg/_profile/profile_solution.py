"""
Contains the ProfileSolution class storing an integrated generating curve
"""
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional
import numpy as np
from scipy.optimize import brentq
from _enums.state_location import StateLocation
from _enums.termination import Termination
from _errors.errors import NoBoundaryData
from _profile.height_tail import HeightTail
from _profile.model_params import ModelParams
from _profile.profile_state import ProfileState

HALF_PI = 0.5 * np.pi


class BoundaryTrace(NamedTuple):
    """ Limit values of a profile on the plane z = 0 """
    sigma_b: float
    r_b: float
    phi_b: float
    dphi_b: float
    d2phi_b: float
    dH_dn: float


def invert_height(dense: Callable, t_steps: np.ndarray, z_steps: np.ndarray,
                  height: float) -> float:
    """
    Arc length at which the dense output reaches a given height

    Args:
        dense: Dense output callable returning (r, z, phi) at an arc length
        t_steps: Arc lengths of the integrator steps
        z_steps: Heights at those steps
        height: Target height
    Returns:
        Arc length sigma with z(sigma) = height
    """
    # z is non-increasing along profiles with phi in (-pi, 0]
    lowest = np.minimum.accumulate(z_steps)
    idx = int(np.searchsorted(-lowest, -height))
    if idx == 0:
        return float(t_steps[0])
    if idx >= len(t_steps):
        return float(t_steps[-1])
    left, right = float(t_steps[idx - 1]), float(t_steps[idx])
    if z_steps[idx] == height:
        return right
    return brentq(lambda s: dense(s)[1] - height, left, right,
                  xtol=1e-15, maxiter=200)


@dataclass
class ProfileSolution:
    """
    Densely sampled generating curve from the pole down to the plane z = 0

    Attributes:
        params: Parameters used for the integration
        z0: Initial height after the z -> -z normalization (always > 0)
        sigma, r, z, phi: Sample arrays; the first row is the pole and, on
            boundary profiles, the last row is the boundary trace
        termination: How the integration ended
        sigma_start: Arc length where the pole series handed over
        sigma_cut: Last arc length reached by an integrator
        dense: Arc-length dense output on [sigma_start, sigma_switch]
        tail: Height-parametrized continuation below the switch, None unless
            the profile hit the boundary
        requested_z0: Initial height as requested, before normalization
        normalized: Whether z -> -z was applied
        sigma_b, r_b, phi_b, dphi_b, d2phi_b: Boundary trace, None unless
            the profile hit the boundary
        message: Integrator message
    """
    params: ModelParams
    z0: float
    sigma: np.ndarray
    r: np.ndarray
    z: np.ndarray
    phi: np.ndarray
    termination: Termination
    sigma_start: float
    sigma_cut: float
    dense: Optional[Callable] = field(default=None, repr=False)
    tail: Optional[HeightTail] = field(default=None, repr=False)
    requested_z0: float = 0.0
    normalized: bool = False
    sigma_b: Optional[float] = None
    r_b: Optional[float] = None
    phi_b: Optional[float] = None
    dphi_b: Optional[float] = None
    d2phi_b: Optional[float] = None
    message: str = ""

    @property
    def c0(self) -> float:
        """ Spontaneous curvature the profile was integrated with """
        return self.params.c0

    @property
    def pole_curvature(self) -> float:
        """ phi'(0) = -(1/z0 + c0), the umbilic curvature at the pole """
        return -(1.0 / self.z0 + self.params.c0)

    @property
    def samples(self) -> list[ProfileState]:
        """ Samples as ProfileState records, pole first """
        return [ProfileState(float(s), float(r), float(z), float(p))
                for s, r, z, p in zip(self.sigma, self.r, self.z, self.phi)]

    def locations(self) -> list[StateLocation]:
        """
        Where each sample sits on the curve

        Returns:
            POLE for the first row, BOUNDARY for the trace row, INTERIOR otherwise
        """
        places = [StateLocation.INTERIOR] * len(self.sigma)
        places[0] = StateLocation.POLE
        if self.has_boundary():
            places[-1] = StateLocation.BOUNDARY
        return places

    def has_boundary(self) -> bool:
        """ Whether boundary data is available """
        return self.termination.is_boundary() and self.sigma_b is not None

    def require_boundary(self) -> BoundaryTrace:
        """
        Boundary trace of the profile

        Returns:
            BoundaryTrace with dH_dn = phi''_b / 2
        Raises:
            NoBoundaryData: the profile did not reach z = 0
        """
        if not self.has_boundary():
            raise NoBoundaryData(
                f"profile z0={self.z0} ended with {self.termination.value}")
        return BoundaryTrace(self.sigma_b, self.r_b, self.phi_b, self.dphi_b,
                             self.d2phi_b, 0.5 * self.d2phi_b)

    @property
    def sigma_end(self) -> float:
        """ Largest arc length with data """
        return self.sigma_b if self.has_boundary() else self.sigma_cut

    @property
    def sigma_switch(self) -> float:
        """ End of the arc-length dense output """
        return self.tail.sigma_switch if self.tail is not None else self.sigma_cut

    @property
    def z_cut(self) -> float:
        """ Cutoff height z_cutoff_factor * z0 """
        return self.params.z_cutoff_factor * self.z0

    def evaluate_offset(self, sigma) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Curve position and psi = phi + pi/2 at arbitrary arc lengths

        psi keeps its relative accuracy next to the plane, where phi is close
        to -pi/2 and cos(phi) would lose digits.

        Args:
            sigma: Scalar or array of arc lengths in [0, sigma_end]
        Returns:
            Arrays (r, z, psi) with the shape of sigma
        """
        s = np.atleast_1d(np.asarray(sigma, dtype=float))
        r = np.empty_like(s)
        z = np.empty_like(s)
        psi = np.empty_like(s)

        pole = s < self.sigma_start
        k = self.pole_curvature
        r[pole] = s[pole]
        z[pole] = self.z0 + 0.5 * k * s[pole] ** 2
        psi[pole] = k * s[pole] + HALF_PI

        body = ~pole & (s <= self.sigma_switch)
        if np.any(body):
            values = self.dense(s[body])
            r[body], z[body], psi[body] = values[0], values[1], values[2] + HALF_PI

        tail = (s > self.sigma_switch) & (s <= self.sigma_cut)
        if np.any(tail):
            heights = self.tail.heights_at(s[tail])
            _, r[tail], psi[tail] = self.tail.states(heights)
            z[tail] = heights

        end = s > self.sigma_cut
        if np.any(end):
            # regular expansion in tau = sigma_b - sigma below the integrated range
            trace = self.require_boundary()
            tau = np.clip(trace.sigma_b - s[end], 0.0, None)
            psi[end] = -trace.dphi_b * tau + 0.5 * trace.d2phi_b * tau * tau
            r[end] = trace.r_b + 0.5 * trace.dphi_b * tau * tau
            z[end] = tau

        if np.ndim(sigma) == 0:
            return r[0], z[0], psi[0]
        return r, z, psi

    def evaluate(self, sigma) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Curve position and angle at arbitrary arc lengths

        Args:
            sigma: Scalar or array of arc lengths in [0, sigma_end]
        Returns:
            Arrays (r, z, phi) with the shape of sigma
        """
        r, z, psi = self.evaluate_offset(sigma)
        return r, z, psi - HALF_PI

    def sigma_at_height(self, height: float) -> float:
        """
        Arc length where the profile reaches a height

        Args:
            height: Height in (0, z0]
        Returns:
            Arc length sigma with z(sigma) = height
        """
        k = self.pole_curvature
        z_start = self.z0 + 0.5 * k * self.sigma_start ** 2
        if height >= z_start:
            return float(np.sqrt(max(2.0 * (height - self.z0) / k, 0.0)))
        if self.tail is not None and height <= self.tail.z_switch:
            if height < self.tail.z_end:
                return self.sigma_b - height
            return float(self.tail.states(np.array([height]))[0][0])
        body = (self.sigma > 0.0) & (self.sigma <= self.sigma_switch)
        return invert_height(self.dense, self.sigma[body], self.z[body], height)
