"""
Contains the HeightTail class, the generating curve next to the plane z = 0
parametrized by height
"""
from dataclasses import dataclass, field
from typing import Callable
import numpy as np

# Newton sweeps of the arc-length to height inversion
NEWTON_SWEEPS = 4


@dataclass
class HeightTail:
    """
    Dense solution of the height-parametrized system below the switch height

    The state is (sigma - sigma_switch, r, psi) with psi = phi + pi/2, which
    keeps the tangent angle relative to the vertical and so carries relative
    accuracy all the way down to the plane.

    Attributes:
        sigma_switch: Arc length at which the integration changed variable
        z_switch: Height of the switch
        z_end: Lowest height integrated
        heights: Integrator step heights, decreasing from z_switch to z_end
        dense: Dense output mapping heights to rows (sigma - sigma_switch, r, psi)
    """
    sigma_switch: float
    z_switch: float
    z_end: float
    heights: np.ndarray
    dense: Callable = field(repr=False)

    def states(self, heights) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Arc length, radius and psi at heights in [z_end, z_switch]

        Args:
            heights: Array of heights
        Returns:
            (sigma, r, psi) arrays
        """
        values = self.dense(np.asarray(heights, dtype=float))
        return self.sigma_switch + values[0], values[1], values[2]

    @property
    def step_sigmas(self) -> np.ndarray:
        """ Arc lengths of the integrator steps, increasing """
        return self.states(self.heights)[0]

    @property
    def sigma_end(self) -> float:
        """ Arc length at z_end """
        return float(self.states(np.array([self.z_end]))[0][0])

    def heights_at(self, sigma) -> np.ndarray:
        """
        Invert sigma(z) with dsigma/dz = -1/cos(psi)

        Args:
            sigma: Arc lengths in [sigma_switch, sigma_end]
        Returns:
            Heights z with sigma(z) = sigma
        """
        target = np.asarray(sigma, dtype=float)
        steps = self.step_sigmas
        z = np.interp(target, steps, self.heights)
        for _ in range(NEWTON_SWEEPS):
            s, _, psi = self.states(z)
            z = np.clip(z + (s - target) * np.cos(psi), self.z_end, self.z_switch)
        return z
