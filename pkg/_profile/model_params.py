"""
Contains the ModelParams class holding spontaneous curvature and numerical controls
"""
from dataclasses import dataclass, asdict
from typing import Optional
from _errors.errors import NegativeSpontaneousCurvature, InvalidParameter


@dataclass(frozen=True)
class ModelParams:
    """
    Spontaneous curvature plus every numerical control of a profile integration

    Attributes:
        c0: Spontaneous curvature (1/length, >= 0)
        abs_tol: Absolute tolerance of the integrator
        rel_tol: Relative tolerance of the integrator
        sigma0: Arc length at which the pole series hands over to the
            integrator; None picks 1e-4 * max(|z0|, 1) per height
        z_cutoff_factor: Boundary event height as a fraction of z0, in (0, 1e-4]
        sigma_max: Hard cap on the arc length
        root_tol: Residual tolerance of equilibrium root refinement
        orthogonality_tol: Allowed |phi_b + pi/2| on boundary profiles
    """
    c0: float = 0.0
    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    sigma0: Optional[float] = None
    z_cutoff_factor: float = 1e-6
    sigma_max: float = 200.0
    root_tol: float = 1e-8
    orthogonality_tol: float = 1e-6

    def __post_init__(self):
        if self.c0 < 0:
            raise NegativeSpontaneousCurvature(
                f"c0 = {self.c0} < 0; apply z -> -z to normalize the sign")
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise InvalidParameter("integrator tolerances must be positive")
        if self.sigma0 is not None and self.sigma0 <= 0:
            raise InvalidParameter(f"sigma0 = {self.sigma0} must be positive")
        if not 0 < self.z_cutoff_factor <= 1e-4:
            raise InvalidParameter(
                f"z_cutoff_factor = {self.z_cutoff_factor} not in (0, 1e-4]")
        if self.sigma_max <= 0:
            raise InvalidParameter("sigma_max must be positive")
        if self.root_tol <= 0:
            raise InvalidParameter("root_tol must be positive")

    def start_offset(self, z0: float) -> float:
        """
        Arc length where integration starts for a given initial height

        Args:
            z0: Initial height
        Returns:
            sigma0 if set, otherwise 1e-4 * max(|z0|, 1)
        """
        if self.sigma0 is not None:
            return self.sigma0
        return 1e-4 * max(abs(z0), 1.0)

    def refined(self, factor: float = 0.5) -> "ModelParams":
        """
        Copy with tolerances (and an explicit sigma0) scaled by a factor

        Args:
            factor: Multiplier applied to abs_tol, rel_tol and sigma0
        Returns:
            New ModelParams for convergence studies
        """
        values = asdict(self)
        values["abs_tol"] *= factor
        values["rel_tol"] *= factor
        if self.sigma0 is not None:
            values["sigma0"] *= factor
        return ModelParams(**values)

    def to_dict(self) -> dict:
        """ Plain dict of every field, used for the config block of outputs """
        return asdict(self)
