"""
Regularized functionals of surfaces meeting the ideal boundary z = 0.

All integrals are surface integrals over a surface of revolution, written as
2 pi times an arc-length integral weighted by r. With u = nu3/z:

    A_R = 2 pi int (2 H u + u^2) r dsigma
    U_R = -2 pi int u r dsigma
    G_R = A_R - 2 c0 U_R
"""
import logging
import math
from typing import NamedTuple
import numpy as np
from scipy.integrate import quad
from scipy.interpolate import BarycentricInterpolator
from _errors.errors import NonPositiveModulus, NonPositiveRadius
from _functionals.energy_report import EnergyReport
from _surfaces.quadrature_grid import QuadratureGrid
from _surfaces.surface import AxisymmetricSurface

logger = logging.getLogger(__name__)

# cut heights z_hat = length_scale / LADDER_TOP * 2**-k, k < LADDER_LEVELS
LADDER_TOP = 8.0
LADDER_LEVELS = 10
TWO_PI = 2.0 * math.pi


class AreaEstimate(NamedTuple):
    """ Renormalized area by both computation methods """
    regular: float
    limit: float

    @property
    def value(self) -> float:
        """ Production value (regular method) """
        return self.regular

    @property
    def method_discrepancy(self) -> float:
        """ |limit - regular| """
        return abs(self.limit - self.regular)


class EnergyIdentityCheck(NamedTuple):
    """ Identity residual and inequality slack of the energy comparison """
    residual: float
    slack: float


class GaussBonnetCheck(NamedTuple):
    """ Total Gaussian curvature of a half surface and its distance from 2 pi """
    total: float
    discrepancy: float


def _admissible_grid(surface: AxisymmetricSurface) -> QuadratureGrid:
    surface.check_admissible()
    return surface.quadrature_grid()


def _area_regular(grid: QuadratureGrid) -> float:
    return grid.surface_integral(2.0 * grid.H * grid.u + grid.u ** 2)


def _potential(grid: QuadratureGrid) -> float:
    return -grid.surface_integral(grid.u)


def _helfrich(grid: QuadratureGrid, c0: float, a: float, b: float) -> float:
    return grid.surface_integral(a * (grid.H + c0) ** 2 + b * grid.K)


def _excess(grid: QuadratureGrid, c0: float) -> float:
    return grid.surface_integral((grid.H + c0 + grid.u) ** 2)


def height_ladder(surface: AxisymmetricSurface) -> np.ndarray:
    """
    Decreasing cut heights for counterterm limits

    Args:
        surface: Admissible surface
    Returns:
        Heights length_scale/8 * 2**-k above the surface's trusted floor
    """
    heights = surface.length_scale / LADDER_TOP * 2.0 ** -np.arange(LADDER_LEVELS)
    return heights[heights >= surface.min_height]


def counterterm_limit(surface: AxisymmetricSurface, integrand, counterterm) -> float:
    """
    Limit of a divergent integral over {z >= z_hat} plus a boundary counterterm

    Args:
        surface: Admissible surface
        integrand: Vectorized fn(sigma, r, z, phi) integrated in arc length
        counterterm: fn(r, z_hat, phi) evaluated on the cut circle
    Returns:
        Polynomial extrapolation to z_hat = 0 of the regularized values
    """
    heights = height_ladder(surface)
    sigmas = [surface.sigma_at_height(h) for h in heights]
    total = surface.integrate(integrand, 0.0, sigmas[0])
    values = []
    previous = sigmas[0]
    for height, sigma in zip(heights, sigmas):
        if sigma > previous:
            piece, _ = quad(lambda s: float(integrand(s, *surface.state_at(s))),
                            previous, sigma, epsabs=1e-13, epsrel=1e-13, limit=200)
            total += piece
            previous = sigma
        r, _, phi = surface.state_at(sigma)
        values.append(total + counterterm(float(r), height, float(phi)))
    limit = float(BarycentricInterpolator(heights, values)(0.0))
    logger.debug("counterterm limit over %d heights down to %.3g: %.12g",
                 len(heights), heights[-1], limit)
    return limit


def area_regularized(surface: AxisymmetricSurface) -> AreaEstimate:
    """
    Renormalized area by the regular integrand and by the defining limit

    Args:
        surface: Surface meeting z = 0 orthogonally
    Returns:
        AreaEstimate; .value is the regular-method result
    Raises:
        NotAdmissible: the surface is not orthogonal to z = 0
    """
    grid = _admissible_grid(surface)
    return AreaEstimate(_area_regular(grid), area_regularized_limit(surface))


def area_regularized_limit(surface: AxisymmetricSurface) -> float:
    """
    A_R as lim 2 pi [int_{z >= z_hat} r/z^2 dsigma + r sin(phi)/z_hat]

    Args:
        surface: Surface meeting z = 0 orthogonally
    Returns:
        Extrapolated renormalized area
    """
    surface.check_admissible()
    return TWO_PI * counterterm_limit(
        surface, lambda s, r, z, phi: r / z ** 2,
        lambda r, z_hat, phi: r * math.sin(phi) / z_hat)


def potential_regularized(surface: AxisymmetricSurface) -> float:
    """
    Regularized potential U_R = -int nu3/z dSigma

    Args:
        surface: Surface meeting z = 0 orthogonally
    Returns:
        U_R
    Raises:
        NotAdmissible: the surface is not orthogonal to z = 0
    """
    return _potential(_admissible_grid(surface))


def potential_regularized_limit(surface: AxisymmetricSurface) -> float:
    """
    U_R from the volume potential of the region under the surface, as
    lim pi [int_{z >= z_hat} r^2 (-sin phi)/z^2 dsigma - r^2/z_hat]

    Args:
        surface: Surface meeting z = 0 orthogonally
    Returns:
        Extrapolated regularized potential
    """
    surface.check_admissible()
    return math.pi * counterterm_limit(
        surface, lambda s, r, z, phi: -r * r * np.sin(phi) / z ** 2,
        lambda r, z_hat, phi: -r * r / z_hat)


def g_regularized(surface: AxisymmetricSurface) -> float:
    """
    G_R = A_R - 2 c0 U_R

    Args:
        surface: Surface meeting z = 0 orthogonally
    Returns:
        G_R with the surface's c0
    """
    grid = _admissible_grid(surface)
    return _area_regular(grid) - 2.0 * surface.c0 * _potential(grid)


def helfrich_energy(surface: AxisymmetricSurface, a: float = 1.0, b: float = 0.0) -> float:
    """
    Helfrich energy int (a (H + c0)^2 + b K) dSigma

    Args:
        surface: Surface meeting z = 0 orthogonally
        a: Bending modulus, > 0
        b: Gaussian modulus
    Returns:
        Energy value
    Raises:
        NonPositiveModulus: a <= 0
        NotAdmissible: the surface is not orthogonal to z = 0
    """
    if not a > 0:
        raise NonPositiveModulus(f"bending modulus a = {a} must be positive")
    return _helfrich(_admissible_grid(surface), surface.c0, a, b)


def willmore_energy(surface: AxisymmetricSurface) -> float:
    """ int (H^2 - K) dSigma, the c0 = 0, b = -a case of the Helfrich energy """
    grid = _admissible_grid(surface)
    return grid.surface_integral(grid.H ** 2 - grid.K)


def hyperbolic_excess(surface: AxisymmetricSurface) -> float:
    """
    int (H_hyp + c0 z)^2 dSigma_hyp, written as int (H + c0 + nu3/z)^2 dSigma

    Args:
        surface: Surface meeting z = 0 orthogonally
    Returns:
        Nonnegative excess, zero on reduced-membrane profiles
    """
    return _excess(_admissible_grid(surface), surface.c0)


def theorem1_residual(surface: AxisymmetricSurface) -> EnergyIdentityCheck:
    """
    Compare -G_R + excess with the Helfrich energy (a = 1, b = 0)

    Args:
        surface: Surface meeting z = 0 orthogonally
    Returns:
        EnergyIdentityCheck with residual |-G_R + excess - helfrich| and slack
        helfrich + G_R
    """
    grid = _admissible_grid(surface)
    c0 = surface.c0
    g_r = _area_regular(grid) - 2.0 * c0 * _potential(grid)
    helfrich = _helfrich(grid, c0, 1.0, 0.0)
    return EnergyIdentityCheck(abs(-g_r + _excess(grid, c0) - helfrich), helfrich + g_r)


def gaussian_curvature_integral(surface: AxisymmetricSurface) -> GaussBonnetCheck:
    """
    Total Gaussian curvature of the half surface

    Args:
        surface: Surface meeting z = 0 orthogonally
    Returns:
        GaussBonnetCheck; a disc with geodesic boundary has total 2 pi
    """
    grid = _admissible_grid(surface)
    total = grid.surface_integral(grid.K)
    return GaussBonnetCheck(total, abs(total - TWO_PI))


def hemisphere_oracle(R: float, c0: float) -> EnergyReport:
    """
    Closed-form functionals of the hemisphere of radius R centered on z = 0

    Args:
        R: Radius
        c0: Spontaneous curvature
    Returns:
        EnergyReport with exact values
    Raises:
        NonPositiveRadius: R <= 0
    """
    if not R > 0:
        raise NonPositiveRadius(f"hemisphere radius R = {R} must be positive")
    return EnergyReport(A_R=-TWO_PI, U_R=-TWO_PI * R, G_R=-TWO_PI + 2.0 * TWO_PI * c0 * R,
                        helfrich=TWO_PI * (c0 * R - 1.0) ** 2,
                        excess=TWO_PI * c0 * c0 * R * R, theorem1_residual=0.0,
                        method_discrepancy=0.0)


def evaluate_energies(surface: AxisymmetricSurface, both_methods: bool = True) -> EnergyReport:
    """
    Every functional of one surface on a single quadrature grid

    Args:
        surface: Surface meeting z = 0 orthogonally
        both_methods: Also compute A_R by the counterterm limit
    Returns:
        EnergyReport
    Raises:
        NotAdmissible: the surface is not orthogonal to z = 0
    """
    grid = _admissible_grid(surface)
    c0 = surface.c0
    area = _area_regular(grid)
    potential = _potential(grid)
    g_r = area - 2.0 * c0 * potential
    helfrich = _helfrich(grid, c0, 1.0, 0.0)
    excess = _excess(grid, c0)
    discrepancy = abs(area_regularized_limit(surface) - area) if both_methods else None
    report = EnergyReport(A_R=area, U_R=potential, G_R=g_r, helfrich=helfrich,
                          excess=excess, theorem1_residual=abs(-g_r + excess - helfrich),
                          method_discrepancy=discrepancy)
    logger.debug("%r: %s", surface, report)
    return report
