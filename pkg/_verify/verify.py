"""
Numerical certificates for integrated profiles: pointwise equations,
boundary conditions and the reflection, parameter and topology relations.
"""
import logging
import math
from typing import NamedTuple, Optional
import numpy as np
from _errors.errors import NonPositiveModulus, NonPositiveRadius, WindowEmpty
from _functionals.functionals import potential_regularized
from _profile.profile_ode import curvature_arrays, dphi_array
from _profile.profile_solution import ProfileSolution
from _surfaces.profile_surface import ProfileSurface
from _surfaces.quadrature_grid import QuadratureGrid
from _verify.verification_report import VerificationReport, VerificationTolerances

logger = logging.getLogger(__name__)

# stencil spacings EL_COARSE * L / 2**j, j < EL_LEVELS
EL_COARSE = 0.1
EL_LEVELS = 4
# nodes per finite-difference stencil
EL_NODES = 6
# residuals below this are at the rounding floor and carry no order information
EL_FLOOR = 1e-7
# junction stencils of the reflection check use spacing C3_SPACING * L
C3_SPACING = 0.005
C3_NODES = 6


class ElResidual(NamedTuple):
    """ Euler-Lagrange residual at every refinement level """
    el_max: float
    order: float
    spacings: tuple
    maxima: tuple


class BoundaryConditions(NamedTuple):
    """ Boundary relations of an orthogonal free boundary on z = 0 """
    orthogonality: float
    hz0: float
    dnH: float
    kappa_g: float
    tau_g: float


class EulerHelfrichResiduals(NamedTuple):
    """ Reduced boundary system of the Euler-Helfrich problem """
    bc1: float
    bc3: float
    circle: float
    dnH: float


def _c0(sol: ProfileSolution, c0: Optional[float]) -> float:
    return sol.c0 if c0 is None else c0


def _length_scale(sol: ProfileSolution) -> float:
    trace = sol.require_boundary()
    scale = min(sol.z0, trace.r_b)
    return min(scale, 1.0 / sol.c0) if sol.c0 > 0 else scale


def fd_weights(offsets, derivative: int) -> np.ndarray:
    """
    Finite-difference weights for arbitrary node offsets

    Args:
        offsets: (..., n) node positions relative to the target, in units of h
        derivative: Order of the derivative, < n
    Returns:
        (..., n) weights w with sum_k w_k o_k**m = m! delta(m, derivative) for m < n;
        divide by h**derivative to apply them
    """
    offsets = np.asarray(offsets, dtype=float)
    powers = np.arange(offsets.shape[-1])
    vandermonde = offsets[..., None, :] ** powers[:, None]
    rhs = np.zeros(offsets.shape)
    rhs[..., derivative] = math.factorial(derivative)
    return np.linalg.solve(vandermonde, rhs[..., None])[..., 0]


def _curvature_along(sol: ProfileSolution, sigma: np.ndarray):
    """ H, K and r'/r = cos(phi)/r along the curve, in the psi = phi + pi/2 form """
    r, z, psi = sol.evaluate_offset(sigma)
    cos_psi, sin_psi = np.cos(psi), np.sin(psi)
    dphi = -2.0 * sin_psi / z + cos_psi / r - 2.0 * sol.c0
    kappa_parallel = -cos_psi / r
    return 0.5 * (dphi + kappa_parallel), dphi * kappa_parallel, sin_psi / r


def rme_residual(sol: ProfileSolution, c0: Optional[float] = None) -> float:
    """
    sup |H + c0 + cos(phi)/z| over interior samples

    Args:
        sol: Integrated profile
        c0: Spontaneous curvature, defaults to the profile's
    Returns:
        Largest pointwise residual of the reduced membrane equation
    """
    c0 = _c0(sol, c0)
    inner = slice(1, -1) if sol.has_boundary() else slice(1, None)
    r, z, phi = sol.r[inner], sol.z[inner], sol.phi[inner]
    H, _, nu3 = curvature_arrays(r, phi, dphi_array(r, z, phi, sol.c0))
    return float(np.max(np.abs(H + c0 + nu3 / z)))


def el_residual(sol: ProfileSolution, c0: Optional[float] = None) -> ElResidual:
    """
    Residual of Delta H + 2 (H + c0) (H (H - c0) - K) by finite differences

    H comes from the curvatures along the dense output; H' and H'' use
    six-node stencils, centered in the interior and one-sided next to the
    window ends, and Delta H = H'' + (cos(phi)/r) H'. The window is
    [2 sigma0, sigma(10 z_cut)] and the stencils never leave
    [sigma0, sigma(10 z_cut)]. The residual is evaluated on a common set of
    arc lengths for spacings halving from 0.1 L, where L is the smallest
    geometric length of the profile.

    Args:
        sol: Integrated profile that hit the boundary
        c0: Spontaneous curvature, defaults to the profile's
    Returns:
        ElResidual with el_max from the finest spacing and the observed order
        between the two coarsest (inf when already at the rounding floor)
    Raises:
        WindowEmpty: profile too short for the stencils
        NoBoundaryData: the profile did not reach z = 0
    """
    c0 = _c0(sol, c0)
    scale = _length_scale(sol)
    spacings = tuple(EL_COARSE * scale * 0.5 ** j for j in range(EL_LEVELS))
    lowest, start = sol.sigma_start, 2.0 * sol.sigma_start
    stop = sol.sigma_at_height(10.0 * sol.z_cut)
    reach = (EL_NODES - 1) * spacings[0]
    if stop - start < reach:
        raise WindowEmpty(
            f"profile z0={sol.z0}: window [{start:.4g}, {stop:.4g}] shorter than "
            f"the stencil reach {reach:.4g}")
    targets = np.append(np.arange(start, stop, spacings[-1]), stop)

    maxima = []
    nodes = np.arange(EL_NODES)
    for h in spacings:
        left = np.clip(targets - 0.5 * (EL_NODES - 1) * h, lowest,
                       stop - (EL_NODES - 1) * h)
        offsets = nodes[None, :] - ((targets - left) / h)[:, None]
        grid = left[:, None] + h * nodes[None, :]
        H, _, _ = _curvature_along(sol, grid.ravel())
        H = H.reshape(grid.shape)
        d1 = np.sum(fd_weights(offsets, 1) * H, axis=1) / h
        d2 = np.sum(fd_weights(offsets, 2) * H, axis=1) / h ** 2
        H0, K0, slope = _curvature_along(sol, targets)
        residual = d2 + slope * d1 + 2.0 * (H0 + c0) * (H0 * (H0 - c0) - K0)
        maxima.append(float(np.max(np.abs(residual))))

    order = math.inf if maxima[0] < EL_FLOOR else math.log2(maxima[0] / max(maxima[1], 1e-300))
    logger.debug("EL residual z0=%.10g: maxima %s, order %.3g", sol.z0, maxima, order)
    return ElResidual(maxima[-1], order, spacings, tuple(maxima))


def boundary_conditions(sol: ProfileSolution, c0: Optional[float] = None) -> BoundaryConditions:
    """
    Boundary relations of a profile on the plane z = 0

    Args:
        sol: Integrated profile
        c0: Spontaneous curvature, defaults to the profile's
    Returns:
        (orthogonality, hz0, dnH, kappa_g, tau_g) with H_b = (phi'_b - 1/r_b)/2,
        kappa_n = -1/r_b and tau_g = 0 for a parallel of a surface of revolution
    Raises:
        NoBoundaryData: the profile did not reach z = 0
    """
    c0 = _c0(sol, c0)
    trace = sol.require_boundary()
    h_b = 0.5 * (trace.dphi_b - 1.0 / trace.r_b)
    kappa_n = -1.0 / trace.r_b
    return BoundaryConditions(orthogonality=abs(trace.phi_b + 0.5 * math.pi),
                              hz0=abs(h_b - kappa_n - c0), dnH=abs(trace.dH_dn),
                              kappa_g=abs(math.cos(trace.phi_b)) / trace.r_b, tau_g=0.0)


def doubled_grid(sol: ProfileSolution, c0: Optional[float] = None) -> QuadratureGrid:
    """
    Quadrature grid of the closed surface obtained by reflecting in z = 0

    Args:
        sol: Integrated profile
        c0: Spontaneous curvature, defaults to the profile's
    Returns:
        Half grid followed by its mirror image over [sigma_b, 2 sigma_b]
    Raises:
        NotAdmissible: the profile did not reach z = 0
    """
    grid = ProfileSurface(sol, _c0(sol, c0)).quadrature_grid()
    return QuadratureGrid.concatenate([grid, grid.reflected(sol.sigma_b)])


def rescaling_check(sol: ProfileSolution, c0: Optional[float] = None) -> float:
    """
    |int (H + c0) dSigma| over the surface doubled by reflection in z = 0

    Args:
        sol: Integrated profile
        c0: Spontaneous curvature, defaults to the profile's
    Returns:
        2 pi |int (H + c0) r dsigma| over both halves
    Raises:
        NoBoundaryData: the profile did not reach z = 0
    """
    c0 = _c0(sol, c0)
    sol.require_boundary()
    grid = doubled_grid(sol, c0)
    return abs(grid.surface_integral(grid.H + c0))


def _junction_jump(sol: ProfileSolution) -> float:
    """ One-sided dH/dsigma below minus above z = 0 on the doubled curve """
    trace = sol.require_boundary()
    h = C3_SPACING * _length_scale(sol)
    steps = h * np.arange(1, C3_NODES + 1)
    r, z, phi = sol.evaluate(trace.sigma_b - steps)
    below, _, _ = curvature_arrays(r, phi, dphi_array(r, z, phi, sol.c0))
    # mirror points sigma_b + k h carry the geometry (r, -z, -pi - phi)
    mirror_phi = -math.pi - phi
    above, _, _ = curvature_arrays(r, mirror_phi, dphi_array(r, -z, mirror_phi, sol.c0))
    h_b = 0.5 * (trace.dphi_b - 1.0 / trace.r_b)
    weights = fd_weights(np.arange(C3_NODES + 1), 1) / h
    slope_below = -float(weights @ np.concatenate(([h_b], below)))
    slope_above = float(weights @ np.concatenate(([h_b], above)))
    return slope_below - slope_above


def reflection_c3_check(sol: ProfileSolution) -> float:
    """
    Mismatch of the doubled profile at the junction z = 0

    The reflected continuation has angle -pi - phi(2 sigma_b - s), so phi
    matches iff 2 phi_b + pi = 0 and phi' matches automatically. H is even
    under the reflection, so dH/dsigma jumps by 2 H'(sigma_b) = phi''_b; the
    jump is also measured by one-sided differences on both sides.

    Args:
        sol: Integrated profile
    Returns:
        |phi''_b| + |jump - phi''_b| + |2 phi_b + pi|
    Raises:
        NoBoundaryData: the profile did not reach z = 0
    """
    trace = sol.require_boundary()
    jump = _junction_jump(sol)
    logger.debug("junction z0=%.10g: dH jump %.3e, phi''_b %.3e", sol.z0, jump, trace.d2phi_b)
    return (abs(trace.d2phi_b) + abs(jump - trace.d2phi_b)
            + abs(2.0 * trace.phi_b + math.pi))


def euler_helfrich_params(r_b: float, c0: float, a: float) -> tuple[float, float]:
    """
    Gaussian modulus and tension ratio making a profile an Euler-Helfrich
    and free-boundary Helfrich equilibrium

    Args:
        r_b: Boundary radius
        c0: Spontaneous curvature
        a: Bending modulus
    Returns:
        (b, alpha/beta) = (2 a c0 r_b - a, r_b^2)
    Raises:
        NonPositiveRadius: r_b <= 0
        NonPositiveModulus: a <= 0
    """
    if not r_b > 0:
        raise NonPositiveRadius(f"boundary radius r_b = {r_b} must be positive")
    if not a > 0:
        raise NonPositiveModulus(f"bending modulus a = {a} must be positive")
    return 2.0 * a * c0 * r_b - a, r_b * r_b


def free_boundary_check(sol: ProfileSolution, a: float, b: float,
                        c0: Optional[float] = None) -> tuple[float, float]:
    """
    Free-boundary Helfrich conditions on z = 0

    Args:
        sol: Integrated profile
        a: Bending modulus
        b: Gaussian modulus
        c0: Spontaneous curvature, defaults to the profile's
    Returns:
        (|a (H_b + c0) + b kappa_n|, |dH/dn|)
    Raises:
        NoBoundaryData: the profile did not reach z = 0
    """
    c0 = _c0(sol, c0)
    trace = sol.require_boundary()
    h_b = 0.5 * (trace.dphi_b - 1.0 / trace.r_b)
    return abs(a * (h_b + c0) + b * (-1.0 / trace.r_b)), abs(trace.dH_dn)


def euler_helfrich_check(sol: ProfileSolution, a: float, b: float, alpha: float,
                         beta: float, c0: Optional[float] = None) -> EulerHelfrichResiduals:
    """
    Reduced boundary system of an Euler-Helfrich surface with elastic boundary
    circle (bending stiffness beta, tension alpha)

    Args:
        sol: Integrated profile
        a, b: Bending and Gaussian moduli
        alpha, beta: Boundary tension and stiffness, both > 0
        c0: Spontaneous curvature, defaults to the profile's
    Returns:
        EulerHelfrichResiduals (bc1, bc3 term a (H+c0)^2 + b K, |r_b - sqrt(alpha/beta)|,
        |dH/dn|)
    Raises:
        NoBoundaryData: the profile did not reach z = 0
    """
    c0 = _c0(sol, c0)
    if not (alpha > 0 and beta > 0):
        raise NonPositiveModulus("alpha and beta must be positive")
    trace = sol.require_boundary()
    bc1, dnh = free_boundary_check(sol, a, b, c0)
    h_b = 0.5 * (trace.dphi_b - 1.0 / trace.r_b)
    k_b = trace.dphi_b * (-1.0 / trace.r_b)
    return EulerHelfrichResiduals(bc1, abs(a * (h_b + c0) ** 2 + b * k_b),
                                  abs(trace.r_b - math.sqrt(alpha / beta)), dnh)


def gauss_bonnet_check(sol: ProfileSolution, doubled: bool = False) -> float:
    """
    Total Gaussian curvature 2 pi int K r dsigma

    Args:
        sol: Integrated profile
        doubled: Integrate over the surface reflected in z = 0 instead of the half
    Returns:
        Total curvature, 2 pi for the half disc and 4 pi for the sphere
    Raises:
        NoBoundaryData: the profile did not reach z = 0
    """
    sol.require_boundary()
    grid = doubled_grid(sol) if doubled else ProfileSurface(sol).quadrature_grid()
    return grid.surface_integral(grid.K)


def verify_profile(sol: ProfileSolution, tolerances: Optional[VerificationTolerances] = None,
                   c0: Optional[float] = None) -> VerificationReport:
    """
    Run every check on one profile

    Args:
        sol: Integrated profile that hit the boundary
        tolerances: Thresholds, defaults to VerificationTolerances()
        c0: Spontaneous curvature, defaults to the profile's
    Returns:
        VerificationReport
    Raises:
        NoBoundaryData: the profile did not reach z = 0
        WindowEmpty: profile too short for the Euler-Lagrange stencils
    """
    c0 = _c0(sol, c0)
    tolerances = tolerances or VerificationTolerances()
    bcs = boundary_conditions(sol, c0)
    el = el_residual(sol, c0)
    report = VerificationReport(
        rme_max=rme_residual(sol, c0), el_max=el.el_max, el_order=el.order,
        orthogonality=bcs.orthogonality, hz0=bcs.hz0, dnH=bcs.dnH,
        u_r_abs=abs(potential_regularized(ProfileSurface(sol, c0))),
        rescaling=rescaling_check(sol, c0), c3_gap=reflection_c3_check(sol),
        kappa_g=bcs.kappa_g, tau_g=bcs.tau_g, c0=c0, tolerances=tolerances)
    if not report.all_pass:
        logger.warning("profile z0=%.12g fails %s", sol.z0, ", ".join(report.failures()))
    return report
