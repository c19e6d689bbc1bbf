"""
Generating-curve ODE of the reduced membrane equation.

    r' = cos(phi),  z' = sin(phi),  phi' = -2 cos(phi)/z - sin(phi)/r - 2 c0

integrated from the pole (0, z0) down to the plane z = 0. The frame is
nu3 = cos(phi), 2H = phi' + sin(phi)/r, K = phi' sin(phi)/r, so spheres with
outward normal have H = -1/R and every solution satisfies H + c0 = -nu3/z.

Next to the plane the arc length gives way to the height as independent
variable, with psi = phi + pi/2:

    dsigma/dz = -1/cos(psi),  dr/dz = -tan(psi),
    dpsi/dz = 2 tan(psi)/z - 1/r + 2 c0/cos(psi)
"""
import logging
import math
from typing import NamedTuple, Optional
import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import BarycentricInterpolator
from _enums.state_location import StateLocation
from _enums.termination import Termination
from _errors.errors import (AxisReturn, DegenerateInitialHeight,
                            InvalidInitialHeight, SigmaMaxExceeded,
                            SingularEvaluation, StepFailure)
from _profile.height_tail import HeightTail
from _profile.model_params import ModelParams
from _profile.profile_solution import HALF_PI, BoundaryTrace, ProfileSolution
from _profile.profile_state import ProfileState

logger = logging.getLogger(__name__)

# the switch to height happens below SWITCH_FRACTION * min(z0, 1/c0) once
# |phi + pi/2| < SWITCH_ANGLE
SWITCH_FRACTION = 0.25
SWITCH_ANGLE = 1.0
# relative tolerance of the height-parametrized tail
TAIL_RTOL = 1e-12
# the tail runs down to z_cut / 2**TAIL_DEPTH; boundary values extrapolate
# from the heights z_cut / 2**k, 1 <= k <= TAIL_DEPTH
TAIL_DEPTH = 4
# phi' and phi'' extrapolate from LADDER_FRACTION * L / 2**k, k < LADDER_STEPS
LADDER_FRACTION = 0.05
LADDER_STEPS = 6


class Curvatures(NamedTuple):
    """ Pointwise curvature data of a surface of revolution """
    H: float
    K: float
    nu3: float
    kappa_meridian: float
    kappa_parallel: float


def pole_curvature(z0: float, c0: float) -> float:
    """
    Umbilic curvature phi'(0) at the pole

    Args:
        z0: Initial height
        c0: Spontaneous curvature
    Returns:
        -(1/z0 + c0), forced by regularity of sin(phi)/r at r = 0
    """
    return -(1.0 / z0 + c0)


def initial_state_series(params: ModelParams, z0: float) -> ProfileState:
    """
    First-order pole expansion evaluated at sigma = sigma0

    Args:
        params: Model parameters (c0 and sigma0)
        z0: Initial height, nonzero
    Returns:
        State with r = s, z = z0 + phi'(0) s^2/2, phi = phi'(0) s
    Raises:
        DegenerateInitialHeight: z0 = 0
    """
    if z0 == 0:
        raise DegenerateInitialHeight("initial height z0 must be nonzero")
    s = params.start_offset(z0)
    k = pole_curvature(z0, params.c0)
    return ProfileState(s, s, z0 + 0.5 * k * s * s, k * s)


def rhs(state: ProfileState, c0: float) -> tuple[float, float, float]:
    """
    Right-hand side of the generating-curve system at an interior point

    Args:
        state: Interior state with r > 0 and z > 0
        c0: Spontaneous curvature
    Returns:
        (r', z', phi')
    Raises:
        SingularEvaluation: state on the axis or on the boundary plane
    """
    if state.r <= 0 or state.z <= 0:
        raise SingularEvaluation(
            f"rhs undefined at r={state.r}, z={state.z}; use the pole series "
            "or the boundary limit")
    cos_phi, sin_phi = math.cos(state.phi), math.sin(state.phi)
    return cos_phi, sin_phi, -2.0 * cos_phi / state.z - sin_phi / state.r - 2.0 * c0


def dphi_array(r, z, phi, c0: float):
    """ Vectorized phi' of the ODE for interior arrays """
    return -2.0 * np.cos(phi) / z - np.sin(phi) / r - 2.0 * c0


def curvature_arrays(r, phi, dphi):
    """
    Vectorized mean curvature, Gaussian curvature and nu3

    Args:
        r: Radii (> 0)
        phi: Tangent angles
        dphi: Meridian curvatures phi'
    Returns:
        (H, K, nu3) arrays
    """
    kappa_parallel = np.sin(phi) / r
    return (0.5 * (dphi + kappa_parallel), dphi * kappa_parallel, np.cos(phi))


def curvatures_at(state: ProfileState, c0: float,
                  location: StateLocation = StateLocation.INTERIOR,
                  dphi: Optional[float] = None) -> Curvatures:
    """
    Principal, mean and Gaussian curvature at a profile state

    Args:
        state: Point of the generating curve
        c0: Spontaneous curvature of the ODE
        location: INTERIOR evaluates the ODE, POLE and BOUNDARY use limits
        dphi: Meridian curvature to use instead of the ODE value
    Returns:
        Curvatures with 2H = phi' + sin(phi)/r and K = phi' sin(phi)/r
    Raises:
        SingularEvaluation: interior evaluation on the axis or the plane
    """
    nu3 = math.cos(state.phi)
    if location == StateLocation.POLE:
        kappa = pole_curvature(state.z, c0) if dphi is None else dphi
        return Curvatures(kappa, kappa * kappa, nu3, kappa, kappa)
    if location == StateLocation.BOUNDARY:
        kappa_parallel = -1.0 / state.r
        kappa = 2.0 * c0 - 1.0 / state.r if dphi is None else dphi
        return Curvatures(0.5 * (kappa + kappa_parallel), kappa * kappa_parallel,
                          nu3, kappa, kappa_parallel)
    if state.r <= 0:
        raise SingularEvaluation("curvature on the axis needs the POLE location")
    kappa = rhs(state, c0)[2] if dphi is None else dphi
    kappa_parallel = math.sin(state.phi) / state.r
    return Curvatures(0.5 * (kappa + kappa_parallel), kappa * kappa_parallel,
                      nu3, kappa, kappa_parallel)


def phi_second_derivative(state: ProfileState, c0: float) -> float:
    """
    phi'' from differentiating the ODE along the curve

    Args:
        state: Interior state
        c0: Spontaneous curvature
    Returns:
        2 sin(phi) phi'/z + 2 cos(phi) sin(phi)/z^2 - cos(phi) phi'/r
        + sin(phi) cos(phi)/r^2
    """
    dphi = rhs(state, c0)[2]
    cos_phi, sin_phi = math.cos(state.phi), math.sin(state.phi)
    z, r = state.z, state.r
    return (2.0 * sin_phi * dphi / z + 2.0 * cos_phi * sin_phi / z ** 2
            - cos_phi * dphi / r + sin_phi * cos_phi / r ** 2)


def height_derivatives(z, r, psi, c0: float):
    """
    dpsi/dz and d2psi/dz2 of the height-parametrized system

    Args:
        z, r, psi: Heights, radii and psi = phi + pi/2 with |psi| < pi/2
        c0: Spontaneous curvature
    Returns:
        (dpsi/dz, d2psi/dz2); their 1/z and 1/z^2 parts cancel as z -> 0
    """
    sec = 1.0 / np.cos(psi)
    tan = np.tan(psi)
    dpsi = 2.0 * tan / z - 1.0 / r + 2.0 * c0 * sec
    d2psi = (2.0 * sec * sec * dpsi / z - 2.0 * tan / (z * z) - tan / (r * r)
             + 2.0 * c0 * sec * tan * dpsi)
    return dpsi, d2psi


def arc_derivatives(z, r, psi, c0: float):
    """
    phi' and phi'' with respect to arc length, from the height form

    Args:
        z, r, psi: Heights, radii and psi = phi + pi/2 with |psi| < pi/2
        c0: Spontaneous curvature
    Returns:
        (phi', phi'') using dz/dsigma = -cos(psi)
    """
    dpsi, d2psi = height_derivatives(z, r, psi, c0)
    cos, sin = np.cos(psi), np.sin(psi)
    return -cos * dpsi, cos * cos * d2psi - cos * sin * dpsi * dpsi


def hyperbolic_mean_curvature(state: ProfileState, c0: float) -> float:
    """
    Mean curvature of the surface seen in the upper half-space model

    Args:
        state: Interior state
        c0: Spontaneous curvature
    Returns:
        H z + nu3, which equals -c0 z on every profile of this ODE
    """
    curv = curvatures_at(state, c0)
    return curv.H * state.z + curv.nu3


def _vector_field(c0: float):
    """ ODE right-hand side in solve_ivp calling convention """
    def field_fn(_sigma, y):
        cos_phi, sin_phi = math.cos(y[2]), math.sin(y[2])
        return [cos_phi, sin_phi, -2.0 * cos_phi / y[1] - sin_phi / y[0] - 2.0 * c0]
    return field_fn


def _height_field(c0: float):
    """ Height-parametrized right-hand side for the state (sigma, r, psi) """
    def field_fn(z, y):
        cos_psi, tan_psi = math.cos(y[2]), math.tan(y[2])
        return [-1.0 / cos_psi, -tan_psi, 2.0 * tan_psi / z - 1.0 / y[1] + 2.0 * c0 / cos_psi]
    return field_fn


def _switch_event(z_switch: float):
    # negative only once the curve is low and steep enough
    def event(_sigma, y):
        return max(y[1] - z_switch, abs(y[2] + HALF_PI) - SWITCH_ANGLE)
    event.terminal = True
    event.direction = -1
    return event


def _boundary_event(z_cut: float):
    def event(_sigma, y):
        return y[1] - z_cut
    event.terminal = True
    event.direction = -1
    return event


def _axis_event(r_guard: float):
    def event(_sigma, y):
        return y[0] - r_guard
    event.terminal = True
    event.direction = -1
    return event


def _normalize_height(z0: float, c0: float) -> tuple[float, bool]:
    """ Apply z -> -z to negative initial heights outside (-1/c0, 0) """
    if z0 == 0:
        raise DegenerateInitialHeight("initial height z0 must be nonzero")
    if z0 > 0:
        return z0, False
    if c0 > 0 and z0 > -1.0 / c0:
        raise InvalidInitialHeight(
            f"z0={z0} lies in (-1/c0, 0) = ({-1.0 / c0}, 0), where dH/dn = 0 "
            "cannot hold at the boundary")
    return -z0, True


def _switch_height(z0: float, c0: float) -> float:
    return SWITCH_FRACTION * (min(z0, 1.0 / c0) if c0 > 0 else z0)


def _integrate_tail(params: ModelParams, sigma_switch: float, state: np.ndarray,
                    z_end: float):
    """ Height-parametrized integration from the switch state down to z_end """
    z_start = float(state[1])
    rtol = min(TAIL_RTOL, params.rel_tol)
    atol = [rtol * z_start, rtol * z_start, rtol * z_end]
    sol = solve_ivp(_height_field(params.c0), (z_start, z_end),
                    [0.0, state[0], state[2] + HALF_PI], method="DOP853",
                    rtol=rtol, atol=atol, dense_output=True)
    if sol.status != 0:
        return None, sol.message
    return HeightTail(sigma_switch=sigma_switch, z_switch=z_start, z_end=float(sol.t[-1]),
                      heights=sol.t, dense=sol.sol), sol.message


def _boundary_values(tail: HeightTail, z_cut: float) -> tuple[float, float, float]:
    """ Extrapolate (sigma, r, psi) to z = 0 from heights below the cutoff """
    heights = z_cut * 0.5 ** np.arange(1, TAIL_DEPTH + 1)
    states = tail.states(heights)
    sigma_b, r_b, psi_b = (float(BarycentricInterpolator(heights, values)(0.0))
                           for values in states)
    return sigma_b, r_b, psi_b


def _boundary_derivatives(tail: HeightTail, c0: float, z_cut: float,
                          scale: float) -> tuple[float, float]:
    """ Extrapolate the analytic phi' and phi'' to z = 0 from z >= z_cut """
    top = min(max(LADDER_FRACTION * scale, z_cut * 2.0 ** (LADDER_STEPS - 1)), tail.z_switch)
    heights = top * 0.5 ** np.arange(LADDER_STEPS)
    _, r, psi = tail.states(heights)
    dphi, d2phi = arc_derivatives(heights, r, psi, c0)
    return (float(BarycentricInterpolator(heights, dphi)(0.0)),
            float(BarycentricInterpolator(heights, d2phi)(0.0)))


def _raise_for(termination: Termination, z0: float, message: str):
    errors = {Termination.SIGMA_MAX_EXCEEDED: SigmaMaxExceeded,
              Termination.AXIS_RETURN: AxisReturn,
              Termination.STEP_FAILURE: StepFailure}
    raise errors[termination](f"z0={z0}: {message}", z0=z0)


def integrate_profile(params: ModelParams, z0: float,
                      strict: bool = False) -> ProfileSolution:
    """
    Integrate the generating curve from the pole to the plane z = 0

    Arc length drives the integration until the curve is low and steep, then
    height takes over down to below z_cut; the boundary trace is the z -> 0
    limit of the height-parametrized solution.

    Args:
        params: Model parameters
        z0: Initial height; negative heights are normalized by z -> -z
        strict: Raise instead of returning a non-boundary termination
    Returns:
        ProfileSolution with dense output and, on HitBoundary, boundary trace
    Raises:
        DegenerateInitialHeight: z0 = 0
        InvalidInitialHeight: z0 in (-1/c0, 0)
        SigmaMaxExceeded, AxisReturn, StepFailure: strict mode only
    """
    requested = z0
    z0, normalized = _normalize_height(z0, params.c0)
    start = initial_state_series(params, z0)
    z_cut = params.z_cutoff_factor * z0

    sol = solve_ivp(_vector_field(params.c0), (start.sigma, params.sigma_max),
                    [start.r, start.z, start.phi], method="DOP853",
                    rtol=params.rel_tol, atol=params.abs_tol, dense_output=True,
                    events=(_switch_event(_switch_height(z0, params.c0)),
                            _boundary_event(z_cut), _axis_event(0.5 * start.sigma)))

    message = sol.message
    if sol.status == -1:
        termination = Termination.STEP_FAILURE
    elif sol.status == 1 and sol.t_events[0].size:
        termination = Termination.HIT_BOUNDARY
    elif sol.status == 1 and sol.t_events[1].size:
        termination = Termination.STEP_FAILURE
        message = f"reached z = {z_cut:.3g} with |phi + pi/2| >= {SWITCH_ANGLE}"
    elif sol.status == 1:
        termination = Termination.AXIS_RETURN
    else:
        termination = Termination.SIGMA_MAX_EXCEEDED

    tail = None
    if termination.is_boundary():
        tail, tail_message = _integrate_tail(params, float(sol.t[-1]), sol.y[:, -1],
                                             z_cut * 0.5 ** TAIL_DEPTH)
        if tail is None:
            termination, message = Termination.STEP_FAILURE, f"height tail: {tail_message}"
    logger.debug("z0=%.12g c0=%g: %s after %d steps, sigma=%.6g", z0, params.c0,
                 termination.value, sol.t.size, sol.t[-1])

    if strict and not termination.is_boundary():
        _raise_for(termination, z0, message)

    sigma = np.concatenate(([0.0], sol.t))
    r = np.concatenate(([0.0], sol.y[0]))
    z = np.concatenate(([z0], sol.y[1]))
    phi = np.concatenate(([0.0], sol.y[2]))
    solution = ProfileSolution(params=params, z0=z0, sigma=sigma, r=r, z=z, phi=phi,
                               termination=termination, sigma_start=start.sigma,
                               sigma_cut=float(sol.t[-1]), dense=sol.sol,
                               requested_z0=requested, normalized=normalized,
                               message=message)
    if tail is None:
        return solution

    tail_sigma, tail_r, tail_psi = tail.states(tail.heights[1:])
    sigma_b, r_b, psi_b = _boundary_values(tail, z_cut)
    scale = min(z0, r_b, 1.0 / params.c0) if params.c0 > 0 else min(z0, r_b)
    dphi_b, d2phi_b = _boundary_derivatives(tail, params.c0, z_cut, scale)

    solution.tail = tail
    solution.sigma_cut = float(tail_sigma[-1])
    solution.sigma = np.concatenate((sigma, tail_sigma, [sigma_b]))
    solution.r = np.concatenate((r, tail_r, [r_b]))
    solution.z = np.concatenate((z, tail.heights[1:], [0.0]))
    solution.phi = np.concatenate((phi, tail_psi - HALF_PI, [psi_b - HALF_PI]))
    solution.sigma_b, solution.r_b, solution.phi_b = sigma_b, r_b, psi_b - HALF_PI
    solution.dphi_b, solution.d2phi_b = dphi_b, d2phi_b
    return solution


def boundary_trace(sol: ProfileSolution) -> BoundaryTrace:
    """
    Boundary values of an integrated profile

    Args:
        sol: Integrated profile
    Returns:
        (sigma_b, r_b, phi_b, dphi_b, d2phi_b, dH_dn) with dH_dn = phi''_b / 2
    Raises:
        NoBoundaryData: the profile did not reach z = 0
    """
    return sol.require_boundary()
