""" Tests for the generating-curve integration """
import math
import numpy as np
import pytest
from hypothesis import given, strategies as st
from _enums.state_location import StateLocation
from _enums.termination import Termination
from _errors.errors import (DegenerateInitialHeight, InvalidInitialHeight,
                            NegativeSpontaneousCurvature, NoBoundaryData,
                            SigmaMaxExceeded, SingularEvaluation)
from _profile.model_params import ModelParams
from _profile.profile_ode import (boundary_trace, curvatures_at, hyperbolic_mean_curvature,
                                  initial_state_series, integrate_profile,
                                  phi_second_derivative, rhs)
from _profile.profile_state import ProfileState

HALF_SQRT2 = math.sqrt(2.0) / 2.0


@pytest.mark.parametrize("c0, z0, slope", [(0.0, 1.0, -1.0), (1.0, 1.0, -2.0), (1.0, 2.0, -1.5)])
def test_pole_series_slope(c0, z0, slope):
    state = initial_state_series(ModelParams(c0=c0), z0)
    assert state.r == state.sigma
    assert state.phi / state.sigma == pytest.approx(slope, rel=1e-12)
    assert state.z == pytest.approx(z0 + 0.5 * slope * state.sigma ** 2, rel=1e-15)


def test_pole_series_rejects_zero_height():
    with pytest.raises(DegenerateInitialHeight):
        initial_state_series(ModelParams(), 0.0)


@pytest.mark.parametrize("c0, expected", [(0.0, -1.0), (1.0, -3.0)])
def test_rhs_on_circle_point(c0, expected):
    state = ProfileState(math.pi / 4, HALF_SQRT2, HALF_SQRT2, -math.pi / 4)
    dr, dz, dphi = rhs(state, c0)
    assert dr == pytest.approx(HALF_SQRT2)
    assert dz == pytest.approx(-HALF_SQRT2)
    assert dphi == pytest.approx(expected, abs=1e-14)


@pytest.mark.parametrize("r, z", [(0.0, 1.0), (1.0, 0.0), (-1.0, 1.0)])
def test_rhs_singular_on_axis_and_plane(r, z):
    with pytest.raises(SingularEvaluation):
        rhs(ProfileState(0.0, r, z, 0.0), 0.0)


def test_negative_spontaneous_curvature_rejected():
    with pytest.raises(NegativeSpontaneousCurvature):
        ModelParams(c0=-1.0)


def test_circle_hits_boundary(circle):
    assert circle.termination == Termination.HIT_BOUNDARY
    assert circle.sigma_b == pytest.approx(math.pi / 2, abs=1e-8)
    assert circle.r_b == pytest.approx(1.0, abs=1e-8)
    assert circle.z[-1] == 0.0


def test_circle_radius_three():
    sol = integrate_profile(ModelParams(), 3.0)
    assert sol.r_b == pytest.approx(3.0, abs=1e-7)


@pytest.mark.parametrize("z0", [0.5, 1.0, 3.0])
def test_circle_matches_exact_solution(z0):
    sol = integrate_profile(ModelParams(), z0)
    err = np.abs(sol.r - z0 * np.sin(sol.sigma / z0)) + np.abs(sol.z - z0 * np.cos(sol.sigma / z0))
    assert err.max() < 1e-8


def test_orthogonal_at_boundary(bulged):
    assert bulged.termination == Termination.HIT_BOUNDARY
    assert abs(bulged.phi_b + math.pi / 2) < 1e-6


@pytest.mark.parametrize("c0, z0", [(0.5, 1.0), (1.0, 0.5), (1.0, 2.0), (2.0, 0.7)])
def test_angle_range_and_boundary_limit(c0, z0):
    sol = integrate_profile(ModelParams(c0=c0), z0)
    assert sol.termination == Termination.HIT_BOUNDARY
    assert np.all(sol.phi <= 1e-12) and np.all(sol.phi > -math.pi)
    trace = boundary_trace(sol)
    assert abs(trace.dphi_b - (2 * c0 - 1 / trace.r_b)) < 1e-6


def test_reduced_membrane_identity_pointwise(bulged):
    states = bulged.samples[1:-1]
    worst = max(abs(curvatures_at(s, 1.0).H + 1.0 + math.cos(s.phi) / s.z) for s in states)
    assert worst < 1e-9


def test_hyperbolic_mean_curvature_balances_c0(bulged):
    for state in bulged.samples[1:-1:25]:
        assert hyperbolic_mean_curvature(state, 1.0) == pytest.approx(-state.z, abs=1e-12)


def test_pole_start_stability():
    params = ModelParams(c0=1.0, sigma0=1e-4)
    coarse = integrate_profile(params, 1.0)
    fine = integrate_profile(params.refined(), 1.0)
    assert fine.params.sigma0 == 5e-5
    assert abs(coarse.r_b - fine.r_b) < 1e-7


def test_height_normalization_is_exact():
    params = ModelParams(c0=1.0)
    up, down = integrate_profile(params, 2.0), integrate_profile(params, -2.0)
    assert down.normalized and down.requested_z0 == -2.0 and down.z0 == 2.0
    np.testing.assert_array_equal(up.r, down.r)
    np.testing.assert_array_equal(up.phi, down.phi)


def test_forbidden_negative_heights():
    with pytest.raises(InvalidInitialHeight):
        integrate_profile(ModelParams(c0=1.0), -0.5)


def test_sigma_cap():
    params = ModelParams(sigma_max=0.5)
    sol = integrate_profile(params, 1.0)
    assert sol.termination == Termination.SIGMA_MAX_EXCEEDED
    assert not sol.has_boundary()
    with pytest.raises(NoBoundaryData):
        boundary_trace(sol)
    with pytest.raises(SigmaMaxExceeded):
        integrate_profile(params, 1.0, strict=True)


def test_circle_curvatures():
    for sigma in (0.3, 0.8, 1.4):
        curv = curvatures_at(ProfileState(sigma, math.sin(sigma), math.cos(sigma), -sigma), 0.0)
        assert curv.H == pytest.approx(-1.0, abs=1e-12)
        assert curv.K == pytest.approx(1.0, abs=1e-12)
        assert curv.nu3 == pytest.approx(math.cos(sigma))


def test_pole_and_boundary_curvatures(bulged):
    pole = curvatures_at(bulged.samples[0], 1.0, StateLocation.POLE)
    assert pole.kappa_meridian == pole.kappa_parallel == pytest.approx(-2.0)
    edge = curvatures_at(bulged.samples[-1], 1.0, StateLocation.BOUNDARY, bulged.dphi_b)
    assert edge.kappa_parallel == pytest.approx(-1.0 / bulged.r_b)
    with pytest.raises(SingularEvaluation):
        curvatures_at(bulged.samples[0], 1.0)


def test_circle_boundary_trace(circle):
    trace = boundary_trace(circle)
    assert trace.dphi_b == pytest.approx(-1.0, abs=1e-6)
    assert abs(trace.d2phi_b) < 1e-6
    assert trace.dH_dn == 0.5 * trace.d2phi_b


def test_phi_second_derivative_vanishes_on_circle():
    for sigma in (0.2, 0.7, 1.3):
        state = ProfileState(sigma, math.sin(sigma), math.cos(sigma), -sigma)
        assert abs(phi_second_derivative(state, 0.0)) < 1e-12


def test_evaluate_spans_pole_body_and_tail(circle):
    sigma = np.array([0.0, 0.5 * circle.sigma_start, 0.5, 1.2, 0.5 * math.pi - 0.1,
                      0.5 * math.pi - 1e-7, circle.sigma_b])
    r, z, phi = circle.evaluate(sigma)
    np.testing.assert_allclose(r, np.sin(sigma), atol=1e-8)
    np.testing.assert_allclose(z, np.cos(sigma), atol=1e-8)
    np.testing.assert_allclose(phi, -sigma, atol=1e-8)
    assert circle.sigma_at_height(0.5) == pytest.approx(math.acos(0.5), abs=1e-9)
    assert circle.sigma_at_height(0.05) == pytest.approx(math.acos(0.05), abs=1e-9)


@given(r=st.floats(0.01, 10.0), z=st.floats(0.01, 10.0),
       phi=st.floats(-math.pi, 0.0), c0=st.floats(0.0, 3.0))
def test_rhs_satisfies_reduced_membrane_equation(r, z, phi, c0):
    curv = curvatures_at(ProfileState(0.0, r, z, phi), c0)
    scale = 1.0 + 1.0 / r + 1.0 / z + c0
    assert abs(curv.H + c0 + math.cos(phi) / z) <= 1e-12 * scale


def test_sigma_end(circle):
    assert circle.sigma_end == circle.sigma_b
    capped = integrate_profile(ModelParams(sigma_max=0.5), 1.0)
    assert capped.sigma_end == capped.sigma_cut <= 0.5


@pytest.mark.parametrize("c0", [0.0, 0.3, 1.0, 2.0, 5.0])
@pytest.mark.parametrize("z0", [0.1, 0.7, 3.0, 10.0])
def test_boundary_trace_on_parameter_grid(c0, z0):
    trace = boundary_trace(integrate_profile(ModelParams(c0=c0), z0))
    assert abs(trace.phi_b + 0.5 * math.pi) < 1e-6
    assert abs(trace.dphi_b - (2.0 * c0 - 1.0 / trace.r_b)) < 1e-6
    # H_b - kappa_n - c0 with H_b = (phi'_b - 1/r_b)/2 and kappa_n = -1/r_b
    assert abs(0.5 * (trace.dphi_b + 1.0 / trace.r_b) - c0) < 1e-6
    assert abs(math.cos(trace.phi_b)) / trace.r_b < 1e-8


@pytest.mark.parametrize("c0, z0", [(0.0, 1.0), (1.0, 1.0), (5.0, 0.7)])
def test_unit_speed_along_the_curve(c0, z0):
    sol = integrate_profile(ModelParams(c0=c0), z0)
    step = 1e-3
    sigma = np.linspace(0.01, sol.sigma_b - 0.01, 400)
    r_up, z_up, _ = sol.evaluate(sigma + step)
    r_down, z_down, _ = sol.evaluate(sigma - step)
    speed = np.hypot((r_up - r_down) / (2 * step), (z_up - z_down) / (2 * step))
    assert np.max(np.abs(speed - 1.0)) < 1e-5


@pytest.mark.parametrize("c0, z0", [(1.0, 1.0), (1.0, 3.0), (0.5, 2.0)])
def test_boundary_second_derivative_is_limit_of_interior_values(c0, z0):
    sol = integrate_profile(ModelParams(c0=c0), z0)
    heights = np.array([2e-3, 1e-3])
    sigma, r, psi = sol.tail.states(heights)
    values = [phi_second_derivative(ProfileState(s, rr, z, p - 0.5 * math.pi), c0)
              for s, rr, z, p in zip(sigma, r, heights, psi)]
    # linear extrapolation of phi'' to z = 0
    assert 2.0 * values[1] - values[0] == pytest.approx(sol.d2phi_b, abs=1e-4)


def test_boundary_trace_is_stable_under_tighter_tolerances(bulged):
    tight = integrate_profile(ModelParams(c0=1.0, abs_tol=1e-12, rel_tol=1e-12), 1.0)
    assert tight.d2phi_b == pytest.approx(bulged.d2phi_b, abs=1e-7)
    assert tight.dphi_b == pytest.approx(bulged.dphi_b, abs=1e-8)


def test_height_tail_inverts_arc_length(bulged):
    tail = bulged.tail
    assert tail.z_end < bulged.z_cut < tail.z_switch
    heights = np.geomspace(tail.z_end, tail.z_switch, 7)
    sigma, _, psi = tail.states(heights)
    np.testing.assert_allclose(tail.heights_at(sigma), heights, rtol=1e-9, atol=1e-13)
    assert np.all(np.abs(psi) < 1.0)
    assert bulged.sigma_at_height(heights[3]) == pytest.approx(sigma[3], abs=1e-12)
