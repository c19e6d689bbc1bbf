""" Tests for the regularized functionals and the hemisphere oracle """
import json
import math
import numpy as np
import pytest
from hypothesis import given, strategies as st
from _errors.errors import NonPositiveModulus, NonPositiveRadius, NotAdmissible
from _export.artifacts import profile_rows
from _functionals.energy_report import EnergyReport
from _functionals.functionals import (area_regularized, evaluate_energies, g_regularized,
                                      gaussian_curvature_integral, helfrich_energy,
                                      hemisphere_oracle, hyperbolic_excess,
                                      potential_regularized, potential_regularized_limit,
                                      theorem1_residual, willmore_energy)
from _profile.model_params import ModelParams
from _profile.profile_ode import integrate_profile
from _surfaces.hemisphere_surface import HemisphereSurface
from _surfaces.profile_surface import ProfileSurface
from _surfaces.sampled_surface import SampledSurface

TWO_PI = 2.0 * math.pi
HEMISPHERE_GRID = [(R, c0) for R in (0.5, 1.0, 2.0) for c0 in (0.0, 0.5, 1.0)]


def test_oracle_unit_hemisphere():
    report = hemisphere_oracle(1.0, 1.0)
    assert report.A_R == pytest.approx(-TWO_PI)
    assert report.U_R == pytest.approx(-TWO_PI)
    assert report.G_R == pytest.approx(TWO_PI)
    assert report.helfrich == 0.0
    assert report.excess == pytest.approx(TWO_PI)


def test_oracle_flat_c0():
    report = hemisphere_oracle(1.0, 0.0)
    assert report.G_R == pytest.approx(-TWO_PI)
    assert report.helfrich == pytest.approx(TWO_PI)
    assert report.excess == 0.0


def test_oracle_radius_two():
    report = hemisphere_oracle(2.0, 1.0)
    assert report.helfrich == pytest.approx(TWO_PI)
    assert report.excess == pytest.approx(4 * TWO_PI)
    assert report.slack == pytest.approx(report.excess)


def test_oracle_rejects_radius():
    with pytest.raises(NonPositiveRadius):
        hemisphere_oracle(0.0, 1.0)
    with pytest.raises(NonPositiveRadius):
        HemisphereSurface(-1.0, 1.0)


@pytest.mark.parametrize("R, c0", HEMISPHERE_GRID)
def test_hemisphere_quadrature_matches_oracle(R, c0):
    surface = HemisphereSurface(R, c0)
    exact = hemisphere_oracle(R, c0)
    report = evaluate_energies(surface)
    for key in ("A_R", "U_R", "G_R", "helfrich", "excess"):
        assert getattr(report, key) == pytest.approx(getattr(exact, key), abs=1e-8)
    assert report.method_discrepancy < 1e-6
    assert report.theorem1_residual < 1e-7
    assert report.slack >= -1e-9
    assert report.slack == pytest.approx(report.excess, abs=1e-8)
    assert report.is_consistent()


def test_hemisphere_strict_inequality_off_equilibrium():
    check = theorem1_residual(HemisphereSurface(2.0, 1.0))
    assert check.residual < 1e-8
    assert check.slack == pytest.approx(TWO_PI * 4.0, abs=1e-8)


def test_hemisphere_g_regularized():
    assert g_regularized(HemisphereSurface(1.0, 1.0)) == pytest.approx(TWO_PI, abs=1e-8)
    assert g_regularized(HemisphereSurface(0.5, 0.5)) == pytest.approx(-TWO_PI + math.pi, abs=1e-8)


def test_hemisphere_gauss_bonnet_and_willmore():
    surface = HemisphereSurface(1.5, 0.0)
    assert gaussian_curvature_integral(surface).discrepancy < 1e-10
    assert abs(willmore_energy(surface)) < 1e-10


def test_potential_limit_on_hemisphere():
    assert potential_regularized_limit(HemisphereSurface(2.0, 0.0)) == pytest.approx(-2 * TWO_PI, abs=1e-6)


@pytest.mark.parametrize("z0", [0.5, 1.0, 2.0, 3.0])
def test_circle_area_is_radius_independent(z0):
    surface = ProfileSurface(integrate_profile(ModelParams(), z0))
    area = area_regularized(surface)
    assert area.value == pytest.approx(-TWO_PI, abs=1e-7)
    assert area.method_discrepancy < 1e-6
    assert g_regularized(surface) == pytest.approx(area.value, abs=1e-12)


def test_circle_potential(circle):
    surface = ProfileSurface(circle)
    assert potential_regularized(surface) == pytest.approx(-TWO_PI, abs=1e-7)
    assert potential_regularized_limit(surface) == pytest.approx(-TWO_PI, abs=1e-6)


def test_reduced_membrane_profile_has_no_excess(bulged):
    surface = ProfileSurface(bulged)
    assert hyperbolic_excess(surface) < 1e-10
    check = theorem1_residual(surface)
    assert check.residual < 1e-7
    assert abs(check.slack) < 1e-7
    assert evaluate_energies(surface, both_methods=False).is_consistent()


def test_gauss_bonnet_term_of_helfrich(bulged):
    surface = ProfileSurface(bulged)
    plain = helfrich_energy(surface, 1.0, 0.0)
    assert helfrich_energy(surface, 1.0, 1.0) == pytest.approx(plain + TWO_PI, abs=1e-6)
    assert gaussian_curvature_integral(surface).discrepancy < 1e-6


def test_helfrich_needs_positive_modulus(bulged):
    with pytest.raises(NonPositiveModulus):
        helfrich_energy(ProfileSurface(bulged), 0.0, 1.0)


def test_unbounded_profile_not_admissible():
    sol = integrate_profile(ModelParams(sigma_max=0.5), 1.0)
    with pytest.raises(NotAdmissible):
        potential_regularized(ProfileSurface(sol))


def test_tilted_cap_not_admissible():
    t = np.linspace(0.0, math.pi / 3, 40)
    z = np.cos(t) - 0.5
    z[-1] = 0.0
    cap = SampledSurface(t, np.sin(t), z, -t, -np.ones_like(t), 0.0)
    with pytest.raises(NotAdmissible):
        evaluate_energies(cap)


def test_sampled_circle_matches_profile(circle):
    rows = np.array(profile_rows(circle))
    sampled = SampledSurface(*(rows[:, k] for k in range(5)), 0.0)
    report = evaluate_energies(sampled, both_methods=False)
    assert report.A_R == pytest.approx(-TWO_PI, abs=1e-5)
    assert report.U_R == pytest.approx(-TWO_PI, abs=1e-5)
    assert report.method_discrepancy is None


def test_report_keys_and_json_round_trip():
    report = evaluate_energies(HemisphereSurface(1.0, 1.0))
    data = report.to_dict()
    assert set(data) == {"A_R", "U_R", "G_R", "helfrich", "excess",
                         "theorem1_residual", "method_discrepancy"}
    assert EnergyReport.from_dict(json.loads(json.dumps(data))) == report


@given(R=st.floats(0.05, 20.0), c0=st.floats(0.0, 5.0))
def test_oracle_satisfies_energy_identity(R, c0):
    report = hemisphere_oracle(R, c0)
    scale = 1.0 + (c0 * R) ** 2
    assert abs(-report.G_R + report.excess - report.helfrich) <= 1e-12 * TWO_PI * scale
    assert report.slack >= -1e-12 * TWO_PI * scale
