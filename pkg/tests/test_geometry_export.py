""" Tests for meshes, the ball model, residual tables and artifact files """
import json
import math
import numpy as np
import pytest
from hypothesis import given, strategies as st
from _enums.artifact_format import ArtifactFormat
from _enums.mesh_model import MeshModel
from _errors.errors import (C0Zero, DegenerateResolution, InvalidParameter, IoFailure,
                            NoBoundaryData, PointAtSouthPoleSingularity)
from _export.artifacts import (PROFILE_HEADER, read_profile_csv, render, write_artifact)
from _export.geometry_export import (ResidualTable, euler_characteristic, is_watertight,
                                     mesh_area, residual_curve_data, revolve, to_ball_model)
from _functionals.functionals import hemisphere_oracle
from _profile.model_params import ModelParams
from _profile.profile_ode import integrate_profile


def _signed_volume(mesh):
    a, b, c = (mesh.vertices[mesh.faces[:, k]] for k in range(3))
    return float(np.einsum("ij,ij->i", a, np.cross(b, c)).sum() / 6.0)


def test_smallest_open_mesh(circle):
    mesh = revolve(circle, 3, 2)
    assert len(mesh.vertices) == 7
    assert len(mesh.faces) == 3 + 2 * 3
    assert not mesh.closed
    assert mesh.model == MeshModel.HALF_SPACE


@pytest.mark.parametrize("n_theta, n_sigma", [(3, 2), (8, 5), (32, 16)])
def test_closed_mesh_counts(circle, n_theta, n_sigma):
    mesh = revolve(circle, n_theta, n_sigma, reflect=True)
    assert len(mesh.vertices) == 2 + (2 * n_sigma - 1) * n_theta
    assert euler_characteristic(mesh) == 2
    assert is_watertight(mesh)
    assert _signed_volume(mesh) > 0


def test_open_mesh_is_a_disc(bulged):
    mesh = revolve(bulged, 16, 8)
    assert euler_characteristic(mesh) == 1
    assert not is_watertight(mesh)


def test_circle_mesh_lies_on_sphere(circle):
    mesh = revolve(circle, 24, 12, reflect=True)
    assert np.max(np.abs(np.linalg.norm(mesh.vertices, axis=1) - 1.0)) < 1e-8


def test_bad_resolution(circle):
    with pytest.raises(DegenerateResolution):
        revolve(circle, 2, 4)
    with pytest.raises(DegenerateResolution):
        revolve(circle, 8, 1)


def test_mesh_needs_boundary():
    with pytest.raises(NoBoundaryData):
        revolve(integrate_profile(ModelParams(sigma_max=0.5), 1.0), 8, 8)


def test_ball_map_points():
    np.testing.assert_allclose(to_ball_model((0.0, 0.0, 1.0)), [0.0, 0.0, 0.0], atol=1e-15)
    np.testing.assert_allclose(to_ball_model((1.0, 0.0, 0.0)), [1.0, 0.0, 0.0], atol=1e-15)
    np.testing.assert_allclose(to_ball_model((0.0, 0.0, 3.0)), [0.0, 0.0, 0.5], atol=1e-15)
    with pytest.raises(PointAtSouthPoleSingularity):
        to_ball_model((0.0, 0.0, -1.0))


def test_ball_mesh(circle):
    mesh = to_ball_model(revolve(circle, 16, 8))
    assert mesh.model == MeshModel.BALL
    rim = mesh.vertices[-16:]
    np.testing.assert_allclose(np.linalg.norm(rim, axis=1), 1.0, atol=1e-12)
    with pytest.raises(InvalidParameter):
        to_ball_model(mesh)


@given(x=st.floats(-50, 50), y=st.floats(-50, 50), z=st.floats(0, 50))
def test_upper_half_space_maps_into_ball(x, y, z):
    assert np.linalg.norm(to_ball_model((x, y, z))) <= 1.0 + 1e-12


@pytest.mark.parametrize("R", [2.0, 0.5])
def test_half_space_cap_meets_ball_orthogonally(R):
    # a sphere |p - c| = rho is orthogonal to the unit sphere iff |c|^2 - rho^2 = 1
    mesh = to_ball_model(revolve(integrate_profile(ModelParams(), R), 24, 24, reflect=True))
    p = mesh.vertices
    lhs = np.column_stack([2.0 * p, np.ones(len(p))])
    solution, *_ = np.linalg.lstsq(lhs, (p * p).sum(axis=1), rcond=None)
    centre, offset = solution[:3], solution[3]
    rho2 = offset + centre @ centre
    assert centre @ centre - rho2 == pytest.approx(1.0, abs=1e-7)


def test_mesh_area_converges(circle):
    exact = 2.0 * math.pi
    errors = [abs(mesh_area(revolve(circle, 4 * n, n)) - exact) for n in (8, 16)]
    assert errors[0] / errors[1] > 3.0


def test_reflection_commutes_with_revolution(bulged):
    n_theta, n_sigma = 12, 6
    half = revolve(bulged, n_theta, n_sigma)
    whole = revolve(bulged, n_theta, n_sigma, reflect=True)
    n = len(half.vertices)
    np.testing.assert_array_equal(whole.vertices[:n], half.vertices)
    rings = half.vertices[1:].reshape(n_sigma, n_theta, 3)[:-1][::-1].reshape(-1, 3)
    mirrored = whole.vertices[n:-1].copy()
    mirrored[:, 2] *= -1.0
    np.testing.assert_array_equal(mirrored, rings)
    assert whole.vertices[-1][2] == -half.vertices[0][2]


def test_residual_table():
    params = ModelParams(c0=1.0)
    assert residual_curve_data(params, []).rows == []
    with pytest.raises(C0Zero):
        residual_curve_data(ModelParams(), [1.0])
    table = residual_curve_data(params, [0.5, 1.0])
    assert [row[0] for row in table.rows] == [0.5, 1.0]
    assert table.failures == []


def test_residual_table_reports_failures():
    table = residual_curve_data(ModelParams(c0=1.0, sigma_max=0.5), [1.0])
    assert table.rows == []
    assert table.failures[0][0] == 1.0


def test_obj_lines(circle):
    mesh = revolve(circle, 3, 2)
    lines = render(mesh, ArtifactFormat.OBJ).splitlines()
    assert sum(line.startswith("v ") for line in lines) == 7
    assert sum(line.startswith("f ") for line in lines) == 9
    assert lines[7] == "f 1 2 3"


def test_json_artifact(tmp_path):
    path = tmp_path / "oracle.json"
    report = hemisphere_oracle(1.0, 1.0)
    write_artifact(report, ArtifactFormat.JSON, str(path))
    assert json.loads(path.read_text()) == report.to_dict()
    assert [p.name for p in tmp_path.iterdir()] == ["oracle.json"]


def test_profile_csv_round_trip(tmp_path, circle):
    path = tmp_path / "circle.csv"
    write_artifact(circle, ArtifactFormat.CSV, str(path))
    assert path.read_text().splitlines()[0] == ",".join(PROFILE_HEADER)
    columns = read_profile_csv(str(path))
    np.testing.assert_array_equal(columns["r"], circle.r)
    assert columns["z"][-1] == 0.0
    assert columns["phi"][-1] == pytest.approx(-math.pi / 2, abs=1e-8)


def test_unwritable_destination(tmp_path, circle):
    with pytest.raises(IoFailure):
        write_artifact(circle, ArtifactFormat.CSV, str(tmp_path / "missing" / "x.csv"))
    with pytest.raises(IoFailure):
        read_profile_csv(str(tmp_path / "absent.csv"))


def test_format_mismatch(circle):
    with pytest.raises(InvalidParameter):
        render(circle, ArtifactFormat.OBJ)
    with pytest.raises(InvalidParameter):
        render({"a": 1}, ArtifactFormat.CSV)
    assert render(ResidualTable(), ArtifactFormat.CSV) == "z0,residual_mean,residual_phi2\n"
