"""
Surfaces of revolution as meshes, the ball model of hyperbolic space and
tabulated residual curves
"""
import logging
from dataclasses import dataclass, field
import numpy as np
from joblib import Parallel, delayed
from _enums.mesh_model import MeshModel
from _errors.errors import (C0Zero, DegenerateResolution, InvalidParameter,
                            NumericalFailure, PointAtSouthPoleSingularity)
from _export.revolution_mesh import RevolutionMesh
from _profile.model_params import ModelParams
from _profile.profile_solution import ProfileSolution
from _shooting.shooting import residuals

logger = logging.getLogger(__name__)


@dataclass
class ResidualTable:
    """
    Both equilibrium residuals over a grid of initial heights

    Attributes:
        rows: (z0, residual_mean, residual_phi2) for successful integrations
        failures: (z0, reason) for the rest
    """
    rows: list[tuple[float, float, float]] = field(default_factory=list)
    failures: list[tuple[float, str]] = field(default_factory=list)


def _rings(sol: ProfileSolution, n_sigma: int, reflect: bool):
    sigma = np.arange(1, n_sigma + 1) * (sol.sigma_b / n_sigma)
    r, z, _ = sol.evaluate(sigma)
    z[-1] = 0.0
    if reflect:
        r = np.concatenate([r, r[-2::-1]])
        z = np.concatenate([z, -z[-2::-1]])
    return r, z


def revolve(sol: ProfileSolution, n_theta: int, n_sigma: int,
            reflect: bool = False) -> RevolutionMesh:
    """
    Rotate a profile about the z-axis

    Args:
        sol: Profile that hit the boundary
        n_theta: Angular samples, >= 3
        n_sigma: Arc-length-uniform rings from pole to boundary, >= 2
        reflect: Append the mirror image in z = 0 and close the surface
    Returns:
        RevolutionMesh with a fan at each pole
    Raises:
        NoBoundaryData: the profile did not reach z = 0
        DegenerateResolution: n_theta < 3 or n_sigma < 2
    """
    sol.require_boundary()
    if n_theta < 3 or n_sigma < 2:
        raise DegenerateResolution(f"need n_theta >= 3 and n_sigma >= 2, got {n_theta}, {n_sigma}")
    r, z = _rings(sol, n_sigma, reflect)
    theta = 2.0 * np.pi * np.arange(n_theta) / n_theta
    ring_points = np.stack([np.outer(r, np.cos(theta)), np.outer(r, np.sin(theta)),
                            np.repeat(z[:, None], n_theta, axis=1)], axis=-1).reshape(-1, 3)
    vertices = [np.array([[0.0, 0.0, sol.z0]]), ring_points]
    if reflect:
        vertices.append(np.array([[0.0, 0.0, -sol.z0]]))
    vertices = np.concatenate(vertices)

    n_rings = len(r)
    j = np.arange(n_theta)
    j_next = (j + 1) % n_theta

    def ring(i, cols):
        return 1 + i * n_theta + cols

    faces = [np.stack([np.zeros(n_theta, dtype=int), ring(0, j), ring(0, j_next)], axis=1)]
    for i in range(n_rings - 1):
        a, b = ring(i, j), ring(i, j_next)
        c, d = ring(i + 1, j_next), ring(i + 1, j)
        faces.append(np.stack([a, d, c], axis=1))
        faces.append(np.stack([a, c, b], axis=1))
    if reflect:
        bottom = np.full(n_theta, len(vertices) - 1)
        faces.append(np.stack([ring(n_rings - 1, j), bottom, ring(n_rings - 1, j_next)], axis=1))
    mesh = RevolutionMesh(vertices, np.concatenate(faces), MeshModel.HALF_SPACE, reflect)
    logger.debug("revolved z0=%.10g into %r", sol.z0, mesh)
    return mesh


def _ball_map(points: np.ndarray) -> np.ndarray:
    x, y, z = points[..., 0], points[..., 1], points[..., 2]
    denominator = x * x + y * y + (z + 1.0) ** 2
    if np.any(denominator == 0.0):
        raise PointAtSouthPoleSingularity("the ball map is singular at (0, 0, -1)")
    return np.stack([2.0 * x, 2.0 * y, x * x + y * y + z * z - 1.0], axis=-1) \
        / denominator[..., None]


def to_ball_model(item):
    """
    Map the upper half-space onto the unit ball,
    (x, y, z) -> (2x, 2y, x^2 + y^2 + z^2 - 1) / (x^2 + y^2 + (z + 1)^2)

    Args:
        item: A 3D point or a half-space RevolutionMesh
    Returns:
        Mapped point as a numpy array, or a new ball-model mesh
    Raises:
        PointAtSouthPoleSingularity: a point equals (0, 0, -1)
        InvalidParameter: the mesh is already in the ball model
    """
    if isinstance(item, RevolutionMesh):
        if item.model == MeshModel.BALL:
            raise InvalidParameter("mesh is already in the ball model")
        return RevolutionMesh(_ball_map(item.vertices), item.faces.copy(),
                              MeshModel.BALL, item.closed)
    return _ball_map(np.asarray(item, dtype=float))


def mesh_area(mesh: RevolutionMesh) -> float:
    """ Sum of the Euclidean triangle areas """
    a, b, c = (mesh.vertices[mesh.faces[:, k]] for k in range(3))
    return float(0.5 * np.linalg.norm(np.cross(b - a, c - a), axis=1).sum())


def euler_characteristic(mesh: RevolutionMesh) -> int:
    """ V - E + F """
    n_edges = len(np.unique(mesh.edges(), axis=0))
    return len(mesh.vertices) - n_edges + len(mesh.faces)


def is_watertight(mesh: RevolutionMesh) -> bool:
    """ Whether every edge borders exactly two faces """
    _, counts = np.unique(mesh.edges(), axis=0, return_counts=True)
    return bool(np.all(counts == 2))


def _table_row(params: ModelParams, z0: float):
    try:
        return residuals(params, z0), None
    except NumericalFailure as err:
        return None, f"{type(err).__name__}: {err}"


def residual_curve_data(params: ModelParams, z_grid, n_jobs: int = 1) -> ResidualTable:
    """
    Tabulate residual_mean and residual_phi2 over initial heights

    Args:
        params: Model parameters, c0 > 0
        z_grid: Initial heights
        n_jobs: joblib workers
    Returns:
        ResidualTable in grid order, failed heights listed with their reason
    Raises:
        C0Zero: c0 = 0
    """
    if params.c0 == 0:
        raise C0Zero("residual curves need c0 > 0")
    heights = [float(z) for z in z_grid]
    if n_jobs == 1:
        outcomes = [_table_row(params, z) for z in heights]
    else:
        outcomes = Parallel(n_jobs=n_jobs)(delayed(_table_row)(params, z) for z in heights)
    table = ResidualTable()
    for z0, (values, why) in zip(heights, outcomes):
        if why is None:
            table.rows.append((z0, values[0], values[1]))
        else:
            logger.warning("residual row z0=%.10g missing: %s", z0, why)
            table.failures.append((z0, why))
    return table
