"""
Writes meshes, tables and reports to disk, atomically
"""
import csv
import io
import json
import logging
import os
import tempfile
import numpy as np
from _enums.artifact_format import ArtifactFormat
from _enums.state_location import StateLocation
from _errors.errors import InvalidParameter, IoFailure
from _export.geometry_export import ResidualTable
from _export.revolution_mesh import RevolutionMesh
from _profile.profile_ode import curvatures_at
from _profile.profile_solution import ProfileSolution

logger = logging.getLogger(__name__)

PROFILE_HEADER = ("sigma", "r", "z", "phi", "H", "K", "nu3")
RESIDUAL_HEADER = ("z0", "residual_mean", "residual_phi2")


def _num(value) -> str:
    """ Shortest text that parses back to the same double """
    return repr(float(value))


def profile_rows(sol: ProfileSolution) -> list[tuple]:
    """
    One row per stored sample with curvature columns

    Args:
        sol: Integrated profile
    Returns:
        (sigma, r, z, phi, H, K, nu3) tuples, pole and boundary by their limits
    """
    rows = []
    for state, place in zip(sol.samples, sol.locations()):
        dphi = sol.dphi_b if place == StateLocation.BOUNDARY else None
        curv = curvatures_at(state, sol.c0, place, dphi)
        rows.append((state.sigma, state.r, state.z, state.phi, curv.H, curv.K, curv.nu3))
    return rows


def _to_json(data) -> dict:
    return data.to_dict() if hasattr(data, "to_dict") else data


def render(data, fmt: ArtifactFormat) -> str:
    """
    Text of an artifact

    Args:
        data: RevolutionMesh for OBJ; ProfileSolution or ResidualTable for CSV;
            dict or report object for JSON
        fmt: Output format
    Returns:
        File contents
    Raises:
        InvalidParameter: data kind does not match the format
    """
    if fmt == ArtifactFormat.OBJ:
        if not isinstance(data, RevolutionMesh):
            raise InvalidParameter("OBJ output needs a RevolutionMesh")
        lines = [f"v {_num(x)} {_num(y)} {_num(z)}" for x, y, z in data.vertices]
        lines += [f"f {i + 1} {j + 1} {k + 1}" for i, j, k in data.faces]
        return "\n".join(lines) + "\n"

    if fmt == ArtifactFormat.CSV:
        if isinstance(data, ProfileSolution):
            header, rows = PROFILE_HEADER, profile_rows(data)
        elif isinstance(data, ResidualTable):
            header, rows = RESIDUAL_HEADER, data.rows
        else:
            raise InvalidParameter("CSV output needs a profile or a residual table")
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([_num(v) for v in row] for row in rows)
        return buffer.getvalue()

    return json.dumps(_to_json(data), indent=2, allow_nan=False) + "\n"


def write_artifact(data, fmt: ArtifactFormat, path: str):
    """
    Write an artifact through a temporary file and an atomic rename

    Args:
        data: Mesh, profile, table or report
        fmt: Output format
        path: Destination file
    Raises:
        InvalidParameter: data kind does not match the format
        IoFailure: the file could not be written
    """
    text = render(data, fmt)
    directory = os.path.dirname(os.path.abspath(path))
    temp_name = None
    try:
        with tempfile.NamedTemporaryFile("w", encoding="utf-8", dir=directory,
                                         prefix=".tmp-", delete=False) as handle:
            temp_name = handle.name
            handle.write(text)
        os.replace(temp_name, path)
    except OSError as err:
        if temp_name is not None and os.path.exists(temp_name):
            os.unlink(temp_name)
        raise IoFailure(path, err) from err
    logger.info("wrote %s (%s)", path, fmt.value)


def read_profile_csv(path: str) -> dict[str, np.ndarray]:
    """
    Read a profile CSV written by write_artifact

    Args:
        path: CSV file with the profile header
    Returns:
        Column name mapped to a float array
    Raises:
        IoFailure: the file could not be read
        InvalidParameter: the header does not match
    """
    try:
        with open(path, encoding="utf-8", newline="") as handle:
            rows = list(csv.reader(handle))
    except OSError as err:
        raise IoFailure(path, err) from err
    if not rows or tuple(rows[0]) != PROFILE_HEADER:
        raise InvalidParameter(f"{path}: expected header {','.join(PROFILE_HEADER)}")
    values = np.array([[float(v) for v in row] for row in rows[1:] if row], dtype=float)
    return {name: values[:, k] for k, name in enumerate(PROFILE_HEADER)}
