"""
Contains the RevolutionMesh class storing a triangulated surface of revolution
"""
from dataclasses import dataclass
import numpy as np
from _enums.mesh_model import MeshModel


@dataclass
class RevolutionMesh:
    """
    Triangle mesh with faces counter-clockwise seen from the outward side

    Attributes:
        vertices: (n, 3) array of points
        faces: (m, 3) array of 0-based vertex indices
        model: Half-space or ball model coordinates
        closed: Whether the mesh was doubled by reflection in z = 0
    """
    vertices: np.ndarray
    faces: np.ndarray
    model: MeshModel = MeshModel.HALF_SPACE
    closed: bool = False

    def __repr__(self):
        return (f"RevolutionMesh({len(self.vertices)} vertices, {len(self.faces)} faces, "
                f"{self.model.value}, closed={self.closed})")

    def edges(self) -> np.ndarray:
        """
        Undirected edges, one row per face side

        Returns:
            (3m, 2) array with each row sorted
        """
        sides = np.concatenate([self.faces[:, [0, 1]], self.faces[:, [1, 2]],
                                self.faces[:, [2, 0]]])
        return np.sort(sides, axis=1)
