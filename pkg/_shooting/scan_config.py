"""
Contains the ScanConfig and ScanResult classes of the equilibrium search
"""
from dataclasses import dataclass, asdict, field
from typing import Optional
import numpy as np
from _enums.residual_kind import ResidualKind
from _errors.errors import InvalidParameter


@dataclass(frozen=True)
class ScanConfig:
    """
    Expanding geometric grid for find_equilibria

    Attributes:
        z_start: First initial height of the grid
        ratio: Geometric growth factor between neighbouring heights
        chunk: Heights evaluated per expansion step
        max_samples: Total evaluation budget
        phi2_tol: Bound on |phi''_b| accepted at a refined root
        z_max: Largest initial height the grid may reach
        n_jobs: joblib workers for residual evaluation (1 runs inline)
    """
    z_start: float = 0.2
    ratio: float = 1.05
    chunk: int = 16
    max_samples: int = 400
    phi2_tol: float = 1e-6
    z_max: float = 1e3
    n_jobs: int = 1

    def __post_init__(self):
        if not self.z_start > 0:
            raise InvalidParameter(f"z_start = {self.z_start} must be positive")
        if not self.ratio > 1:
            raise InvalidParameter(f"ratio = {self.ratio} must exceed 1")
        if not self.z_max > self.z_start:
            raise InvalidParameter(f"z_max = {self.z_max} must exceed z_start = {self.z_start}")
        if self.chunk < 2 or self.max_samples < self.chunk:
            raise InvalidParameter("need chunk >= 2 and max_samples >= chunk")

    def heights(self, start: int, stop: int) -> np.ndarray:
        """ Grid heights z_start * ratio**k for k in [start, stop) """
        return self.z_start * self.ratio ** np.arange(start, stop)

    def to_dict(self) -> dict:
        """ Plain dict of every field """
        return asdict(self)


@dataclass
class ScanResult:
    """
    Outcome of a bracketing scan

    Attributes:
        kind: Residual that was sampled
        grid: Sampled initial heights, increasing
        values: Residual per height, None where integration failed
        brackets: Adjacent height pairs with opposite residual signs
        failures: (z0, reason) of skipped samples
        degenerate: True at c0 = 0, where every z0 is an equilibrium
    """
    kind: ResidualKind
    grid: list[float] = field(default_factory=list)
    values: list[Optional[float]] = field(default_factory=list)
    brackets: list[tuple[float, float]] = field(default_factory=list)
    failures: list[tuple[float, str]] = field(default_factory=list)
    degenerate: bool = False

    def to_dict(self) -> dict:
        """ JSON object of the scan """
        return {"kind": self.kind.value, "degenerate": self.degenerate,
                "brackets": [list(b) for b in self.brackets],
                "failures": [{"z0": z, "reason": why} for z, why in self.failures]}
