"""
Contains the EnergyReport class collecting the functionals of one surface
"""
from dataclasses import dataclass
from typing import Optional
import math


@dataclass(frozen=True)
class EnergyReport:
    """
    Regularized functionals and Helfrich energy of a single surface

    Attributes:
        A_R: Renormalized area (regular-integrand method)
        U_R: Regularized potential
        G_R: A_R - 2 c0 U_R
        helfrich: Helfrich energy with a = 1, b = 0
        excess: Hyperbolic excess, the integral of (H + c0 + nu3/z)^2
        theorem1_residual: |-G_R + excess - helfrich|
        method_discrepancy: |A_R(limit) - A_R(regular)|, None when the limit
            method was skipped
    """
    A_R: float
    U_R: float
    G_R: float
    helfrich: float
    excess: float
    theorem1_residual: float
    method_discrepancy: Optional[float] = None

    @property
    def slack(self) -> float:
        """ helfrich - (-G_R), nonnegative with equality on reduced-membrane surfaces """
        return self.helfrich + self.G_R

    def is_consistent(self, tol: float = 1e-7) -> bool:
        """
        Whether the energy identity and inequality hold

        Args:
            tol: Allowed residual
        Returns:
            True if theorem1_residual < tol and slack >= -tol
        """
        return self.theorem1_residual < tol and self.slack >= -tol

    def to_dict(self) -> dict:
        """ JSON object with the report keys """
        return {"A_R": self.A_R, "U_R": self.U_R, "G_R": self.G_R,
                "helfrich": self.helfrich, "excess": self.excess,
                "theorem1_residual": self.theorem1_residual,
                "method_discrepancy": self.method_discrepancy}

    @classmethod
    def from_dict(cls, data: dict) -> "EnergyReport":
        """ Inverse of to_dict """
        return cls(**{key: data[key] for key in
                      ("A_R", "U_R", "G_R", "helfrich", "excess", "theorem1_residual")},
                   method_discrepancy=data.get("method_discrepancy"))

    def __str__(self):
        return (f"A_R={self.A_R:.10g} U_R={self.U_R:.10g} G_R={self.G_R:.10g} "
                f"helfrich={self.helfrich:.10g} excess={self.excess:.10g} "
                f"(G_R/2pi={self.G_R / (2 * math.pi):.6g})")
