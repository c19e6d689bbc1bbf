"""
Contains the BranchEntry class for one equilibrium of the shooting search
"""
from dataclasses import dataclass, field
from _functionals.energy_report import EnergyReport
from _profile.profile_solution import ProfileSolution
from _verify.verification_report import VerificationReport


@dataclass
class BranchEntry:
    """
    One equilibrium initial height with its profile, energies and certificate

    Attributes:
        index: Ordinal k >= 1 in increasing z0
        z0_root: Refined initial height
        profile: Integrated profile at z0_root
        energies: Functionals of the profile surface
        verification: Numerical certificate of the profile
        error_bound: Width bound of the final root bracket
    """
    index: int
    z0_root: float
    profile: ProfileSolution = field(repr=False)
    energies: EnergyReport
    verification: VerificationReport
    error_bound: float = 0.0

    @property
    def r_b(self) -> float:
        """ Boundary radius """
        return self.profile.r_b

    @property
    def sigma_b(self) -> float:
        """ Boundary arc length """
        return self.profile.sigma_b

    def to_dict(self) -> dict:
        """ JSON object of the branch file """
        return {"index": self.index, "z0_root": self.z0_root, "r_b": self.r_b,
                "sigma_b": self.sigma_b, "energies": self.energies.to_dict(),
                "verification": self.verification.to_dict()}
