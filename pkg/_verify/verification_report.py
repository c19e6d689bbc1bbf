"""
Contains the VerificationReport and VerificationTolerances classes
"""
from dataclasses import dataclass, asdict, field


@dataclass(frozen=True)
class VerificationTolerances:
    """
    Per-check thresholds of the profile verifier

    Attributes:
        rme: Pointwise |H + c0 + nu3/z|
        el: Euler-Lagrange residual on the finest grid
        el_order: Minimal observed order of the Euler-Lagrange residual
        orthogonality: |phi_b + pi/2|
        hz0: |H - kappa_n - c0| at the boundary
        dnH: |dH/dn| at the boundary
        u_r: |U_R|
        rescaling: |int (H + c0) dSigma| over the doubled surface
        c3_gap: Mismatch of the reflected surface at z = 0
        kappa_g: Geodesic curvature of the boundary circle
    """
    rme: float = 1e-9
    el: float = 1e-5
    el_order: float = 2.0
    orthogonality: float = 1e-6
    hz0: float = 1e-6
    dnH: float = 1e-6
    u_r: float = 1e-6
    rescaling: float = 1e-6
    c3_gap: float = 1e-6
    kappa_g: float = 1e-8

    def to_dict(self) -> dict:
        """ Plain dict of every threshold """
        return asdict(self)


@dataclass(frozen=True)
class VerificationReport:
    """
    Numerical certificate of one profile

    Attributes:
        rme_max: sup |H + c0 + nu3/z| over interior samples
        el_max: sup of the Euler-Lagrange residual on the finest grid
        el_order: Observed order of the Euler-Lagrange residual under refinement
        orthogonality: |phi_b + pi/2|
        hz0: |H_b - kappa_n - c0|
        dnH: |phi''_b / 2|
        u_r_abs: |U_R|
        rescaling: |int (H + c0) dSigma| over the doubled surface
        c3_gap: Reflection mismatch at z = 0
        kappa_g: |cos phi_b| / r_b
        tau_g: Geodesic torsion of the boundary circle, 0 for parallels
        c0: Spontaneous curvature; U_R and rescaling are not required at c0 = 0
        tolerances: Thresholds used for all_pass
    """
    rme_max: float
    el_max: float
    el_order: float
    orthogonality: float
    hz0: float
    dnH: float
    u_r_abs: float
    rescaling: float
    c3_gap: float
    kappa_g: float
    tau_g: float = 0.0
    c0: float = 0.0
    tolerances: VerificationTolerances = field(default_factory=VerificationTolerances)

    def checks(self) -> dict[str, bool]:
        """
        Outcome of every required check

        Returns:
            Check name mapped to pass/fail
        """
        tol = self.tolerances
        outcome = {
            "rme_max": self.rme_max < tol.rme,
            "el_max": self.el_max < tol.el,
            "el_order": self.el_order >= tol.el_order,
            "orthogonality": self.orthogonality < tol.orthogonality,
            "hz0": self.hz0 < tol.hz0,
            "dnH": self.dnH < tol.dnH,
            "c3_gap": self.c3_gap < tol.c3_gap,
            "kappa_g": self.kappa_g < tol.kappa_g,
        }
        # every hemisphere is an equilibrium at c0 = 0
        if self.c0 > 0:
            outcome["u_r_abs"] = self.u_r_abs < tol.u_r
            outcome["rescaling"] = self.rescaling < tol.rescaling
        return outcome

    @property
    def all_pass(self) -> bool:
        """ Whether every required check is below its tolerance """
        return all(self.checks().values())

    def failures(self) -> list[str]:
        """ Names of failed checks """
        return [name for name, ok in self.checks().items() if not ok]

    def to_dict(self) -> dict:
        """ JSON object with the report keys plus the tolerances """
        return {"rme_max": self.rme_max, "el_max": self.el_max,
                "orthogonality": self.orthogonality, "hz0": self.hz0,
                "dnH": self.dnH, "u_r_abs": self.u_r_abs,
                "rescaling": self.rescaling, "c3_gap": self.c3_gap,
                "kappa_g": self.kappa_g,
                "all_pass": self.all_pass, "tolerances": self.tolerances.to_dict()}
