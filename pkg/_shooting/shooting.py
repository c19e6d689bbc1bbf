"""
Shooting search for the initial heights whose profiles are equilibria.

An equilibrium needs dH/dn = 0 on the boundary, i.e. phi''_b = 0, which for
c0 > 0 is equivalent to U_R = 0, i.e. a vanishing mean of H + c0.
"""
import logging
from contextlib import nullcontext
from typing import Callable, NamedTuple, Optional
import numpy as np
from joblib import Parallel, delayed
from scipy.optimize import brentq
from _enums.residual_kind import ResidualKind
from _errors.errors import (BudgetExceeded, C0Zero, EmptyRange, InvalidParameter,
                            LostBracket, NonConvergence, NumericalFailure)
from _functionals.functionals import evaluate_energies
from _profile.model_params import ModelParams
from _profile.profile_ode import integrate_profile
from _profile.profile_solution import ProfileSolution
from _shooting.branch_entry import BranchEntry
from _shooting.scan_config import ScanConfig, ScanResult
from _surfaces.profile_surface import ProfileSurface
from _verify.verify import verify_profile

logger = logging.getLogger(__name__)


class RefinedRoot(NamedTuple):
    """ Root of a residual with the bound on its position """
    z0_root: float
    error_bound: float
    residual: float


def mean_excess(sol: ProfileSolution) -> float:
    """ int (H + c0) r dsigma over a profile that hit the boundary """
    grid = ProfileSurface(sol).quadrature_grid()
    return grid.integral((grid.H + sol.c0) * grid.r)


def residual_mean(params: ModelParams, z0: float, equilibrium_test: bool = True) -> float:
    """
    Mean-curvature excess int (H + c0) dSigma / (2 pi)

    Args:
        params: Model parameters
        z0: Initial height
        equilibrium_test: Refuse c0 = 0, where the residual does not detect equilibria
    Returns:
        int_0^sigma_b (H + c0) r dsigma
    Raises:
        C0Zero: c0 = 0 in equilibrium-test mode
        IntegrationFailure: the profile did not reach the boundary
    """
    if equilibrium_test and params.c0 == 0:
        raise C0Zero("residual_mean does not characterize equilibria at c0 = 0")
    return mean_excess(integrate_profile(params, z0, strict=True))


def residual_phi2(params: ModelParams, z0: float) -> float:
    """
    Boundary value of phi''

    Args:
        params: Model parameters
        z0: Initial height
    Returns:
        d2phi_b of the integrated profile
    Raises:
        NoBoundaryData: the profile did not reach the boundary
    """
    return integrate_profile(params, z0).require_boundary().d2phi_b


def residuals(params: ModelParams, z0: float) -> tuple[float, float]:
    """ (residual_mean, residual_phi2) from a single integration """
    sol = integrate_profile(params, z0, strict=True)
    return mean_excess(sol), sol.require_boundary().d2phi_b


def _residual_fn(params: ModelParams, kind: ResidualKind) -> Callable[[float], float]:
    if kind == ResidualKind.MEAN:
        return lambda z0: residual_mean(params, z0, equilibrium_test=False)
    return lambda z0: residual_phi2(params, z0)


def _sample(params: ModelParams, z0: float, kind: ResidualKind):
    try:
        return _residual_fn(params, kind)(z0), None
    except NumericalFailure as err:
        return None, f"{type(err).__name__}: {err}"


def _evaluate(params: ModelParams, heights, kind: ResidualKind,
              parallel: Optional[Parallel] = None):
    # joblib returns results in submission order
    if parallel is None:
        return [_sample(params, float(z), kind) for z in heights]
    return parallel(delayed(_sample)(params, float(z), kind) for z in heights)


def _pool(n_jobs: int) -> Parallel | nullcontext:
    return nullcontext() if n_jobs == 1 else Parallel(n_jobs=n_jobs)


def _brackets(grid, values) -> list[tuple[float, float]]:
    found = []
    for k in range(len(grid) - 1):
        left, right = values[k], values[k + 1]
        if left is None or right is None:
            continue
        if left == 0.0:
            found.append((grid[k], grid[k]))
        elif left * right < 0:
            found.append((grid[k], grid[k + 1]))
    return found


def _default_kind(params: ModelParams) -> ResidualKind:
    return ResidualKind.MEAN if params.c0 > 0 else ResidualKind.PHI2


def scan_brackets(params: ModelParams, z_min: float, z_max: float, n_samples: int,
                  n_jobs: int = 1, kind: Optional[ResidualKind] = None) -> ScanResult:
    """
    Sign changes of an equilibrium residual on a geometric grid

    Args:
        params: Model parameters
        z_min: Smallest initial height, > 0
        z_max: Largest initial height
        n_samples: Grid size, >= 2
        n_jobs: joblib workers
        kind: Residual to sample, residual_mean by default
    Returns:
        ScanResult; at c0 = 0 only the degenerate flag is set
    Raises:
        EmptyRange: z_min >= z_max
        InvalidParameter: z_min <= 0 or n_samples < 2
    """
    if z_min >= z_max:
        raise EmptyRange(f"empty scan window [{z_min}, {z_max}]")
    if not z_min > 0 or n_samples < 2:
        raise InvalidParameter("need z_min > 0 and n_samples >= 2")
    kind = kind or _default_kind(params)
    if params.c0 == 0:
        logger.info("c0 = 0: every initial height gives an equilibrium hemisphere")
        return ScanResult(kind=kind, degenerate=True)

    grid = [float(z) for z in np.geomspace(z_min, z_max, n_samples)]
    with _pool(n_jobs) as parallel:
        samples = _evaluate(params, grid, kind, parallel)
    result = ScanResult(kind=kind, grid=grid, values=[value for value, _ in samples])
    result.failures = [(z, why) for z, (_, why) in zip(grid, samples) if why is not None]
    result.brackets = _brackets(grid, result.values)
    for z, why in result.failures:
        logger.warning("scan skipped z0=%.10g: %s", z, why)
    logger.info("scan [%g, %g] x %d: %d brackets, %d failures", z_min, z_max,
                n_samples, len(result.brackets), len(result.failures))
    return result


def refine_root(params: ModelParams, bracket: tuple[float, float],
                residual: Optional[Callable[[float], float]] = None,
                kind: Optional[ResidualKind] = None) -> RefinedRoot:
    """
    Brent refinement of a residual root inside a sign-change bracket

    Args:
        params: Model parameters; root_tol bounds the final residual
        bracket: (lo, hi) with opposite residual signs
        residual: Residual callable, defaults to the kind's residual
        kind: Residual used when no callable is given
    Returns:
        RefinedRoot with the root, a bound on its error and the final residual
    Raises:
        LostBracket: the endpoint residuals have the same sign
        NonConvergence: the refined residual stays above root_tol
    """
    residual = residual or _residual_fn(params, kind or _default_kind(params))
    lo, hi = float(min(bracket)), float(max(bracket))
    if lo == hi:
        return RefinedRoot(lo, 0.0, residual(lo))
    f_lo, f_hi = residual(lo), residual(hi)
    if f_lo == 0.0:
        return RefinedRoot(lo, 0.0, f_lo)
    if f_hi == 0.0:
        return RefinedRoot(hi, 0.0, f_hi)
    if f_lo * f_hi > 0:
        offending = lo if abs(f_lo) < abs(f_hi) else hi
        raise LostBracket(f"residual signs agree on [{lo}, {hi}]", z0=offending)

    xtol, rtol = 1e-14, 4.0 * np.finfo(float).eps
    try:
        root, info = brentq(residual, lo, hi, xtol=xtol, rtol=rtol, maxiter=200,
                            full_output=True, disp=False)
    except ValueError as err:
        raise LostBracket(str(err), z0=lo) from err
    value = residual(root)
    if not info.converged or abs(value) > params.root_tol:
        raise NonConvergence(
            f"root near z0={root:.15g}: residual {value:.3e} after {info.iterations} iterations")
    return RefinedRoot(root, xtol + rtol * abs(root), value)


def build_entry(params: ModelParams, index: int, root: RefinedRoot) -> BranchEntry:
    """
    Integrate, evaluate and verify one refined root

    Args:
        params: Model parameters
        index: Ordinal of the root
        root: Refined root
    Returns:
        BranchEntry
    """
    sol = integrate_profile(params, root.z0_root, strict=True)
    return BranchEntry(index=index, z0_root=root.z0_root, profile=sol,
                       energies=evaluate_energies(ProfileSurface(sol)),
                       verification=verify_profile(sol), error_bound=root.error_bound)


def find_equilibria(params: ModelParams, count: int,
                    config: Optional[ScanConfig] = None) -> list[BranchEntry]:
    """
    First count equilibria in increasing z0

    The grid z_start * ratio**k is evaluated chunk by chunk, so the first m
    roots do not depend on how many are requested.

    Args:
        params: Model parameters, c0 > 0
        count: Number of equilibria, >= 1
        config: Grid and budget, ScanConfig() by default
    Returns:
        BranchEntry list ordered by z0_root
    Raises:
        C0Zero: c0 = 0
        InvalidParameter: count < 1
        BudgetExceeded: fewer than count roots within the budget
    """
    if params.c0 == 0:
        raise C0Zero("at c0 = 0 every initial height is an equilibrium")
    if count < 1:
        raise InvalidParameter(f"count = {count} must be at least 1")
    config = config or ScanConfig()

    grid: list[float] = []
    values: list[Optional[float]] = []
    roots: list[RefinedRoot] = []
    done = 0
    with _pool(config.n_jobs) as parallel:
        while len(roots) < count:
            if len(grid) >= config.max_samples or (grid and grid[-1] > config.z_max):
                raise BudgetExceeded(
                    f"found {len(roots)} of {count} roots within {len(grid)} samples "
                    f"up to z0={grid[-1]:.6g}")
            heights = config.heights(len(grid), len(grid) + config.chunk)
            samples = _evaluate(params, heights, ResidualKind.MEAN, parallel)
            grid.extend(float(z) for z in heights)
            values.extend(value for value, _ in samples)
            for z, (_, why) in zip(heights, samples):
                if why is not None:
                    logger.warning("skipped z0=%.10g: %s", z, why)

            for lo, hi in _brackets(grid[done:], values[done:]):
                if len(roots) == count:
                    break
                root = _accept(params, (lo, hi), config)
                if root is None:
                    continue
                if roots and root.z0_root - roots[-1].z0_root <= roots[-1].error_bound:
                    continue
                roots.append(root)
                logger.info("equilibrium %d at z0=%.12g", len(roots), root.z0_root)
            # the last sample may still pair with the first of the next chunk
            done = len(grid) - 1

    return [build_entry(params, k + 1, root) for k, root in enumerate(roots)]


def _accept(params: ModelParams, bracket: tuple[float, float],
            config: ScanConfig) -> Optional[RefinedRoot]:
    """ Refine a bracket and keep the root only if phi''_b vanishes there """
    try:
        root = refine_root(params, bracket, kind=ResidualKind.MEAN)
        phi2 = residual_phi2(params, root.z0_root)
    except NumericalFailure as err:
        logger.warning("bracket [%.10g, %.10g] dropped: %s", *bracket, err)
        return None
    if abs(phi2) > config.phi2_tol:
        logger.warning("root z0=%.12g rejected: phi''_b = %.3e", root.z0_root, phi2)
        return None
    return root
