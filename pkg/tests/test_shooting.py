""" Tests for residuals, bracket scans and the equilibrium branch """
import math
import pytest
from _enums.residual_kind import ResidualKind
from _errors.errors import BudgetExceeded, C0Zero, EmptyRange, InvalidParameter, LostBracket
from _functionals.functionals import hemisphere_oracle
from _profile.model_params import ModelParams
from _shooting.scan_config import ScanConfig
from _shooting.shooting import (find_equilibria, refine_root, residual_mean, residual_phi2,
                                residuals, scan_brackets)
from _verify.verify import euler_helfrich_params, free_boundary_check

C1 = ModelParams(c0=1.0)
# first equilibria of the c0 = 1 branch
KNOWN_ROOTS = (1.8526, 3.3422, 4.7939, 6.2308, 7.6602, 9.0852)


def test_residual_mean_of_circle():
    assert residual_mean(ModelParams(), 1.0, equilibrium_test=False) == pytest.approx(-1.0, abs=1e-8)
    with pytest.raises(C0Zero):
        residual_mean(ModelParams(), 1.0)


@pytest.mark.parametrize("z0", [0.5, 1.0, 3.0])
def test_circle_boundary_is_smooth(z0):
    assert abs(residual_phi2(ModelParams(), z0)) < 1e-6


def test_residuals_agree_with_single_evaluations():
    mean, phi2 = residuals(C1, 1.0)
    assert mean == residual_mean(C1, 1.0)
    assert phi2 == residual_phi2(C1, 1.0)


def test_scan_rejects_bad_windows():
    with pytest.raises(EmptyRange):
        scan_brackets(C1, 2.0, 1.0, 10)
    with pytest.raises(InvalidParameter):
        scan_brackets(C1, 0.0, 1.0, 10)
    with pytest.raises(InvalidParameter):
        scan_brackets(C1, 0.5, 1.0, 1)


def test_scan_is_degenerate_at_c0_zero():
    result = scan_brackets(ModelParams(), 0.5, 2.0, 8)
    assert result.degenerate
    assert result.brackets == []
    assert result.to_dict()["degenerate"] is True


def test_refine_root_of_synthetic_residual():
    root = refine_root(C1, (0.5, 2.0), residual=lambda z: z - 1.0)
    assert root.z0_root == pytest.approx(1.0, abs=1e-12)
    assert root.error_bound < 1e-12


def test_refine_root_zero_width_bracket():
    root = refine_root(C1, (1.5, 1.5), residual=lambda z: z - 1.5)
    assert root.z0_root == 1.5
    assert root.error_bound == 0.0


def test_refine_root_lost_bracket():
    with pytest.raises(LostBracket):
        refine_root(C1, (2.0, 3.0), residual=lambda z: z - 1.0)


def test_scan_config_validation():
    with pytest.raises(InvalidParameter):
        ScanConfig(ratio=1.0)
    with pytest.raises(InvalidParameter):
        ScanConfig(z_start=0.0)
    with pytest.raises(InvalidParameter):
        ScanConfig(z_start=2.0, z_max=1.0)


def test_find_stops_at_height_limit():
    with pytest.raises(BudgetExceeded, match="0 of 1 roots"):
        find_equilibria(C1, 1, ScanConfig(z_max=0.5))


def test_find_rejects_c0_zero_and_count():
    with pytest.raises(C0Zero):
        find_equilibria(ModelParams(), 1)
    with pytest.raises(InvalidParameter):
        find_equilibria(C1, 0)


@pytest.mark.slow
def test_branch_is_ordered(branch):
    assert [entry.index for entry in branch] == list(range(1, 7))
    heights = [entry.z0_root for entry in branch]
    assert heights == sorted(heights)
    assert len(set(heights)) == len(heights)


@pytest.mark.slow
def test_branch_entries_are_equilibria(branch):
    for entry in branch:
        mean, phi2 = residuals(C1, entry.z0_root)
        assert abs(mean) < C1.root_tol
        assert abs(phi2) < ScanConfig().phi2_tol
        report = entry.energies
        assert abs(report.U_R) < 1e-6
        assert report.excess < 1e-9
        assert -report.G_R >= -1e-6
        assert -report.G_R == pytest.approx(report.helfrich, abs=1e-6)
        assert entry.verification.all_pass, entry.verification.failures()


@pytest.mark.slow
def test_branch_prefix_is_stable(branch):
    first = find_equilibria(C1, 1, ScanConfig())
    assert first[0].z0_root == branch[0].z0_root


@pytest.mark.slow
def test_scan_brackets_the_first_root(branch):
    z = branch[0].z0_root
    result = scan_brackets(C1, 0.9 * z, 1.1 * z, 9)
    assert result.kind == ResidualKind.MEAN
    assert any(lo <= z <= hi for lo, hi in result.brackets)


@pytest.mark.slow
def test_parallel_scan_matches_serial(branch):
    z = branch[0].z0_root
    serial = scan_brackets(C1, 0.9 * z, 1.1 * z, 6)
    parallel = scan_brackets(C1, 0.9 * z, 1.1 * z, 6, n_jobs=2)
    assert parallel.values == serial.values
    assert parallel.brackets == serial.brackets


@pytest.mark.slow
def test_branch_entry_dict(branch):
    data = branch[0].to_dict()
    assert set(data) == {"index", "z0_root", "r_b", "sigma_b", "energies", "verification"}
    assert data["r_b"] > 0 and math.isfinite(data["sigma_b"])


@pytest.mark.slow
def test_branch_matches_known_roots(branch):
    heights = [entry.z0_root for entry in branch]
    assert heights == pytest.approx(KNOWN_ROOTS, abs=1e-3)


@pytest.mark.slow
def test_branch_satisfies_free_boundary_relation(branch):
    for entry in branch:
        b, ratio = euler_helfrich_params(entry.r_b, C1.c0, 1.0)
        assert b == pytest.approx(2.0 * C1.c0 * entry.r_b - 1.0)
        assert ratio == pytest.approx(entry.r_b ** 2)
        bc1, dnh = free_boundary_check(entry.profile, 1.0, b)
        assert bc1 < 1e-6
        assert dnh < 1e-6


@pytest.mark.slow
def test_hemisphere_lies_below_every_equilibrium(branch):
    hemisphere = -hemisphere_oracle(1.0 / C1.c0, C1.c0).G_R
    assert hemisphere == pytest.approx(-2.0 * math.pi)
    assert hemisphere < min(-entry.energies.G_R for entry in branch)


@pytest.mark.slow
def test_find_is_deterministic(branch):
    again = find_equilibria(C1, 2, ScanConfig())
    assert [entry.to_dict() for entry in again] == [entry.to_dict() for entry in branch[:2]]
