""" Shared profiles and the c0 = 1 equilibrium branch """
import pytest
from _profile.model_params import ModelParams
from _profile.profile_ode import integrate_profile
from _shooting.scan_config import ScanConfig
from _shooting.shooting import find_equilibria


@pytest.fixture(scope="session")
def circle():
    """ c0 = 0 profile from z0 = 1, the unit quarter circle """
    return integrate_profile(ModelParams(c0=0.0), 1.0)


@pytest.fixture(scope="session")
def bulged():
    """ c0 = 1 profile from z0 = 1, orthogonal but not an equilibrium """
    return integrate_profile(ModelParams(c0=1.0), 1.0)


@pytest.fixture(scope="session")
def branch():
    """ First six equilibria at c0 = 1 """
    return find_equilibria(ModelParams(c0=1.0), 6, ScanConfig())
