"""
ABOUTME: Pytest configuration and shared fixtures for all tests
ABOUTME: Small catalog monoids and hand-checked structures used across suites
"""

import pytest

from crossed.catalog import get_catalog
from crossed.config import Settings
from crossed.monoid import trivial_action, validate_hom
from crossed.structures import phi, semibimodule_embed, validate_xsmod

# Φ of the identity crossed semi-module on Z/2: λ trivial, ρ trivial, a∘x = a + x
PHI_FILE = """\
# crossed semi-bimodule on (Z/2, Z/2)
monoid z2 2 0
0 1
1 0
action set z2 z2 phi_circ
0 1
1 0
action left z2 z2 phi_lambda
0 1
0 1
action right z2 z2 phi_rho
0 1
0 1
xbsmod phi A=z2 K=z2 circ=phi_circ lambda=phi_lambda rho=phi_rho
"""


@pytest.fixture
def catalog():
    return get_catalog()


@pytest.fixture
def z2(catalog):
    return catalog.get("z2")


@pytest.fixture
def z3(catalog):
    return catalog.get("z3")


@pytest.fixture
def identity_xsmod(z2):
    """∂ = id: Z/2 -> Z/2 with the trivial right action"""
    partial = validate_hom([0, 1], z2, z2)
    return validate_xsmod(partial, trivial_action("right", z2, z2), name="phi")


@pytest.fixture
def phi_structure(identity_xsmod):
    return phi(identity_xsmod)


@pytest.fixture
def flat_structure(z2):
    """a∘x = a with trivial actions"""
    return semibimodule_embed(trivial_action("left", z2, z2), trivial_action("right", z2, z2), name="flat")


@pytest.fixture
def small_settings():
    """Samples C2 associativity above 100 elements"""
    return Settings(max_c2=100, sample_triples=20_000, seed=7)


@pytest.fixture
def phi_file(tmp_path):
    path = tmp_path / "phi.txt"
    path.write_text(PHI_FILE, encoding="utf-8")
    return path
