"""Constants, quantum numbers, classification, and derived scales."""

import math

import pytest

from diracbound.core import (
    DEFAULT_CONSTANTS,
    REAL_BOUND,
    SINGULAR,
    VIRTUAL,
    DerivedScales,
    EnergyLevel,
    PhysicalConstants,
    QuantumNumbers,
    classify_energy,
    coupling,
    derive_scales,
    from_natural_units,
    gamma_exponent,
    to_natural_units,
)
from diracbound.errors import DomainError, SingularEnergy

# Frozen reference values, computed offline with 50-digit arithmetic from
# the closed forms and the CODATA 2018 constants below.
GAMMA_K1_Z1 = 0.9999733739682668824179
GAMMA_SQ_K1_Z150 = -0.198155476715059504306
NATURAL_LENGTH_NM = 3.861592678419397926356e-4
ONE_NM_NATURAL = 2589.605075616917513019


def test_default_constants_are_codata_2018():
    c = DEFAULT_CONSTANTS
    assert c.alpha == 7.2973525693e-3
    assert c.rest_energy_ev == 510998.95
    assert c.hbar_c_ev_nm == 197.3269804


@pytest.mark.parametrize("field", ["alpha", "rest_energy_ev", "hbar_c_ev_nm"])
@pytest.mark.parametrize("bad", [0.0, -1.0, float("nan"), float("inf")])
def test_constants_reject_nonpositive_or_nonfinite(field, bad):
    with pytest.raises(DomainError):
        PhysicalConstants(**{field: bad})


def test_natural_length_and_conversions():
    assert math.isclose(
        DEFAULT_CONSTANTS.natural_length_nm, NATURAL_LENGTH_NM, rel_tol=1e-15
    )
    assert math.isclose(to_natural_units(1.0), ONE_NM_NATURAL, rel_tol=1e-15)
    assert math.isclose(from_natural_units(to_natural_units(0.37)), 0.37, rel_tol=1e-15)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(Z=0, K=1, n_r=0),
        dict(Z=-3, K=1, n_r=0),
        dict(Z=1, K=0, n_r=0),
        dict(Z=1, K=1, n_r=-1),
    ],
)
def test_quantum_number_validation(kwargs):
    with pytest.raises(DomainError):
        QuantumNumbers(**kwargs)


def test_principal_number_combines_radial_and_angular():
    assert QuantumNumbers(Z=1, K=-1, n_r=0).principal == 1
    assert QuantumNumbers(Z=1, K=2, n_r=1).principal == 3
    assert QuantumNumbers(Z=92, K=-3, n_r=4).principal == 7


def test_classification_windows():
    assert classify_energy(0.5) == REAL_BOUND
    assert classify_energy(1.0 - 1e-9) == REAL_BOUND
    assert classify_energy(1.0) == SINGULAR
    assert classify_energy(0.0) == SINGULAR
    assert classify_energy(-0.5) == SINGULAR
    assert classify_energy(0.5 + 0.1j) == VIRTUAL
    assert classify_energy(-0.2j) == VIRTUAL


def test_energy_level_demotes_real_complex_and_converts():
    level = EnergyLevel.from_eps(complex(0.5, 0.0))
    assert isinstance(level.eps, float)
    assert level.is_real_bound
    assert level.energy_ev() == 0.5 * DEFAULT_CONSTANTS.rest_energy_ev
    assert level.binding_ev() == 0.5 * DEFAULT_CONSTANTS.rest_energy_ev


def test_derive_scales_at_rational_point():
    # eps = 0.6 makes a = 0.8 and lam = 0.5 exactly representable targets.
    qn = QuantumNumbers(Z=1, K=1, n_r=0)
    scales = derive_scales(qn, 0.6)
    assert math.isclose(scales.a, 0.8, rel_tol=1e-15)
    assert math.isclose(scales.lam, 0.5, rel_tol=1e-15)
    assert math.isclose(scales.gamma, GAMMA_K1_Z1, rel_tol=1e-15)


def test_derive_scales_factorization_identity():
    # a = lam * (1 + eps) ties the two scales together for every bound eps.
    qn = QuantumNumbers(Z=5, K=-2, n_r=1)
    for eps in (1e-6, 0.1, 0.5, 0.9, 0.999999, 0.0):
        scales = derive_scales(qn, eps)
        assert math.isclose(scales.a, scales.lam * (1.0 + eps), rel_tol=1e-14)


def test_derive_scales_edge_cases():
    qn = QuantumNumbers(Z=1, K=1, n_r=0)
    with pytest.raises(SingularEnergy):
        derive_scales(qn, 1.0)
    with pytest.raises(SingularEnergy):
        derive_scales(qn, -1.0)
    # eps = 0 sits at the edge of the spectrum but both scales stay finite.
    scales = derive_scales(qn, 0.0)
    assert scales.a == 1.0
    assert scales.lam == 1.0
    # Complex energies pass through on principal branches.
    virt = derive_scales(qn, 0.5 + 0.2j)
    assert isinstance(virt.a, complex)
    assert isinstance(virt.lam, complex)


def test_gamma_exponent_branches():
    g = gamma_exponent(1, 1)
    assert isinstance(g, float)
    assert math.isclose(g, GAMMA_K1_Z1, rel_tol=1e-15)
    assert gamma_exponent(-1, 1) == g

    g150 = gamma_exponent(1, 150)
    assert isinstance(g150, complex)
    assert g150.real == 0.0
    assert math.isclose(g150.imag**2, -GAMMA_SQ_K1_Z150, rel_tol=1e-14)

    # |K| = 2 stays subcritical at Z = 150.
    assert isinstance(gamma_exponent(2, 150), float)

    # Exactly critical coupling: alpha = 1/137 puts Z = 137 on the boundary.
    exact = PhysicalConstants(alpha=1.0 / 137.0)
    assert gamma_exponent(1, 137, exact) == 0.0


def test_coupling_is_linear_in_charge():
    assert coupling(1) == DEFAULT_CONSTANTS.alpha
    assert coupling(137) == 137 * DEFAULT_CONSTANTS.alpha
