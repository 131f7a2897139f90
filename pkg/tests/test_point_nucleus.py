"""Point-charge model: energies, series, origin divergence."""

import math

import numpy as np
import pytest

from diracbound.core import DEFAULT_CONSTANTS, PhysicalConstants, QuantumNumbers
from diracbound.errors import DomainError, SingularEnergy
from diracbound.point_nucleus import (
    binding_fraction,
    convention_report,
    density,
    dirac_energy,
    divergence_diagnostic,
    origin_slope,
    series_coefficients,
    wavefunction,
)

# Frozen references, 50-digit arithmetic on the closed forms (CODATA 2018).
GROUND_EPS = 0.9999733739682668824179  # sqrt(1 - alpha^2)
GROUND_BINDING_EV = 13.60587425828976470186
BOHR_BINDING_EV = 13.6056931230698856864
DENSITY_EXPONENT_K1 = -5.325206346623516428697e-5  # 2 (gamma - 1)
RATIO_K_PLUS = -274.068349442531420272  # -(1 + gamma) / alpha
RATIO_K_MINUS = 3.648724860181956309891e-3  # (1 - gamma) / alpha
VIRTUAL_EPS_IMAG_Z138 = -0.1188225378100735754716


def test_ground_state_energy():
    level = dirac_energy(QuantumNumbers(Z=1, K=-1, n_r=0))
    assert level.is_real_bound
    assert math.isclose(level.eps, GROUND_EPS, rel_tol=1e-14)
    assert math.isclose(level.eps, math.sqrt(1.0 - DEFAULT_CONSTANTS.alpha**2), rel_tol=1e-15)
    # The eps path loses ~alpha^-2 ulps to cancellation in 1 - eps; the
    # stable fraction path below carries the tight binding check.
    assert math.isclose(level.binding_ev(), GROUND_BINDING_EV, rel_tol=1e-11)
    # Within a tenth of a percent of the nonrelativistic baseline.
    assert abs(level.binding_ev() / BOHR_BINDING_EV - 1.0) < 1e-3


def test_ground_state_same_for_both_k_signs():
    plus = dirac_energy(QuantumNumbers(Z=1, K=1, n_r=0))
    minus = dirac_energy(QuantumNumbers(Z=1, K=-1, n_r=0))
    assert plus.eps == minus.eps


def test_fine_structure_within_principal_shell():
    # n = 2 splits by |K|: the (n_r=1, |K|=1) pair is degenerate and lies
    # below the (n_r=0, K=2) level.
    e_s = dirac_energy(QuantumNumbers(Z=1, K=1, n_r=1))
    e_p_half = dirac_energy(QuantumNumbers(Z=1, K=-1, n_r=1))
    e_p_threehalf = dirac_energy(QuantumNumbers(Z=1, K=2, n_r=0))
    assert e_s.eps == e_p_half.eps
    assert e_p_threehalf.eps > e_s.eps


def test_binding_fraction_is_stable_near_weak_coupling():
    # The fraction 1 - eps computed directly must agree with the energy to
    # full precision even though 1 - eps is O(alpha^2).
    qn = QuantumNumbers(Z=1, K=-1, n_r=0)
    frac = binding_fraction(qn)
    assert math.isclose(frac, 1.0 - dirac_energy(qn).eps, rel_tol=1e-10)
    assert math.isclose(frac * DEFAULT_CONSTANTS.rest_energy_ev, GROUND_BINDING_EV, rel_tol=1e-13)


@pytest.mark.parametrize("K", [1, -1])
def test_supercritical_charges_go_virtual(K):
    for Z in (1, 50, 137):
        assert dirac_energy(QuantumNumbers(Z=Z, K=K, n_r=0)).is_real_bound
    for Z in (138, 150, 160):
        level = dirac_energy(QuantumNumbers(Z=Z, K=K, n_r=0))
        assert level.classification == "virtual"
    onset = dirac_energy(QuantumNumbers(Z=138, K=K, n_r=0))
    assert math.isclose(onset.eps.imag, VIRTUAL_EPS_IMAG_Z138, rel_tol=1e-12)
    assert onset.eps.real == 0.0


def test_singular_at_exactly_critical_coupling():
    # Z alpha = |K| with n_r = 0 zeroes the denominator of the closed form.
    exact = PhysicalConstants(alpha=0.5)
    with pytest.raises(SingularEnergy):
        dirac_energy(QuantumNumbers(Z=2, K=1, n_r=0), exact)


def test_ground_series_single_term():
    series = series_coefficients(QuantumNumbers(Z=1, K=1, n_r=0))
    assert series.d == (1.0,)
    assert len(series.b) == 1
    assert math.isclose(series.b[0], RATIO_K_PLUS, rel_tol=1e-13)
    assert series.terminates
    assert series.tail_residual < 1e-12
    assert math.isclose(series.exponent, GROUND_EPS - 1.0, rel_tol=1e-10)


def test_order_zero_negative_k_does_not_terminate():
    # The energy formula is blind to the K sign but the series is not: the
    # termination combination degenerates on the negative branch and the
    # residual is order one. The series is returned flagged, not hidden.
    series = series_coefficients(QuantumNumbers(Z=1, K=-1, n_r=0))
    assert not series.terminates
    assert series.tail_residual > 1e-2
    # On this branch the ratio is the small difference (1 - gamma) / alpha,
    # so the recursion reproduces the closed form only to the rounding of
    # eps amplified by 1 / (1 - gamma): about 1e-9 here, not 1e-13 as on
    # the positive branch where the ratio is order alpha^-1.
    assert math.isclose(series.b[0], RATIO_K_MINUS, rel_tol=1e-8)


@pytest.mark.parametrize("K", [1, -1, 2, -2])
@pytest.mark.parametrize("n_r", [1, 2, 3])
def test_excited_series_terminate_with_consistent_tail(n_r, K):
    series = series_coefficients(QuantumNumbers(Z=1, K=K, n_r=n_r))
    assert len(series.b) == n_r + 1
    assert len(series.d) == n_r + 1
    assert series.terminates
    # Tail relation between the top-order pair.
    assert math.isclose(series.d[n_r], -series.lam * series.b[n_r], rel_tol=1e-9)


def test_recursion_weight_convention_is_measurably_distinct():
    # The two candidate placements of the weight ratio on the coupled
    # recursion differ by many orders of magnitude in self-consistency;
    # this pins the implemented one and records the gap.
    report = convention_report(series_coefficients(QuantumNumbers(Z=1, K=1, n_r=2)))
    assert report.implemented_max_residual < 1e-12
    assert report.reciprocal_max_residual > 1e-2


def test_single_term_profile_has_constant_component_ratio():
    series = series_coefficients(QuantumNumbers(Z=1, K=1, n_r=0))
    grid = np.array([1e-8, 1e-3, 1.0 / series.a, 5.0])
    profile = wavefunction(series, grid)
    ratios = profile.component_1 / profile.component_2
    assert np.allclose(ratios, series.b[0] / series.d[0], rtol=1e-14)
    assert np.allclose(profile.density, profile.component_1**2 + profile.component_2**2, rtol=1e-14)


def test_density_grows_toward_the_origin():
    series = series_coefficients(QuantumNumbers(Z=1, K=1, n_r=0))
    grid = np.logspace(-8, -6, 40)
    profile = density(series, grid)
    assert np.all(np.diff(profile.density) < 0.0)


def test_origin_slope_matches_analytic_exponent():
    series = series_coefficients(QuantumNumbers(Z=1, K=1, n_r=0))
    slope = origin_slope(series)
    assert abs(slope - DENSITY_EXPONENT_K1) < 1e-2 * abs(DENSITY_EXPONENT_K1)


def test_wavefunction_rejects_nonpositive_radii():
    series = series_coefficients(QuantumNumbers(Z=1, K=1, n_r=0))
    with pytest.raises(DomainError):
        wavefunction(series, [0.0, 1.0])
    with pytest.raises(DomainError):
        wavefunction(series, [-1.0])


def test_series_rejects_supercritical_charge():
    with pytest.raises(DomainError):
        series_coefficients(QuantumNumbers(Z=150, K=1, n_r=0))


def test_divergence_diagnostic_channels():
    k1 = divergence_diagnostic(QuantumNumbers(Z=1, K=1, n_r=0))
    assert k1.divergent_at_origin
    # gamma - 1 in floats carries the rounding of gamma amplified by
    # 1 / (1 - gamma), about 1e-11 relative against the long literal.
    assert math.isclose(2.0 * k1.leading_exponent, DENSITY_EXPONENT_K1, rel_tol=1e-10)
    assert k1.virtual_threshold_Z == 137

    k2 = divergence_diagnostic(QuantumNumbers(Z=1, K=2, n_r=0))
    assert not k2.divergent_at_origin
    assert k2.leading_exponent > 0.9
    assert k2.virtual_threshold_Z == 274

    # Past criticality the diagnostic still answers: the real part of the
    # exponent drops to -1.
    super_k1 = divergence_diagnostic(QuantumNumbers(Z=150, K=1, n_r=0))
    assert super_k1.leading_exponent == -1.0
    assert super_k1.divergent_at_origin
