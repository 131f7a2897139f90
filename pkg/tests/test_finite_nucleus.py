"""Finite-boundary model: closed-form levels, quantization, series, norm."""

import math

import numpy as np
import pytest

from diracbound.core import DEFAULT_CONSTANTS, DEFAULT_DELTA, QuantumNumbers
from diracbound.errors import DomainError, NoRoot
from diracbound.finite_nucleus import (
    binding_fraction,
    density,
    indicial_exponent,
    level_energy,
    quantization_residual,
    quantization_root,
    series_coefficients,
    wavefunction,
)
from diracbound.profiles import normalize

# Frozen references, 50-digit arithmetic on n_r / sqrt(n_r^2 + (Z alpha)^2).
EXACT_EPS_1 = 0.9999733753860825127672
EXACT_EPS_2 = 0.9999933436471460561618
EXACT_BINDING_1_EV = 13.6051497559913626112


def test_level_energy_closed_form_literals():
    assert math.isclose(level_energy(1, 1).eps, EXACT_EPS_1, rel_tol=1e-15)
    assert math.isclose(level_energy(2, 1).eps, EXACT_EPS_2, rel_tol=1e-15)
    # eps path: cancellation in 1 - eps costs ~4e-12 relative here.
    assert math.isclose(level_energy(1, 1).binding_ev(), EXACT_BINDING_1_EV, rel_tol=1e-11)


def test_binding_fraction_avoids_cancellation():
    frac = binding_fraction(1, 1)
    assert math.isclose(frac * DEFAULT_CONSTANTS.rest_energy_ev, EXACT_BINDING_1_EV, rel_tol=1e-13)
    assert math.isclose(frac, 1.0 - EXACT_EPS_1, rel_tol=1e-10)


def test_levels_stay_real_past_the_point_model_critical_charge():
    for Z in (138, 150, 160):
        level = level_energy(1, Z)
        assert level.is_real_bound
        assert isinstance(level.eps, float)


def test_level_energy_requires_positive_radial_index():
    with pytest.raises(DomainError):
        level_energy(0, 1)
    with pytest.raises(DomainError):
        level_energy(-1, 1)


def test_residual_collapses_to_k_free_form():
    # The full expression keeps K so its cancellation is observable; the
    # collapsed form is 2 (Z alpha eps - n_r a).
    za = DEFAULT_CONSTANTS.alpha
    for eps in (0.1, 0.5, 0.9, 0.999, 0.9999733):
        a = math.sqrt((1.0 - eps) * (1.0 + eps))
        collapsed = 2.0 * (za * eps - 1.0 * a)
        for K in (1, -1, 2, -2):
            q = quantization_residual(eps, QuantumNumbers(Z=1, K=K, n_r=1))
            assert abs(q - collapsed) < 1e-12


def test_residual_is_increasing_with_bracketing_signs():
    qn = QuantumNumbers(Z=1, K=1, n_r=2)
    grid = np.linspace(1e-6, 1.0 - 1e-12, 200)
    values = [quantization_residual(e, qn) for e in grid]
    assert values[0] < 0.0 < values[-1]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_residual_domain_is_the_closed_unit_interval():
    qn = QuantumNumbers(Z=1, K=1, n_r=1)
    quantization_residual(0.0, qn)
    quantization_residual(1.0, qn)
    with pytest.raises(DomainError):
        quantization_residual(-0.1, qn)
    with pytest.raises(DomainError):
        quantization_residual(1.5, qn)


def test_root_matches_closed_form():
    for n_r in (1, 5, 10):
        for Z in (1, 137, 150):
            root = quantization_root(QuantumNumbers(Z=Z, K=1, n_r=n_r))
            target = level_energy(n_r, Z).eps
            assert root.is_real_bound
            assert abs(root.eps / target - 1.0) < 1e-12


def test_root_is_independent_of_k():
    roots = {
        K: quantization_root(QuantumNumbers(Z=137, K=K, n_r=2)).eps for K in (1, -1, 2, -2)
    }
    baseline = roots[1]
    for eps in roots.values():
        assert abs(eps / baseline - 1.0) < 1e-12


def test_no_order_zero_root():
    # The residual stays positive over the whole bracket: there is no
    # order-zero state in this model.
    with pytest.raises(NoRoot):
        quantization_root(QuantumNumbers(Z=1, K=1, n_r=0))


@pytest.mark.parametrize("K", [1, -1])
@pytest.mark.parametrize("n_r", [1, 2, 3])
def test_series_tail_is_pinned_and_flat_start(n_r, K):
    series = series_coefficients(QuantumNumbers(Z=1, K=K, n_r=n_r))
    assert series.d[0] == 1.0
    assert series.sigma == 0.0
    assert len(series.b) == n_r + 1
    # The scale of the top coefficient pair is fixed by the two tail rows;
    # their normalized residuals must vanish by construction.
    assert series.consistency.tail_residuals[0] < 1e-12
    assert series.consistency.tail_residuals[1] < 1e-12


def test_strict_termination_fails_and_is_reported():
    # Extending the recursion one order past n_r does not return zeros:
    # the truncation is enforced by the tail rows, not by the recursion
    # dying out. The hypothetical next pair is reported, never hidden.
    series = series_coefficients(QuantumNumbers(Z=1, K=1, n_r=1))
    assert not series.consistency.clean_termination
    nb, nd = series.consistency.next_pair
    assert abs(nb) > 1e-3
    assert math.isclose(nb, 0.5546944194342467, rel_tol=1e-6)
    assert math.isclose(nd, 0.002023873226695995, rel_tol=1e-6)


def test_boundary_coefficient_regression():
    # The pinned b_0 differs from the point-charge order-zero ratio in the
    # fifth digit at this delta; both are kept as separate references.
    series = series_coefficients(QuantumNumbers(Z=1, K=1, n_r=1))
    assert math.isclose(series.b[0], -274.0610524737983, rel_tol=1e-9)


@pytest.mark.parametrize("n_r", [1, 2, 3])
def test_density_is_finite_at_the_boundary(n_r):
    series = series_coefficients(QuantumNumbers(Z=1, K=1, n_r=n_r))
    profile = density(series, [0.0])
    target = (series.b[0] ** 2 + series.d[0] ** 2) / series.delta**2
    assert math.isfinite(profile.density[0])
    assert math.isclose(profile.density[0], target, rel_tol=1e-12)


@pytest.mark.parametrize("n_r", [1, 2, 3])
def test_normalization_against_closed_form(n_r):
    # The norm integrand reduces to exp(-2 a xi) times a polynomial, so the
    # integral has an exact factorial form to check the quadrature against.
    series = series_coefficients(QuantumNumbers(Z=1, K=1, n_r=n_r))
    profile = normalize(wavefunction(series, [0.0, 1.0, 2.0]))
    closed = sum(
        (series.b[j] * series.b[k] + series.d[j] * series.d[k])
        * math.factorial(j + k)
        / (2.0 * series.a) ** (j + k + 1)
        for j in range(n_r + 1)
        for k in range(n_r + 1)
    )
    assert math.isclose(profile.normalization, closed, rel_tol=1e-12)
    assert profile.quadrature_error < 1e-10 * profile.normalization
    # Normalizing the normalized profile must find an integral of one.
    again = normalize(profile)
    assert abs(again.normalization - 1.0) < 1e-10


def test_energy_is_independent_of_delta():
    series_small = series_coefficients(QuantumNumbers(Z=1, K=1, n_r=1), delta=1e-6)
    series_large = series_coefficients(QuantumNumbers(Z=1, K=1, n_r=1), delta=1e-4)
    assert series_small.eps == series_large.eps
    assert series_small.b[0] != series_large.b[0]


def test_indicial_exponent_is_identically_zero():
    for delta in (1e-8, 2.4e-5, 1.0, 1e3):
        assert indicial_exponent(delta) == 0.0
    with pytest.raises(DomainError):
        indicial_exponent(0.0)
    with pytest.raises(DomainError):
        indicial_exponent(-1e-5)


def test_wavefunction_rejects_negative_offsets():
    series = series_coefficients(QuantumNumbers(Z=1, K=1, n_r=1))
    wavefunction(series, [0.0, 1.0])
    with pytest.raises(DomainError):
        wavefunction(series, [-1e-9, 1.0])
