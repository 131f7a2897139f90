"""Side-by-side spectra and expansion cross-checks for the three models.

Three energy formulas are compared: the nonrelativistic baseline
(binding (Z alpha)^2 / (2 n^2) in units of mc^2), the point-charge
relativistic formula indexed by (n_r, K), and the finite-boundary formula
indexed by n_r alone. The principal-number mapping n = n_r + |K| for the
point model and n = n_r for the finite model makes all three agree at
leading order in (Z alpha)^2, which the expansion fit verifies rather than
assumes. The next-order coefficient is where they part ways: the point
model's varies with K at fixed n (fine structure), the finite model's does
not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import finite_nucleus, point_nucleus
from .core import (
    DEFAULT_CONSTANTS,
    DEFAULT_DELTA,
    REAL_BOUND,
    EnergyLevel,
    PhysicalConstants,
    QuantumNumbers,
    gamma_exponent,
)
from .errors import DomainError, FitFailure

MODELS = ("bohr", "dirac", "exact")


def bohr_energy(Z: int, n: int, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> EnergyLevel:
    """Baseline level eps = 1 - (Z alpha)^2 / (2 n^2), rest energy included.

    The formula is nonrelativistic; for couplings large enough to push eps
    out of (0, 1) the returned level is classified accordingly instead of
    being clamped.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if not isinstance(Z, int) or isinstance(Z, bool) or Z < 1:
        raise DomainError(f"Z must be a positive integer, got {Z!r}")
    return EnergyLevel.from_eps(1.0 - bohr_binding_fraction(Z, n, constants))


def bohr_binding_fraction(Z: int, n: int, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Binding fraction (Z alpha)^2 / (2 n^2) of the baseline model."""
    za = Z * constants.alpha
    return za * za / (2.0 * n * n)


@dataclass(frozen=True)
class SpectrumRow:
    """One level of one model, with the baseline difference attached.

    n is the model's principal number (n_r + |K| for dirac, n_r for exact).
    binding_ev and diff_vs_bohr_ev are set for real bound rows only;
    virtual rows keep their complex energy visible through eps_im and are
    flagged by classification rather than dropped.
    """

    model: str
    Z: int
    n: int
    n_r: Optional[int]
    K: Optional[int]
    eps_re: float
    eps_im: float
    classification: str
    binding_ev: Optional[float]
    diff_vs_bohr_ev: Optional[float]


@dataclass(frozen=True)
class SpectrumTable:
    Z: int
    max_n: int
    delta: float
    constants: PhysicalConstants
    rows: tuple[SpectrumRow, ...]


def _dirac_labels(max_n: int) -> list[tuple[int, int]]:
    """Valid (n_r, K) pairs with n_r + |K| <= max_n + 1, deterministic order.

    The order-zero series terminates only on the positive-K branch, so
    (n_r = 0, K < 0) is not a state and is excluded.
    """
    labels = []
    for n in range(1, max_n + 2):
        for abs_k in range(1, n + 1):
            n_r = n - abs_k
            labels.append((n_r, abs_k))
            if n_r >= 1:
                labels.append((n_r, -abs_k))
    return labels


def compare_spectra(
    Z: int,
    max_n: int,
    delta: float = DEFAULT_DELTA,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> SpectrumTable:
    """Tabulate all three models up to principal number max_n.

    Baseline rows run n = 1..max_n, point-model rows cover the valid
    (n_r, K) pairs with n_r + |K| <= max_n + 1, finite-model rows run
    n_r = 1..max_n. Each real bound row carries its binding energy and the
    difference from the baseline binding at the same principal number.
    delta does not move any energy; it is recorded for provenance.
    """
    if not isinstance(max_n, int) or isinstance(max_n, bool) or max_n < 1:
        raise DomainError(f"max_n must be a positive integer, got {max_n!r}")
    mc2 = constants.rest_energy_ev
    rows: list[SpectrumRow] = []

    for n in range(1, max_n + 1):
        level = bohr_energy(Z, n, constants)
        binding = bohr_binding_fraction(Z, n, constants) * mc2
        real = level.classification == REAL_BOUND
        rows.append(
            SpectrumRow(
                model="bohr",
                Z=Z,
                n=n,
                n_r=None,
                K=None,
                eps_re=float(level.eps.real),
                eps_im=float(level.eps.imag) if isinstance(level.eps, complex) else 0.0,
                classification=level.classification,
                binding_ev=binding if real else None,
                diff_vs_bohr_ev=0.0 if real else None,
            )
        )

    for n_r, K in _dirac_labels(max_n):
        qn = QuantumNumbers(Z=Z, K=K, n_r=n_r)
        level = point_nucleus.dirac_energy(qn, constants)
        eps = level.eps
        real = level.classification == REAL_BOUND
        binding = point_nucleus.binding_fraction(qn, constants) * mc2 if real else None
        diff = binding - bohr_binding_fraction(Z, qn.principal, constants) * mc2 if real else None
        rows.append(
            SpectrumRow(
                model="dirac",
                Z=Z,
                n=qn.principal,
                n_r=n_r,
                K=K,
                eps_re=float(eps.real),
                eps_im=float(eps.imag) if isinstance(eps, complex) else 0.0,
                classification=level.classification,
                binding_ev=binding,
                diff_vs_bohr_ev=diff,
            )
        )

    for n_r in range(1, max_n + 1):
        level = finite_nucleus.level_energy(n_r, Z, constants)
        binding = finite_nucleus.binding_fraction(n_r, Z, constants) * mc2
        diff = binding - bohr_binding_fraction(Z, n_r, constants) * mc2
        rows.append(
            SpectrumRow(
                model="exact",
                Z=Z,
                n=n_r,
                n_r=n_r,
                K=None,
                eps_re=float(level.eps),
                eps_im=0.0,
                classification=level.classification,
                binding_ev=binding,
                diff_vs_bohr_ev=diff,
            )
        )

    return SpectrumTable(Z=Z, max_n=max_n, delta=delta, constants=constants, rows=tuple(rows))


@dataclass(frozen=True)
class ExpansionReport:
    """Fitted small-coupling expansion of one model's binding fraction.

    The binding fraction is evaluated at artificially scaled couplings
    (alpha/2 and alpha/4), the two-term model c2 u + c4 u^2 in u = (Z alpha)^2
    is solved exactly through those points, and the fit is validated at the
    physical alpha, where the leftover must be of the next order u^3.
    bohr_deviation is |c2 - 1/(2 n^2)| relative to 1/(2 n^2) with the
    model's own principal number n.
    """

    model: str
    Z: int
    n: int
    leading_coefficient: float
    next_order_coefficient: float
    bohr_deviation: float
    fit_residual: float


# The validation point alpha sits at the coarsest coupling, so the leftover
# there is the largest the discarded u^3 term gets; 10x covers its prefactor.
FIT_RESIDUAL_FACTOR = 10.0


def _binding_fraction(model: str, qn: QuantumNumbers, alpha: float, constants: PhysicalConstants) -> float:
    scaled = PhysicalConstants(
        alpha=alpha, rest_energy_ev=constants.rest_energy_ev, hbar_c_ev_nm=constants.hbar_c_ev_nm
    )
    if model == "bohr":
        return bohr_binding_fraction(qn.Z, qn.principal, scaled)
    if model == "dirac":
        return point_nucleus.binding_fraction(qn, scaled)
    if model == "exact":
        return finite_nucleus.binding_fraction(qn.n_r, qn.Z, scaled)
    raise DomainError(f"unknown model {model!r}; expected one of {MODELS}")


def alpha_expansion_check(
    model: str,
    qn: QuantumNumbers,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> ExpansionReport:
    """Fit binding = c2 (Z alpha)^2 + c4 (Z alpha)^4 and compare with the baseline.

    Requires a real-spectrum configuration at the physical coupling. Raises
    FitFailure when the validation residual at alpha exceeds the (Z alpha)^6
    scale, which would mean the two-term expansion does not describe the
    model there.
    """
    if model not in MODELS:
        raise DomainError(f"unknown model {model!r}; expected one of {MODELS}")
    if model == "exact":
        if qn.n_r < 1:
            raise DomainError("the finite-boundary model needs n_r >= 1")
        n = qn.n_r
    else:
        n = qn.principal
    if model == "dirac" and isinstance(gamma_exponent(qn.K, qn.Z, constants), complex):
        raise DomainError("expansion fit requires a real spectrum at the physical coupling")

    alpha = constants.alpha
    u0 = (qn.Z * alpha) ** 2
    u1 = (qn.Z * alpha / 2.0) ** 2
    u2 = (qn.Z * alpha / 4.0) ** 2
    h1 = _binding_fraction(model, qn, alpha / 2.0, constants)
    h2 = _binding_fraction(model, qn, alpha / 4.0, constants)
    det = u1 * u2 * (u2 - u1)
    c2 = (h1 * u2 * u2 - h2 * u1 * u1) / det
    c4 = (u1 * h2 - u2 * h1) / det

    h0 = _binding_fraction(model, qn, alpha, constants)
    residual = h0 - (c2 * u0 + c4 * u0 * u0)
    if abs(residual) > FIT_RESIDUAL_FACTOR * u0 ** 3:
        raise FitFailure(
            f"fit residual {residual:.3e} exceeds the (Z alpha)^6 scale {u0 ** 3:.3e}"
        )
    bohr_c2 = 1.0 / (2.0 * n * n)
    return ExpansionReport(
        model=model,
        Z=qn.Z,
        n=n,
        leading_coefficient=c2,
        next_order_coefficient=c4,
        bohr_deviation=abs(c2 - bohr_c2) / bohr_c2,
        fit_residual=residual,
    )
