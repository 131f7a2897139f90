"""Radial profile container and normalization shared by both models."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np
from scipy.integrate import quad

from .core import EnergyLevel, QuantumNumbers
from .errors import DomainError, QuadratureFailure


@dataclass
class RadialProfile:
    """Sampled radial solution components and density.

    grid is in natural units. For the point-charge model the coordinate is
    the radius r itself; for the finite-boundary model it is the shifted
    coordinate xi = r - delta, measured outward from the boundary. The two
    components are the upper and lower radial amplitudes, density their
    squared sum. normalization holds the integral that was divided out
    (1.0 when not normalized), quadrature_error its reported uncertainty.

    The evaluator re-samples the exact components at arbitrary coordinates;
    it is carried for quadrature and excluded from comparisons.
    """

    model: str
    qn: QuantumNumbers
    energy: EnergyLevel
    delta: Optional[float]
    grid: np.ndarray
    component_1: np.ndarray
    component_2: np.ndarray
    density: np.ndarray
    normalization: float = 1.0
    quadrature_error: float = 0.0
    evaluator: Optional[Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]] = field(
        default=None, repr=False, compare=False
    )


# Relative accuracy demanded of the normalization integral. The integrands
# are smooth exponentially damped polynomials, so adaptive quadrature beats
# this comfortably; failure indicates a malformed profile.
NORM_RTOL = 1e-10


def normalize(profile: RadialProfile) -> RadialProfile:
    """Return a copy scaled so the radial norm integral equals one.

    The components are amplitudes per radius, so the integrable radial
    functions carry one factor of the true radius: the norm is
    integral of density(t) * (t + shift)^2 dt over [0, inf), where the
    shift restores r = xi + delta for the finite-boundary model and is
    zero for the point-charge model (whose coordinate is r itself).

    Raises QuadratureFailure if the integral is non-positive, non-finite,
    or carries an error estimate above NORM_RTOL relative.
    """
    if profile.evaluator is None:
        raise DomainError("profile carries no evaluator; build it via wavefunction()")
    shift = profile.delta if profile.delta is not None else 0.0
    evaluate = profile.evaluator

    def integrand(t: float) -> float:
        c1, c2 = evaluate(np.asarray([t], dtype=float))
        return float((c1[0] ** 2 + c2[0] ** 2) * (t + shift) ** 2)

    value, err = quad(integrand, 0.0, np.inf, epsabs=0.0, epsrel=1e-12, limit=200)
    if not (math.isfinite(value) and value > 0.0):
        raise QuadratureFailure(f"norm integral came out {value!r}")
    if err > NORM_RTOL * value:
        raise QuadratureFailure(f"norm integral error {err:.3e} exceeds {NORM_RTOL} relative")
    scale = math.sqrt(value)

    def scaled(t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        c1, c2 = evaluate(t)
        return c1 / scale, c2 / scale

    return replace(
        profile,
        component_1=profile.component_1 / scale,
        component_2=profile.component_2 / scale,
        density=profile.density / value,
        normalization=value,
        quadrature_error=err,
        evaluator=scaled,
    )
