"""Bound states with the Coulomb field cut off at a finite boundary radius.

Instead of expanding about r = 0, the series runs in the shifted coordinate
xi = r - delta measured outward from a small boundary radius delta > 0. The
ansatz for both radial components is

    exp(-a xi) / (xi + delta) * sum_v c_v xi^v,   c in {b, d}

with a = sqrt(1 - eps^2). The indicial analysis of the shifted system
admits only the exponent zero, so the components are finite at the
boundary for any delta > 0: the origin divergence of the point-charge
solution is an artifact of taking delta to zero, not a feature of the
spectrum.

The coupled recurrence in xi links three consecutive orders:

  (eps-1) b_{v-1} + ((eps-1) delta + Z alpha) b_v - a d_{v-1}
        + (K + v - delta a) d_v + delta (v+1) d_{v+1} = 0
  (eps+1) d_{v-1} + ((eps+1) delta + Z alpha) d_v + a b_{v-1}
        + (K - v + delta a) b_v - delta (v+1) b_{v+1} = 0

Eliminating the v-1 coefficients between the two order-n_r relations under
truncation yields a quantization condition in which both K and delta cancel:

    Z alpha eps = n_r sqrt(1 - eps^2)

so the spectrum eps = 1 / sqrt(1 + (Z alpha / n_r)^2), n_r >= 1, depends on
neither the angular number nor the boundary radius, and stays real for
every charge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_CONSTANTS,
    DEFAULT_DELTA,
    EnergyLevel,
    PhysicalConstants,
    QuantumNumbers,
    coupling,
    derive_scales,
)
from .errors import DomainError, NoRoot
from .profiles import RadialProfile

BISECTION_MAX_ITER = 200
RESIDUAL_ACCEPT = 1e-13
# Bracket endpoints for the bisection, in units of mc^2. The lower end sits
# below any level of interest and the upper end just inside the rest mass.
BRACKET_LO = 1e-6
BRACKET_HI = 1.0 - 1e-12


def level_energy(n_r: int, Z: int, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> EnergyLevel:
    """Closed-form level eps = n_r / sqrt(n_r^2 + (Z alpha)^2), n_r >= 1.

    Independent of K and of the boundary radius. Real and bound for every
    positive charge; there is no critical Z on this branch.
    """
    if not isinstance(n_r, int) or isinstance(n_r, bool) or n_r < 1:
        raise DomainError(f"n_r must be a positive integer, got {n_r!r}")
    if not isinstance(Z, int) or isinstance(Z, bool) or Z < 1:
        raise DomainError(f"Z must be a positive integer, got {Z!r}")
    za = coupling(Z, constants)
    return EnergyLevel.from_eps(n_r / math.hypot(n_r, za))


def binding_fraction(n_r: int, Z: int, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Binding fraction 1 - eps without cancellation: with x = Z alpha / n_r
    and s = sqrt(1 + x^2), 1 - 1/s = x^2 / (s (1 + s))."""
    if not isinstance(n_r, int) or isinstance(n_r, bool) or n_r < 1:
        raise DomainError(f"n_r must be a positive integer, got {n_r!r}")
    x = coupling(Z, constants) / n_r
    s = math.hypot(1.0, x)
    return x * x / (s * (1.0 + s))


def quantization_residual(
    eps: float, qn: QuantumNumbers, constants: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Truncation residual whose root is the level energy.

    Combining the two order-n_r relations with weights (1 + eps) and a
    eliminates the dangling order-(n_r - 1) terms and every delta term;
    substituting the tail ratio d = -lam b then leaves

      Q = Z alpha (1+eps) + (K - n_r) a - lam ((K + n_r)(1+eps) + Z alpha a)

    which collapses algebraically to 2 (Z alpha eps - n_r a): the K terms
    cancel identically. The explicit K form is kept so tests can observe
    the cancellation. Q is strictly increasing on (0, 1) with Q(0) < 0 and
    Q(1) = 2 Z alpha > 0 whenever n_r >= 1.
    """
    if not (0.0 <= eps <= 1.0):
        raise DomainError(f"expected 0 <= eps <= 1, got {eps!r}")
    za = coupling(qn.Z, constants)
    a = math.sqrt((1.0 - eps) * (1.0 + eps))
    lam = math.sqrt((1.0 - eps) / (1.0 + eps))
    return za * (1.0 + eps) + (qn.K - qn.n_r) * a - lam * ((qn.K + qn.n_r) * (1.0 + eps) + za * a)


def quantization_root(qn: QuantumNumbers, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> EnergyLevel:
    """Bisect the truncation residual on (BRACKET_LO, BRACKET_HI).

    Runs to float-interval exhaustion (or BISECTION_MAX_ITER), accepting
    early when |Q| <= RESIDUAL_ACCEPT. Deterministic: the iterate sequence
    is a pure function of the inputs. Raises NoRoot when the bracket shows
    no sign change, which is how the absence of an order-zero state
    manifests (Q stays positive on the whole bracket for n_r = 0).
    """
    lo, hi = BRACKET_LO, BRACKET_HI
    q_lo = quantization_residual(lo, qn, constants)
    q_hi = quantization_residual(hi, qn, constants)
    if not (q_lo < 0.0 < q_hi):
        raise NoRoot(
            f"no sign change on the bracket for n_r={qn.n_r}, Z={qn.Z}: "
            f"Q(lo)={q_lo:.3e}, Q(hi)={q_hi:.3e}"
        )
    mid = 0.5 * (lo + hi)
    for _ in range(BISECTION_MAX_ITER):
        q_mid = quantization_residual(mid, qn, constants)
        if abs(q_mid) <= RESIDUAL_ACCEPT:
            return EnergyLevel.from_eps(mid)
        if q_mid < 0.0:
            lo = mid
        else:
            hi = mid
        nxt = 0.5 * (lo + hi)
        if nxt == lo or nxt == hi:
            # Interval exhausted at float resolution.
            return EnergyLevel.from_eps(nxt)
        mid = nxt
    return EnergyLevel.from_eps(mid)


@dataclass(frozen=True)
class FiniteConsistency:
    """How cleanly the forward recursion closes at the truncation order.

    next_pair holds the hypothetical order-(n_r + 1) pair the recursion
    would generate, normalized by the largest kept coefficient; zero would
    mean the series truncates on its own. tail_residuals are the two
    termination relations evaluated on the kept order-n_r pair, same
    normalization (the second is zero by construction, the first follows
    because the termination block has rank one at any energy).
    """

    next_pair: tuple[float, float]
    tail_residuals: tuple[float, float]
    clean_termination: bool


@dataclass(frozen=True)
class FiniteSeries:
    """Coefficients of the shifted series for one level.

    sigma is the indicial exponent, always zero for this model; it is kept
    as a field so the construction records what the indicial analysis fixed.
    """

    qn: QuantumNumbers
    eps: float
    delta: float
    a: float
    lam: float
    b: tuple[float, ...]
    d: tuple[float, ...]
    sigma: float
    consistency: FiniteConsistency


def series_coefficients(
    qn: QuantumNumbers,
    energy: EnergyLevel | float | None = None,
    delta: float = DEFAULT_DELTA,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> FiniteSeries:
    """Generate (b_v, d_v) for v = 0..n_r at boundary radius delta.

    The recursion fixes each order from the two below it, so the whole
    series is linear in the order-zero pair. d_0 = 1 sets the scale and
    b_0 is pinned by the better-conditioned of the two termination rows,
    making the tail block exact by construction. Whatever inconsistency
    remains is pushed into the hypothetical order-(n_r + 1) pair and
    reported rather than raised: the truncated series is the model's
    solution by definition, and the report quantifies the truncation.
    """
    if qn.n_r < 1:
        raise DomainError("the truncated series needs n_r >= 1")
    if not (isinstance(delta, (int, float)) and math.isfinite(delta) and delta > 0.0):
        raise DomainError(f"delta must be a positive finite number, got {delta!r}")
    if energy is None:
        energy = level_energy(qn.n_r, qn.Z, constants)
    eps = energy.eps if isinstance(energy, EnergyLevel) else energy
    if isinstance(eps, complex) or not (0.0 < eps < 1.0):
        raise DomainError("series coefficients require a real bound energy")
    za = coupling(qn.Z, constants)
    scales = derive_scales(qn, eps, constants)
    a, lam = scales.a, scales.lam
    K, n_r = qn.K, qn.n_r

    # Track every coefficient as its linear weight on (b_0, d_0).
    zero = np.zeros(2)
    b = [np.array([1.0, 0.0])]
    d = [np.array([0.0, 1.0])]
    for v in range(n_r):
        bm1 = b[v - 1] if v >= 1 else zero
        dm1 = d[v - 1] if v >= 1 else zero
        step = delta * (v + 1)
        d_next = -(
            (eps - 1.0) * bm1 + ((eps - 1.0) * delta + za) * b[v] - a * dm1 + (K + v - delta * a) * d[v]
        ) / step
        b_next = (
            (eps + 1.0) * dm1 + ((eps + 1.0) * delta + za) * d[v] + a * bm1 + (K - v + delta * a) * b[v]
        ) / step
        b.append(b_next)
        d.append(d_next)

    # Termination rows on the top pair: (eps-1) b_n - a d_n = 0 and
    # a b_n + (1+eps) d_n = 0. They are proportional (the block determinant
    # is eps^2 - 1 + a^2 = 0), so either one pins b_0; the second has O(1)
    # coefficients and is used.
    p, q = b[n_r]
    s, t = d[n_r]
    denom = a * p + (1.0 + eps) * s
    numer = a * q + (1.0 + eps) * t
    if denom == 0.0:
        raise DomainError("termination row degenerate; cannot fix the order-zero pair")
    b0 = -numer / denom
    weights = np.array([b0, 1.0])
    bv = tuple(float(vec @ weights) for vec in b)
    dv = tuple(float(vec @ weights) for vec in d)

    top = max(max(abs(c) for c in bv), max(abs(c) for c in dv))
    t1 = abs((eps - 1.0) * bv[n_r] - a * dv[n_r]) / top
    t2 = abs(a * bv[n_r] + (1.0 + eps) * dv[n_r]) / top
    # Hypothetical next pair from the recursion, as if truncation were not
    # imposed. Nonzero values measure how much the model discards.
    step = delta * (n_r + 1)
    d_hyp = -(
        (eps - 1.0) * bv[n_r - 1] + ((eps - 1.0) * delta + za) * bv[n_r] - a * dv[n_r - 1]
        + (K + n_r - delta * a) * dv[n_r]
    ) / step
    b_hyp = (
        (eps + 1.0) * dv[n_r - 1] + ((eps + 1.0) * delta + za) * dv[n_r] + a * bv[n_r - 1]
        + (K - n_r + delta * a) * bv[n_r]
    ) / step
    next_pair = (abs(b_hyp) / top, abs(d_hyp) / top)
    consistency = FiniteConsistency(
        next_pair=next_pair,
        tail_residuals=(t1, t2),
        clean_termination=max(next_pair) <= 1e-9,
    )
    return FiniteSeries(
        qn=qn,
        eps=float(eps),
        delta=float(delta),
        a=a,
        lam=lam,
        b=bv,
        d=dv,
        sigma=indicial_exponent(delta),
        consistency=consistency,
    )


def indicial_exponent(delta: float) -> float:
    """Sole indicial exponent of the shifted system.

    The lowest-order rows reduce to sigma * delta * c_0 = 0 for both
    components, so sigma = 0 is the only solution once delta > 0 and the
    order-zero pair is nonzero: the series starts at a finite constant and
    the boundary value of each component is c_0 / delta.
    """
    if not (isinstance(delta, (int, float)) and math.isfinite(delta) and delta > 0.0):
        raise DomainError(f"delta must be a positive finite number, got {delta!r}")
    return 0.0


def _evaluate(series: FiniteSeries, xi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    poly_b = np.zeros_like(xi)
    poly_d = np.zeros_like(xi)
    for bc, dc in zip(series.b[::-1], series.d[::-1]):
        poly_b = poly_b * xi + bc
        poly_d = poly_d * xi + dc
    weight = np.exp(-series.a * xi) / (xi + series.delta)
    return weight * poly_b, weight * poly_d


def wavefunction(series: FiniteSeries, xi_grid) -> RadialProfile:
    """Sample both components on a grid of the shifted coordinate xi >= 0.

    xi = 0 is the boundary itself, where the components take the finite
    values c_0 / delta.
    """
    grid = np.asarray(xi_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError("coordinate grid must be a nonempty 1-d array")
    if not np.all(grid >= 0.0):
        raise DomainError("the shifted coordinate is defined for xi >= 0")
    c1, c2 = _evaluate(series, grid)

    def evaluator(xi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return _evaluate(series, xi)

    return RadialProfile(
        model="exact",
        qn=series.qn,
        energy=EnergyLevel.from_eps(series.eps),
        delta=series.delta,
        grid=grid,
        component_1=c1,
        component_2=c2,
        density=c1 * c1 + c2 * c2,
        evaluator=evaluator,
    )


def density(series: FiniteSeries, xi_grid) -> RadialProfile:
    """Component-square sum on a grid; same profile as wavefunction()."""
    return wavefunction(series, xi_grid)
