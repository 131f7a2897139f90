"""Bound states for a point-charge Coulomb potential.

The radial system is solved by a power series about the origin with the
single admissible indicial exponent gamma = sqrt(K^2 - (Z alpha)^2), an
exponential envelope exp(-a r), and a two-term recurrence coupling the
upper and lower component coefficients. Requiring the series to terminate
at finite order n_r quantizes the energy and reproduces the standard
point-charge spectrum.

Conventions used throughout:
  x = a r     dimensionless radius, a = sqrt(1 - eps^2)
  lam         tail ratio sqrt((1 - eps)/(1 + eps))
  components  exp(-x) x^(gamma-1) * sum_v c_v x^v, c in {b, d}

The coupled recurrence, with b_v weighting the upper and d_v the lower
component, reads

  lam b_{v-1} +       d_{v-1} - Z alpha b_v - (K + gamma + v) d_v = 0
      b_{v-1} + (1/lam) d_{v-1} + (K - gamma - v) b_v + Z alpha d_v = 0

Termination at order n_r forces d_{n_r} = -lam b_{n_r}, which holds exactly
when eps solves Z alpha eps = (n_r + gamma) sqrt(1 - eps^2). The order-zero
pair terminates only on the K > 0 branch; for K < 0 the two order-zero
relations degenerate at the candidate energy and no n_r = 0 state exists.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_CONSTANTS,
    EnergyLevel,
    PhysicalConstants,
    QuantumNumbers,
    coupling,
    derive_scales,
    gamma_exponent,
)
from .errors import DomainError, RecursionInconsistent, SingularEnergy
from .profiles import RadialProfile

# The recurrence is generated pair-exactly, so a violation here means a
# bookkeeping bug rather than roundoff.
CONSISTENCY_TOL = 1e-9


def dirac_energy(qn: QuantumNumbers, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> EnergyLevel:
    """Level energy eps = 1 / sqrt(1 + (Z alpha)^2 / (n_r + gamma)^2).

    Real and bound while gamma is real; complex (classification "virtual")
    once Z alpha exceeds |K|. Raises SingularEnergy at the single point
    n_r = 0, gamma = 0 where the formula degenerates.
    """
    za = coupling(qn.Z, constants)
    g = gamma_exponent(qn.K, qn.Z, constants)
    if isinstance(g, complex):
        n_big = qn.n_r + g
        if n_big == 0:
            raise SingularEnergy("n_r + gamma = 0 leaves the energy undefined")
        return EnergyLevel.from_eps(1.0 / cmath.sqrt(1.0 + (za / n_big) ** 2))
    n_big = qn.n_r + g
    if n_big == 0.0:
        raise SingularEnergy("n_r + gamma = 0 leaves the energy undefined")
    return EnergyLevel.from_eps(n_big / math.hypot(n_big, za))


def binding_fraction(qn: QuantumNumbers, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Binding fraction 1 - eps, formed without subtractive cancellation.

    With N = n_r + gamma and s = sqrt(N^2 + (Z alpha)^2),
    1 - N/s = (Z alpha)^2 / (s (N + s)). Defined on the real branch only.
    """
    g = gamma_exponent(qn.K, qn.Z, constants)
    if isinstance(g, complex):
        raise DomainError("binding fraction is defined for a real spectrum only")
    za = coupling(qn.Z, constants)
    n_big = qn.n_r + g
    if n_big == 0.0:
        raise SingularEnergy("n_r + gamma = 0 leaves the energy undefined")
    s = math.hypot(n_big, za)
    return za * za / (s * (n_big + s))


@dataclass(frozen=True)
class PointSeries:
    """Termination-checked series coefficients for one point-charge level.

    b and d hold orders 0..n_r of the upper and lower component series.
    tail_residual is |lam b_{n_r} + d_{n_r}| over the largest coefficient:
    zero exactly when the next pair would vanish and the series terminates.
    """

    qn: QuantumNumbers
    eps: float
    gamma: float
    a: float
    lam: float
    b: tuple[float, ...]
    d: tuple[float, ...]
    tail_residual: float
    terminates: bool

    @property
    def exponent(self) -> float:
        """Leading power of x = a r carried by both components."""
        return self.gamma - 1.0


def series_coefficients(
    qn: QuantumNumbers,
    energy: EnergyLevel | float | None = None,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> PointSeries:
    """Generate coefficient pairs (b_v, d_v) for v = 0..n_r.

    energy defaults to dirac_energy(qn); passing a different real bound
    value is allowed and surfaces as a nonzero tail residual rather than an
    error, since the recurrence itself is energy-agnostic. The order-zero
    pair is fixed by the two v = 0 relations with the scale choice d_0 = 1;
    each later pair solves the corresponding 2x2 system exactly. Both
    relations are re-checked per order and RecursionInconsistent is raised
    if they disagree beyond CONSISTENCY_TOL relative.
    """
    if energy is None:
        energy = dirac_energy(qn, constants)
    eps = energy.eps if isinstance(energy, EnergyLevel) else energy
    if isinstance(eps, complex) or not (0.0 < eps < 1.0):
        raise DomainError("series coefficients require a real bound energy")
    scales = derive_scales(qn, eps, constants)
    g = scales.gamma
    if isinstance(g, complex):
        raise DomainError("series coefficients require real gamma (Z alpha < |K|)")
    za = coupling(qn.Z, constants)
    a, lam = scales.a, scales.lam
    K = qn.K

    b = [-(K + g) / za]
    d = [1.0]
    # Order zero appears in two relations; their ratios agree exactly when
    # (K + gamma)(K - gamma) = (Z alpha)^2, the defining property of gamma.
    res0 = abs((K - g) * b[0] + za * d[0])
    if res0 > CONSISTENCY_TOL * max(abs(b[0]), 1.0):
        raise RecursionInconsistent(f"order-0 relations disagree: residual {res0:.3e}")

    for v in range(1, qn.n_r + 1):
        det = -v * (2.0 * g + v)
        r1 = -(lam * b[v - 1] + d[v - 1])
        r2 = -(b[v - 1] + d[v - 1] / lam)
        bv = (r1 * za + (K + g + v) * r2) / det
        dv = (-za * r2 - r1 * (K - g - v)) / det
        scale = max(abs(bv), abs(dv), abs(b[v - 1]), abs(d[v - 1]), 1.0)
        chk1 = lam * b[v - 1] + d[v - 1] - za * bv - (K + g + v) * dv
        chk2 = b[v - 1] + d[v - 1] / lam + (K - g - v) * bv + za * dv
        if max(abs(chk1), abs(chk2)) > CONSISTENCY_TOL * scale:
            raise RecursionInconsistent(
                f"order-{v} pair violates the relations: residuals {chk1:.3e}, {chk2:.3e}"
            )
        b.append(bv)
        d.append(dv)

    top = max(max(abs(c) for c in b), max(abs(c) for c in d))
    tail = abs(lam * b[-1] + d[-1]) / top
    return PointSeries(
        qn=qn,
        eps=float(eps),
        gamma=g,
        a=a,
        lam=lam,
        b=tuple(b),
        d=tuple(d),
        tail_residual=tail,
        terminates=tail <= CONSISTENCY_TOL,
    )


@dataclass(frozen=True)
class ConventionReport:
    """Residuals of the recurrence against the generated coefficients.

    implemented_max_residual re-checks the relations as implemented
    (including the termination row); reciprocal_max_residual evaluates the
    variant with the two decay-ratio weights lam and 1/lam interchanged.
    A terminating series drives the first to roundoff while the second
    stays order one, which pins down the correct weight placement.
    """

    implemented_max_residual: float
    reciprocal_max_residual: float


def convention_report(series: PointSeries) -> ConventionReport:
    K = series.qn.K
    g = series.gamma
    # Recover the coupling from the order-0 pair so the report stays
    # consistent with whatever constants built the series.
    za = -(K + g) * series.d[0] / series.b[0]
    lam = series.lam
    b, d = series.b, series.d
    top = max(max(abs(c) for c in b), max(abs(c) for c in d))

    imp = abs(lam * b[-1] + d[-1]) / top
    rec = abs(b[-1] / lam + d[-1]) / top
    for v in range(1, series.qn.n_r + 1):
        i1 = lam * b[v - 1] + d[v - 1] - za * b[v] - (K + g + v) * d[v]
        i2 = b[v - 1] + d[v - 1] / lam + (K - g - v) * b[v] + za * d[v]
        r1 = b[v - 1] / lam + d[v - 1] - za * b[v] - (K + g + v) * d[v]
        r2 = b[v - 1] + lam * d[v - 1] + (K - g - v) * b[v] + za * d[v]
        imp = max(imp, abs(i1) / top, abs(i2) / top)
        rec = max(rec, abs(r1) / top, abs(r2) / top)
    return ConventionReport(implemented_max_residual=imp, reciprocal_max_residual=rec)


def _evaluate(series: PointSeries, radii: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    x = series.a * radii
    poly_b = np.zeros_like(x)
    poly_d = np.zeros_like(x)
    for bv, dv in zip(series.b[::-1], series.d[::-1]):
        poly_b = poly_b * x + bv
        poly_d = poly_d * x + dv
    common = np.exp(-x) * x ** (series.gamma - 1.0)
    return common * poly_b, common * poly_d


def wavefunction(series: PointSeries, radii) -> RadialProfile:
    """Sample both components on a grid of radii (natural units, > 0)."""
    grid = np.asarray(radii, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError("radius grid must be a nonempty 1-d array")
    if not np.all(grid > 0.0):
        raise DomainError("all radii must be positive")
    c1, c2 = _evaluate(series, grid)

    def evaluator(r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return _evaluate(series, r)

    return RadialProfile(
        model="dirac",
        qn=series.qn,
        energy=EnergyLevel.from_eps(series.eps),
        delta=None,
        grid=grid,
        component_1=c1,
        component_2=c2,
        density=c1 * c1 + c2 * c2,
        evaluator=evaluator,
    )


def density(series: PointSeries, radii) -> RadialProfile:
    """Component-square sum on a grid; same profile as wavefunction()."""
    return wavefunction(series, radii)


def origin_slope(series: PointSeries, window: tuple[float, float] = (1e-8, 1e-6), points: int = 64) -> float:
    """Least-squares log-log slope of the density over a window in x = a r.

    Near the origin the density scales as x^(2 (gamma - 1)), so the fitted
    slope measures the indicial exponent directly from samples.
    """
    lo, hi = window
    if not (0.0 < lo < hi):
        raise DomainError("window must satisfy 0 < lo < hi")
    x = np.logspace(math.log10(lo), math.log10(hi), points)
    profile = wavefunction(series, x / series.a)
    slope, _ = np.polyfit(np.log(x), np.log(profile.density), 1)
    return float(slope)


@dataclass(frozen=True)
class DivergenceReport:
    """Origin behavior and criticality summary for one |K| channel.

    leading_exponent     Re(gamma) - 1, the component exponent at the origin
    divergent_at_origin  True when Re(gamma) < 1, i.e. the amplitude blows up
    virtual_threshold_Z  floor(|K| / alpha), the largest charge with real gamma
    """

    leading_exponent: float
    divergent_at_origin: bool
    virtual_threshold_Z: int


def divergence_diagnostic(qn: QuantumNumbers, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> DivergenceReport:
    """Classify the origin singularity of the state's |K| channel.

    Defined for every charge: past the critical coupling gamma is purely
    imaginary and the real exponent drops to -1. Only |K| = 1 channels can
    diverge below criticality, since gamma > 1 for |K| >= 2 there. The
    threshold marks the last charge before this channel turns virtual;
    with default constants it is 137 for |K| = 1.
    """
    g = gamma_exponent(qn.K, qn.Z, constants)
    g_re = g.real if isinstance(g, complex) else g
    return DivergenceReport(
        leading_exponent=g_re - 1.0,
        divergent_at_origin=g_re < 1.0,
        virtual_threshold_Z=int(math.floor(abs(qn.K) / constants.alpha)),
    )
