"""Linear-algebra audit of the finite-boundary recurrence.

Stacking the two coupled relations for every order v = 0..n_r, plus the two
termination rows acting on the top pair, gives a banded homogeneous system
in the 2 (n_r + 1) kept coefficients: (2 n_r + 4) rows by (2 n_r + 2)
columns. A genuine terminating solution would be a null vector of this
matrix. The tools here measure how close the system comes to having one:
exact rank, near-null directions, and the residual of the best candidate.

Two facts worth knowing before reading numbers off the reports. First, the
termination block alone is rank one at every energy, because its 2x2
determinant is eps^2 - 1 + a^2 = 0 identically; a tiny singular value from
that block is structural, not a quantization signal. Second, whether the
smallest singular value of the full system dips at the quantized energy
depends strongly on the charge: the dip is sharp for small Z and washes
out as Z grows. The reports state what is measured and avoid interpreting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import svd

from .core import DEFAULT_CONSTANTS, DEFAULT_DELTA, EnergyLevel, PhysicalConstants, QuantumNumbers, coupling
from .errors import DomainError

# Relative cutoff below which a singular value counts as zero for rank.
RANK_THRESHOLD = 1e-10


@dataclass(frozen=True)
class LadderSystem:
    """Assembled homogeneous system for one (qn, eps, delta).

    matrix has 2 n_r + 4 rows and 2 n_r + 2 columns. Columns 0..n_r weight
    the upper-component coefficients b_0..b_{n_r}, the rest the lower
    d_0..d_{n_r}. row_labels name each row by the relation it encodes.
    """

    qn: QuantumNumbers
    eps: float
    delta: float
    matrix: np.ndarray
    row_labels: tuple[str, ...]


def assemble_ladder(
    qn: QuantumNumbers,
    energy: EnergyLevel | float,
    delta: float = DEFAULT_DELTA,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> LadderSystem:
    """Build the stacked system at an arbitrary real bound energy.

    n_r = 0 is permitted: the resulting 4x2 system probes the claim that
    no order-zero state exists. Energies outside (0, 1) have no real decay
    scale and are rejected.
    """
    eps = energy.eps if isinstance(energy, EnergyLevel) else energy
    if isinstance(eps, complex) or not (0.0 < eps < 1.0):
        raise DomainError(f"ladder assembly requires a real bound energy, got {eps!r}")
    if not (isinstance(delta, (int, float)) and math.isfinite(delta) and delta > 0.0):
        raise DomainError(f"delta must be a positive finite number, got {delta!r}")
    za = coupling(qn.Z, constants)
    a = math.sqrt((1.0 - eps) * (1.0 + eps))
    K, n_r = qn.K, qn.n_r
    ncols = 2 * (n_r + 1)
    rows: list[np.ndarray] = []
    labels: list[str] = []

    def bcol(v: int) -> int:
        return v

    def dcol(v: int) -> int:
        return n_r + 1 + v

    for v in range(n_r + 1):
        first = np.zeros(ncols)
        if v >= 1:
            first[bcol(v - 1)] += eps - 1.0
            first[dcol(v - 1)] += -a
        first[bcol(v)] += (eps - 1.0) * delta + za
        first[dcol(v)] += K + v - delta * a
        if v + 1 <= n_r:
            first[dcol(v + 1)] += delta * (v + 1)
        rows.append(first)
        labels.append(f"order{v}_first")

        second = np.zeros(ncols)
        if v >= 1:
            second[dcol(v - 1)] += eps + 1.0
            second[bcol(v - 1)] += a
        second[dcol(v)] += (eps + 1.0) * delta + za
        second[bcol(v)] += K - v + delta * a
        if v + 1 <= n_r:
            second[bcol(v + 1)] += -delta * (v + 1)
        rows.append(second)
        labels.append(f"order{v}_second")

    tail_first = np.zeros(ncols)
    tail_first[bcol(n_r)] = eps - 1.0
    tail_first[dcol(n_r)] = -a
    rows.append(tail_first)
    labels.append("termination_first")

    tail_second = np.zeros(ncols)
    tail_second[bcol(n_r)] = a
    tail_second[dcol(n_r)] = 1.0 + eps
    rows.append(tail_second)
    labels.append("termination_second")

    return LadderSystem(
        qn=qn, eps=float(eps), delta=float(delta), matrix=np.vstack(rows), row_labels=tuple(labels)
    )


def equilibrate(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Scale each row to unit max-norm; returns (scaled matrix, scales).

    The raw rows mix magnitudes from delta ~ 1e-5 up to order one, which
    would let big rows dominate the singular spectrum. Every row has a
    nonzero entry by construction.
    """
    scales = np.max(np.abs(matrix), axis=1)
    if np.any(scales == 0.0):
        raise DomainError("ladder contains an all-zero row")
    return matrix / scales[:, None], scales


@dataclass(frozen=True)
class NullspaceReport:
    """SVD summary of the equilibrated system.

    rank and nullity use the threshold relative to the largest singular
    value. smallest_singular_values lists up to four, ascending.
    nontrivial_solution_exists records whether any singular value fell
    below the threshold; it is a measured finding, asserted nowhere.
    best_residual is |A v| for the unit right singular vector v of the
    smallest singular value: the best available candidate for a null
    vector, whether or not one exists. candidate stores that vector,
    ordered like the system columns.
    """

    rank: int
    nullity: int
    smallest_singular_values: tuple[float, ...]
    nontrivial_solution_exists: bool
    best_residual: float
    candidate: tuple[float, ...]


def nullspace_report(system: LadderSystem, threshold: float = RANK_THRESHOLD) -> NullspaceReport:
    scaled, _ = equilibrate(system.matrix)
    # gesvd: slower than gesdd but deterministic and robust; the matrices
    # here are at most 24 x 22 so speed is irrelevant.
    _, sigma, vt = svd(scaled, lapack_driver="gesvd")
    rank = int(np.sum(sigma > threshold * sigma[0]))
    nullity = scaled.shape[1] - rank
    candidate = vt[-1]
    residual = float(np.linalg.norm(scaled @ candidate))
    n_small = min(4, sigma.size)
    return NullspaceReport(
        rank=rank,
        nullity=nullity,
        smallest_singular_values=tuple(float(s) for s in sigma[-n_small:][::-1]),
        nontrivial_solution_exists=nullity >= 1,
        best_residual=residual,
        candidate=tuple(float(c) for c in candidate),
    )


@dataclass(frozen=True)
class ScanPoint:
    """Smallest singular value of the equilibrated system at one energy."""

    eps: float
    sigma_min: float
    sigma_ratio: float


def residual_scan(
    qn: QuantumNumbers,
    energies,
    delta: float = DEFAULT_DELTA,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> list[ScanPoint]:
    """Evaluate sigma_min across an energy grid.

    Useful for locating where the system comes closest to singular; around
    small-Z quantized energies the minimum dips by an order of magnitude
    within a few parts in 1e6 of the root.
    """
    points = []
    for eps in np.asarray(energies, dtype=float):
        system = assemble_ladder(qn, float(eps), delta, constants)
        scaled, _ = equilibrate(system.matrix)
        sigma = svd(scaled, compute_uv=False, lapack_driver="gesvd")
        points.append(
            ScanPoint(eps=float(eps), sigma_min=float(sigma[-1]), sigma_ratio=float(sigma[-1] / sigma[0]))
        )
    return points


def termination_block_ratio(system: LadderSystem) -> float:
    """Singular value ratio sigma_2 / sigma_1 of the raw 2x2 termination block.

    Analytically zero at every energy since the block determinant is
    eps^2 - 1 + a^2 = 0; float roundoff leaves something near machine zero.
    """
    # The two termination rows act on columns b_{n_r} and d_{n_r} only.
    n_rows = system.matrix.shape[0]
    block = system.matrix[np.ix_([n_rows - 2, n_rows - 1], [system.qn.n_r, 2 * system.qn.n_r + 1])]
    sigma = svd(block, compute_uv=False, lapack_driver="gesvd")
    return float(sigma[-1] / sigma[0])
