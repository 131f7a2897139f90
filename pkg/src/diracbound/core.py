"""Shared physical scaffolding: constants, quantum numbers, energies, scales.

Energies are tracked as the dimensionless ratio eps = E / mc^2 throughout.
Lengths are measured in natural units (the reduced Compton wavelength
hbar / mc); conversion helpers to and from nanometers live here so the
numerical modules never touch dimensionful constants.
"""

from __future__ import annotations

import math
import cmath
from dataclasses import dataclass

from .errors import DomainError, SingularEnergy

REAL_BOUND = "real_bound"
VIRTUAL = "virtual"
SINGULAR = "singular"


@dataclass(frozen=True)
class PhysicalConstants:
    """Constants entering the problem. Defaults are CODATA 2018 values.

    alpha          fine-structure constant
    rest_energy_ev electron rest energy mc^2 in eV
    hbar_c_ev_nm   hbar*c in eV*nm, fixes the natural length scale
    """

    alpha: float = 7.2973525693e-3
    rest_energy_ev: float = 510998.95
    hbar_c_ev_nm: float = 197.3269804

    def __post_init__(self) -> None:
        for name in ("alpha", "rest_energy_ev", "hbar_c_ev_nm"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be a positive finite number, got {value!r}")

    @property
    def natural_length_nm(self) -> float:
        """Length of one natural unit (hbar / mc) in nanometers."""
        return self.hbar_c_ev_nm / self.rest_energy_ev


DEFAULT_CONSTANTS = PhysicalConstants()

# Default boundary radius in natural units, roughly a heavy-nucleus charge
# radius (~10 fm). Small enough that finite-size shifts stay perturbative
# for light systems, large enough to keep the forward recursion well scaled.
DEFAULT_DELTA = 2.4e-5


@dataclass(frozen=True)
class QuantumNumbers:
    """Bound-state labels: nuclear charge Z, angular number K, radial index n_r.

    K is the integer eigenvalue coupling spin and orbital angular momentum;
    K = +1 labels the ground branch in the sign convention used here. n_r
    counts the polynomial degree of the terminating series.
    """

    Z: int
    K: int
    n_r: int

    def __post_init__(self) -> None:
        if not isinstance(self.Z, int) or isinstance(self.Z, bool) or self.Z < 1:
            raise DomainError(f"Z must be a positive integer, got {self.Z!r}")
        if not isinstance(self.K, int) or isinstance(self.K, bool) or self.K == 0:
            raise DomainError(f"K must be a nonzero integer, got {self.K!r}")
        if not isinstance(self.n_r, int) or isinstance(self.n_r, bool) or self.n_r < 0:
            raise DomainError(f"n_r must be a nonnegative integer, got {self.n_r!r}")

    @property
    def principal(self) -> int:
        """Principal quantum number n = n_r + |K|."""
        return self.n_r + abs(self.K)


def classify_energy(value: float | complex) -> str:
    """Classify a dimensionless energy eps = E / mc^2.

    real_bound: real with 0 < eps < 1 (discrete state below the rest mass)
    virtual:    nonzero imaginary part (supercritical coupling)
    singular:   exactly on |eps| = 1 or otherwise outside the bound window
    """
    if isinstance(value, complex) and value.imag != 0.0:
        return VIRTUAL
    real = value.real
    if 0.0 < real < 1.0:
        return REAL_BOUND
    return SINGULAR


@dataclass(frozen=True)
class EnergyLevel:
    """A level energy as eps = E / mc^2 plus its classification."""

    eps: float | complex
    classification: str

    @classmethod
    def from_eps(cls, eps: float | complex) -> "EnergyLevel":
        if isinstance(eps, complex) and eps.imag == 0.0:
            eps = eps.real
        return cls(eps=eps, classification=classify_energy(eps))

    @property
    def is_real_bound(self) -> bool:
        return self.classification == REAL_BOUND

    def energy_ev(self, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float | complex:
        return self.eps * constants.rest_energy_ev

    def binding_ev(self, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float | complex:
        """Binding energy mc^2 - E in eV (positive for bound states)."""
        return (1.0 - self.eps) * constants.rest_energy_ev


@dataclass(frozen=True)
class DerivedScales:
    """Scales derived from an energy and a state's quantum numbers.

    a      exponential decay constant sqrt(1 - eps^2) in natural units
    lam    tail ratio sqrt((1 - eps) / (1 + eps)), so a = lam * (1 + eps)
    gamma  indicial exponent sqrt(K^2 - (Z alpha)^2), complex-capable

    For real eps with |eps| < 1 both a and lam are real and positive
    (lam = 1 exactly at eps = 0, the edge of the bound window).
    """

    a: float | complex
    lam: float | complex
    gamma: float | complex


def derive_scales(
    qn: QuantumNumbers,
    energy: "EnergyLevel | float | complex",
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> DerivedScales:
    """Compute (a, lam, gamma) from the closed forms.

    Complex energies are carried through with principal branches rather
    than rejected; classification is the caller's concern. The single
    excluded point is |eps| = 1 exactly, where a vanishes and the
    exponential envelope degenerates.
    """
    eps = energy.eps if isinstance(energy, EnergyLevel) else energy
    if isinstance(eps, complex) and eps.imag == 0.0:
        eps = eps.real
    g = gamma_exponent(qn.K, qn.Z, constants)
    if isinstance(eps, complex):
        a = cmath.sqrt((1.0 - eps) * (1.0 + eps))
        lam = cmath.sqrt((1.0 - eps) / (1.0 + eps))
        return DerivedScales(a=a, lam=lam, gamma=g)
    if eps == 1.0 or eps == -1.0:
        raise SingularEnergy("decay scale vanishes at |E| = mc^2")
    if -1.0 < eps < 1.0:
        # Factored forms avoid cancellation near eps = 1.
        a = math.sqrt((1.0 - eps) * (1.0 + eps))
        lam = math.sqrt((1.0 - eps) / (1.0 + eps))
        return DerivedScales(a=a, lam=lam, gamma=g)
    a = cmath.sqrt(complex((1.0 - eps) * (1.0 + eps), 0.0))
    lam = cmath.sqrt(complex((1.0 - eps) / (1.0 + eps), 0.0))
    return DerivedScales(a=a, lam=lam, gamma=g)


def coupling(Z: int, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Dimensionless Coulomb coupling Z * alpha."""
    return Z * constants.alpha


def gamma_exponent(K: int, Z: int, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float | complex:
    """Indicial exponent gamma = sqrt(K^2 - (Z alpha)^2) of the point-charge series.

    Real for |K| > Z alpha; pure imaginary (principal branch) past the
    critical coupling, where the spectrum turns virtual.
    """
    za = coupling(Z, constants)
    disc = (K - za) * (K + za)
    if disc > 0.0:
        return math.sqrt(disc)
    if disc == 0.0:
        return 0.0
    return cmath.sqrt(complex(disc, 0.0))


def to_natural_units(value_nm: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Convert a length in nm to natural units (reduced Compton wavelengths)."""
    return value_nm / constants.natural_length_nm


def from_natural_units(value: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Convert a length in natural units to nm."""
    return value * constants.natural_length_nm
