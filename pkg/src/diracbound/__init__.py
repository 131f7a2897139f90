"""Bound states of the Dirac-Coulomb problem, two ways.

The point-charge model (module point_nucleus) carries the textbook series
about the origin: fine structure, the origin divergence for |K| = 1, and
virtual energies past Z alpha = |K|. The finite-boundary model (module
finite_nucleus) expands about a small boundary radius delta instead: its
spectrum depends only on the radial index, stays real for every charge,
and its density is finite at the boundary. Module ladder audits the
finite-boundary recurrence as an explicit linear system, and compare puts
all three formulas (including the nonrelativistic baseline) side by side.
"""

from ._version import __version__
from .core import (
    DEFAULT_CONSTANTS,
    DEFAULT_DELTA,
    DerivedScales,
    EnergyLevel,
    PhysicalConstants,
    QuantumNumbers,
    derive_scales,
    from_natural_units,
    gamma_exponent,
    to_natural_units,
)
from .errors import (
    DiracBoundError,
    DomainError,
    FitFailure,
    NoRoot,
    QuadratureFailure,
    RecursionInconsistent,
    SingularEnergy,
)
from .profiles import RadialProfile, normalize

__all__ = [
    "__version__",
    "DEFAULT_CONSTANTS",
    "DEFAULT_DELTA",
    "DerivedScales",
    "EnergyLevel",
    "PhysicalConstants",
    "QuantumNumbers",
    "derive_scales",
    "from_natural_units",
    "gamma_exponent",
    "to_natural_units",
    "DiracBoundError",
    "DomainError",
    "FitFailure",
    "NoRoot",
    "QuadratureFailure",
    "RecursionInconsistent",
    "SingularEnergy",
    "RadialProfile",
    "normalize",
]
