"""Run configuration: constants overrides, grids, and the config file format.

The config file is plain text, one `key = value` per line, with `#`
comments and blank lines ignored. Recognized keys:

    alpha             fine-structure constant
    rest_energy_ev    electron rest energy in eV
    hbar_c_ev_nm      hbar*c in eV*nm
    delta             default boundary radius, natural units
    svd_threshold     relative singular-value cutoff for rank decisions
    format            default output format, csv or json

Command-line flags override config file values, which override defaults.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_CONSTANTS, DEFAULT_DELTA, PhysicalConstants
from .errors import DomainError
from .ladder import RANK_THRESHOLD

FORMATS = ("csv", "json")

_FLOAT_KEYS = ("alpha", "rest_energy_ev", "hbar_c_ev_nm", "delta", "svd_threshold")


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid: count points from lo to hi, linear or log spacing."""

    lo: float
    hi: float
    count: int
    spacing: str

    def __post_init__(self) -> None:
        if self.count < 2:
            raise DomainError(f"grid count must be >= 2, got {self.count}")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and self.lo < self.hi):
            raise DomainError(f"grid needs lo < hi, got {self.lo!r}:{self.hi!r}")
        if self.spacing not in ("linear", "log"):
            raise DomainError(f"grid spacing must be linear or log, got {self.spacing!r}")
        if self.spacing == "log" and self.lo <= 0.0:
            raise DomainError("log spacing requires lo > 0")

    def points(self) -> np.ndarray:
        if self.spacing == "log":
            return np.logspace(math.log10(self.lo), math.log10(self.hi), self.count)
        return np.linspace(self.lo, self.hi, self.count)


def parse_grid(text: str) -> GridSpec:
    """Parse `lo:hi:count:spacing`, e.g. `1e-4:50:400:log`."""
    parts = text.split(":")
    if len(parts) != 4:
        raise DomainError(f"grid must be lo:hi:count:spacing, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError as exc:
        raise DomainError(f"malformed grid {text!r}: {exc}") from None
    return GridSpec(lo=lo, hi=hi, count=count, spacing=parts[3])


@dataclass(frozen=True)
class RunConfig:
    """Resolved settings shared by all CLI commands."""

    constants: PhysicalConstants = DEFAULT_CONSTANTS
    delta: float = DEFAULT_DELTA
    svd_threshold: float = RANK_THRESHOLD
    fmt: str = "csv"

    def __post_init__(self) -> None:
        if not (self.delta > 0.0 and math.isfinite(self.delta)):
            raise DomainError(f"delta must be a positive finite number, got {self.delta!r}")
        if not (self.svd_threshold > 0.0 and math.isfinite(self.svd_threshold)):
            raise DomainError(f"svd_threshold must be positive, got {self.svd_threshold!r}")
        if self.fmt not in FORMATS:
            raise DomainError(f"format must be one of {FORMATS}, got {self.fmt!r}")


def parse_config_text(text: str) -> dict[str, object]:
    """Parse the key = value format into typed overrides."""
    overrides: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise DomainError(f"config line {lineno}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key in _FLOAT_KEYS:
            try:
                overrides[key] = float(value)
            except ValueError:
                raise DomainError(f"config line {lineno}: {key} needs a number, got {value!r}") from None
        elif key == "format":
            if value not in FORMATS:
                raise DomainError(f"config line {lineno}: format must be one of {FORMATS}")
            overrides[key] = value
        else:
            raise DomainError(f"config line {lineno}: unknown key {key!r}")
    return overrides


def load_config_file(path: str) -> dict[str, object]:
    try:
        with open(path, encoding="utf-8") as handle:
            return parse_config_text(handle.read())
    except OSError as exc:
        raise DomainError(f"cannot read config file {path}: {exc}") from None


def build_run_config(overrides: dict[str, object]) -> RunConfig:
    constants = PhysicalConstants(
        alpha=float(overrides.get("alpha", DEFAULT_CONSTANTS.alpha)),
        rest_energy_ev=float(overrides.get("rest_energy_ev", DEFAULT_CONSTANTS.rest_energy_ev)),
        hbar_c_ev_nm=float(overrides.get("hbar_c_ev_nm", DEFAULT_CONSTANTS.hbar_c_ev_nm)),
    )
    return RunConfig(
        constants=constants,
        delta=float(overrides.get("delta", DEFAULT_DELTA)),
        svd_threshold=float(overrides.get("svd_threshold", RANK_THRESHOLD)),
        fmt=str(overrides.get("format", "csv")),
    )
