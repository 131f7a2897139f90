"""Command-line interface: spectrum tables, wavefunction profiles, verify suites.

Exit codes: 0 success, 1 computation failure, 2 invalid arguments,
3 verify suite with at least one failed assertable check.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import replace
from typing import Optional

from . import compare, finite_nucleus, point_nucleus, verify
from .core import QuantumNumbers
from .errors import DiracBoundError
from .profiles import normalize
from .runconfig import FORMATS, GridSpec, RunConfig, build_run_config, load_config_file, parse_grid
from .tableio import base_metadata, write_table

WAVE_MODELS = ("dirac", "exact")
DEFAULT_GRID_COUNT = 400


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _nonzero_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value == 0:
        raise argparse.ArgumentTypeError("expected a nonzero integer")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not (math.isfinite(value) and value > 0.0):
        raise argparse.ArgumentTypeError(f"expected a positive finite number, got {value}")
    return value


def _nr_range(text: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in lo:hi, got {text!r}") from None
    if not (1 <= lo <= hi):
        raise argparse.ArgumentTypeError(f"need 1 <= lo <= hi, got {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diracbound",
        description=(
            "Bound states of the Dirac-Coulomb problem: point-charge and "
            "finite-boundary series solutions, spectra, profiles, and checks."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        help="config file path (key = value lines); DIRACBOUND_CONFIG is the fallback",
    )
    common.add_argument("--format", choices=FORMATS, default=None, help="output format")
    common.add_argument("--out", default=None, help="output file path (default: stdout)")

    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", parents=[common], help="tabulate level energies")
    sp.add_argument("--model", choices=("bohr", "dirac", "exact", "all"), default="all")
    sp.add_argument("--z", type=_positive_int, default=1, help="nuclear charge number")
    sp.add_argument("--max-n", dest="max_n", type=_positive_int, default=3)
    sp.add_argument("--delta", type=_positive_float, default=None, help="boundary radius, natural units")

    wf = sub.add_parser("wavefunction", parents=[common], help="sample a radial profile")
    wf.add_argument("--model", choices=WAVE_MODELS, required=True)
    wf.add_argument("--z", type=_positive_int, default=1)
    wf.add_argument("--k", type=_nonzero_int, default=1)
    wf.add_argument("--nr", type=_nonneg_int, default=None, help="radial index (default 0 dirac, 1 exact)")
    wf.add_argument("--delta", type=_positive_float, default=None)
    wf.add_argument(
        "--grid",
        default=None,
        help="lo:hi:count:{linear|log} in natural units (default: decay-scaled per model)",
    )
    wf.add_argument("--normalize", action="store_true", help="rescale to unit norm integral")

    vf = sub.add_parser("verify", parents=[common], help="run invariant suites")
    vf.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    vf.add_argument("--z", type=_positive_int, default=1)
    vf.add_argument("--nr-range", dest="nr_range", type=_nr_range, default=(1, 10))
    vf.add_argument("--delta", type=_positive_float, default=None)

    return parser


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    path = args.config or os.environ.get("DIRACBOUND_CONFIG")
    overrides = load_config_file(path) if path else {}
    config = build_run_config(overrides)
    if getattr(args, "delta", None) is not None:
        config = replace(config, delta=args.delta)
    if args.format is not None:
        config = replace(config, fmt=args.format)
    return config


def _emit(args: argparse.Namespace, config: RunConfig, metadata, columns, rows) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            write_table(handle, config.fmt, metadata, columns, rows)
    else:
        write_table(sys.stdout, config.fmt, metadata, columns, rows)


def _cmd_spectrum(args: argparse.Namespace, config: RunConfig) -> int:
    table = compare.compare_spectra(args.z, args.max_n, config.delta, config.constants)
    rows = [row for row in table.rows if args.model in ("all", row.model)]
    columns = (
        "model",
        "Z",
        "n",
        "n_r",
        "K",
        "eps_re",
        "eps_im",
        "classification",
        "binding_ev",
        "diff_vs_bohr_ev",
    )
    cells = [
        (
            row.model,
            row.Z,
            row.n,
            row.n_r,
            row.K,
            row.eps_re,
            row.eps_im,
            row.classification,
            row.binding_ev,
            row.diff_vs_bohr_ev,
        )
        for row in rows
    ]
    metadata = base_metadata(config, command="spectrum", model=args.model, z=args.z, max_n=args.max_n)
    _emit(args, config, metadata, columns, cells)
    return 0


def _default_grid(model: str, a: float) -> GridSpec:
    # Scale the window to the decay constant so the profile's structure and
    # tail both land on the grid regardless of Z and n_r.
    if model == "dirac":
        return GridSpec(lo=1e-6 / a, hi=50.0 / a, count=DEFAULT_GRID_COUNT, spacing="log")
    return GridSpec(lo=0.0, hi=60.0 / a, count=DEFAULT_GRID_COUNT, spacing="linear")


def _cmd_wavefunction(args: argparse.Namespace, config: RunConfig) -> int:
    n_r = args.nr if args.nr is not None else (0 if args.model == "dirac" else 1)
    qn = QuantumNumbers(Z=args.z, K=args.k, n_r=n_r)
    extra: dict[str, object] = {}

    if args.model == "dirac":
        series = point_nucleus.series_coefficients(qn, constants=config.constants)
        if not series.terminates:
            raise DiracBoundError(
                f"series does not terminate for K={qn.K}, n_r={qn.n_r}: "
                "no bound state on this branch"
            )
        grid_spec = parse_grid(args.grid) if args.grid else _default_grid("dirac", series.a)
        profile = point_nucleus.wavefunction(series, grid_spec.points())
        extra["eps"] = series.eps
        extra["gamma"] = series.gamma
        extra["tail_residual"] = series.tail_residual
    else:
        series = finite_nucleus.series_coefficients(qn, delta=config.delta, constants=config.constants)
        grid_spec = parse_grid(args.grid) if args.grid else _default_grid("exact", series.a)
        profile = finite_nucleus.wavefunction(series, grid_spec.points())
        extra["eps"] = series.eps
        extra["sigma"] = series.sigma
        extra["truncation_next_pair_b"] = series.consistency.next_pair[0]
        extra["truncation_next_pair_d"] = series.consistency.next_pair[1]

    if args.normalize:
        profile = normalize(profile)
        check = normalize(profile)
        extra["normalized"] = True
        extra["norm_constant"] = profile.normalization
        extra["norm_check_integral"] = check.normalization
        extra["quadrature_error"] = profile.quadrature_error

    columns = ("coordinate", "component_1", "component_2", "density")
    cells = [
        (float(x), float(c1), float(c2), float(rho))
        for x, c1, c2, rho in zip(
            profile.grid, profile.component_1, profile.component_2, profile.density
        )
    ]
    metadata = base_metadata(
        config,
        command="wavefunction",
        model=args.model,
        z=args.z,
        k=args.k,
        nr=n_r,
        grid_lo=grid_spec.lo,
        grid_hi=grid_spec.hi,
        grid_count=grid_spec.count,
        grid_spacing=grid_spec.spacing,
        **extra,
    )
    _emit(args, config, metadata, columns, cells)
    return 0


def _cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    suites = list(verify.SUITES) if args.suite == "all" else [args.suite]
    nr_lo, nr_hi = args.nr_range
    rows = verify.run_suites(suites, args.z, nr_lo, nr_hi, config)
    columns = ("suite", "check", "status", "measured", "expected", "tolerance", "detail")
    cells = [
        (row.suite, row.check, row.status, row.measured, row.expected, row.tolerance, row.detail)
        for row in rows
    ]
    metadata = base_metadata(
        config,
        command="verify",
        suite=args.suite,
        z=args.z,
        nr_lo=nr_lo,
        nr_hi=nr_hi,
    )
    _emit(args, config, metadata, columns, cells)
    return verify.exit_code(rows)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _resolve_config(args)
    except DiracBoundError as exc:
        parser.error(str(exc))  # exits 2
    try:
        if args.command == "spectrum":
            return _cmd_spectrum(args, config)
        if args.command == "wavefunction":
            return _cmd_wavefunction(args, config)
        return _cmd_verify(args, config)
    except DiracBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
