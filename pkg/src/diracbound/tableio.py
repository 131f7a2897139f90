"""Serialization of tables and profiles to CSV and JSON.

Both formats carry the same payload: a metadata mapping, a column name
list, and rows of cells. Floats are printed with 17 significant digits in
scientific notation so that identical runs produce byte-identical files
and values survive a parse round trip. CSV places metadata in leading
`# key = value` lines; JSON is a single object with metadata, columns,
and rows keys.
"""

from __future__ import annotations

import json
from typing import IO, Sequence

from ._version import __version__
from .runconfig import RunConfig

Cell = object  # float | int | str | bool | None


def format_float(value: float) -> str:
    return format(value, ".16e")


def _csv_cell(value: Cell) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def _json_cell(value: Cell) -> Cell:
    # json emits repr-based floats, which round trip exactly; nothing to do.
    return value


def base_metadata(config: RunConfig, **extra: Cell) -> dict[str, Cell]:
    """Provenance block every output embeds: tool, constants, tolerances."""
    meta: dict[str, Cell] = {
        "tool": "diracbound",
        "version": __version__,
        "alpha": config.constants.alpha,
        "rest_energy_ev": config.constants.rest_energy_ev,
        "hbar_c_ev_nm": config.constants.hbar_c_ev_nm,
        "delta": config.delta,
        "svd_threshold": config.svd_threshold,
    }
    meta.update(extra)
    return meta


def write_csv(
    stream: IO[str],
    metadata: dict[str, Cell],
    columns: Sequence[str],
    rows: Sequence[Sequence[Cell]],
) -> None:
    for key, value in metadata.items():
        stream.write(f"# {key} = {_csv_cell(value)}\n")
    stream.write(",".join(columns) + "\n")
    for row in rows:
        stream.write(",".join(_csv_cell(cell) for cell in row) + "\n")


def write_json(
    stream: IO[str],
    metadata: dict[str, Cell],
    columns: Sequence[str],
    rows: Sequence[Sequence[Cell]],
) -> None:
    payload = {
        "metadata": {key: _json_cell(value) for key, value in metadata.items()},
        "columns": list(columns),
        "rows": [[_json_cell(cell) for cell in row] for row in rows],
    }
    json.dump(payload, stream, indent=2)
    stream.write("\n")


def write_table(
    stream: IO[str],
    fmt: str,
    metadata: dict[str, Cell],
    columns: Sequence[str],
    rows: Sequence[Sequence[Cell]],
) -> None:
    if fmt == "json":
        write_json(stream, metadata, columns, rows)
    else:
        write_csv(stream, metadata, columns, rows)
