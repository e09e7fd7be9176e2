"""Completion-value tables, the n-heap analogue of the published 3-heap grid.

A table slice fixes the leading heaps (``layer_prefix``), runs a row and a
column index over 0..max_index, and stores in each cell the completion
value of {prefix..., row, col} -- i.e. the value that makes the whole
n-heap position a P-position. Cells whose heap multiset repeats a positive
value are invalid and render as "X".

Every cell is computed independently through ``solver.completion``; the
grid therefore has no fill-order dependence and comes out symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core, solver
from .solver import CompletionCache

# A cell is either a completion value or None for an invalid heap combo.
Cell = int | None


class UnsupportedFormat(core.GameError):
    def __init__(self, fmt: str) -> None:
        super().__init__(f"unsupported table format: {fmt!r}")
        self.format = fmt


@dataclass(frozen=True)
class PTableSpec:
    """Shape of one 2-D slice of the n-heap completion table.

    The completed position in each cell is (layer_prefix..., row, col, z),
    so the prefix fixes n_heaps - 3 leading heap values; a 3-heap table
    has an empty prefix.
    """

    n_heaps: int
    layer_prefix: tuple[int, ...]
    max_index: int

    def __post_init__(self) -> None:
        if self.n_heaps < 3:
            raise solver.InvalidInput(
                f"a table slice needs at least 3 heaps, got {self.n_heaps}"
            )
        if len(self.layer_prefix) != self.n_heaps - 3:
            raise solver.InvalidInput(
                f"{self.n_heaps}-heap table needs a prefix of length "
                f"{self.n_heaps - 3}, got {len(self.layer_prefix)}"
            )
        if any(p < 0 for p in self.layer_prefix):
            raise solver.InvalidInput("layer prefix values must be >= 0")
        if self.max_index < 0:
            raise solver.InvalidInput(
                f"max_index must be >= 0, got {self.max_index}"
            )


@dataclass(frozen=True)
class PTable:
    spec: PTableSpec
    cells: tuple[tuple[Cell, ...], ...]  # cells[row][col], None = invalid


def build_table(spec: PTableSpec, cache: CompletionCache | None = None) -> PTable:
    rows = []
    for r in range(spec.max_index + 1):
        row: list[Cell] = []
        for c in range(spec.max_index + 1):
            heaps = spec.layer_prefix + (r, c)
            try:
                core.validate_state(heaps)
            except core.DuplicatePositiveHeap:
                row.append(None)
                continue
            row.append(solver.completion(core.canonicalize(heaps), cache))
        rows.append(tuple(row))
    return PTable(spec=spec, cells=tuple(rows))


def _cell_str(cell: Cell) -> str:
    return "X" if cell is None else str(cell)


def _render_plain(table: PTable) -> str:
    lines = []
    if table.spec.layer_prefix:
        lines.append("layer " + ",".join(str(p) for p in table.spec.layer_prefix))
    cols = range(table.spec.max_index + 1)
    lines.append("   " + " ".join(str(c) for c in cols))
    for r, row in enumerate(table.cells):
        lines.append(f"{r}: " + " ".join(_cell_str(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _render_csv(table: PTable) -> str:
    # Cells match [0-9]+|X, so no quoting is ever needed.
    cols = range(table.spec.max_index + 1)
    lines = ["," + ",".join(str(c) for c in cols)]
    for r, row in enumerate(table.cells):
        lines.append(f"{r}," + ",".join(_cell_str(cell) for cell in row))
    return "\n".join(lines) + "\n"


def render_table(table: PTable, format: str = "plain") -> str:
    """Render as text; ``format`` is "plain" or "csv"."""
    if format == "plain":
        return _render_plain(table)
    if format == "csv":
        return _render_csv(table)
    raise UnsupportedFormat(format)
