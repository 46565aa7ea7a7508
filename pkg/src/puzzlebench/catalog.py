"""Named preset shapes for the CLI and session service."""

from __future__ import annotations

import re

from .errors import PuzzleError
from .polyomino import Cell, Polyomino, from_cells

_PRESETS: dict[str, tuple[tuple[int, int], ...]] = {
    "monomino": ((0, 0),),
    "domino": ((0, 0), (1, 0)),
    "l-tromino": ((0, 0), (1, 0), (0, 1)),
    "i-tromino": ((0, 0), (1, 0), (2, 0)),
    "square-tetromino": ((0, 0), (1, 0), (0, 1), (1, 1)),
    "t-tetromino": ((0, 0), (1, 0), (2, 0), (1, 1)),
    "s-tetromino": ((0, 0), (1, 0), (1, 1), (2, 1)),
    "u-pentomino": ((0, 0), (1, 0), (2, 0), (0, 1), (2, 1)),
    "p-pentomino": ((0, 0), (1, 0), (0, 1), (1, 1), (0, 2)),
    "plus-pentomino": ((1, 0), (0, 1), (1, 1), (2, 1), (1, 2)),
}

_ROW_RE = re.compile(r"^row-(\d+)$")


def catalog_names() -> list[str]:
    """Preset names in stable listing order (row-N is parsed, not listed)."""
    return sorted(_PRESETS)


def shape_by_name(name: str) -> Polyomino:
    """Look up a preset, or build a 1 x N row from a "row-N" name."""
    cells = _PRESETS.get(name)
    if cells is not None:
        return from_cells(Cell(x, y) for x, y in cells)
    m = _ROW_RE.match(name)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise PuzzleError(f"row length must be >= 1, got {n}")
        return from_cells(Cell(x, 0) for x in range(n))
    raise PuzzleError(f"unknown shape {name!r}; known: {', '.join(catalog_names())} or row-N")
