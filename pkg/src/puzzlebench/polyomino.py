"""Grid polyominoes: validation, normalization, canonical keys, enumeration.

A cell is the unit square whose lower-left corner sits at integer (x, y),
with y growing upward. A polyomino is a finite, 4-connected set of cells,
stored normalized so that min x = min y = 0. Everything here is immutable
and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .config import DEFAULT_CAPS
from .errors import CapExceeded, Disconnected, DuplicateCell, EmptyInput, PuzzleError


class Cell(NamedTuple):
    x: int
    y: int


class InternalEdge(NamedTuple):
    """Edge-adjacent cell pair inside one polyomino, stored with a < b."""

    a: Cell
    b: Cell


@dataclass(frozen=True)
class DualGraph:
    """One node per cell, one edge per shared unit boundary."""

    nodes: frozenset[Cell]
    edges: frozenset[InternalEdge]


@dataclass(frozen=True)
class Polyomino:
    """A normalized, validated polyomino. Build via from_cells()."""

    cells: frozenset[Cell]

    @property
    def n(self) -> int:
        return len(self.cells)

    @property
    def width(self) -> int:
        return 1 + max(c.x for c in self.cells)

    @property
    def height(self) -> int:
        return 1 + max(c.y for c in self.cells)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def __repr__(self) -> str:
        return f"Polyomino({self.sorted_cells()!r})"


def neighbors4(cell: Cell) -> tuple[Cell, Cell, Cell, Cell]:
    x, y = cell
    return (Cell(x + 1, y), Cell(x - 1, y), Cell(x, y + 1), Cell(x, y - 1))


def is_connected(cells: frozenset[Cell]) -> bool:
    """True iff the 4-adjacency graph on `cells` is connected."""
    if not cells:
        return False
    seen = set()
    stack = [next(iter(cells))]
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.add(c)
        for nb in neighbors4(c):
            if nb in cells and nb not in seen:
                stack.append(nb)
    return len(seen) == len(cells)


def normalize_cells(cells: Iterable[Cell]) -> frozenset[Cell]:
    """Translate so that min x = min y = 0."""
    cells = list(cells)
    dx = min(c.x for c in cells)
    dy = min(c.y for c in cells)
    return frozenset(Cell(c.x - dx, c.y - dy) for c in cells)


def from_cells(cells: Iterable[tuple[int, int]]) -> Polyomino:
    """Validate and normalize a cell list into a Polyomino.

    Input order is irrelevant. Raises EmptyInput, DuplicateCell, or
    Disconnected on invalid input.
    """
    raw = [Cell(int(x), int(y)) for x, y in cells]
    if not raw:
        raise EmptyInput("a polyomino needs at least one cell")
    seen: set[Cell] = set()
    for c in raw:
        if c in seen:
            raise DuplicateCell(f"cell {tuple(c)} appears more than once")
        seen.add(c)
    cellset = frozenset(raw)
    if not is_connected(cellset):
        raise Disconnected("cells are not 4-connected")
    return Polyomino(normalize_cells(cellset))


def internal_edges(cells: frozenset[Cell]) -> Iterator[InternalEdge]:
    """Yield each shared unit boundary once (right and up neighbors)."""
    for c in cells:
        right = Cell(c.x + 1, c.y)
        if right in cells:
            yield InternalEdge(c, right)
        up = Cell(c.x, c.y + 1)
        if up in cells:
            yield InternalEdge(c, up)


def dual_graph(p: Polyomino) -> DualGraph:
    """Adjacency graph of the polyomino's cells."""
    return DualGraph(nodes=p.cells, edges=frozenset(internal_edges(p.cells)))


# The eight isometries of the square lattice, applied to a single cell.
_TRANSFORMS = (
    lambda x, y: (x, y),
    lambda x, y: (-y, x),
    lambda x, y: (-x, -y),
    lambda x, y: (y, -x),
    lambda x, y: (-x, y),
    lambda x, y: (y, x),
    lambda x, y: (x, -y),
    lambda x, y: (-y, -x),
)


def _translation_key(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    cells = list(cells)
    dx = min(c.x for c in cells)
    dy = min(c.y for c in cells)
    return tuple(sorted(Cell(c.x - dx, c.y - dy) for c in cells))


def canonical_key(
    p: Polyomino | frozenset[Cell], up_to_symmetry: bool = False
) -> tuple[Cell, ...]:
    """Comparable key, equal iff the shapes match after translation.

    With up_to_symmetry the key is additionally invariant under the eight
    rotations/reflections (the minimum translation key over the dihedral
    orbit). Accepts a raw cell set so placed dissection pieces can be keyed
    without re-validating.
    """
    cells = p.cells if isinstance(p, Polyomino) else p
    if not up_to_symmetry:
        return _translation_key(cells)
    return min(
        _translation_key(Cell(*t(c.x, c.y)) for c in cells) for t in _TRANSFORMS
    )


def enumerate_fixed(n: int, cap: int = DEFAULT_CAPS.enumeration) -> list[Polyomino]:
    """All fixed polyominoes of n cells (rotations/reflections distinct).

    Deterministic order: lexicographic on the sorted cell list. Grown by
    adding one neighbor cell at a time to every (n-1)-cell shape, deduped
    on the translation key.
    """
    if n < 1:
        raise CapExceeded(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}")
    shapes: set[tuple[Cell, ...]] = {(Cell(0, 0),)}
    for _ in range(n - 1):
        grown: set[tuple[Cell, ...]] = set()
        for shape in shapes:
            cellset = set(shape)
            for cell in shape:
                for nb in neighbors4(cell):
                    if nb in cellset:
                        continue
                    grown.add(_translation_key(cellset | {nb}))
        shapes = grown
    return [Polyomino(frozenset(key)) for key in sorted(shapes)]


def has_hole(p: Polyomino) -> bool:
    """True iff the complement inside the bounding box is not reachable
    from outside (the shape encloses at least one empty cell)."""
    w, h = p.width, p.height
    outside: set[Cell] = set()
    # Flood the complement from a rim one cell beyond the bounding box.
    stack = [Cell(-1, -1)]
    while stack:
        c = stack.pop()
        if c in outside or c in p.cells:
            continue
        if not (-1 <= c.x <= w and -1 <= c.y <= h):
            continue
        outside.add(c)
        stack.extend(neighbors4(c))
    empty_inside = w * h - p.n
    reached_inside = sum(1 for c in outside if 0 <= c.x < w and 0 <= c.y < h)
    return reached_inside < empty_inside


# --- text formats ----------------------------------------------------------

def to_ascii(p: Polyomino) -> str:
    """ASCII grid, rows top to bottom, '#' cell and '.' empty."""
    rows = []
    for y in range(p.height - 1, -1, -1):
        rows.append("".join("#" if Cell(x, y) in p.cells else "." for x in range(p.width)))
    return "\n".join(rows)


def parse_ascii(text: str) -> Polyomino:
    """Parse the to_ascii() format. Spaces count as empty; blank lines are
    ignored at the edges."""
    lines = [line.rstrip() for line in text.splitlines()]
    while lines and not lines[0].strip():
        lines.pop(0)
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise EmptyInput("no cells in ASCII input")
    cells = []
    height = len(lines)
    for i, line in enumerate(lines):
        y = height - 1 - i
        for x, ch in enumerate(line):
            if ch == "#":
                cells.append((x, y))
            elif ch not in ". ":
                raise PuzzleError(f"unexpected character {ch!r} in ASCII shape")
    return from_cells(cells)


def to_json_dict(p: Polyomino) -> dict:
    """Wire form: {"cells": [[x, y], ...]} with cells sorted."""
    return {"cells": [[c.x, c.y] for c in p.sorted_cells()]}


def parse_json_dict(obj: dict) -> Polyomino:
    cells = obj.get("cells") if isinstance(obj, dict) else None
    if not isinstance(cells, list):
        raise PuzzleError('expected an object of the form {"cells": [[x, y], ...]}')
    for pair in cells:
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in pair)
        ):
            raise PuzzleError(f"malformed cell entry {pair!r}")
    return from_cells(cells)
