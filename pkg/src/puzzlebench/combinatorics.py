"""Chessboard, tower, magic-square, and linear-equation micro-solvers.

Everything here is a pure function with a hard input cap; searches are
exhaustive (or provably complete) so counts and minima are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .config import DEFAULT_CAPS
from .errors import (
    CapExceeded,
    Indeterminate,
    NoUniqueSolution,
    OffBoardStart,
    UnsupportedOrder,
)


class HanoiMove(NamedTuple):
    from_rod: int
    to_rod: int


@dataclass(frozen=True)
class BoardPlacement:
    size: int
    squares: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class KnightTour:
    rows: int
    cols: int
    path: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class MagicSquare:
    order: int
    grid: tuple[tuple[int, ...], ...]


# --- tower of hanoi -----------------------------------------------------------

def hanoi(n: int, cap: int = DEFAULT_CAPS.hanoi) -> tuple[list[HanoiMove], int]:
    """Optimal move list shifting n disks from rod 0 to rod 2, with count 2^n - 1."""
    if n < 0:
        raise CapExceeded(f"n must be >= 0, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the move-list cap {cap}")
    moves: list[HanoiMove] = []

    def solve(k: int, src: int, dst: int, via: int) -> None:
        if k == 0:
            return
        solve(k - 1, src, via, dst)
        moves.append(HanoiMove(src, dst))
        solve(k - 1, via, dst, src)

    solve(n, 0, 2, 1)
    return moves, len(moves)


def validate_hanoi(n: int, moves: list[HanoiMove]) -> bool:
    """Replay moves from all-disks-on-rod-0; True iff legal throughout and
    every disk ends on rod 2. Disk k sits under nothing smaller than k."""
    rods: list[list[int]] = [list(range(n, 0, -1)), [], []]
    for move in moves:
        if move.from_rod == move.to_rod:
            return False
        if not 0 <= move.from_rod <= 2 or not 0 <= move.to_rod <= 2:
            return False
        if not rods[move.from_rod]:
            return False
        disk = rods[move.from_rod][-1]
        if rods[move.to_rod] and rods[move.to_rod][-1] < disk:
            return False
        rods[move.from_rod].pop()
        rods[move.to_rod].append(disk)
    return not rods[0] and not rods[1] and rods[2] == list(range(n, 0, -1))


# --- n queens -----------------------------------------------------------------

def is_nonattacking(placement: BoardPlacement) -> bool:
    """Pairwise check: no shared row, column, or diagonal."""
    squares = placement.squares
    for i in range(len(squares)):
        r1, c1 = squares[i]
        for j in range(i + 1, len(squares)):
            r2, c2 = squares[j]
            if r1 == r2 or c1 == c2 or abs(r1 - r2) == abs(c1 - c2):
                return False
    return True


def queens(n: int, cap: int = DEFAULT_CAPS.queens) -> tuple[int, list[BoardPlacement]]:
    """All placements of n non-attacking queens on an n x n board.

    Row-by-row backtracking; solutions come out in lexicographic column
    order, one queen per row.
    """
    if n < 1:
        raise CapExceeded(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}")
    solutions: list[BoardPlacement] = []
    cols: list[int] = []
    used_cols: set[int] = set()
    used_diag: set[int] = set()
    used_anti: set[int] = set()

    def place(row: int) -> None:
        if row == n:
            squares = tuple((r, c) for r, c in enumerate(cols))
            solutions.append(BoardPlacement(size=n, squares=squares))
            return
        for col in range(n):
            if col in used_cols or row - col in used_diag or row + col in used_anti:
                continue
            cols.append(col)
            used_cols.add(col)
            used_diag.add(row - col)
            used_anti.add(row + col)
            place(row + 1)
            cols.pop()
            used_cols.remove(col)
            used_diag.remove(row - col)
            used_anti.remove(row + col)

    place(0)
    return len(solutions), solutions


# --- knight's tour ------------------------------------------------------------

_KNIGHT_DELTAS = (
    (-2, -1), (-2, 1), (-1, -2), (-1, 2),
    (1, -2), (1, 2), (2, -1), (2, 1),
)


def knight_tour(
    rows: int,
    cols: int,
    start: tuple[int, int],
    cap: int = DEFAULT_CAPS.knight_area,
) -> KnightTour | None:
    """An open tour from start visiting every square once, or None.

    Backtracking with Warnsdorff move ordering (fewest onward moves first);
    the ordering is a heuristic only, the search stays complete, so None
    means no tour exists from this start.
    """
    if rows < 1 or cols < 1 or rows * cols > cap:
        raise CapExceeded(f"board {rows}x{cols} outside the area cap {cap}")
    if not (0 <= start[0] < rows and 0 <= start[1] < cols):
        raise OffBoardStart(f"start {start} off the {rows}x{cols} board")

    total = rows * cols
    visited = [[False] * cols for _ in range(rows)]
    path: list[tuple[int, int]] = [start]
    visited[start[0]][start[1]] = True

    def onward(r: int, c: int) -> list[tuple[int, int]]:
        return [
            (r + dr, c + dc)
            for dr, dc in _KNIGHT_DELTAS
            if 0 <= r + dr < rows and 0 <= c + dc < cols and not visited[r + dr][c + dc]
        ]

    def extend() -> bool:
        if len(path) == total:
            return True
        r, c = path[-1]
        candidates = sorted(onward(r, c), key=lambda sq: (len(onward(*sq)), sq))
        for nr, nc in candidates:
            visited[nr][nc] = True
            path.append((nr, nc))
            if extend():
                return True
            path.pop()
            visited[nr][nc] = False
        return False

    if extend():
        return KnightTour(rows=rows, cols=cols, path=tuple(path))
    return None


def validate_knight_tour(tour: KnightTour) -> bool:
    """True iff the path covers the board exactly once in legal knight moves."""
    squares = set(tour.path)
    if len(squares) != len(tour.path) or len(squares) != tour.rows * tour.cols:
        return False
    if not all(0 <= r < tour.rows and 0 <= c < tour.cols for r, c in tour.path):
        return False
    for (r1, c1), (r2, c2) in zip(tour.path, tour.path[1:]):
        if {abs(r1 - r2), abs(c1 - c2)} != {1, 2}:
            return False
    return True


# --- queens domination --------------------------------------------------------

def _queen_cover_masks(n: int) -> list[int]:
    """masks[i] = bitboard of squares occupied or attacked by a queen on i."""
    masks = []
    for r in range(n):
        for c in range(n):
            mask = 0
            for rr in range(n):
                for cc in range(n):
                    if rr == r or cc == c or abs(rr - r) == abs(cc - c):
                        mask |= 1 << (rr * n + cc)
            masks.append(mask)
    return masks


def covers_board(n: int, placement: BoardPlacement) -> bool:
    """True iff every square is occupied or attacked by the placement."""
    masks = _queen_cover_masks(n)
    covered = 0
    for r, c in placement.squares:
        covered |= masks[r * n + c]
    return covered == (1 << (n * n)) - 1


def queens_domination(n: int, cap: int = DEFAULT_CAPS.domination) -> tuple[int, BoardPlacement]:
    """Minimal k queens covering the whole n x n board, with a witness.

    Increasing-k search, so the first k that covers is minimal. Within a k
    the search branches on the first uncovered square: some queen must
    cover it, and candidates already refuted at this node are banned from
    the subtree, which prunes permuted duplicates without losing covers.
    """
    if n < 1:
        raise CapExceeded(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the combination-search cap {cap}")
    masks = _queen_cover_masks(n)
    full = (1 << (n * n)) - 1

    def search(covered: int, chosen: list[int], k: int, banned: set[int]) -> list[int] | None:
        if covered == full:
            return chosen
        if len(chosen) == k:
            return None
        first_uncovered = (~covered & full).bit_length() - 1
        # Only queens covering the first uncovered square can help it.
        local_banned = set(banned)
        for sq in range(n * n):
            if sq in local_banned or not masks[sq] >> first_uncovered & 1:
                continue
            result = search(covered | masks[sq], chosen + [sq], k, local_banned)
            if result is not None:
                return result
            local_banned.add(sq)
        return None

    for k in range(1, n * n + 1):
        found = search(0, [], k, set())
        if found is not None:
            squares = tuple(sorted((sq // n, sq % n) for sq in found))
            return k, BoardPlacement(size=n, squares=squares)
    raise AssertionError("unreachable: n queens always cover an n x n board")


# --- magic squares ------------------------------------------------------------

def magic_squares(order: int) -> list[MagicSquare]:
    """All magic squares of the given order over 1..order^2 (order 3 only).

    Cell-by-cell backtracking in row-major order, pruning each row, column,
    and diagonal as soon as its last cell is filled. Output order follows
    the search, which is lexicographic in the flattened grid.
    """
    if order != 3:
        raise UnsupportedOrder(f"only order 3 is supported, got {order}")
    target = 15
    squares: list[MagicSquare] = []
    flat: list[int] = []
    free = set(range(1, 10))

    def line_ok(values: tuple[int, int, int]) -> bool:
        return sum(values) == target

    def fill(pos: int) -> None:
        if pos == 9:
            g = (tuple(flat[0:3]), tuple(flat[3:6]), tuple(flat[6:9]))
            squares.append(MagicSquare(order=3, grid=g))
            return
        row, col = divmod(pos, 3)
        for v in sorted(free):
            flat.append(v)
            free.remove(v)
            ok = True
            if col == 2 and not line_ok((flat[3 * row], flat[3 * row + 1], v)):
                ok = False
            if ok and row == 2:
                if not line_ok((flat[col], flat[col + 3], v)):
                    ok = False
                elif col == 2 and not line_ok((flat[0], flat[4], v)):
                    ok = False
                elif col == 0 and not line_ok((flat[2], flat[4], v)):
                    ok = False
            if ok:
                fill(pos + 1)
            flat.pop()
            free.add(v)

    fill(0)
    return squares


# --- one linear equation ------------------------------------------------------

def solve_linear(a: Fraction | int, b: Fraction | int, c: Fraction | int) -> Fraction:
    """The x with a*x + b = c."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        if b == c:
            raise Indeterminate("every x solves 0*x + b = b")
        raise NoUniqueSolution(f"no x solves 0*x + {b} = {c}")
    return (c - b) / a
