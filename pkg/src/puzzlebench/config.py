"""Tunable size caps.

Defaults keep every exhaustive search at desk scale. All values are plain
configuration: each operation takes an optional cap argument that falls back
to these defaults, and the HTTP service can override via environment.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Caps:
    enumeration: int = 8      # largest n for enumerate_fixed
    per_piece_search: int = 8  # min-cut cap for SINGLE_SPLIT / FULL_LINE
    global_search: int = 6     # min-cut cap for GLOBAL_LINE
    hanoi: int = 20            # move-list cap (2^20 - 1 moves)
    queens: int = 10           # full enumeration cap
    knight_area: int = 42      # rows * cols cap for tour backtracking
    domination: int = 8        # board-size cap for queens domination


DEFAULT_CAPS = Caps()
