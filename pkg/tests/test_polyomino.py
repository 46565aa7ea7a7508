"""Polyomino construction, enumeration, canonical keys, and formats."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from puzzlebench import (
    Cell,
    CapExceeded,
    Disconnected,
    DuplicateCell,
    EmptyInput,
    Polyomino,
    PuzzleError,
    canonical_key,
    dual_graph,
    enumerate_fixed,
    from_cells,
    has_hole,
    parse_ascii,
    parse_json_dict,
    to_ascii,
    to_json_dict,
)

#: Fixed (translation-distinct) polyomino counts, n = 1..8.
FIXED_COUNTS = [1, 2, 6, 19, 63, 216, 760, 2725]
#: Free (up to the dihedral group) polyomino counts, n = 1..7.
FREE_COUNTS = [1, 1, 2, 5, 12, 35, 108]

RING8 = [(x, y) for x in range(3) for y in range(3) if (x, y) != (1, 1)]
RING7 = [c for c in RING8 if c != (0, 0)]


def grow_random(n: int, seed: int) -> Polyomino:
    """A random n-cell polyomino grown cell by cell."""
    rng = random.Random(seed)
    cells = {Cell(0, 0)}
    while len(cells) < n:
        frontier = sorted(
            {
                nb
                for c in cells
                for nb in (
                    Cell(c.x + 1, c.y),
                    Cell(c.x - 1, c.y),
                    Cell(c.x, c.y + 1),
                    Cell(c.x, c.y - 1),
                )
            }
            - cells
        )
        cells.add(rng.choice(frontier))
    return from_cells(cells)


class TestFromCells:
    def test_normalizes_translation(self):
        p = from_cells([Cell(5, 7), Cell(6, 7)])
        assert p.sorted_cells() == [Cell(0, 0), Cell(1, 0)]

    def test_rejects_empty(self):
        with pytest.raises(EmptyInput):
            from_cells([])

    def test_rejects_duplicates(self):
        with pytest.raises(DuplicateCell):
            from_cells([Cell(0, 0), Cell(0, 0)])

    def test_rejects_disconnected(self):
        with pytest.raises(Disconnected):
            from_cells([Cell(0, 0), Cell(2, 0)])

    def test_diagonal_is_not_connected(self):
        with pytest.raises(Disconnected):
            from_cells([Cell(0, 0), Cell(1, 1)])

    def test_dimensions(self):
        p = from_cells([Cell(0, 0), Cell(1, 0), Cell(0, 1)])
        assert (p.n, p.width, p.height) == (3, 2, 2)


class TestEnumeration:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_fixed_counts(self, n):
        assert len(enumerate_fixed(n)) == FIXED_COUNTS[n - 1]

    def test_fixed_counts_n7(self):
        assert len(enumerate_fixed(7)) == FIXED_COUNTS[6]

    def test_all_distinct_and_normalized(self):
        shapes = enumerate_fixed(5)
        keys = {p.cells for p in shapes}
        assert len(keys) == len(shapes)
        for p in shapes:
            assert min(c.x for c in p.cells) == 0
            assert min(c.y for c in p.cells) == 0

    def test_deterministic_order(self):
        assert enumerate_fixed(4) == enumerate_fixed(4)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            enumerate_fixed(9)
        assert len(enumerate_fixed(9, cap=9)) == 9910

    @pytest.mark.parametrize("n", range(1, 8))
    def test_symmetry_folding_gives_free_counts(self, n):
        folded = {canonical_key(p, up_to_symmetry=True) for p in enumerate_fixed(n)}
        assert len(folded) == FREE_COUNTS[n - 1]


class TestCanonicalKey:
    def test_translation_invariance(self):
        a = canonical_key(frozenset({Cell(0, 0), Cell(1, 0)}))
        b = canonical_key(frozenset({Cell(4, 9), Cell(5, 9)}))
        assert a == b

    def test_rotation_changes_translation_key(self):
        row = from_cells([Cell(0, 0), Cell(1, 0)])
        col = from_cells([Cell(0, 0), Cell(0, 1)])
        assert canonical_key(row) != canonical_key(col)
        assert canonical_key(row, up_to_symmetry=True) == canonical_key(col, up_to_symmetry=True)

    @given(st.integers(1, 8), st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_symmetry_key_invariant_under_transforms(self, n, seed):
        p = grow_random(n, seed)
        key = canonical_key(p, up_to_symmetry=True)
        flipped = from_cells([Cell(-c.x, c.y) for c in p.cells])
        rotated = from_cells([Cell(-c.y, c.x) for c in p.cells])
        assert canonical_key(flipped, up_to_symmetry=True) == key
        assert canonical_key(rotated, up_to_symmetry=True) == key


class TestDualGraph:
    def test_domino(self):
        g = dual_graph(from_cells([Cell(0, 0), Cell(1, 0)]))
        assert len(g.nodes) == 2 and len(g.edges) == 1

    def test_square_has_cycle(self):
        g = dual_graph(from_cells([Cell(0, 0), Cell(1, 0), Cell(0, 1), Cell(1, 1)]))
        assert len(g.nodes) == 4 and len(g.edges) == 4

    @given(st.integers(1, 8), st.integers(0, 10_000))
    @settings(max_examples=40, deadline=None)
    def test_edge_count_bounds(self, n, seed):
        p = grow_random(n, seed)
        g = dual_graph(p)
        # Connected, so at least a spanning tree; at most 2 bonds per cell.
        assert n - 1 <= len(g.edges) <= 2 * n


class TestHoles:
    def test_solid_shapes_have_none(self):
        assert not has_hole(from_cells([Cell(0, 0)]))
        assert not has_hole(from_cells([Cell(x, y) for x in range(3) for y in range(3)]))
        assert not has_hole(from_cells([Cell(0, 0), Cell(1, 0), Cell(2, 0), Cell(0, 1), Cell(2, 1)]))

    def test_ring_of_eight(self):
        assert has_hole(from_cells([Cell(x, y) for x, y in RING8]))

    def test_seven_cell_ring(self):
        assert has_hole(from_cells([Cell(x, y) for x, y in RING7]))

    def test_hole_counts_at_n7(self):
        holey = [p for p in enumerate_fixed(7) if has_hole(p)]
        # The 7-cell ring is the unique free holey heptomino; 4 fixed forms.
        assert len(holey) == 4


class TestAsciiFormat:
    def test_round_trip(self):
        text = "#.#\n###"
        p = parse_ascii(text)
        assert to_ascii(p) == text

    def test_first_row_is_top(self):
        p = parse_ascii("#.\n##")
        assert Cell(1, 1) not in p.cells
        assert Cell(0, 1) in p.cells

    def test_rejects_garbage(self):
        with pytest.raises(PuzzleError):
            parse_ascii("#x")

    @given(st.integers(1, 8), st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_round_trip_random(self, n, seed):
        p = grow_random(n, seed)
        assert parse_ascii(to_ascii(p)) == p


class TestJsonFormat:
    def test_round_trip(self):
        p = from_cells([Cell(0, 0), Cell(1, 0), Cell(1, 1)])
        assert parse_json_dict(to_json_dict(p)) == p

    def test_sorted_output(self):
        p = from_cells([Cell(1, 1), Cell(1, 0), Cell(0, 0)])
        assert to_json_dict(p) == {"cells": [[0, 0], [1, 0], [1, 1]]}

    def test_rejects_malformed(self):
        with pytest.raises(PuzzleError):
            parse_json_dict({"cells": [[0]]})
        with pytest.raises(PuzzleError):
            parse_json_dict({})
        with pytest.raises(PuzzleError):
            parse_json_dict({"cells": "nope"})

    @given(st.integers(1, 8), st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_round_trip_random(self, n, seed):
        p = grow_random(n, seed)
        assert parse_json_dict(to_json_dict(p)) == p
