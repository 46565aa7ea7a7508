"""Straight-line cuts over polyominoes and exact minimum-cut search.

Three cut models are supported:

* SINGLE_SPLIT - a cut targets one piece and must split it into exactly two
  connected components. Every cut adds exactly one piece.
* FULL_LINE - a cut targets one piece and runs all the way across it along
  one grid line, severing every internal boundary it crosses. It may shatter
  the piece into three or more components at once.
* GLOBAL_LINE - a cut is one infinite grid line applied to all pieces in
  place simultaneously; every intersected piece is severed along the line.

Pieces keep their absolute grid coordinates for the whole dissection; they
are never translated, rotated, or stacked. Cuts lie on grid lines only, and
a cut is legal only if it strictly increases the piece count.

Cut identity is semantic: two segments on the same line severing the same
set of internal boundaries are the same cut, represented canonically by the
minimal span covering the severed boundaries.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .config import DEFAULT_CAPS
from .errors import CapExceeded, IllegalCut, PuzzleError, WrongModel
from .polyomino import (
    Cell,
    Polyomino,
    canonical_key,
    enumerate_fixed,
    to_ascii,
)


class CutModel(enum.Enum):
    SINGLE_SPLIT = "SINGLE_SPLIT"
    FULL_LINE = "FULL_LINE"
    GLOBAL_LINE = "GLOBAL_LINE"


class Axis(enum.Enum):
    HORIZONTAL = "H"
    VERTICAL = "V"


GLOBAL_TARGET = "GLOBAL"

#: Default search caps per model (per-piece models share one cap).
_MODEL_CAP = {
    CutModel.SINGLE_SPLIT: DEFAULT_CAPS.per_piece_search,
    CutModel.FULL_LINE: DEFAULT_CAPS.per_piece_search,
    CutModel.GLOBAL_LINE: DEFAULT_CAPS.global_search,
}


@dataclass(frozen=True, order=True)
class CutSegment:
    """A straight severing segment on one grid line.

    For axis H the segment lies on the horizontal line y = line and spans
    x in [span[0], span[1]]; it severs the boundary under cell (x, line)
    for every x with span[0] <= x < span[1] where (x, line-1) is a
    neighbor. Axis V is symmetric with x and y swapped. target names the
    piece being cut, or "GLOBAL" under GLOBAL_LINE.
    """

    target: str
    axis: Axis
    line: int
    span: tuple[int, int]

    def to_wire(self) -> dict:
        return {
            "target": self.target,
            "axis": self.axis.value,
            "line": self.line,
            "span": [self.span[0], self.span[1]],
        }

    @classmethod
    def from_wire(cls, obj: dict) -> "CutSegment":
        try:
            axis = Axis(obj["axis"])
            lo, hi = obj["span"]
            return cls(
                target=str(obj["target"]),
                axis=axis,
                line=int(obj["line"]),
                span=(int(lo), int(hi)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise PuzzleError(f"malformed cut object: {obj!r}") from exc


@dataclass(frozen=True)
class DissectionState:
    """Placed pieces plus cut history. Immutable; apply_cut returns a new one."""

    model: CutModel
    pieces: Mapping[str, frozenset[Cell]]
    history: tuple[CutSegment, ...] = ()
    next_piece_id: int = 2

    @property
    def total_cells(self) -> int:
        return sum(len(cells) for cells in self.pieces.values())

    def piece_ids(self) -> list[str]:
        return sorted(self.pieces, key=_piece_id_index)


@dataclass(frozen=True)
class MinCutResult:
    count: int
    witness: tuple[CutSegment, ...]


def _piece_id_index(pid: str) -> int:
    return int(pid[1:])


def initial_state(p: Polyomino, model: CutModel) -> DissectionState:
    return DissectionState(model=model, pieces={"p1": p.cells})


def is_finished(state: DissectionState) -> bool:
    return all(len(cells) == 1 for cells in state.pieces.values())


# --- boundary bookkeeping ---------------------------------------------------

def _boundaries(cells: frozenset[Cell]) -> dict[tuple[Axis, int], list[int]]:
    """Internal boundaries grouped by grid line.

    Key (axis, line); value = sorted positions. Position p on a horizontal
    line y = line is the boundary between (p, line-1) and (p, line); on a
    vertical line x = line, between (line-1, p) and (line, p).
    """
    lines: dict[tuple[Axis, int], list[int]] = {}
    for c in cells:
        if Cell(c.x + 1, c.y) in cells:
            lines.setdefault((Axis.VERTICAL, c.x + 1), []).append(c.y)
        if Cell(c.x, c.y + 1) in cells:
            lines.setdefault((Axis.HORIZONTAL, c.y + 1), []).append(c.x)
    for positions in lines.values():
        positions.sort()
    return lines


def _edge_at(axis: Axis, line: int, pos: int) -> frozenset[Cell]:
    """The severed cell pair for boundary `pos` on (axis, line)."""
    if axis is Axis.VERTICAL:
        return frozenset((Cell(line - 1, pos), Cell(line, pos)))
    return frozenset((Cell(pos, line - 1), Cell(pos, line)))


def _components(
    cells: frozenset[Cell], severed: frozenset[frozenset[Cell]]
) -> list[frozenset[Cell]]:
    """Connected components of `cells` after removing the severed bonds."""
    remaining = set(cells)
    comps: list[frozenset[Cell]] = []
    while remaining:
        start = remaining.pop()
        comp = {start}
        queue = deque([start])
        while queue:
            c = queue.popleft()
            for nb in (
                Cell(c.x + 1, c.y),
                Cell(c.x - 1, c.y),
                Cell(c.x, c.y + 1),
                Cell(c.x, c.y - 1),
            ):
                if nb in remaining and frozenset((c, nb)) not in severed:
                    remaining.remove(nb)
                    comp.add(nb)
                    queue.append(nb)
        comps.append(frozenset(comp))
    return sorted(comps, key=lambda comp: min(comp))


@dataclass(frozen=True)
class _PieceCut:
    """A legal cut on one piece, before piece ids are attached."""

    axis: Axis
    line: int
    span: tuple[int, int]
    severed: frozenset[frozenset[Cell]]
    parts: tuple[frozenset[Cell], ...]


def _piece_cuts(cells: frozenset[Cell], model: CutModel) -> list[_PieceCut]:
    """Legal cuts of a single piece under SINGLE_SPLIT or FULL_LINE.

    SINGLE_SPLIT enumerates every contiguous subsequence of the boundary
    positions on each line (a straight segment cannot skip a boundary it
    passes over) and keeps those that split the piece into exactly two
    components. FULL_LINE has exactly one candidate per line: all of its
    boundaries, which always disconnects. Deterministic order.
    """
    cuts: list[_PieceCut] = []
    lines = _boundaries(cells)
    for (axis, line), positions in sorted(lines.items(), key=lambda kv: (kv[0][0].value, kv[0][1])):
        if model is CutModel.FULL_LINE:
            spans = [(0, len(positions) - 1)]
        else:
            m = len(positions)
            spans = [(i, j) for i in range(m) for j in range(i, m)]
        for i, j in spans:
            chosen = positions[i : j + 1]
            severed = frozenset(_edge_at(axis, line, p) for p in chosen)
            parts = _components(cells, severed)
            if model is CutModel.SINGLE_SPLIT and len(parts) != 2:
                continue
            cuts.append(
                _PieceCut(
                    axis=axis,
                    line=line,
                    span=(chosen[0], chosen[-1] + 1),
                    severed=severed,
                    parts=tuple(parts),
                )
            )
    return cuts


def _global_lines(state: DissectionState) -> list[tuple[Axis, int]]:
    lines: set[tuple[Axis, int]] = set()
    for cells in state.pieces.values():
        lines.update(_boundaries(cells))
    return sorted(lines, key=lambda al: (al[0].value, al[1]))


def _global_cut_segment(state: DissectionState, axis: Axis, line: int) -> CutSegment:
    """Canonical GLOBAL cut for a line: span covers all severed boundaries."""
    positions: list[int] = []
    for cells in state.pieces.values():
        positions.extend(_boundaries(cells).get((axis, line), ()))
    if not positions:
        raise IllegalCut(f"line {axis.value}={line} severs nothing")
    return CutSegment(
        target=GLOBAL_TARGET,
        axis=axis,
        line=line,
        span=(min(positions), max(positions) + 1),
    )


# --- the public move interface ----------------------------------------------

def legal_cuts(state: DissectionState) -> list[CutSegment]:
    """All admissible cuts of the state under its model, deterministic order."""
    if state.model is CutModel.GLOBAL_LINE:
        return [_global_cut_segment(state, axis, line) for axis, line in _global_lines(state)]
    cuts: list[CutSegment] = []
    for pid in state.piece_ids():
        for pc in _piece_cuts(state.pieces[pid], state.model):
            cuts.append(CutSegment(target=pid, axis=pc.axis, line=pc.line, span=pc.span))
    return cuts


def _severed_in_span(
    cells: frozenset[Cell], axis: Axis, line: int, span: tuple[int, int]
) -> frozenset[frozenset[Cell]]:
    positions = _boundaries(cells).get((axis, line), [])
    lo, hi = span
    return frozenset(_edge_at(axis, line, p) for p in positions if lo <= p and p + 1 <= hi)


def apply_cut(state: DissectionState, cut: CutSegment) -> DissectionState:
    """Apply a legal cut and return the successor state.

    Cut identity is semantic: the supplied span is matched by the set of
    boundaries it severs, so a span wider than the canonical one is accepted
    as the same cut. Raises WrongModel for a target/model mismatch and
    IllegalCut (carrying the legal alternatives) otherwise.
    """
    if cut.span[0] >= cut.span[1]:
        raise IllegalCut(f"empty span {cut.span}", legal_cuts(state))

    if state.model is CutModel.GLOBAL_LINE:
        if cut.target != GLOBAL_TARGET:
            raise WrongModel("GLOBAL_LINE cuts must target GLOBAL")
        canonical = _global_cut_segment(state, cut.axis, cut.line)
        lo, hi = cut.span
        if not (lo <= canonical.span[0] and canonical.span[1] <= hi):
            # Partial global spans are not a thing: the line is infinite.
            raise IllegalCut(
                f"global cut span {cut.span} does not cover the line's boundaries",
                legal_cuts(state),
            )
        pieces: dict[str, frozenset[Cell]] = {}
        next_id = state.next_piece_id
        changed = False
        for pid in state.piece_ids():
            cells = state.pieces[pid]
            severed = _severed_in_span(cells, cut.axis, cut.line, canonical.span)
            if not severed:
                pieces[pid] = cells
                continue
            changed = True
            for part in _components(cells, severed):
                pieces[f"p{next_id}"] = part
                next_id += 1
        if not changed:
            raise IllegalCut("cut severs no internal boundary", legal_cuts(state))
        return DissectionState(
            model=state.model,
            pieces=pieces,
            history=state.history + (canonical,),
            next_piece_id=next_id,
        )

    if cut.target == GLOBAL_TARGET:
        raise WrongModel(f"{state.model.value} cuts must target a piece")
    if cut.target not in state.pieces:
        raise IllegalCut(f"no piece {cut.target!r}", legal_cuts(state))
    cells = state.pieces[cut.target]
    severed = _severed_in_span(cells, cut.axis, cut.line, cut.span)
    if not severed:
        raise IllegalCut("cut severs no internal boundary", legal_cuts(state))
    for pc in _piece_cuts(cells, state.model):
        if pc.severed == severed:
            break
    else:
        raise IllegalCut(
            f"cut {cut.to_wire()} is not legal under {state.model.value}",
            legal_cuts(state),
        )
    pieces = {pid: c for pid, c in state.pieces.items() if pid != cut.target}
    next_id = state.next_piece_id
    for part in pc.parts:
        pieces[f"p{next_id}"] = part
        next_id += 1
    canonical = CutSegment(target=cut.target, axis=pc.axis, line=pc.line, span=pc.span)
    return DissectionState(
        model=state.model,
        pieces=pieces,
        history=state.history + (canonical,),
        next_piece_id=next_id,
    )


# --- lower bound and greedy construction --------------------------------------

def single_split_lower_bound(p: Polyomino) -> int:
    """n - 1: each cut adds at most one piece and n pieces are needed."""
    return p.n - 1


def _leaf_cut(pid: str, cell: Cell, neighbor: Cell) -> CutSegment:
    """The straight cut detaching a degree-1 cell from its only neighbor."""
    if neighbor.x != cell.x:
        line = max(cell.x, neighbor.x)
        return CutSegment(target=pid, axis=Axis.VERTICAL, line=line, span=(cell.y, cell.y + 1))
    line = max(cell.y, neighbor.y)
    return CutSegment(target=pid, axis=Axis.HORIZONTAL, line=line, span=(cell.x, cell.x + 1))


def greedy_dissect(p: Polyomino) -> list[CutSegment]:
    """A SINGLE_SPLIT sequence of exactly n - 1 cuts ending in unit squares.

    Strategy: detach an end square whenever some piece has a cell with a
    single neighbor (the lexicographically smallest such cell wins). A
    straight cut can only detach degree-1 cells, so leafless pieces (the
    2x2 square, rings) instead take their first legal split; every cut
    still adds exactly one piece, so the total stays n - 1.
    """
    state = initial_state(p, CutModel.SINGLE_SPLIT)
    cuts: list[CutSegment] = []
    while not is_finished(state):
        leaf: tuple[Cell, Cell, str] | None = None
        for pid in state.piece_ids():
            cells = state.pieces[pid]
            if len(cells) < 2:
                continue
            for c in sorted(cells):
                nbs = [
                    nb
                    for nb in (
                        Cell(c.x + 1, c.y),
                        Cell(c.x - 1, c.y),
                        Cell(c.x, c.y + 1),
                        Cell(c.x, c.y - 1),
                    )
                    if nb in cells
                ]
                if len(nbs) == 1 and (leaf is None or c < leaf[0]):
                    leaf = (c, nbs[0], pid)
        if leaf is not None:
            cut = _leaf_cut(leaf[2], leaf[0], leaf[1])
        else:
            cut = next(
                c for c in legal_cuts(state) if len(state.pieces[c.target]) > 1
            )
        state = apply_cut(state, cut)
        cuts.append(state.history[-1])
    return cuts


# --- exact minimum search -----------------------------------------------------

# Shared memo of per-piece minima, keyed by (model, symmetry-folded shape).
# Inserts are idempotent, so concurrent readers/writers are benign.
_piece_min_memo: dict[tuple[CutModel, tuple[Cell, ...]], int] = {}


def clear_memo() -> None:
    """Drop the per-piece memo (tests use this to measure cold runs)."""
    _piece_min_memo.clear()


def _piece_min(cells: frozenset[Cell], model: CutModel) -> int:
    """Exact minimum cuts to reduce one piece to unit squares (per-piece models).

    Symmetry folding is value-preserving: cut minima are invariant under
    the dihedral group, so the memo key uses the folded canonical form.
    """
    if len(cells) == 1:
        return 0
    key = (model, canonical_key(cells, up_to_symmetry=True))
    cached = _piece_min_memo.get(key)
    if cached is not None:
        return cached
    best: int | None = None
    for pc in _piece_cuts(cells, model):
        total = 1 + sum(_piece_min(part, model) for part in pc.parts)
        if best is None or total < best:
            best = total
    if best is None:
        raise PuzzleError("piece admits no legal cut; model cannot finish")
    _piece_min_memo[key] = best
    return best


def _global_min_moves(state: DissectionState) -> list[tuple[Axis, int]]:
    """Shortest line sequence finishing a GLOBAL_LINE state, by BFS.

    States are frozensets of placed pieces; pieces interact through shared
    lines, so whole states are searched rather than pieces.
    """

    def freeze(st: DissectionState) -> frozenset[frozenset[Cell]]:
        return frozenset(st.pieces.values())

    start = freeze(state)
    if is_finished(state):
        return []
    parent: dict[frozenset, tuple[frozenset, tuple[Axis, int]]] = {}
    seen = {start}
    queue = deque([(start, state)])
    while queue:
        key, st = queue.popleft()
        for axis, line in _global_lines(st):
            nxt = apply_cut(st, _global_cut_segment(st, axis, line))
            nkey = freeze(nxt)
            if nkey in seen:
                continue
            seen.add(nkey)
            parent[nkey] = (key, (axis, line))
            if is_finished(nxt):
                moves: list[tuple[Axis, int]] = []
                cur = nkey
                while cur != start:
                    cur, move = parent[cur]
                    moves.append(move)
                moves.reverse()
                return moves
            queue.append((nkey, nxt))
    raise PuzzleError("GLOBAL_LINE search exhausted without finishing")


def min_cut_count(
    p: Polyomino, model: CutModel, cap: int | None = None
) -> int:
    """Exact minimum cut count, without building a witness."""
    cap = _MODEL_CAP[model] if cap is None else cap
    if p.n > cap:
        raise CapExceeded(f"n={p.n} exceeds the {model.value} search cap {cap}")
    if model is CutModel.GLOBAL_LINE:
        return len(_global_min_moves(initial_state(p, model)))
    return _piece_min(p.cells, model)


def min_cuts(p: Polyomino, model: CutModel, cap: int | None = None) -> MinCutResult:
    """Exact minimum cuts with a replayable witness sequence.

    Per-piece models use memoized recursion over symmetry-folded piece keys
    (separated pieces are independent); GLOBAL_LINE uses breadth-first
    search over whole states. The witness replays from initial_state(p,
    model) to all unit squares in exactly `count` cuts.
    """
    count = min_cut_count(p, model, cap)
    state = initial_state(p, model)
    witness: list[CutSegment] = []

    if model is CutModel.GLOBAL_LINE:
        for axis, line in _global_min_moves(state):
            state = apply_cut(state, _global_cut_segment(state, axis, line))
            witness.append(state.history[-1])
        return MinCutResult(count=count, witness=tuple(witness))

    while not is_finished(state):
        pid = next(
            pid for pid in state.piece_ids() if len(state.pieces[pid]) > 1
        )
        cells = state.pieces[pid]
        target_min = _piece_min(cells, model)
        for pc in _piece_cuts(cells, model):
            if 1 + sum(_piece_min(part, model) for part in pc.parts) == target_min:
                cut = CutSegment(target=pid, axis=pc.axis, line=pc.line, span=pc.span)
                break
        else:  # pragma: no cover - _piece_min guarantees a witness cut
            raise PuzzleError("no optimal cut found during witness replay")
        state = apply_cut(state, cut)
        witness.append(state.history[-1])
    if len(witness) != count:  # pragma: no cover - consistency guard
        raise PuzzleError("witness length disagrees with the computed minimum")
    return MinCutResult(count=count, witness=tuple(witness))


def hint(state: DissectionState, cap: int | None = None) -> int:
    """Exact minimum number of additional cuts to finish from `state`."""
    cap = _MODEL_CAP[state.model] if cap is None else cap
    if state.total_cells > cap:
        raise CapExceeded(
            f"{state.total_cells} cells exceed the {state.model.value} search cap {cap}"
        )
    if state.model is CutModel.GLOBAL_LINE:
        return len(_global_min_moves(state))
    return sum(_piece_min(cells, state.model) for cells in state.pieces.values())


# --- conjecture survey --------------------------------------------------------

@dataclass(frozen=True)
class SurveyRow:
    n: int
    shape_key: str
    min_cuts: int
    n_minus_1: int
    matches: bool


@dataclass(frozen=True)
class SurveyAggregate:
    n: int
    shapes: int
    matching: int
    mismatching: int


@dataclass(frozen=True)
class SurveyReport:
    model: CutModel
    rows: tuple[SurveyRow, ...]
    aggregates: tuple[SurveyAggregate, ...] = field(default=())

    def mismatches(self) -> list[SurveyRow]:
        return [r for r in self.rows if not r.matches]

    def to_csv(self) -> str:
        lines = ["n,shape_key,min_cuts,n_minus_1,matches"]
        for r in self.rows:
            lines.append(
                f"{r.n},{r.shape_key},{r.min_cuts},{r.n_minus_1},{str(r.matches).lower()}"
            )
        return "\n".join(lines) + "\n"


def shape_key_text(p: Polyomino) -> str:
    """Compact one-line shape key: ASCII rows joined by '/'."""
    return to_ascii(p).replace("\n", "/")


def _survey_shape(args: tuple[tuple[Cell, ...], str, int]) -> SurveyRow:
    cells, model_name, cap = args
    p = Polyomino(frozenset(cells))
    model = CutModel(model_name)
    count = min_cut_count(p, model, cap)
    return SurveyRow(
        n=p.n,
        shape_key=shape_key_text(p),
        min_cuts=count,
        n_minus_1=p.n - 1,
        matches=count == p.n - 1,
    )


def survey_conjecture(
    n_max: int,
    model: CutModel,
    cap: int | None = None,
    enumeration_cap: int = DEFAULT_CAPS.enumeration,
    jobs: int = 1,
) -> SurveyReport:
    """min_cuts versus n - 1 for every fixed polyomino with n <= n_max.

    Rows keep enumeration order; aggregates count matches per n. With
    jobs > 1 shapes fan out to worker processes and are merged back in
    deterministic order (results are order-independent).
    """
    cap = _MODEL_CAP[model] if cap is None else cap
    if n_max > min(cap, enumeration_cap):
        raise CapExceeded(
            f"n_max={n_max} exceeds cap {min(cap, enumeration_cap)} for {model.value}"
        )
    tasks: list[tuple[tuple[Cell, ...], str, int]] = []
    for n in range(1, n_max + 1):
        for p in enumerate_fixed(n, cap=enumeration_cap):
            tasks.append((tuple(p.sorted_cells()), model.value, cap))
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            rows = pool.map(_survey_shape, tasks)
    else:
        rows = [_survey_shape(t) for t in tasks]
    rows.sort(key=lambda r: (r.n, r.shape_key))
    aggregates = []
    for n in range(1, n_max + 1):
        group = [r for r in rows if r.n == n]
        matching = sum(1 for r in group if r.matches)
        aggregates.append(
            SurveyAggregate(
                n=n, shapes=len(group), matching=matching, mismatching=len(group) - matching
            )
        )
    return SurveyReport(model=model, rows=tuple(rows), aggregates=tuple(aggregates))
