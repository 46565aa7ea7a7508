"""Polyomino dissection workbench with probability and chessboard labs."""

from .combinatorics import (
    BoardPlacement,
    HanoiMove,
    KnightTour,
    MagicSquare,
    covers_board,
    hanoi,
    is_nonattacking,
    knight_tour,
    magic_squares,
    queens,
    queens_domination,
    solve_linear,
    validate_hanoi,
    validate_knight_tour,
)
from .config import DEFAULT_CAPS, Caps
from .dissection import (
    Axis,
    CutModel,
    CutSegment,
    DissectionState,
    MinCutResult,
    SurveyReport,
    apply_cut,
    clear_memo,
    greedy_dissect,
    hint,
    initial_state,
    is_finished,
    legal_cuts,
    min_cut_count,
    min_cuts,
    single_split_lower_bound,
    survey_conjecture,
)
from .errors import (
    CapExceeded,
    Disconnected,
    DuplicateCell,
    EmptyInput,
    IllegalCut,
    Indeterminate,
    InvalidN,
    NoUniqueSolution,
    OffBoardStart,
    PuzzleError,
    UnsupportedOrder,
    WrongModel,
)
from .polyomino import (
    Cell,
    Polyomino,
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
from .probability import (
    BirthdayFormula,
    MontyTree,
    Outcome,
    Strategy,
    TrialConfig,
    birthday_approx,
    birthday_exact,
    birthday_simulate,
    birthday_threshold,
    monty_exact,
    monty_simulate,
    monty_tree,
)

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "BirthdayFormula",
    "BoardPlacement",
    "CapExceeded",
    "Caps",
    "Cell",
    "CutModel",
    "CutSegment",
    "DEFAULT_CAPS",
    "Disconnected",
    "DissectionState",
    "DuplicateCell",
    "EmptyInput",
    "HanoiMove",
    "IllegalCut",
    "Indeterminate",
    "InvalidN",
    "KnightTour",
    "MagicSquare",
    "MinCutResult",
    "MontyTree",
    "NoUniqueSolution",
    "OffBoardStart",
    "Outcome",
    "Polyomino",
    "PuzzleError",
    "Strategy",
    "SurveyReport",
    "TrialConfig",
    "UnsupportedOrder",
    "WrongModel",
    "apply_cut",
    "birthday_approx",
    "birthday_exact",
    "birthday_simulate",
    "birthday_threshold",
    "canonical_key",
    "clear_memo",
    "covers_board",
    "dual_graph",
    "enumerate_fixed",
    "from_cells",
    "greedy_dissect",
    "hanoi",
    "has_hole",
    "hint",
    "initial_state",
    "is_finished",
    "is_nonattacking",
    "knight_tour",
    "legal_cuts",
    "magic_squares",
    "min_cut_count",
    "min_cuts",
    "monty_exact",
    "monty_simulate",
    "monty_tree",
    "parse_ascii",
    "parse_json_dict",
    "queens",
    "queens_domination",
    "single_split_lower_bound",
    "solve_linear",
    "survey_conjecture",
    "to_ascii",
    "to_json_dict",
    "validate_hanoi",
    "validate_knight_tour",
]
