"""Command-line front door for the labs and the session service.

Grammar:
    puzzlebench dissect min|greedy|survey [options]
    puzzlebench monty exact|simulate [options]
    puzzlebench birthday [options]
    puzzlebench hanoi|queens|knight|domination|magic [options]
    puzzlebench serve [options]

Exit codes: 0 success, 1 domain error (invalid input, cap exceeded), 2
usage error. All randomness flows from --seed, so identical argv produce
byte-identical output. --format json emits an envelope {"command", "result"}
that validates against schemas/cli-output.schema.json.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from . import combinatorics, probability
from .catalog import shape_by_name
from .dissection import (
    CutModel,
    greedy_dissect,
    min_cuts,
    survey_conjecture,
)
from .errors import PuzzleError
from .polyomino import Polyomino, parse_ascii, parse_json_dict, to_json_dict
from .probability import BirthdayFormula, Strategy, TrialConfig
from .service import ServiceConfig, serve

DEFAULT_SEED = 20260816

TEXT, JSON, CSV = "text", "json", "csv"


def _load_shape(name_or_path: str) -> Polyomino:
    """A preset/row-N name, else a path to an ASCII or JSON shape file."""
    try:
        return shape_by_name(name_or_path)
    except PuzzleError:
        pass
    path = Path(name_or_path)
    if not path.exists():
        raise PuzzleError(f"{name_or_path!r} is neither a known shape name nor a file")
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".json":
        return parse_json_dict(json.loads(text))
    return parse_ascii(text)


def _parse_model(name: str) -> CutModel:
    try:
        return CutModel(name.upper().replace("-", "_"))
    except ValueError:
        raise PuzzleError(
            f"unknown model {name!r}; one of single-split, full-line, global-line"
        ) from None


def _emit_json(command: str, result: dict) -> None:
    print(json.dumps({"command": command, "result": result}, indent=2, sort_keys=True))


# --- subcommand handlers -------------------------------------------------------


def _cmd_dissect_min(args: argparse.Namespace) -> None:
    p = _load_shape(args.shape)
    model = _parse_model(args.model)
    result = min_cuts(p, model, cap=args.cap)
    if args.format == JSON:
        _emit_json(
            "dissect.min",
            {
                "model": model.value,
                "shape": to_json_dict(p),
                "min_cuts": result.count,
                "witness": [c.to_wire() for c in result.witness],
            },
        )
        return
    print(f"min_cuts={result.count}")
    for cut in result.witness:
        print(json.dumps(cut.to_wire(), sort_keys=True))


def _cmd_dissect_greedy(args: argparse.Namespace) -> None:
    p = _load_shape(args.shape)
    cuts = greedy_dissect(p)
    if args.format == JSON:
        _emit_json(
            "dissect.greedy",
            {
                "shape": to_json_dict(p),
                "count": len(cuts),
                "cuts": [c.to_wire() for c in cuts],
            },
        )
        return
    print(f"cuts={len(cuts)}")
    for cut in cuts:
        print(json.dumps(cut.to_wire(), sort_keys=True))


def _cmd_dissect_survey(args: argparse.Namespace) -> None:
    model = _parse_model(args.model)
    report = survey_conjecture(args.nmax, model, cap=args.cap, jobs=args.jobs)
    if args.format == CSV:
        print(report.to_csv(), end="")
        return
    if args.format == JSON:
        _emit_json(
            "dissect.survey",
            {
                "model": model.value,
                "n_max": args.nmax,
                "rows": [
                    {
                        "n": r.n,
                        "shape_key": r.shape_key,
                        "min_cuts": r.min_cuts,
                        "n_minus_1": r.n_minus_1,
                        "matches": r.matches,
                    }
                    for r in report.rows
                ],
                "aggregates": [
                    {
                        "n": a.n,
                        "shapes": a.shapes,
                        "matching": a.matching,
                        "mismatching": a.mismatching,
                    }
                    for a in report.aggregates
                ],
            },
        )
        return
    for agg in report.aggregates:
        print(
            f"n={agg.n}: {agg.shapes} shapes, {agg.matching} match n-1, "
            f"{agg.mismatching} below"
        )
    for row in report.mismatches():
        print(f"  flagged: {row.shape_key} min_cuts={row.min_cuts} < n-1={row.n_minus_1}")


def _cmd_monty_exact(args: argparse.Namespace) -> None:
    switch = probability.monty_exact(Strategy.SWITCH)
    stay = probability.monty_exact(Strategy.STAY)
    if args.format == JSON:
        _emit_json(
            "monty.exact",
            {
                "SWITCH": {"fraction": str(switch), "value": float(switch)},
                "STAY": {"fraction": str(stay), "value": float(stay)},
            },
        )
        return
    print(f"SWITCH={switch}")
    print(f"STAY={stay}")


def _cmd_monty_simulate(args: argparse.Namespace) -> None:
    strategy = Strategy(args.strategy.upper())
    cfg = TrialConfig(trials=args.trials, seed=args.seed, shards=args.jobs)
    rate = probability.monty_simulate(strategy, cfg)
    if args.format == JSON:
        _emit_json(
            "monty.simulate",
            {
                "strategy": strategy.value,
                "trials": cfg.trials,
                "seed": cfg.seed,
                "win_rate": rate,
            },
        )
        return
    print(f"strategy={strategy.value} trials={cfg.trials} seed={cfg.seed} win_rate={rate:.6f}")


def _cmd_birthday(args: argparse.Namespace) -> None:
    if args.nmax is not None:
        rows = []
        for n in range(1, args.nmax + 1):
            cfg = TrialConfig(trials=args.trials, seed=args.seed + n, shards=args.jobs)
            rows.append(
                {
                    "n": n,
                    "exact": probability.birthday_exact(n),
                    "approx": probability.birthday_approx(n),
                    "simulated": probability.birthday_simulate(n, cfg),
                }
            )
        if args.format == CSV:
            print("n,exact,approx,simulated")
            for r in rows:
                print(f"{r['n']},{r['exact']:.6f},{r['approx']:.6f},{r['simulated']:.6f}")
            return
        if args.format == JSON:
            _emit_json(
                "birthday.curve", {"trials": args.trials, "seed": args.seed, "rows": rows}
            )
            return
        for r in rows:
            print(
                f"n={r['n']} exact={r['exact']:.6f} approx={r['approx']:.6f} "
                f"simulated={r['simulated']:.6f}"
            )
        return
    formula = BirthdayFormula(args.formula.upper())
    fn = (
        probability.birthday_exact
        if formula is BirthdayFormula.EXACT
        else probability.birthday_approx
    )
    value = fn(args.n)
    if args.format == JSON:
        _emit_json(
            "birthday.value", {"n": args.n, "formula": formula.value, "probability": value}
        )
        return
    print(f"{value:.6f}")


def _cmd_hanoi(args: argparse.Namespace) -> None:
    moves, count = combinatorics.hanoi(args.n)
    if args.format == JSON:
        _emit_json(
            "hanoi",
            {"n": args.n, "count": count, "moves": [[m.from_rod, m.to_rod] for m in moves]},
        )
        return
    print(f"count={count}")
    for m in moves:
        print(f"{m.from_rod}→{m.to_rod}")


def _cmd_queens(args: argparse.Namespace) -> None:
    count, solutions = combinatorics.queens(args.n)
    if args.format == JSON:
        _emit_json(
            "queens",
            {
                "n": args.n,
                "count": count,
                "solutions": [[list(sq) for sq in s.squares] for s in solutions],
            },
        )
        return
    print(f"count={count}")
    for s in solutions:
        print(json.dumps([list(sq) for sq in s.squares]))


def _cmd_knight(args: argparse.Namespace) -> None:
    try:
        r, c = (int(part) for part in args.start.split(","))
    except ValueError:
        raise PuzzleError(f"--start must be 'row,col', got {args.start!r}") from None
    tour = combinatorics.knight_tour(args.rows, args.cols, (r, c))
    if args.format == JSON:
        _emit_json(
            "knight",
            {
                "rows": args.rows,
                "cols": args.cols,
                "start": [r, c],
                "found": tour is not None,
                "path": [list(sq) for sq in tour.path] if tour else None,
            },
        )
        return
    if tour is None:
        print("NOT_FOUND")
        return
    print(json.dumps([list(sq) for sq in tour.path]))


def _cmd_domination(args: argparse.Namespace) -> None:
    k, placement = combinatorics.queens_domination(args.n)
    if args.format == JSON:
        _emit_json(
            "domination",
            {"n": args.n, "k": k, "placement": [list(sq) for sq in placement.squares]},
        )
        return
    print(f"k={k}")
    print(json.dumps([list(sq) for sq in placement.squares]))


def _cmd_magic(args: argparse.Namespace) -> None:
    squares = combinatorics.magic_squares(3)
    if args.format == JSON:
        _emit_json(
            "magic",
            {
                "order": 3,
                "count": len(squares),
                "squares": [[list(row) for row in s.grid] for s in squares],
            },
        )
        return
    print(f"count={len(squares)}")
    for s in squares:
        print(json.dumps([list(row) for row in s.grid]))


def _cmd_serve(args: argparse.Namespace) -> None:
    serve(
        ServiceConfig(
            port=args.port,
            snapshot_path=args.snapshot,
            seed=args.seed,
            cap_n=args.cap,
        )
    )


# --- parser -----------------------------------------------------------------


def _add_format(parser: argparse.ArgumentParser, *, csv: bool = False) -> None:
    choices = [TEXT, JSON, CSV] if csv else [TEXT, JSON]
    parser.add_argument("--format", choices=choices, default=TEXT)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="puzzlebench",
        description="Polyomino dissection, probability, and chessboard puzzle workbench.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dissect = sub.add_parser("dissect", help="straight-line cut engine")
    dsub = dissect.add_subparsers(dest="subcommand", required=True)

    dmin = dsub.add_parser("min", help="exact minimum cuts with witness")
    dmin.add_argument("--shape", required=True, help="preset name, row-N, or shape file")
    dmin.add_argument("--model", default="single-split")
    dmin.add_argument("--cap", type=int, default=None, help="search cap override")
    _add_format(dmin)
    dmin.set_defaults(fn=_cmd_dissect_min)

    dgreedy = dsub.add_parser("greedy", help="n-1 cut construction")
    dgreedy.add_argument("--shape", required=True)
    _add_format(dgreedy)
    dgreedy.set_defaults(fn=_cmd_dissect_greedy)

    dsurvey = dsub.add_parser("survey", help="min_cuts vs n-1 over all shapes")
    dsurvey.add_argument("--nmax", type=int, required=True)
    dsurvey.add_argument("--model", default="single-split")
    dsurvey.add_argument("--cap", type=int, default=None)
    dsurvey.add_argument("--jobs", type=int, default=1)
    _add_format(dsurvey, csv=True)
    dsurvey.set_defaults(fn=_cmd_dissect_survey)

    monty = sub.add_parser("monty", help="Monty Hall lab")
    msub = monty.add_subparsers(dest="subcommand", required=True)

    mexact = msub.add_parser("exact", help="exact win probabilities")
    _add_format(mexact)
    mexact.set_defaults(fn=_cmd_monty_exact)

    msim = msub.add_parser("simulate", help="Monte Carlo win rate")
    msim.add_argument("--strategy", choices=["switch", "stay"], required=True)
    msim.add_argument("--trials", type=int, default=100_000)
    msim.add_argument("--seed", type=int, default=DEFAULT_SEED)
    msim.add_argument("--jobs", type=int, default=1)
    _add_format(msim)
    msim.set_defaults(fn=_cmd_monty_simulate)

    birthday = sub.add_parser("birthday", help="birthday collision probabilities")
    birthday.add_argument("--n", type=int, default=23)
    birthday.add_argument("--formula", choices=["exact", "approx"], default="exact")
    birthday.add_argument("--nmax", type=int, default=None, help="emit a curve for n=1..nmax")
    birthday.add_argument("--trials", type=int, default=10_000)
    birthday.add_argument("--seed", type=int, default=DEFAULT_SEED)
    birthday.add_argument("--jobs", type=int, default=1)
    _add_format(birthday, csv=True)
    birthday.set_defaults(fn=_cmd_birthday)

    hanoi = sub.add_parser("hanoi", help="tower of hanoi move list")
    hanoi.add_argument("--n", type=int, required=True)
    _add_format(hanoi)
    hanoi.set_defaults(fn=_cmd_hanoi)

    queens = sub.add_parser("queens", help="n-queens enumeration")
    queens.add_argument("--n", type=int, required=True)
    _add_format(queens)
    queens.set_defaults(fn=_cmd_queens)

    knight = sub.add_parser("knight", help="knight's tour search")
    knight.add_argument("--rows", type=int, required=True)
    knight.add_argument("--cols", type=int, required=True)
    knight.add_argument("--start", default="0,0")
    _add_format(knight)
    knight.set_defaults(fn=_cmd_knight)

    domination = sub.add_parser("domination", help="minimum dominating queens")
    domination.add_argument("--n", type=int, required=True)
    _add_format(domination)
    domination.set_defaults(fn=_cmd_domination)

    magic = sub.add_parser("magic", help="3x3 magic squares")
    _add_format(magic)
    magic.set_defaults(fn=_cmd_magic)

    serve_p = sub.add_parser("serve", help="run the HTTP session service")
    serve_p.add_argument("--port", type=int, default=8080)
    serve_p.add_argument("--snapshot", default=None, help="JSON snapshot file path")
    serve_p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    serve_p.add_argument("--cap", type=int, default=None, help="session size cap override")
    serve_p.set_defaults(fn=_cmd_serve)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fn: Callable[[argparse.Namespace], None] = args.fn
    try:
        fn(args)
    except PuzzleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
