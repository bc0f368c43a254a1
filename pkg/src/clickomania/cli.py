"""Command line front end for the engine, the solvers, and the generators.

Every subcommand prints a single JSON object to stdout so results can be
piped into other tools; human-facing detail goes to stderr.  Inputs are
either literal board or word text, or a path to a file holding the same.
One-dimensional inputs are routed to the fast deciders, everything else
goes to the search.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path
from random import Random
from statistics import median
from typing import Optional

from .engine import (
    Board,
    BoardParseError,
    Solution,
    parse_board,
    remaining_blocks,
    render_board,
    replay,
)
from .enumeration import iter_words, random_board, random_two_color_word
from .grammar import decide_cfg
from .optimize import optimize_word
from .oracle import Budget, search
from .partition_gen import PartitionInstance, partition_board, validate_partition_board
from .sat_gen import SatGenParams, parse_dimacs, sat_board, validate_sat_board
from .twocolor import decide_two_color, two_color_solution
from .witness import extract_solution
from .words import EMPTY_WORD, Word, word_from_board, word_from_text, word_to_board


class InputError(Exception):
    """Unusable input text or flags; maps to a nonzero exit."""


def default_budget(budget_ms: Optional[int] = None) -> Budget:
    """Search budget from a flag, the environment, or the builtin cap."""
    if budget_ms is None:
        env = os.environ.get("CLICKOMANIA_BUDGET_MS")
        if env is not None:
            try:
                budget_ms = int(env)
            except ValueError:
                raise InputError(f"CLICKOMANIA_BUDGET_MS is not an integer: {env!r}")
    if budget_ms is None:
        return Budget()
    return Budget(max_time=budget_ms / 1000.0)


def parse_puzzle(source: str) -> tuple[Board, Optional[Word], str]:
    """Parse literal text or a file path into a board.

    Returns (board, word, orientation); the word is present whenever the
    input is one-dimensional, with orientation "column" or "row" saying
    how the word lies in the board.
    """
    path = Path(source)
    try:
        text = path.read_text() if path.is_file() else source
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}")
    stripped = text.strip()
    board: Optional[Board] = None
    if "\n" not in stripped and "." not in stripped and not stripped.startswith("#"):
        try:
            word = word_from_text(stripped)
            return word_to_board(word, "column"), word, "column"
        except ValueError:
            pass  # not word syntax, fall through to board text
    try:
        board = parse_board(text)
    except BoardParseError as exc:
        raise InputError(str(exc))
    if board.is_empty:
        return board, EMPTY_WORD, "column"
    if board.width == 1:
        return board, word_from_board(board), "column"
    if board.height == 1:
        return board, word_from_board(board), "row"
    return board, None, ""


def _cells(solution: Solution) -> list[list[int]]:
    return [[c, r] for c, r in (move.cell for move in solution)]


def auto_decide(
    board: Board,
    word: Optional[Word],
    orientation: str,
    method: Optional[str] = None,
    budget: Optional[Budget] = None,
) -> dict:
    """Solvability verdict by the cheapest applicable decider.

    method forces a route; two-color and cfg require one-dimensional
    input and two-color additionally at most two colors.
    """
    if method is None:
        if word is not None and len(word.colors()) <= 2:
            method = "two-color"
        elif word is not None:
            method = "cfg"
        else:
            method = "oracle"
    if method in ("two-color", "cfg") and word is None:
        raise InputError(f"method {method} needs a one-column or one-row input")
    if method == "two-color":
        if len(word.colors()) > 2:
            raise InputError("method two-color needs at most two colors")
        solvable = decide_two_color(word)
        out = {"solvable": "yes" if solvable else "no", "method": "two-color-linear"}
        if solvable:
            witness = two_color_solution(word, orientation)
            out["witness"] = _cells(witness)
        return out
    if method == "cfg":
        decision = decide_cfg(word)
        out = {"solvable": "yes" if decision.solvable else "no", "method": "cfg"}
        if decision.solvable:
            witness = extract_solution(word, orientation)
            out["witness"] = _cells(witness)
        return out
    result = search(board, budget or default_budget())
    if result.solved:
        verdict = "yes"
    elif result.exact:
        verdict = "no"
    else:
        verdict = "unknown"
    out = {"solvable": verdict, "method": "oracle"}
    if result.solved:
        out["witness"] = _cells(result.witness)
    return out


def auto_solve(
    board: Board,
    word: Optional[Word],
    orientation: str,
    method: Optional[str] = None,
    budget: Optional[Budget] = None,
) -> dict:
    """Maximum removable blocks with a witness, exactly when possible."""
    if method is None:
        method = "cfg" if word is not None else "oracle"
    if method == "two-color":
        raise InputError("two-color decides solvability only; use cfg or oracle")
    if method == "cfg":
        if word is None:
            raise InputError("method cfg needs a one-column or one-row input")
        result = optimize_word(word, orientation)
        return {
            "removed": result.removable,
            "total": result.total,
            "exact": True,
            "method": "cfg",
            "witness": _cells(result.solution),
        }
    result = search(board, budget or default_budget())
    return {
        "removed": result.max_removed,
        "total": result.total,
        "exact": result.exact,
        "method": "oracle",
        "witness": _cells(result.witness),
    }


def cmd_decide(args: argparse.Namespace) -> int:
    board, word, orientation = parse_puzzle(args.puzzle)
    out = auto_decide(board, word, orientation, args.method, default_budget(args.budget_ms))
    print(json.dumps(out))
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    board, word, orientation = parse_puzzle(args.puzzle)
    out = auto_solve(board, word, orientation, args.method, default_budget(args.budget_ms))
    print(json.dumps(out))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    """Cross-check the fast deciders against the search on a full universe."""
    start = time.perf_counter()
    checked = 0
    mismatches: list[dict] = []

    def note(word: Word, kind: str, got, want) -> None:
        if len(mismatches) < 20:
            mismatches.append(
                {"word": word.runs, "kind": kind, "got": got, "expected": want}
            )

    for word in iter_words(args.colors, args.max_blocks):
        checked += 1
        board = word_to_board(word)
        truth = search(board)
        assert truth.exact, "exhaustive search must finish at this scale"
        cfg = decide_cfg(word, with_derivation=False).solvable
        if cfg != truth.solved:
            note(word, "decide_cfg", cfg, truth.solved)
        if args.colors <= 2:
            two = decide_two_color(word)
            if two != truth.solved:
                note(word, "decide_two_color", two, truth.solved)
        opt = optimize_word(word)
        if opt.removable != truth.max_removed:
            note(word, "optimize", opt.removable, truth.max_removed)
        else:
            _, removed = replay(board, opt.solution)
            if removed != opt.removable:
                note(word, "optimize-witness", removed, opt.removable)
    out = {
        "colors": args.colors,
        "max_blocks": args.max_blocks,
        "checked": checked,
        "mismatches": mismatches,
        "elapsed": round(time.perf_counter() - start, 3),
    }
    print(json.dumps(out))
    return 1 if mismatches else 0


def _write_outputs(base: str, board: Board, sidecar: dict) -> dict:
    clk = Path(f"{base}.clk")
    meta = Path(f"{base}.json")
    clk.write_text(render_board(board) + "\n")
    meta.write_text(json.dumps(sidecar, indent=2) + "\n")
    return {
        "clk": str(clk),
        "json": str(meta),
        "width": board.width,
        "height": board.height,
        "blocks": remaining_blocks(board),
    }


def cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "3partition":
        try:
            elements = tuple(int(x) for x in args.elements.split(","))
            instance = PartitionInstance(args.target, elements)
        except ValueError as exc:
            raise InputError(str(exc))
        board = partition_board(instance)
        if not validate_partition_board(board, instance):
            raise AssertionError("generated board failed its own validator")
        base = args.out or f"3partition_m{instance.m}_t{instance.target}"
        sidecar = {
            "kind": "3partition",
            "target": instance.target,
            "elements": list(instance.elements),
            "hard_regime": instance.hard_regime,
        }
    else:
        try:
            formula = parse_dimacs(Path(args.dimacs).read_text())
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot load DIMACS file: {exc}")
        locks = None
        if args.locks:
            locks = tuple(int(x) for x in args.locks.split(","))
        try:
            params = SatGenParams.defaults(formula, h0=args.h0, locks=locks)
        except ValueError as exc:
            raise InputError(str(exc))
        board = sat_board(formula, params)
        if not validate_sat_board(board, formula, params):
            raise AssertionError("generated board failed its own validator")
        base = args.out or f"3sat_n{formula.num_vars}_m{formula.num_clauses}"
        sidecar = {
            "kind": "3sat",
            "num_vars": formula.num_vars,
            "clauses": [list(c) for c in formula.clauses],
            "h0": params.h0,
            "locks": list(params.locks),
            "h1": params.h1,
            "hk": params.hk,
            "hs": params.hs,
        }
    out = _write_outputs(base, board, sidecar)
    print(json.dumps(out))
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    """Median wall times per input size for one solver route."""
    rng = Random(args.seed)
    sizes = [int(x) for x in args.sizes.split(",")]
    budget = default_budget(args.budget_ms)
    report = []
    for size in sizes:
        times = []
        for _ in range(args.samples):
            if args.method == "two-color":
                word = random_two_color_word(size, rng)
                t0 = time.perf_counter()
                decide_two_color(word)
            elif args.method == "cfg":
                word = random_two_color_word(size, rng)
                t0 = time.perf_counter()
                decide_cfg(word, with_derivation=False)
            else:
                side = max(2, round(size ** 0.5))
                board = random_board(side, side, 3, rng)
                t0 = time.perf_counter()
                search(board, budget)
            times.append(time.perf_counter() - t0)
        report.append({"size": size, "median": median(times), "samples": args.samples})
    ratios = [
        round(b["median"] / a["median"], 3) if a["median"] > 0 else None
        for a, b in zip(report, report[1:])
    ]
    print(json.dumps({"method": args.method, "timings": report, "ratios": ratios}))
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import build_app

    app = build_app(
        persist_dir=Path(args.persist) if args.persist else None,
        ui_dir=Path(args.ui) if args.ui else None,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clickomania",
        description="Clickomania puzzles: decide, solve, generate, serve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_puzzle_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("puzzle", help="board/word text, or a path to a file of it")
        p.add_argument(
            "--method",
            choices=("two-color", "cfg", "oracle"),
            help="force a solver route instead of automatic selection",
        )
        p.add_argument(
            "--budget-ms",
            type=int,
            help="search time budget (default: CLICKOMANIA_BUDGET_MS or unbounded)",
        )

    p = sub.add_parser("decide", help="is the puzzle completely clearable?")
    add_puzzle_flags(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("solve", help="maximize removed blocks, with witness")
    add_puzzle_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("enumerate", help="cross-check solvers on all small words")
    p.add_argument("--colors", type=int, choices=(1, 2, 3), default=2)
    p.add_argument("--max-blocks", type=int, default=8)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("generate", help="emit a hardness instance board")
    gen = p.add_subparsers(dest="kind", required=True)
    g = gen.add_parser("3partition", help="two-column number partition board")
    g.add_argument("--elements", required=True, help="comma separated, 3m of them")
    g.add_argument("--target", type=int, required=True)
    g.add_argument("--out", help="output base path (writes BASE.clk and BASE.json)")
    g.set_defaults(func=cmd_generate)
    g = gen.add_parser("3sat", help="five-column CNF board")
    g.add_argument("--dimacs", required=True, help="DIMACS CNF file")
    g.add_argument("--h0", type=int, help="layout unit height override")
    g.add_argument("--locks", help="comma separated lock sizes, one per clause")
    g.add_argument("--out", help="output base path (writes BASE.clk and BASE.json)")
    g.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="median solver wall times by input size")
    p.add_argument("--method", choices=("two-color", "cfg", "oracle"), default="two-color")
    p.add_argument("--sizes", default="10000,20000,40000")
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget-ms", type=int, default=2000)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="run the JSON HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--persist", help="directory for JSON session snapshots")
    p.add_argument("--ui", help="static directory to mount at / (the playground)")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
