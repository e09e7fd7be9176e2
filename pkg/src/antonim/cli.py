"""Command-line front door: classify, complete, best-move, table, verify,
theorem2, serve.

Heap values are positional decimal integers; options use long names only.
Exit codes are a stable contract: 0 success/verified, 1 verification
mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from typing import Sequence

from . import core, oracle, solver, tables


def equivalence_sweep(
    max_heaps: int, max_value: int
) -> tuple[int, list[core.CanonicalPosition]]:
    """Compare the constructive classifier against the game-tree oracle
    over every canonical position with at most ``max_heaps`` heaps and
    values at most ``max_value``. Returns (positions checked, mismatches).
    """
    mismatches = []
    checked = 0
    for k in range(0, max_heaps + 1):
        for pos in itertools.combinations(range(1, max_value + 1), k):
            checked += 1
            if solver.classify(pos) is not oracle.oracle_classify(pos):
                mismatches.append(pos)
    return checked, mismatches


def _cmd_classify(args: argparse.Namespace) -> int:
    try:
        state = core.validate_state(args.heaps)
    except core.GameError as exc:
        print(exc, file=sys.stderr)
        return 2
    move = solver.best_move(state)
    if move is None:
        print("P")
    else:
        print(f"N — take heap {move.heap_index} to {move.new_size}")
    return 0


def _cmd_complete(args: argparse.Namespace) -> int:
    try:
        state = core.validate_state(args.heaps) if args.heaps else ()
    except core.GameError as exc:
        print(exc, file=sys.stderr)
        return 2
    print(solver.completion(core.canonicalize(state)))
    return 0


def _cmd_best_move(args: argparse.Namespace) -> int:
    try:
        state = core.validate_state(args.heaps)
    except core.GameError as exc:
        print(exc, file=sys.stderr)
        return 2
    move = solver.best_move(state)
    if move is None:
        print("no winning move")
    else:
        print(f"take heap {move.heap_index} to {move.new_size}")
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    try:
        spec = tables.PTableSpec(
            n_heaps=args.heaps,
            layer_prefix=tuple(args.prefix),
            max_index=args.max,
        )
    except solver.InvalidInput as exc:
        print(exc, file=sys.stderr)
        return 2
    table = tables.build_table(spec)
    sys.stdout.write(tables.render_table(table, args.format))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max_heaps < 1 or args.max_value < 0:
        print("verify needs --max-heaps >= 1 and --max-value >= 0", file=sys.stderr)
        return 2
    checked, mismatches = equivalence_sweep(args.max_heaps, args.max_value)
    for pos in mismatches:
        print(f"mismatch at {pos}: classify={solver.classify(pos)} "
              f"oracle={oracle.oracle_classify(pos)}")
    verdict = "OK" if not mismatches else "FAIL"
    print(f"{checked} positions checked, {len(mismatches)} mismatches, {verdict}")
    return 0 if not mismatches else 1


def _cmd_theorem2(args: argparse.Namespace) -> int:
    if args.max < 1:
        print("theorem2 needs --max >= 1", file=sys.stderr)
        return 2
    report = solver.nim_correspondence_check(args.max)
    for x1, x2, z in report.mismatches:
        print(f"mismatch: ({x1},{x2}) -> z={z} but "
              f"{x1 + 1}^{x2 + 1}^{z + 1} != 0")
    counter = (
        "4-heap counterexample confirmed"
        if report.counterexample_confirmed
        else "4-heap counterexample NOT confirmed"
    )
    print(f"{report.pairs_checked} pairs checked, "
          f"{len(report.mismatches)} mismatches; {counter}")
    return 0 if report.ok else 1


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(transcript_path=args.transcript, static_dir=args.static_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antonim",
        description="Perfect-play solver and tables for Antonim "
        "(Nim where no two nonempty heaps may be equal).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a position as P or N")
    p.add_argument("heaps", nargs="+", type=int)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser(
        "complete", help="value that turns the given heaps into a P-position"
    )
    p.add_argument("heaps", nargs="*", type=int)
    p.set_defaults(handler=_cmd_complete)

    p = sub.add_parser("best-move", help="winning move for the given position")
    p.add_argument("heaps", nargs="+", type=int)
    p.set_defaults(handler=_cmd_best_move)

    p = sub.add_parser("table", help="print a completion-value table slice")
    p.add_argument("--heaps", type=int, required=True,
                   help="total heap count the table covers")
    p.add_argument("--prefix", type=int, nargs="*", default=[],
                   help="fixed leading heap values (one per extra dimension)")
    p.add_argument("--max", type=int, required=True,
                   help="row and column headings run 0..MAX")
    p.add_argument("--format", choices=("plain", "csv"), default="plain")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser(
        "verify",
        help="exhaustively compare the solver against the game-tree oracle",
    )
    p.add_argument("--max-heaps", type=int, required=True)
    p.add_argument("--max-value", type=int, required=True)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "theorem2",
        help="check the 3-heap correspondence with plain Nim (xor rule) "
        "and the 4-heap counterexample to it",
    )
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(handler=_cmd_theorem2)

    p = sub.add_parser("serve", help="run the play server")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--transcript", default="./antonim-transcript.ndjson")
    p.add_argument("--static-dir", default=None,
                   help="directory with the web UI bundle to serve at /")
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
