"""Command-line interface.

Thirteen verbs, one library call each.  Exit codes: 0 for success (for
`check`, saturated; for `verify`, connected), 1 for a negative outcome or
an exceeded enumeration cap, 2 for unusable input (bad files, bad
margins, bad flags, or a failed `--oracle` cross-check).

Verbs that produce one result (`check`, `matrix`, `det`, `count`,
`decompose`, `find-cycle`, `verify`) take `--json` and then emit a report
object {status, payload, diagnostics}.  Verbs that produce streams
(`enumerate`, `generate`, `sample`, `basis`, `walk`, `fiber`) emit one
record per line as JSON, or blank-line-separated grids with
`--format grid`.  All randomness comes from `--seed`; repeated
invocations are byte-identical.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .design import CapExceeded, to_table
from .linalg import (
    full_model_matrix,
    integer_determinant,
    is_saturated_by_determinant,
    model_matrix,
)
from .cycles import decompose_cycle, find_cycle
from .saturation import (
    count_saturated,
    count_with_margins,
    enumerate_saturated,
    generate_with_margins,
    sample_uniform_saturated,
)
from .markov import fiber_enumerate, markov_basis, verify_connectivity, walk_states
from .fileio import (
    ParseError,
    parse_fraction_file,
    parse_margin_vector,
    render_grid,
    render_json,
    render_signed_table,
)


def _report(args, ok: bool, payload: dict, human: str, notes: list[str] | None = None) -> int:
    if getattr(args, "json", False):
        doc = {
            "status": "ok" if ok else "fail",
            "payload": payload,
            "diagnostics": notes if notes is not None else ([] if ok else [human]),
        }
        print(json.dumps(doc))
    else:
        print(human)
    return 0 if ok else 1


def _cap_kwargs(args) -> dict:
    return {} if args.cap is None else {"cap": args.cap}


def _margins_pair(args) -> tuple[tuple[int, ...], tuple[int, ...]]:
    a, b = args.margins
    return parse_margin_vector(a), parse_margin_vector(b)


def _write_fraction(points, I, J, fmt: str, first: bool) -> None:
    if fmt == "grid":
        if not first:
            sys.stdout.write("\n")
        sys.stdout.write(render_grid(points, I, J))
    else:
        sys.stdout.write(render_json(points, I, J) + "\n")


def _write_table(table, fmt: str, first: bool) -> None:
    if fmt == "grid":
        if not first:
            sys.stdout.write("\n")
        sys.stdout.write("".join("".join(str(v) for v in row) + "\n" for row in table))
    else:
        sys.stdout.write(json.dumps([list(row) for row in table]) + "\n")


def cmd_check(args) -> int:
    points, I, J = parse_fraction_file(args.file)
    need = I + J - 1
    if len(points) != need:
        payload = {"saturated": False, "points": len(points), "required": need, "cycle": None}
        return _report(args, False, payload, f"wrong size: {len(points)} points, expected {need}")
    cycle = find_cycle(points)
    saturated = cycle is None
    if args.oracle and is_saturated_by_determinant(points, I, J) != saturated:
        print("error: cycle test and determinant test disagree; this is a bug", file=sys.stderr)
        return 2
    payload = {
        "saturated": saturated,
        "points": len(points),
        "required": need,
        "cycle": None if cycle is None else [list(p) for p in cycle],
    }
    human = "saturated" if saturated else f"not saturated: cycle = {list(cycle)}"
    return _report(args, saturated, payload, human)


def cmd_matrix(args) -> int:
    if args.file is not None:
        if args.I is not None or args.J is not None:
            raise ParseError("give a fraction file or --I/--J, not both")
        points, I, J = parse_fraction_file(args.file)
        m = model_matrix(points, I, J)
    else:
        if args.I is None or args.J is None:
            raise ParseError("matrix needs a fraction file or both --I and --J")
        I, J = args.I, args.J
        m = full_model_matrix(I, J)
    human = "\n".join(" ".join(f"{v:2d}" for v in row) for row in m)
    return _report(args, True, {"rows": len(m), "cols": I + J - 1, "matrix": [list(r) for r in m]}, human)


def cmd_det(args) -> int:
    points, I, J = parse_fraction_file(args.file)
    d = integer_determinant(model_matrix(points, I, J))
    return _report(args, True, {"determinant": d, "saturated": d != 0}, str(d))


def _check_margin_shape(args, mA, mB) -> None:
    if args.I is not None and args.I != len(mA):
        raise ParseError(f"--I {args.I} conflicts with a {len(mA)}-entry A margin list")
    if args.J is not None and args.J != len(mB):
        raise ParseError(f"--J {args.J} conflicts with a {len(mB)}-entry B margin list")


def cmd_count(args) -> int:
    if args.margins is not None:
        mA, mB = _margins_pair(args)
        _check_margin_shape(args, mA, mB)
        n = count_with_margins(mA, mB)
    elif args.I is not None and args.J is not None:
        n = count_saturated(args.I, args.J)
    else:
        raise ParseError("count needs --I and --J, or --margins")
    return _report(args, True, {"count": n}, str(n))


def cmd_enumerate(args) -> int:
    if args.margins is not None:
        mA, mB = _margins_pair(args)
        _check_margin_shape(args, mA, mB)
        stream = generate_with_margins(mA, mB)
    else:
        stream = enumerate_saturated(args.I, args.J, **_cap_kwargs(args))
    first = True
    for points in stream:
        _write_fraction(points, args.I, args.J, args.format, first)
        first = False
    return 0


def cmd_generate(args) -> int:
    mA, mB = _margins_pair(args)
    I, J = len(mA), len(mB)
    first = True
    for points in generate_with_margins(mA, mB):
        _write_fraction(points, I, J, args.format, first)
        first = False
    return 0


def cmd_sample(args) -> int:
    if args.count < 1:
        raise ParseError("--count must be at least 1")
    rng = random.Random(args.seed)
    first = True
    for _ in range(args.count):
        points = sample_uniform_saturated(args.I, args.J, rng)
        _write_fraction(points, args.I, args.J, args.format, first)
        first = False
    return 0


def cmd_decompose(args) -> int:
    points, _, _ = parse_fraction_file(args.file)
    part1, part2 = decompose_cycle(points)
    human = "part 1: " + " ".join(f"({i},{j})" for i, j in part1)
    human += "\npart 2: " + " ".join(f"({i},{j})" for i, j in part2)
    payload = {"part1": [list(p) for p in part1], "part2": [list(p) for p in part2]}
    return _report(args, True, payload, human)


def cmd_find_cycle(args) -> int:
    points, _, _ = parse_fraction_file(args.file)
    cycle = find_cycle(points)
    payload = {"cycle": None if cycle is None else [list(p) for p in cycle]}
    human = "no cycle" if cycle is None else f"cycle = {list(cycle)}"
    return _report(args, True, payload, human)


def cmd_basis(args) -> int:
    moves = markov_basis(args.I, args.J, max_degree=args.max_degree, **_cap_kwargs(args))
    first = True
    for move in moves:
        if args.format == "grid":
            if not first:
                sys.stdout.write("\n")
            sys.stdout.write(render_signed_table(move))
        else:
            sys.stdout.write(json.dumps([list(r) for r in move]) + "\n")
        first = False
    return 0


def cmd_walk(args) -> int:
    points, I, J = parse_fraction_file(args.start)
    start = to_table(points, I, J)
    basis = markov_basis(I, J, max_degree=args.max_degree, **_cap_kwargs(args))
    every = args.emit_every
    if every is not None and every < 1:
        raise ParseError("--emit-every must be at least 1")
    last, first, final_done = start, True, False
    for step, state in enumerate(walk_states(start, basis, args.steps, args.seed), 1):
        last = state
        if every is not None and step % every == 0:
            _write_table(state, args.format, first)
            first = False
            final_done = step == args.steps
    if not final_done:
        _write_table(last, args.format, first)
    return 0


def cmd_fiber(args) -> int:
    mA, mB = _margins_pair(args)
    first = True
    for table in fiber_enumerate(mA, mB, **_cap_kwargs(args)):
        _write_table(table, args.format, first)
        first = False
    return 0


def cmd_verify(args) -> int:
    mA, mB = _margins_pair(args)
    basis = markov_basis(len(mA), len(mB), max_degree=args.max_degree, **_cap_kwargs(args))
    rep = verify_connectivity(mA, mB, basis=basis, **_cap_kwargs(args))
    payload = {
        "connected": rep.connected,
        "fiber_size": rep.fiber_size,
        "components": rep.components,
        "moves": len(basis),
    }
    human = (
        f"{'connected' if rep.connected else 'not connected'}: "
        f"{rep.fiber_size} table(s), {rep.components} component(s), {len(basis)} move(s)"
    )
    return _report(args, rep.connected, payload, human, notes=[human])


def _add_json(p) -> None:
    p.add_argument("--json", action="store_true", help="emit a JSON report instead of text")


def _add_size(p, required: bool) -> None:
    p.add_argument("--I", type=int, required=required, help="number of levels of the first factor")
    p.add_argument("--J", type=int, required=required, help="number of levels of the second factor")


def _add_margins(p, required: bool = True) -> None:
    p.add_argument(
        "--margins",
        nargs=2,
        metavar=("A_MARGINS", "B_MARGINS"),
        required=required,
        help="two comma-separated margin lists, e.g. --margins 3,1,2 3,1,1,1",
    )


def _add_format(p, default: str) -> None:
    p.add_argument("--format", choices=("json", "grid"), default=default,
                   help=f"stream record format (default: {default})")


def _add_cap(p) -> None:
    p.add_argument("--cap", type=int, default=None,
                   help="abort with exit 1 if the enumeration would exceed this many items")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satfrac",
        description="Saturated fractions of two-factor designs, and walks over fixed-margin tables.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    p = sub.add_parser("check", help="decide whether a fraction is saturated")
    p.add_argument("file", help="fraction file, or - for standard input")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check the cycle test against the determinant test")
    _add_json(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("matrix", help="print a model matrix (full, or restricted to a fraction)")
    p.add_argument("file", nargs="?", default=None, help="fraction file, or - for standard input")
    _add_size(p, required=False)
    _add_json(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("det", help="integer determinant of a fraction's model matrix")
    p.add_argument("file", help="fraction file, or - for standard input")
    _add_json(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("count", help="count saturated fractions, in total or with fixed margins")
    _add_size(p, required=False)
    _add_margins(p, required=False)
    _add_json(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="stream every saturated fraction of an IxJ design")
    _add_size(p, required=True)
    _add_margins(p, required=False)
    _add_format(p, "json")
    _add_cap(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("generate", help="stream every saturated fraction with the given margins")
    _add_margins(p)
    _add_format(p, "json")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("sample", help="draw saturated fractions uniformly at random")
    _add_size(p, required=True)
    p.add_argument("--seed", type=int, required=True, help="random seed (required)")
    p.add_argument("--count", type=int, default=1, help="number of draws (default: 1)")
    _add_format(p, "json")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("decompose", help="split a union of cycles into two orthogonal halves")
    p.add_argument("file", help="fraction file, or - for standard input")
    _add_json(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("find-cycle", help="report a cycle contained in a fraction, if any")
    p.add_argument("file", help="fraction file, or - for standard input")
    _add_json(p)
    p.set_defaults(func=cmd_find_cycle)

    p = sub.add_parser("basis", help="print the circuit move basis of the IxJ grid")
    _add_size(p, required=True)
    p.add_argument("--max-degree", type=int, default=None,
                   help="only build moves of degree up to this bound")
    _add_format(p, "grid")
    _add_cap(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("walk", help="run the fixed-margin random walk from a starting table")
    p.add_argument("--start", required=True, help="starting fraction file, or - for standard input")
    p.add_argument("--steps", type=int, required=True, help="number of chain steps")
    p.add_argument("--seed", type=int, required=True, help="random seed (required)")
    p.add_argument("--emit-every", type=int, default=None,
                   help="also emit every M-th visited table (default: final state only)")
    p.add_argument("--max-degree", type=int, default=None,
                   help="only walk with moves of degree up to this bound")
    _add_format(p, "json")
    _add_cap(p)
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("fiber", help="stream every binary table with the given margins")
    _add_margins(p)
    _add_format(p, "json")
    _add_cap(p)
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("verify", help="check that the move basis connects a margin fiber")
    _add_margins(p)
    p.add_argument("--max-degree", type=int, default=None,
                   help="only use moves of degree up to this bound")
    _add_cap(p)
    _add_json(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except BrokenPipeError:
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
