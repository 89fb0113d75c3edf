"""Command line front end.

Subcommands: ``berry`` (loop product and geometric phase of labeled
states), ``prob`` (loop-sum transition report for a layered graph),
``parable`` (exact coin tables plus optional Monte Carlo), and ``check``
(randomized invariant suite).  Exit codes: 0 success, 1 check failure,
2 unreadable or invalid input, 3 unknown label, 4 undefined phase.

Table output prints numbers with 12 significant digits; JSON output keeps
full precision.  All randomness flows from --seed, so any fixed invocation
is byte-reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import BUILTIN_GRAPHS, BUILTIN_STATE_SETS, BUILTIN_WORLDS
from .checks import run_checks
from .errors import (
    LoopampError,
    UndefinedPhaseError,
    UnknownLabelError,
)
from .hilbert import StateVector, pairs_to_components
from .loops import CyclicPath, berry_phase, gamma_product
from .parable import CoinPolicy, ParableWorld, expected_coins, ledger_table, ledger_to_json, monte_carlo
from .transitions import (
    TransitionGraph,
    WhichPathTag,
    classical_probability,
    born_probability,
    decohere,
    interference_terms,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_UNKNOWN_LABEL = 3
EXIT_UNDEFINED_PHASE = 4


def _sig(x: float) -> str:
    return f"{x + 0.0:.12g}"


def _fmt_complex(z: complex) -> str:
    return f"{_sig(z.real)}{z.imag + 0.0:+.12g}i"


def _load_json(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _load_states(source: str) -> dict[str, StateVector]:
    if source in BUILTIN_STATE_SETS:
        return BUILTIN_STATE_SETS[source]()
    obj = _load_json(source)
    table = obj["states"] if isinstance(obj, dict) and "states" in obj else obj
    return {
        label: StateVector(pairs_to_components(pairs), label=label)
        for label, pairs in table.items()
    }


def _load_graph(source: str) -> tuple[TransitionGraph, bool]:
    if source in BUILTIN_GRAPHS:
        return BUILTIN_GRAPHS[source](), False
    return TransitionGraph.from_json(_load_json(source))


def _load_world(source: str) -> ParableWorld:
    if source in BUILTIN_WORLDS:
        return BUILTIN_WORLDS[source]()
    return ParableWorld.from_json(_load_json(source))


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_json(obj, output: str | None) -> None:
    _emit(json.dumps(obj, indent=2) + "\n", output)


def cmd_berry(args) -> int:
    states = _load_states(args.states)
    labels = [piece.strip() for piece in args.path.split(",") if piece.strip()]
    if len(labels) < 2:
        raise ValueError(f"path needs at least 2 labels, got {args.path!r}")
    missing = [label for label in labels if label not in states]
    if missing:
        raise UnknownLabelError(missing[0])
    path = CyclicPath(tuple(states[label] for label in labels))
    gamma = gamma_product(path)
    phase = berry_phase(path)  # raises UndefinedPhaseError when gamma == 0
    if args.format == "json":
        _emit_json(
            {
                "path": labels,
                "gamma_product": [gamma.real, gamma.imag],
                "berry_phase": phase,
            },
            args.output,
        )
    else:
        closure = labels[0]
        _emit(
            f"path:        {' -> '.join(labels)} -> ({closure})\n"
            f"Gamma:       {_fmt_complex(gamma)}\n"
            f"berry phase: {_sig(phase)}\n",
            args.output,
        )
    return EXIT_OK


def _loop_rows(ensemble) -> list[dict]:
    return [
        {
            "out": list(ev.loop.outbound),
            "in": list(ev.loop.inbound),
            "gamma": [ev.gamma.real, ev.gamma.imag],
        }
        for ev in ensemble.loops
    ]


def cmd_prob(args) -> int:
    graph, tagged_in_file = _load_graph(args.graph)
    tagged = tagged_in_file or args.decohere
    tag = WhichPathTag.TAGGED if tagged else WhichPathTag.UNTAGGED
    ensemble = decohere(graph, tag)
    p_loops = ensemble.probability
    # once routes are tagged, the squared-sum rule acts per route and the
    # reference value is the route-exclusive sum
    p_born = classical_probability(graph) if tagged else born_probability(graph)
    interference = interference_terms(graph, ensemble)
    payload = {
        "graph": graph.to_json(tagged),
        "loops": _loop_rows(ensemble),
        "gamma_rule_p": p_loops,
        "born_p": p_born,
        "interference": interference,
    }
    if args.format == "json":
        _emit_json(payload, args.output)
        return EXIT_OK
    rows = [
        (
            " -> ".join(ev.loop.outbound),
            " <- ".join(reversed(ev.loop.inbound)),
            _fmt_complex(ev.gamma),
        )
        for ev in ensemble.loops
    ]
    widths = [max(len(r[c]) for r in rows) for c in range(3)] if rows else [0, 0, 0]
    lines = [
        f"{'outbound'.ljust(widths[0])}  {'inbound'.ljust(widths[1])}  Gamma"
    ]
    for out, inb, gamma in rows:
        lines.append(f"{out.ljust(widths[0])}  {inb.ljust(widths[1])}  {gamma}")
    lines.append(f"loops:        {len(ensemble.loops)}")
    lines.append(f"gamma_rule_p: {_sig(p_loops)}")
    lines.append(f"born_p:       {_sig(p_born)}")
    lines.append(f"interference: {_sig(interference)}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_parable(args) -> int:
    world = _load_world(args.world)
    policy = CoinPolicy(args.policy)
    if args.days > 0:
        ledger = monte_carlo(world, policy, args.days, args.seed)
    else:
        ledger = expected_coins(world, policy)
    if args.format == "json":
        _emit_json(
            {
                "world": world.to_json(),
                "policy": policy.value,
                "trips": ledger.trips,
                "days": ledger.days,
                "seed": args.seed,
                "gates": ledger_to_json(ledger),
            },
            args.output,
        )
    else:
        header = (
            f"policy: {policy.value}   round trips: {ledger.trips}"
            + (f"   days: {ledger.days}   seed: {args.seed}" if ledger.days else "")
        )
        _emit(header + "\n" + ledger_table(ledger) + "\n", args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    report = run_checks(
        trials=args.trials, max_dim=args.max_dim, max_routes=args.max_routes, seed=args.seed
    )
    if args.format == "json":
        _emit_json({"seed": args.seed, **report.to_json()}, args.output)
    else:
        name_w = max(len(r.name) for r in report.records)
        lines = []
        for r in report.records:
            lines.append(
                f"{'PASS' if r.passed else 'FAIL'}  {r.name.ljust(name_w)}  "
                f"instances={r.instances}  max_dev={_sig(r.max_deviation)}  "
                f"tol={_sig(r.tolerance)}  seed={r.seed}"
            )
        verdict = "all invariants hold" if report.passed else (
            f"FAILED: rerun with --seed {args.seed} to reproduce"
        )
        lines.append(verdict)
        _emit("\n".join(lines) + "\n", args.output)
    if not report.passed and args.format == "json":
        sys.stderr.write(f"check failed; rerun with --seed {args.seed} to reproduce\n")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopamp",
        description="Loop-sum transition probabilities, geometric phases, and the coin parable.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "table"), default="table")
        p.add_argument("--output", default=None, help="write to this file instead of stdout")

    p_berry = sub.add_parser("berry", help="loop product and geometric phase of labeled states")
    p_berry.add_argument(
        "--states", default="octant", help="states JSON file or builtin name (octant)"
    )
    p_berry.add_argument(
        "--path", required=True, help="comma-separated state labels, e.g. z,x,y"
    )
    add_common(p_berry)
    p_berry.set_defaults(func=cmd_berry)

    p_prob = sub.add_parser("prob", help="loop-sum transition report for a layered graph")
    p_prob.add_argument(
        "--graph",
        default="two-route",
        help="graph JSON file or builtin name (one-route, two-route)",
    )
    p_prob.add_argument(
        "--decohere", action="store_true", help="tag routes at the final state (prunes mixed loops)"
    )
    add_common(p_prob)
    p_prob.set_defaults(func=cmd_prob)

    p_par = sub.add_parser("parable", help="exact coin tables and optional Monte Carlo")
    p_par.add_argument(
        "--world", default="town", help="world JSON file or builtin name (town)"
    )
    p_par.add_argument("--policy", required=True, choices=("diligent", "fickle"))
    p_par.add_argument(
        "--days", type=int, default=0, help="simulated days; 0 means exact tables only"
    )
    p_par.add_argument("--seed", type=int, default=0)
    add_common(p_par)
    p_par.set_defaults(func=cmd_parable)

    p_check = sub.add_parser("check", help="randomized invariant suite")
    p_check.add_argument("--trials", type=int, default=100)
    p_check.add_argument("--max-dim", type=int, default=8)
    p_check.add_argument("--max-routes", type=int, default=6)
    p_check.add_argument("--seed", type=int, default=0)
    add_common(p_check)
    p_check.set_defaults(func=cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownLabelError as exc:
        label = exc.args[0] if exc.args else "?"
        sys.stderr.write(f"error: unknown label {label!r}\n")
        return EXIT_UNKNOWN_LABEL
    except UndefinedPhaseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_UNDEFINED_PHASE
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError, LoopampError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BAD_INPUT


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
