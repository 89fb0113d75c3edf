"""Seeded randomized sweeps over the package's core invariants.

Each sweep draws all randomness from the seed it is given, records the
worst deviation it saw, and compares against the documented tolerance, so
any failure can be reproduced exactly by rerunning with the same
arguments.  ``run_checks`` bundles every sweep into one report.
"""

from __future__ import annotations

import math

import numpy as np

from .hilbert import phase_distance, random_state
from .loops import CyclicPath, apply_gauge_to_path, berry_phase, gamma_product
from .report import CheckReport, InvariantRecord, record_from_sweep
from .transitions import (
    TransitionGraph,
    WhichPathTag,
    classical_probability,
    born_probability,
    decohere,
    enumerate_closed_loops,
    gamma_rule_probability,
    gauge_transform_graph,
    interference_terms,
    verify_tagged_equivalence,
)

GAUGE_TOLERANCE = 1e-12
BORN_TOLERANCE = 1e-12
PAIRING_TOLERANCE = 1e-15
REVERSAL_TOLERANCE = 1e-15
SHIFT_TOLERANCE = 1e-15
PRUNING_TOLERANCE = 1e-12


def _child_seeds(rng: np.random.Generator, count: int) -> np.ndarray:
    return rng.integers(0, 2**63, size=count)


def random_cyclic_path(rng: np.random.Generator, max_dim: int = 8) -> CyclicPath:
    """Random loop: 2..6 independent random states in one random dimension."""
    dim = int(rng.integers(2, max_dim + 1))
    length = int(rng.integers(2, 7))
    seeds = _child_seeds(rng, length)
    return CyclicPath(tuple(random_state(dim, int(s)) for s in seeds))


def random_graph(
    rng: np.random.Generator,
    max_dim: int = 8,
    max_routes: int = 6,
    max_interior_layers: int = 3,
    interior_layers: int | None = None,
) -> TransitionGraph:
    """Random layered graph with fully random states.

    Dimension is 2..max_dim; interior layer count is 1..max_interior_layers
    unless pinned; each interior layer holds 1..max_routes states.
    """
    dim = int(rng.integers(2, max_dim + 1))
    depth = interior_layers if interior_layers is not None else int(
        rng.integers(1, max_interior_layers + 1)
    )
    sizes = [int(rng.integers(1, max_routes + 1)) for _ in range(depth)]
    states = {}
    layers: list[tuple[str, ...]] = []
    seeds = iter(_child_seeds(rng, 2 + sum(sizes)))
    states["i"] = random_state(dim, int(next(seeds)))
    layers.append(("i",))
    for layer_no, size in enumerate(sizes, start=1):
        labels = []
        for k in range(size):
            label = f"m{layer_no}_{k}"
            states[label] = random_state(dim, int(next(seeds)))
            labels.append(label)
        layers.append(tuple(labels))
    states["f"] = random_state(dim, int(next(seeds)))
    layers.append(("f",))
    return TransitionGraph(states, tuple(layers))


def check_loop_gauge_invariance(trials: int, max_dim: int, seed: int) -> list[InvariantRecord]:
    """Gamma and the geometric phase must survive per-state gauge angles."""
    rng = np.random.default_rng(seed)
    worst_gamma = 0.0
    worst_phase = 0.0
    for _ in range(trials):
        path = random_cyclic_path(rng, max_dim)
        phases = rng.uniform(-math.pi, math.pi, size=len(path))
        gauged = apply_gauge_to_path(path, phases)
        gamma = gamma_product(path)
        worst_gamma = max(worst_gamma, abs(gamma_product(gauged) - gamma))
        if gamma != 0:
            worst_phase = max(
                worst_phase, phase_distance(berry_phase(gauged), berry_phase(path))
            )
    return [
        record_from_sweep("gauge-invariance-gamma", trials, worst_gamma, GAUGE_TOLERANCE, seed),
        record_from_sweep("gauge-invariance-phase", trials, worst_phase, GAUGE_TOLERANCE, seed),
    ]


def check_reversal_conjugation(trials: int, max_dim: int, seed: int) -> list[InvariantRecord]:
    """Traversing a loop backwards conjugates its product."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        path = random_cyclic_path(rng, max_dim)
        worst = max(
            worst, abs(gamma_product(path.reversed()) - gamma_product(path).conjugate())
        )
    return [record_from_sweep("reversal-conjugation", trials, worst, REVERSAL_TOLERANCE, seed)]


def check_cyclic_shift(trials: int, max_dim: int, seed: int) -> list[InvariantRecord]:
    """Starting the same cycle anywhere leaves its product alone."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        path = random_cyclic_path(rng, max_dim)
        k = int(rng.integers(0, len(path)))
        worst = max(worst, abs(gamma_product(path.rotated(k)) - gamma_product(path)))
    return [record_from_sweep("cyclic-shift-invariance", trials, worst, SHIFT_TOLERANCE, seed)]


def check_gamma_rule_vs_born(
    trials: int, max_dim: int, max_routes: int, seed: int
) -> list[InvariantRecord]:
    """The loop sum must match the squared summed amplitudes on every graph."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        graph = random_graph(rng, max_dim, max_routes)
        worst = max(worst, abs(gamma_rule_probability(graph) - born_probability(graph)))
    return [record_from_sweep("gamma-rule-vs-born", trials, worst, BORN_TOLERANCE, seed)]


def check_conjugate_pairing(
    trials: int, max_dim: int, max_routes: int, seed: int
) -> list[InvariantRecord]:
    """Swapping outbound and inbound paths must conjugate a loop's product."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        graph = random_graph(rng, max_dim, max_routes)
        ensemble = enumerate_closed_loops(graph)
        by_pair = {(ev.loop.outbound, ev.loop.inbound): ev.gamma for ev in ensemble.loops}
        for (out, inb), gamma in by_pair.items():
            worst = max(worst, abs(by_pair[(inb, out)] - gamma.conjugate()))
    return [record_from_sweep("conjugate-pairing", trials, worst, PAIRING_TOLERANCE, seed)]


def check_graph_gauge_invariance(
    trials: int, max_dim: int, max_routes: int, seed: int
) -> list[InvariantRecord]:
    """Independent per-state gauge angles must not move the probability."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        graph = random_graph(rng, max_dim, max_routes)
        phases = {label: float(t) for label, t in zip(
            graph.states, rng.uniform(-math.pi, math.pi, size=len(graph.states))
        )}
        gauged = gauge_transform_graph(graph, phases)
        worst = max(
            worst,
            abs(gamma_rule_probability(gauged) - gamma_rule_probability(graph)),
        )
    return [
        record_from_sweep("gauge-invariance-probability", trials, worst, GAUGE_TOLERANCE, seed)
    ]


def check_decoherence_pruning(
    trials: int, max_dim: int, max_routes: int, seed: int
) -> list[InvariantRecord]:
    """Tagged pruning must restore the route-exclusive addition law, and must
    agree with the explicit composite-space construction."""
    rng = np.random.default_rng(seed)
    worst_prune = 0.0
    worst_classical = 0.0
    worst_composite = 0.0
    for _ in range(trials):
        graph = random_graph(rng, max_dim, max_routes, interior_layers=1)
        pruned = decohere(graph, WhichPathTag.TAGGED)
        worst_prune = max(
            worst_prune, abs(pruned.probability - classical_probability(graph))
        )
        worst_classical = max(worst_classical, abs(interference_terms(graph, pruned)))
        report = verify_tagged_equivalence(graph, int(rng.integers(0, 2**63)))
        worst_composite = max(worst_composite, report.records[0].max_deviation)
    return [
        record_from_sweep("decoherence-pruning", trials, worst_prune, PRUNING_TOLERANCE, seed),
        record_from_sweep(
            "classical-law-restoration", trials, worst_classical, PRUNING_TOLERANCE, seed
        ),
        record_from_sweep(
            "tagged-composite-equivalence", trials, worst_composite, PRUNING_TOLERANCE, seed
        ),
    ]


def run_checks(
    trials: int = 100, max_dim: int = 8, max_routes: int = 6, seed: int = 0
) -> CheckReport:
    """Run every invariant sweep and bundle the records into one report.

    Deterministic: identical arguments give an identical report.  Each
    sweep gets its own sub-seed derived from the master seed, so sweeps
    stay reproducible in isolation too.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if max_dim < 2:
        raise ValueError(f"max_dim must be >= 2, got {max_dim}")
    if max_routes < 1:
        raise ValueError(f"max_routes must be >= 1, got {max_routes}")
    subseeds = np.random.default_rng(seed).integers(0, 2**63, size=7)
    records: list[InvariantRecord] = []
    records += check_loop_gauge_invariance(trials, max_dim, int(subseeds[0]))
    records += check_reversal_conjugation(trials, max_dim, int(subseeds[1]))
    records += check_cyclic_shift(trials, max_dim, int(subseeds[2]))
    records += check_gamma_rule_vs_born(trials, max_dim, max_routes, int(subseeds[3]))
    records += check_conjugate_pairing(trials, max_dim, max_routes, int(subseeds[4]))
    records += check_graph_gauge_invariance(trials, max_dim, max_routes, int(subseeds[5]))
    records += check_decoherence_pruning(trials, max_dim, max_routes, int(subseeds[6]))
    return CheckReport(tuple(records))
