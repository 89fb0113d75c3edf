"""Layered transition graphs and loop-sum transition probabilities.

A graph fixes one initial state, one final state, and any number of
intermediate layers in between.  A forward path picks one state from each
layer in order; a closed loop is an ordered pair of forward paths,
traversed out along the first and back along the second.  Summing the
cyclic overlap product of every closed loop gives a real number equal to
the squared modulus of the summed route amplitudes, so the loop sum *is*
the transition probability.  Diagonal loops (outbound == inbound)
contribute the route-exclusive terms |amp_k|^2; the mixed loops carry
exactly the interference cross-terms, and which-path tagging of the final
state removes them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

import numpy as np

from .errors import (
    DimensionMismatchError,
    InconsistentEnsembleError,
    UnknownLabelError,
    UnsupportedConfigurationError,
)
from .hilbert import StateVector, gauge_transform, inner_product, components_to_pairs, pairs_to_components
from .loops import CyclicPath, gamma_product
from .report import CheckReport, record_from_sweep

#: Loop sums must be real and nonnegative up to this absolute slack.
ENSEMBLE_TOLERANCE = 1e-12


def _csum(values: Iterable[complex]) -> complex:
    """Compensated complex sum: exactly rounded, so large ensembles do not
    drift and reruns agree bit for bit."""
    pairs = [(z.real, z.imag) for z in values]
    return complex(math.fsum(p[0] for p in pairs), math.fsum(p[1] for p in pairs))

#: A forward path is the tuple of labels it visits, one per layer.
ForwardPath = tuple[str, ...]


class WhichPathTag(Enum):
    """Whether the final state keeps a record of the route taken to reach it."""

    UNTAGGED = "untagged"
    TAGGED = "tagged"


@dataclass(frozen=True, eq=False)
class TransitionGraph:
    """States keyed by label plus layers of labels from initial to final.

    The first and last layers hold exactly one label each; every interior
    layer is nonempty.  A two-layer graph (no interior) models the direct
    transition.
    """

    states: Mapping[str, StateVector]
    layers: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        states = dict(self.states)
        layers = tuple(tuple(layer) for layer in self.layers)
        if len(layers) < 2:
            raise ValueError(f"a graph needs at least initial and final layers, got {len(layers)}")
        if len(layers[0]) != 1 or len(layers[-1]) != 1:
            raise ValueError("first and last layers must hold exactly one label each")
        for k, layer in enumerate(layers[1:-1], start=1):
            if not layer:
                raise ValueError(f"interior layer {k} is empty")
        dims = set()
        for layer in layers:
            for label in layer:
                if label not in states:
                    raise UnknownLabelError(label)
                dims.add(states[label].dim)
        if len(dims) > 1:
            raise DimensionMismatchError(
                f"all states in a graph must share one dimension, got {sorted(dims)}"
            )
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "layers", layers)

    @property
    def initial_label(self) -> str:
        return self.layers[0][0]

    @property
    def final_label(self) -> str:
        return self.layers[-1][0]

    @property
    def interior_layers(self) -> tuple[tuple[str, ...], ...]:
        return self.layers[1:-1]

    @property
    def dim(self) -> int:
        return self.states[self.initial_label].dim

    def state(self, label: str) -> StateVector:
        try:
            return self.states[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def to_json(self, tagged: bool = False) -> dict:
        return {
            "states": {
                label: components_to_pairs(s.components) for label, s in self.states.items()
            },
            "layers": [list(layer) for layer in self.layers],
            "tagged": tagged,
        }

    @classmethod
    def from_json(cls, obj: dict) -> tuple["TransitionGraph", bool]:
        """Decode a graph plus its which-path flag (missing flag means untagged)."""
        states = {
            label: StateVector(pairs_to_components(pairs), label=label)
            for label, pairs in obj["states"].items()
        }
        layers = tuple(tuple(layer) for layer in obj["layers"])
        return cls(states, layers), bool(obj.get("tagged", False))


@dataclass(frozen=True)
class ClosedLoop:
    """An (outbound, inbound) pair of forward paths through the same graph."""

    outbound: ForwardPath
    inbound: ForwardPath

    @property
    def is_diagonal(self) -> bool:
        return self.outbound == self.inbound


@dataclass(frozen=True)
class EvaluatedLoop:
    loop: ClosedLoop
    gamma: complex


@dataclass(frozen=True)
class LoopEnsemble:
    """Every enumerated loop with its overlap product, plus their ordered sum."""

    loops: tuple[EvaluatedLoop, ...]
    total: complex

    @property
    def probability(self) -> float:
        """Real part of the loop sum, once its consistency bounds hold.

        Raises:
            InconsistentEnsembleError: the imaginary residue exceeds
                ENSEMBLE_TOLERANCE, or the real part is negative beyond it.
                Values in [-tolerance, 0) clamp to exactly 0.
        """
        if abs(self.total.imag) > ENSEMBLE_TOLERANCE:
            raise InconsistentEnsembleError(
                f"loop sum has imaginary residue {self.total.imag:.3e}; "
                "loops no longer pair into conjugates"
            )
        p = self.total.real
        if p < 0.0:
            if p < -ENSEMBLE_TOLERANCE:
                raise InconsistentEnsembleError(
                    f"loop sum is negative ({p:.3e}) beyond tolerance"
                )
            p = 0.0
        return p


def forward_paths(graph: TransitionGraph) -> list[ForwardPath]:
    """All forward paths in lexicographic layer-member order."""
    return list(itertools.product(*graph.layers))


def forward_amplitude(graph: TransitionGraph, path: Iterable[str]) -> complex:
    """Product of hop overlaps <next|current> along a forward path.

    A two-layer graph gives the bare overlap <final|initial>.

    Raises:
        UnknownLabelError: a label is not in the graph's state table.
        ValueError: the path does not pick one member from each layer.
    """
    labels = tuple(path)
    if len(labels) != len(graph.layers):
        raise ValueError(
            f"path length {len(labels)} does not match layer count {len(graph.layers)}"
        )
    for k, (label, layer) in enumerate(zip(labels, graph.layers)):
        if label not in layer:
            graph.state(label)  # raises UnknownLabelError if unresolvable
            raise ValueError(f"label {label!r} is not a member of layer {k}")
    amp = 1.0 + 0.0j
    for cur, nxt in zip(labels, labels[1:]):
        amp *= inner_product(graph.state(nxt), graph.state(cur))
    return amp


def loop_cyclic_path(graph: TransitionGraph, loop: ClosedLoop) -> CyclicPath:
    """The state cycle a loop induces: out to the final state, back along the
    inbound path's interior in reverse, closing at the initial state."""
    out_states = [graph.state(label) for label in loop.outbound]
    back_states = [graph.state(label) for label in loop.inbound[-2:0:-1]]
    return CyclicPath(tuple(out_states + back_states))


def enumerate_closed_loops(graph: TransitionGraph) -> LoopEnsemble:
    """Evaluate every (outbound, inbound) loop in lexicographic order.

    With k forward paths the ensemble holds exactly k**2 loops.  The total
    uses compensated summation, so it is exactly rounded and repeated
    calls agree bit for bit even on large ensembles.
    """
    paths = forward_paths(graph)
    evaluated = []
    for out in paths:
        for inb in paths:
            loop = ClosedLoop(out, inb)
            gamma = gamma_product(loop_cyclic_path(graph, loop))
            evaluated.append(EvaluatedLoop(loop, gamma))
    return LoopEnsemble(tuple(evaluated), _csum(ev.gamma for ev in evaluated))


def gamma_rule_probability(graph: TransitionGraph) -> float:
    """Transition probability as the real part of the closed-loop sum."""
    return enumerate_closed_loops(graph).probability


def born_probability(graph: TransitionGraph) -> float:
    """Squared modulus of the summed route amplitudes.

    Computed directly from forward amplitudes, with no loop machinery, so
    it serves as an independent cross-check of the loop sum.
    """
    amp = _csum(forward_amplitude(graph, path) for path in forward_paths(graph))
    return abs(amp) ** 2


def classical_probability(graph: TransitionGraph) -> float:
    """Route-exclusive sum of squared route amplitudes (no cross-terms)."""
    return math.fsum(
        abs(forward_amplitude(graph, path)) ** 2 for path in forward_paths(graph)
    )


def interference_terms(graph: TransitionGraph, ensemble: LoopEnsemble | None = None) -> float:
    """Loop-sum probability minus the route-exclusive sum.

    Equals the summed overlap products of the mixed loops (outbound !=
    inbound).  Pass a pruned ensemble to measure what interference is left
    after which-path tagging; by default the full ensemble is used.
    """
    p = ensemble.probability if ensemble is not None else gamma_rule_probability(graph)
    return p - classical_probability(graph)


def decohere(graph: TransitionGraph, tag: WhichPathTag) -> LoopEnsemble:
    """Loop ensemble once the final state does or does not record the route.

    Untagged: the full ensemble, unchanged.  Tagged: orthogonal route
    records kill every mixed loop, so only the diagonal loops survive and
    the probability falls back to the route-exclusive sum.

    Raises:
        UnsupportedConfigurationError: tagged mode on a graph that does not
            have exactly one interior layer.
    """
    full = enumerate_closed_loops(graph)
    if tag is WhichPathTag.UNTAGGED:
        return full
    interior = len(graph.layers) - 2
    if interior != 1:
        raise UnsupportedConfigurationError(
            f"which-path tagging needs exactly one interior layer, graph has {interior}"
        )
    kept = tuple(ev for ev in full.loops if ev.loop.is_diagonal)
    return LoopEnsemble(kept, _csum(ev.gamma for ev in kept))


def gauge_transform_graph(graph: TransitionGraph, phases: Mapping[str, float]) -> TransitionGraph:
    """Gauge each labeled state by its own angle; observables must not move.

    Labels absent from ``phases`` keep their state untouched.
    """
    states = {
        label: gauge_transform(s, phases[label]) if label in phases else s
        for label, s in graph.states.items()
    }
    return TransitionGraph(states, graph.layers)


def verify_tagged_equivalence(graph: TransitionGraph, seed: int) -> CheckReport:
    """Cross-check pruning against an explicit composite-space computation.

    Appends a random orthonormal environment tag to the final state per
    route (tags drawn by QR from a seeded complex Gaussian matrix), sums
    the squared-modulus probability over tag outcomes in the enlarged
    space, and compares with the pruned loop sum.  Failures are reported
    in the returned record, not raised.
    """
    pruned = decohere(graph, WhichPathTag.TAGGED).probability
    routes = graph.layers[1]
    n_routes = len(routes)
    rng = np.random.default_rng(seed)
    raw = rng.standard_normal((n_routes, n_routes)) + 1j * rng.standard_normal(
        (n_routes, n_routes)
    )
    tags, _ = np.linalg.qr(raw)
    final = graph.state(graph.final_label)
    tagged_finals = [
        StateVector(np.kron(final.components, tags[:, k]), label=f"{graph.final_label}*{routes[k]}")
        for k in range(n_routes)
    ]
    route_amps = [
        forward_amplitude(graph, (graph.initial_label, route, graph.final_label))
        for route in routes
    ]
    born_sum = 0.0
    for outcome in tagged_finals:
        amp = sum(
            a * inner_product(outcome, reached)
            for a, reached in zip(route_amps, tagged_finals)
        )
        born_sum += abs(amp) ** 2
    deviation = abs(born_sum - pruned)
    record = record_from_sweep(
        "tagged-composite-equivalence", 1, deviation, ENSEMBLE_TOLERANCE, seed
    )
    return CheckReport((record,))
