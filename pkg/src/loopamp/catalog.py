"""Built-in example inputs.

These ship embedded so every headline number is reproducible without
writing input files: the octant state set (geometric phase pi/4), one- and
two-route demonstration graphs, and the two-road town world.
"""

from __future__ import annotations

import math

import numpy as np

from .hilbert import StateVector
from .parable import ParableWorld
from .transitions import TransitionGraph

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def octant_states() -> dict[str, StateVector]:
    """Spin-1/2 cardinal states: +z, +x, +y, and -z.

    The loop z -> x -> y closes one octant of the sphere; its loop product
    is (1 - 1j)/4 and its geometric phase is +pi/4 (half the enclosed
    solid angle).  The pair (z, minusz) is orthogonal, so any loop putting
    them adjacent has a zero product and no phase.
    """
    return {
        "z": StateVector(np.array([1.0, 0.0], dtype=complex), label="z"),
        "x": StateVector(np.array([_INV_SQRT2, _INV_SQRT2], dtype=complex), label="x"),
        "y": StateVector(np.array([_INV_SQRT2, _INV_SQRT2 * 1j]), label="y"),
        "minusz": StateVector(np.array([0.0, 1.0], dtype=complex), label="minusz"),
    }


def one_route_graph() -> TransitionGraph:
    """Single route |0> -> |+> -> |1>: one loop, probability 1/4."""
    states = {
        "i": StateVector(np.array([1.0, 0.0], dtype=complex), label="i"),
        "m": StateVector(np.array([_INV_SQRT2, _INV_SQRT2], dtype=complex), label="m"),
        "f": StateVector(np.array([0.0, 1.0], dtype=complex), label="f"),
    }
    return TransitionGraph(states, (("i",), ("m",), ("f",)))


def two_route_graph() -> TransitionGraph:
    """Two routes |0> -> {|+>, |->} -> |1> with amplitudes +1/2 and -1/2.

    Fully destructive: the loop sum and the squared summed amplitudes are
    both 0.  With which-path tagging the mixed loops drop and the
    probability comes back as 1/4 + 1/4 = 1/2.
    """
    states = {
        "i": StateVector(np.array([1.0, 0.0], dtype=complex), label="i"),
        "m1": StateVector(np.array([_INV_SQRT2, _INV_SQRT2], dtype=complex), label="m1"),
        "m2": StateVector(np.array([_INV_SQRT2, -_INV_SQRT2], dtype=complex), label="m2"),
        "f": StateVector(np.array([0.0, 1.0], dtype=complex), label="f"),
    }
    return TransitionGraph(states, (("i",), ("m1", "m2"), ("f",)))


def town_world() -> ParableWorld:
    """Two roads, three gates; the middle gate is the shared one.

    Road A reaches gates 1 and 2, road B reaches gates 2 and 3, giving the
    six round trips A1A*, A2A*, A2B*, B2A*, B2B*, B3B*.
    """
    return ParableWorld(
        roads=("A", "B"),
        gates=("1", "2", "3"),
        access={"A": ("1", "2"), "B": ("2", "3")},
    )


BUILTIN_STATE_SETS = {"octant": octant_states}
BUILTIN_GRAPHS = {"one-route": one_route_graph, "two-route": two_route_graph}
BUILTIN_WORLDS = {"town": town_world}
