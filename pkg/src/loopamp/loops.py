"""Cyclic state sequences and their phase-invariant overlap products.

A cyclic path visits states in order and wraps from the last entry back
to the first.  Multiplying the successive overlaps around the cycle gives
the Bargmann invariant of the sequence,

    Gamma = <s_1|s_N> ... <s_3|s_2> <s_2|s_1>,

which is unchanged when any member state picks up a unit phase: each
exp(1j*theta) enters once conjugated and once plain.  The negated
principal argument of Gamma is the discrete geometric (Berry) phase of
the loop.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatchError, UndefinedPhaseError
from .hilbert import StateVector, gauge_transform, inner_product, principal_phase


@dataclass(frozen=True, eq=False)
class CyclicPath:
    """An ordered tuple of at least two states, treated as a closed cycle.

    States are held by reference; building a path never copies amplitudes.
    """

    states: tuple[StateVector, ...]

    def __post_init__(self) -> None:
        states = tuple(self.states)
        if len(states) < 2:
            raise ValueError(f"a cyclic path needs at least 2 states, got {len(states)}")
        dims = {s.dim for s in states}
        if len(dims) > 1:
            raise DimensionMismatchError(
                f"all states on a path must share one dimension, got {sorted(dims)}"
            )
        object.__setattr__(self, "states", states)

    def __len__(self) -> int:
        return len(self.states)

    @property
    def dim(self) -> int:
        return self.states[0].dim

    def reversed(self) -> "CyclicPath":
        """The same cycle traversed in the opposite direction."""
        return CyclicPath(self.states[::-1])

    def rotated(self, k: int) -> "CyclicPath":
        """The same cycle started k positions later."""
        k %= len(self.states)
        return CyclicPath(self.states[k:] + self.states[:k])


def gamma_product(path: CyclicPath) -> complex:
    """Product of <next|current> overlaps around the cycle.

    Gauge invariant, and bounded by 1 in modulus for unit-norm states
    (equality only when every adjacent pair is parallel).  A zero value
    is a legitimate result: it means some adjacent pair is orthogonal.
    """
    states = path.states
    n = len(states)
    total = 1.0 + 0.0j
    for k in range(n):
        total *= inner_product(states[(k + 1) % n], states[k])
    return total


def berry_phase(path: CyclicPath) -> float:
    """Discrete geometric phase of the loop: -Im log(gamma_product), in (-pi, pi].

    Raises:
        UndefinedPhaseError: the loop product is zero, so no phase exists.
    """
    gamma = gamma_product(path)
    if gamma == 0:
        raise UndefinedPhaseError(
            "Berry phase undefined: loop contains orthogonal adjacent states"
        )
    return principal_phase(-cmath.phase(gamma))


def apply_gauge_to_path(path: CyclicPath, phases: Sequence[float]) -> CyclicPath:
    """Gauge each state on the path by its own angle; Gamma and the phase survive.

    Raises:
        ValueError: the phase list does not match the path length.
    """
    if len(phases) != len(path.states):
        raise ValueError(
            f"need one gauge angle per state: path has {len(path.states)}, got {len(phases)}"
        )
    return CyclicPath(
        tuple(gauge_transform(s, t) for s, t in zip(path.states, phases))
    )
