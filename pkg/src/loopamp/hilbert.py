"""Finite-dimensional state vectors, overlaps, and phase conventions.

A state is an immutable unit-norm vector of complex amplitudes.  The
polar split of an amplitude follows the convention

    amplitude = r * exp(-1j * theta),

so ``theta`` is the *negated* principal argument.  Every phase produced
by this package lives on the principal branch, the half-open interval
(-pi, pi]; an angle that lands exactly on -pi is reported as +pi.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatchError, UndefinedPhaseError

#: Constructors reject vectors whose Euclidean norm strays further than
#: this from 1.  Silent renormalization would hide caller bugs; use
#: :meth:`StateVector.normalized` when rescaling is intended.
NORM_TOLERANCE = 1e-6

TWO_PI = 2.0 * math.pi


def principal_phase(theta: float) -> float:
    """Map an angle in radians onto the principal branch (-pi, pi].

    An input of exactly -pi (or any odd multiple of pi) comes back as +pi,
    and -0.0 is normalized to +0.0 so reports never print a signed zero.
    """
    if not math.isfinite(theta):
        raise ValueError(f"phase must be finite, got {theta!r}")
    # math.remainder lands in [-pi, pi]; only the closed lower end needs fixing.
    folded = math.remainder(theta, TWO_PI)
    if folded == -math.pi:
        folded = math.pi
    return folded + 0.0


def phase_distance(a: float, b: float) -> float:
    """Distance between two angles modulo 2*pi, i.e. min(|d|, 2*pi - |d|)."""
    return abs(math.remainder(a - b, TWO_PI))


class PolarForm(NamedTuple):
    """Polar split of a nonzero amplitude under the negative-sign convention."""

    modulus: float
    phase: float

    def reconstruct(self) -> complex:
        """The amplitude this form was taken from: modulus * exp(-1j * phase)."""
        return self.modulus * cmath.exp(-1j * self.phase)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Unit-norm vector of complex amplitudes with an optional display label.

    The component array is copied on construction and frozen, so instances
    can be shared freely (graphs and paths hold states by reference).

    Raises:
        ValueError: components are empty, not one-dimensional, not finite,
            or their norm deviates from 1 by more than ``NORM_TOLERANCE``.
    """

    components: np.ndarray
    label: str | None = None

    def __post_init__(self) -> None:
        arr = np.array(self.components, dtype=np.complex128, copy=True)
        if arr.ndim != 1:
            raise ValueError(f"components must be a flat sequence, got shape {arr.shape}")
        if arr.size == 0:
            raise ValueError("a state needs at least one component")
        if not np.all(np.isfinite(arr)):
            raise ValueError("components must be finite")
        norm = float(np.linalg.norm(arr))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise ValueError(
                f"norm is {norm:.9g}, not 1 within {NORM_TOLERANCE:g}; "
                "use StateVector.normalized to rescale on purpose"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "components", arr)

    @classmethod
    def normalized(cls, components, label: str | None = None) -> "StateVector":
        """Build a state from any nonzero vector, rescaling it to unit norm."""
        arr = np.asarray(components, dtype=np.complex128)
        norm = float(np.linalg.norm(arr))
        if norm == 0.0 or not math.isfinite(norm):
            raise ValueError("cannot normalize a zero or non-finite vector")
        return cls(arr / norm, label=label)

    @property
    def dim(self) -> int:
        return self.components.shape[0]

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label is not None else ""
        return f"<StateVector{name} dim={self.dim}>"

    def to_json(self) -> dict:
        """JSON object form: {"label": str, "components": [[re, im], ...]}."""
        return {
            "label": self.label if self.label is not None else "",
            "components": [[z.real, z.imag] for z in self.components.tolist()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "StateVector":
        return cls(pairs_to_components(obj["components"]), label=obj.get("label") or None)


def pairs_to_components(pairs) -> np.ndarray:
    """Decode a JSON [[re, im], ...] list into a complex array."""
    arr = np.asarray(pairs, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("components must be a list of [re, im] pairs")
    return arr[:, 0] + 1j * arr[:, 1]


def components_to_pairs(components) -> list[list[float]]:
    """Encode a complex vector as a JSON-friendly [[re, im], ...] list."""
    return [[z.real, z.imag] for z in np.asarray(components, dtype=np.complex128).tolist()]


def basis_state(dim: int, index: int, label: str | None = None) -> StateVector:
    """Standard basis vector |index> in the given dimension."""
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for dim {dim}")
    arr = np.zeros(dim, dtype=np.complex128)
    arr[index] = 1.0
    return StateVector(arr, label=label)


def inner_product(bra: StateVector, ket: StateVector) -> complex:
    """Overlap <bra|ket> = sum_k conj(bra_k) * ket_k.

    Raises:
        DimensionMismatchError: the two states live in different spaces.
    """
    if bra.dim != ket.dim:
        raise DimensionMismatchError(
            f"dimension mismatch: bra has dim {bra.dim}, ket has dim {ket.dim}"
        )
    return complex(np.vdot(bra.components, ket.components))


def polar(amplitude: complex) -> PolarForm:
    """Split a nonzero amplitude into (modulus, phase) with amp = r*exp(-1j*theta).

    The phase is the negated principal argument, folded into (-pi, pi].

    Raises:
        UndefinedPhaseError: the amplitude is exactly zero.
        ValueError: the amplitude is not finite.
    """
    z = complex(amplitude)
    if z == 0:
        raise UndefinedPhaseError("phase undefined at zero")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"amplitude must be finite, got {z!r}")
    return PolarForm(abs(z), principal_phase(-cmath.phase(z)))


def gauge_transform(state: StateVector, theta: float) -> StateVector:
    """Multiply every component by exp(1j*theta); physically the same state."""
    if not math.isfinite(theta):
        raise ValueError(f"gauge angle must be finite, got {theta!r}")
    return StateVector(state.components * cmath.exp(1j * theta), label=state.label)


def random_state(dim: int, seed: int) -> StateVector:
    """Normalized vector of i.i.d. standard complex Gaussians (uniform direction).

    Deterministic: the same (dim, seed) always yields the same state.
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    rng = np.random.default_rng(seed)
    while True:
        raw = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        norm = float(np.linalg.norm(raw))
        if norm > 0.0:
            return StateVector(raw / norm)
