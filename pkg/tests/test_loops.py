"""Cyclic paths: overlap products, geometric phases, gauge behavior."""

import cmath
import math

import numpy as np
import pytest

from loopamp import (
    CyclicPath,
    DimensionMismatchError,
    StateVector,
    UndefinedPhaseError,
    apply_gauge_to_path,
    basis_state,
    berry_phase,
    gamma_product,
    phase_distance,
    random_state,
)

INV_SQRT2 = 1.0 / math.sqrt(2.0)

ZERO = basis_state(2, 0, label="z")
ONE = basis_state(2, 1, label="minusz")
PLUS = StateVector(np.array([INV_SQRT2, INV_SQRT2], dtype=complex), label="x")
PLUS_I = StateVector(np.array([INV_SQRT2, INV_SQRT2 * 1j]), label="y")


def random_path(rng, dim=None, length=None):
    dim = dim or int(rng.integers(2, 7))
    length = length or int(rng.integers(2, 7))
    seeds = rng.integers(0, 2**63, size=length)
    return CyclicPath(tuple(random_state(dim, int(s)) for s in seeds))


class TestCyclicPath:
    def test_needs_two_states(self):
        with pytest.raises(ValueError, match="at least 2"):
            CyclicPath((ZERO,))

    def test_needs_matching_dims(self):
        with pytest.raises(DimensionMismatchError):
            CyclicPath((ZERO, basis_state(3, 0)))

    def test_len_and_dim(self):
        path = CyclicPath((ZERO, PLUS, PLUS_I))
        assert len(path) == 3
        assert path.dim == 2

    def test_holds_states_by_reference(self):
        path = CyclicPath((ZERO, PLUS))
        assert path.states[0] is ZERO


class TestGammaProduct:
    def test_repeated_state_gives_one(self):
        s = random_state(4, 11)
        assert gamma_product(CyclicPath((s, s))) == pytest.approx(1.0 + 0j, abs=1e-14)

    def test_two_state_overlap_square(self):
        # <x|z><z|x> = (1/sqrt2)**2 = 1/2
        assert gamma_product(CyclicPath((ZERO, PLUS))) == pytest.approx(0.5 + 0j, abs=1e-14)

    def test_orthogonal_pair_vanishes_exactly(self):
        assert gamma_product(CyclicPath((ZERO, ONE, PLUS))) == 0

    def test_octant_loop_product(self):
        # <x|z> * <y|x> * <z|y> = (1/sqrt2) * ((1-1j)/2) * (1/sqrt2) = (1-1j)/4
        gamma = gamma_product(CyclicPath((ZERO, PLUS, PLUS_I)))
        assert gamma == pytest.approx(0.25 - 0.25j, abs=1e-14)

    def test_modulus_bounded_by_one(self):
        rng = np.random.default_rng(21)
        for _ in range(100):
            assert abs(gamma_product(random_path(rng))) <= 1.0 + 1e-12


class TestBerryPhase:
    def test_octant_phase_is_quarter_pi(self):
        phase = berry_phase(CyclicPath((ZERO, PLUS, PLUS_I)))
        # independent cross-check: negated log-argument of the hand product
        assert phase == pytest.approx(-cmath.log((1 - 1j) / 4).imag, abs=1e-15)
        assert phase == pytest.approx(math.pi / 4, abs=1e-12)

    def test_two_state_loops_have_zero_phase(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            path = random_path(rng, length=2)
            assert berry_phase(path) == 0.0

    def test_phase_lies_on_principal_branch(self):
        rng = np.random.default_rng(6)
        for _ in range(100):
            phase = berry_phase(random_path(rng))
            assert -math.pi < phase <= math.pi

    def test_zero_product_has_no_phase(self):
        with pytest.raises(
            UndefinedPhaseError, match="orthogonal adjacent states"
        ):
            berry_phase(CyclicPath((ZERO, ONE)))

    def test_reversal_negates_phase(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            path = random_path(rng)
            assert phase_distance(berry_phase(path.reversed()), -berry_phase(path)) < 1e-12


class TestGaugeInvariance:
    def test_gamma_and_phase_survive_gauging(self):
        rng = np.random.default_rng(8)
        worst_gamma = 0.0
        worst_phase = 0.0
        for _ in range(200):
            path = random_path(rng)
            phases = rng.uniform(-math.pi, math.pi, size=len(path))
            gauged = apply_gauge_to_path(path, phases)
            worst_gamma = max(worst_gamma, abs(gamma_product(gauged) - gamma_product(path)))
            worst_phase = max(
                worst_phase, phase_distance(berry_phase(gauged), berry_phase(path))
            )
        assert worst_gamma < 1e-12
        assert worst_phase < 1e-12

    def test_single_state_phase_cancels_exactly_in_structure(self):
        # gauging one state multiplies one factor by exp(i t) and another by
        # its conjugate; the product moves by at most a rounding error
        path = CyclicPath((ZERO, PLUS, PLUS_I))
        gauged = apply_gauge_to_path(path, [0.0, 2.1, 0.0])
        assert gamma_product(gauged) == pytest.approx(0.25 - 0.25j, abs=1e-14)

    def test_angle_count_must_match(self):
        with pytest.raises(ValueError, match="one gauge angle per state"):
            apply_gauge_to_path(CyclicPath((ZERO, PLUS)), [0.1])


class TestLoopAlgebra:
    def test_reversal_conjugates_product(self):
        rng = np.random.default_rng(9)
        for _ in range(100):
            path = random_path(rng)
            assert abs(
                gamma_product(path.reversed()) - gamma_product(path).conjugate()
            ) < 1e-15

    def test_rotation_preserves_product(self):
        rng = np.random.default_rng(10)
        for _ in range(100):
            path = random_path(rng)
            k = int(rng.integers(0, len(path)))
            assert abs(gamma_product(path.rotated(k)) - gamma_product(path)) < 1e-15

    def test_rotation_by_length_is_identity(self):
        path = CyclicPath((ZERO, PLUS, PLUS_I))
        assert path.rotated(3).states == path.states
