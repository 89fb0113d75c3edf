"""Transition probabilities as sums of closed-loop amplitude products.

The package computes the overlap product around closed cycles of state
vectors (gauge invariant, with the discrete geometric phase as its negated
log-argument), sums those products over the closed loops of a layered
transition graph to recover the squared-modulus transition probability,
prunes the interference-carrying mixed loops under which-path tagging,
and reproduces the same additive/cancelling structure in an exactly
solvable classical coin parable.
"""

from .errors import (
    DimensionMismatchError,
    InconsistentEnsembleError,
    LoopampError,
    UndefinedPhaseError,
    UnknownLabelError,
    UnsupportedConfigurationError,
)
from .hilbert import (
    NORM_TOLERANCE,
    PolarForm,
    StateVector,
    basis_state,
    gauge_transform,
    inner_product,
    phase_distance,
    polar,
    principal_phase,
    random_state,
)
from .loops import CyclicPath, apply_gauge_to_path, berry_phase, gamma_product
from .parable import (
    CoinPolicy,
    GateEmpirical,
    GateLedger,
    ParableWorld,
    RoundTrip,
    enumerate_round_trips,
    expected_coins,
    ledger_table,
    ledger_to_json,
    marginal_route_probability,
    monte_carlo,
)
from .report import CheckReport, InvariantRecord
from .checks import run_checks
from .transitions import (
    ENSEMBLE_TOLERANCE,
    ClosedLoop,
    EvaluatedLoop,
    ForwardPath,
    LoopEnsemble,
    TransitionGraph,
    WhichPathTag,
    born_probability,
    classical_probability,
    decohere,
    enumerate_closed_loops,
    forward_amplitude,
    forward_paths,
    gamma_rule_probability,
    gauge_transform_graph,
    interference_terms,
    loop_cyclic_path,
    verify_tagged_equivalence,
)

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "ClosedLoop",
    "CoinPolicy",
    "CyclicPath",
    "DimensionMismatchError",
    "ENSEMBLE_TOLERANCE",
    "EvaluatedLoop",
    "ForwardPath",
    "GateEmpirical",
    "GateLedger",
    "InconsistentEnsembleError",
    "InvariantRecord",
    "LoopEnsemble",
    "LoopampError",
    "NORM_TOLERANCE",
    "ParableWorld",
    "PolarForm",
    "RoundTrip",
    "StateVector",
    "TransitionGraph",
    "UndefinedPhaseError",
    "UnknownLabelError",
    "UnsupportedConfigurationError",
    "WhichPathTag",
    "apply_gauge_to_path",
    "basis_state",
    "berry_phase",
    "born_probability",
    "classical_probability",
    "decohere",
    "enumerate_closed_loops",
    "enumerate_round_trips",
    "expected_coins",
    "forward_amplitude",
    "forward_paths",
    "gamma_product",
    "gamma_rule_probability",
    "gauge_transform",
    "gauge_transform_graph",
    "inner_product",
    "interference_terms",
    "ledger_table",
    "ledger_to_json",
    "loop_cyclic_path",
    "marginal_route_probability",
    "monte_carlo",
    "phase_distance",
    "polar",
    "principal_phase",
    "random_state",
    "run_checks",
    "verify_tagged_equivalence",
]
