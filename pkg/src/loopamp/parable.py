"""Round trips and coin bookkeeping for the road-and-gate town.

A world names the roads into town, the toll gates, and which gates each
road reaches.  A traveler goes in by one road through one gate and must
leave through the *same gate*, by any road that reaches it, so a round
trip is the triple (road out, gate, road back).  Trips are drawn
uniformly, one per day.

Two payment policies:

* diligent: deposit one coin in the gate's box, every day.
* fickle: deposit one coin when returning by the road you came on,
  withdraw one when returning by a different road.  At a gate shared by
  several roads the deposits and withdrawals cancel, which is how a purely
  classical bookkeeping rule mimics destructive interference.

Exact results are integer rationals throughout.  Two exact quantities are
kept per gate: ``rate``, the expected coin delta per day under the rules
above, and ``expected``, that gate's share of the town's net coin intake
(rate divided by the summed rate).  The share is what an observer reads
off the boxes after many days and is the headline table value; for any
policy that nets exactly one coin a day (diligent) the two coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np


@dataclass(frozen=True, eq=False)
class ParableWorld:
    """Roads, gates, and which gates each road reaches."""

    roads: tuple[str, ...]
    gates: tuple[str, ...]
    access: Mapping[str, tuple[str, ...]]

    def __post_init__(self) -> None:
        roads = tuple(self.roads)
        gates = tuple(self.gates)
        access = {road: tuple(g) for road, g in self.access.items()}
        if not roads:
            raise ValueError("world needs at least one road")
        if not gates:
            raise ValueError("world needs at least one gate")
        if len(set(roads)) != len(roads) or len(set(gates)) != len(gates):
            raise ValueError("road and gate names must be unique")
        for road in roads:
            reached = access.get(road, ())
            if not reached:
                raise ValueError(f"road {road!r} reaches no gate")
            unknown = set(reached) - set(gates)
            if unknown:
                raise ValueError(f"road {road!r} lists unknown gates {sorted(unknown)}")
        extra = set(access) - set(roads)
        if extra:
            raise ValueError(f"access lists unknown roads {sorted(extra)}")
        reachable = {g for reached in access.values() for g in reached}
        orphans = set(gates) - reachable
        if orphans:
            raise ValueError(f"gates {sorted(orphans)} are reachable from no road")
        object.__setattr__(self, "roads", roads)
        object.__setattr__(self, "gates", gates)
        object.__setattr__(self, "access", access)

    def to_json(self) -> dict:
        return {
            "roads": list(self.roads),
            "gates": list(self.gates),
            "access": {road: list(g) for road, g in self.access.items()},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ParableWorld":
        return cls(tuple(obj["roads"]), tuple(obj["gates"]), obj["access"])


@dataclass(frozen=True)
class RoundTrip:
    """One day's travel: out by a road, through a gate, back by a road."""

    road_out: str
    gate: str
    road_back: str

    @property
    def boring(self) -> bool:
        """Same road both ways."""
        return self.road_out == self.road_back

    @property
    def name(self) -> str:
        return f"{self.road_out}{self.gate}{self.road_back}*"


class CoinPolicy(Enum):
    DILIGENT = "diligent"
    FICKLE = "fickle"

    def coin(self, trip: RoundTrip) -> int:
        """Coin delta this trip leaves at its gate: diligent always +1,
        fickle +1 on boring trips and -1 on exotic ones."""
        if self is CoinPolicy.DILIGENT or trip.boring:
            return 1
        return -1


def enumerate_round_trips(world: ParableWorld) -> list[RoundTrip]:
    """All valid round trips in lexicographic (road_out, gate, road_back) order.

    The return gate must equal the entry gate, so the gate has to sit in
    the intersection of the two roads' access lists.
    """
    trips = []
    for road_out in world.roads:
        for gate in world.access[road_out]:
            for road_back in world.roads:
                if gate in world.access[road_back]:
                    trips.append(RoundTrip(road_out, gate, road_back))
    trips.sort(key=lambda t: (t.road_out, t.gate, t.road_back))
    return trips


@dataclass(frozen=True)
class GateEmpirical:
    """Monte Carlo statistics for one gate."""

    coins: int            # net coins accumulated over the run
    visits: int           # days whose trip went through this gate
    share: float | None   # coins / total coins; None when the total is 0
    share_stderr: float | None
    mean: float           # coins per day
    mean_stderr: float


@dataclass(frozen=True)
class GateLedger:
    """Exact per-gate tables, with Monte Carlo estimates when days were run."""

    gates: tuple[str, ...]
    expected: Mapping[str, Fraction]   # share of the net coin intake (table value)
    rate: Mapping[str, Fraction]       # expected coin delta per day
    trips: int
    days: int = 0
    empirical: Mapping[str, GateEmpirical] | None = None


def expected_coins(world: ParableWorld, policy: CoinPolicy) -> GateLedger:
    """Exact tables: per-day coin rate and net-intake share for each gate.

    Every enumerated round trip is equally likely.  The rate at a gate is
    the mean coin delta its box sees per day; the share divides that by
    the summed rate over all gates.  When the summed rate is zero (a
    perfectly canceling world) the share falls back to the rate.

    Raises:
        ValueError: the world admits no round trips.
    """
    trips = enumerate_round_trips(world)
    if not trips:
        raise ValueError("world admits no round trips")
    n = len(trips)
    rate = {gate: Fraction(0) for gate in world.gates}
    for trip in trips:
        rate[trip.gate] += Fraction(policy.coin(trip), n)
    total = sum(rate.values())
    if total:
        share = {gate: value / total for gate, value in rate.items()}
    else:
        share = dict(rate)
    return GateLedger(
        gates=world.gates, expected=share, rate=rate, trips=n
    )


def marginal_route_probability(world: ParableWorld, road: str) -> Fraction:
    """Fraction of round trips that leave town by the given road."""
    if road not in world.roads:
        raise ValueError(f"unknown road {road!r}")
    trips = enumerate_round_trips(world)
    matching = sum(1 for t in trips if t.road_out == road)
    return Fraction(matching, len(trips))


def monte_carlo(world: ParableWorld, policy: CoinPolicy, days: int, seed: int) -> GateLedger:
    """Simulate days of uniform round-trip choices; deterministic per seed.

    Per gate the run reports the net coins, the per-day mean with its
    sample standard error, and the share of total coins with a linearized
    (ratio-estimator) standard error.  The share estimate is what
    converges to the exact ``expected`` table; whenever the day totals are
    constant (diligent) or the share is zero, its standard error reduces
    to the plain per-day one.

    Raises:
        ValueError: days < 1.
    """
    if days < 1:
        raise ValueError(f"days must be >= 1, got {days}")
    exact = expected_coins(world, policy)
    trips = exact.trips
    trip_list = enumerate_round_trips(world)
    gate_index = {gate: k for k, gate in enumerate(world.gates)}
    trip_gate = np.array([gate_index[t.gate] for t in trip_list], dtype=np.int64)
    trip_coin = np.array([policy.coin(t) for t in trip_list], dtype=np.float64)

    rng = np.random.default_rng(seed)
    draws = rng.integers(0, trips, size=days)
    day_gate = trip_gate[draws]
    day_coin = trip_coin[draws]

    n_gates = len(world.gates)
    coins = np.bincount(day_gate, weights=day_coin, minlength=n_gates)
    visits = np.bincount(day_gate, minlength=n_gates)
    sumsq = np.bincount(day_gate, weights=day_coin**2, minlength=n_gates)
    total = float(day_coin.sum())

    empirical = {}
    for gate, k in gate_index.items():
        s = float(coins[k])
        mean = s / days
        # sample variance of the day's delta at this gate (0 off-visit days included)
        var = max(sumsq[k] - days * mean**2, 0.0) / max(days - 1, 1)
        mean_stderr = math.sqrt(var / days)
        if total != 0.0:
            shr = s / total
            # linearized residual y_d = x_d - share * c_d has mean 0 by construction
            ss = sumsq[k] * (1.0 - 2.0 * shr) + days * shr**2
            var_y = max(ss, 0.0) / max(days - 1, 1)
            share_stderr = math.sqrt(var_y * days) / abs(total)
            share, share_err = shr, share_stderr
        else:
            share, share_err = None, None
        empirical[gate] = GateEmpirical(
            coins=int(round(s)),
            visits=int(visits[k]),
            share=share,
            share_stderr=share_err,
            mean=mean,
            mean_stderr=mean_stderr,
        )
    return GateLedger(
        gates=world.gates,
        expected=exact.expected,
        rate=exact.rate,
        trips=trips,
        days=days,
        empirical=empirical,
    )


def ledger_to_json(ledger: GateLedger) -> dict:
    """Per-gate map: exact values as rational strings, empirical as floats."""
    out = {}
    for gate in ledger.gates:
        entry = {
            "expected": str(ledger.expected[gate]),
            "rate": str(ledger.rate[gate]),
        }
        if ledger.empirical is not None:
            emp = ledger.empirical[gate]
            entry["empirical"] = emp.share
            entry["stderr"] = emp.share_stderr
            entry["coins"] = emp.coins
            entry["visits"] = emp.visits
            entry["mean_per_day"] = emp.mean
            entry["mean_stderr"] = emp.mean_stderr
        out[gate] = entry
    return out


def ledger_table(ledger: GateLedger) -> str:
    """Aligned-column text table, one row per gate."""
    headers = ["Gate", "Coins"]
    rows = [[gate, str(ledger.expected[gate])] for gate in ledger.gates]
    if ledger.empirical is not None:
        headers += ["Empirical", "StdErr", "NetCoins", "Visits"]
        for gate, row in zip(ledger.gates, rows):
            emp = ledger.empirical[gate]
            row += [
                "n/a" if emp.share is None else f"{emp.share:.12g}",
                "n/a" if emp.share_stderr is None else f"{emp.share_stderr:.12g}",
                str(emp.coins),
                str(emp.visits),
            ]
    widths = [max(len(h), *(len(r[c]) for r in rows)) for c, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)
