"""Structured results for randomized invariant sweeps."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class InvariantRecord:
    """Outcome of one invariant swept over some number of random instances."""

    name: str
    instances: int
    max_deviation: float
    tolerance: float
    passed: bool
    seed: int

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "instances": self.instances,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class CheckReport:
    """A bundle of invariant records; passes only if every record passed."""

    records: tuple[InvariantRecord, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "records": [r.to_json() for r in self.records],
        }


def record_from_sweep(
    name: str, instances: int, max_deviation: float, tolerance: float, seed: int
) -> InvariantRecord:
    """Convenience builder: pass/fail is just max_deviation < tolerance."""
    return InvariantRecord(
        name=name,
        instances=instances,
        max_deviation=max_deviation,
        tolerance=tolerance,
        passed=max_deviation < tolerance,
        seed=seed,
    )
