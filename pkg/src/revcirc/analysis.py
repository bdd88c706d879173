"""Exhaustive garbage-configuration profiling and growth classification.

The central measurement: run a machine on every input and collect the set of
values its garbage region can take. How that set grows with input size is
what separates algorithms whose backward runs can be steered from those
whose cannot, so the profiler is deliberately exact and the growth report is
explicitly labeled as an empirical desk-scale classification, never a
verdict about asymptotics.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .ir import Machine
from .sim import (
    EXHAUSTIVE_BOUND,
    ExhaustiveBoundError,
    initial_state,
    is_injective,
    run,
    truth_table,
)


class InsufficientPointsError(ValueError):
    """Growth classification needs at least three profile points."""


@dataclass(frozen=True)
class GarbageProfile:
    """The set of garbage-region values a machine can leave behind.

    `configs` is sorted ascending. `per_output` maps each output value to its
    unique garbage value and is present only when the output function is
    injective; for many-to-one machines several garbage values can be
    "correct" per output, so no map is stored.
    """

    machine_id: str
    input_bits: int
    garbage_bits: int
    configs: tuple[int, ...]
    config_count: int
    per_output: dict[int, int] | None = None

    def digest(self) -> str:
        """Stable hash of the sorted config set, for reproducible reports."""
        body = f"{self.garbage_bits}:" + ",".join(str(c) for c in self.configs)
        return hashlib.sha256(body.encode()).hexdigest()[:16]

    def as_dict(self) -> dict:
        d = {
            "machine_id": self.machine_id,
            "input_bits": self.input_bits,
            "garbage_bits": self.garbage_bits,
            "config_count": self.config_count,
            "configs": list(self.configs),
            "configs_digest": self.digest(),
        }
        if self.per_output is not None:
            d["per_output"] = {str(k): v for k, v in sorted(self.per_output.items())}
        return d


@dataclass(frozen=True)
class ClauseResult:
    name: str
    passed: bool
    witness: int | None = None
    detail: str = ""

    def as_dict(self) -> dict:
        d: dict = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness_input"] = self.witness
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass(frozen=True)
class ConformanceReport:
    """Pass/fail per interface clause, with a witnessing input on failure."""

    machine_id: str
    passed: bool
    clauses: tuple[ClauseResult, ...]

    def as_dict(self) -> dict:
        return {
            "machine_id": self.machine_id,
            "passed": self.passed,
            "clauses": [c.as_dict() for c in self.clauses],
        }


@dataclass(frozen=True)
class GrowthReport:
    """Config counts across a family of sizes plus an empirical classification."""

    family: str
    points: tuple[tuple[int, int], ...]
    classification: str
    fit_details: dict

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "points": [[n, c] for n, c in self.points],
            "classification": self.classification,
            "fit_details": self.fit_details,
        }


def machine_id(machine: Machine, label: str | None = None) -> str:
    """A caller-supplied name, or a short stable hash of the canonical text."""
    if label is not None:
        return label
    from .fileformat import serialize

    return hashlib.sha256(serialize(machine).encode()).hexdigest()[:12]


def garbage_profile(
    machine: Machine,
    label: str | None = None,
    max_input_bits: int = EXHAUSTIVE_BOUND,
) -> GarbageProfile:
    """Enumerate every input and collect the reachable garbage configurations.

    An empty garbage region still has exactly one configuration (the empty
    one, encoded as 0), so `config_count` is always at least 1.
    """
    table = truth_table(machine, max_input_bits)
    configs = sorted({g for _, g in table.rows.values()})
    per_output = None
    if is_injective(table):
        per_output = {out: g for out, g in table.rows.values()}
    return GarbageProfile(
        machine_id=machine_id(machine, label),
        input_bits=table.input_width,
        garbage_bits=machine.iface.garbage_width,
        configs=tuple(configs),
        config_count=len(configs),
        per_output=per_output,
    )


def conformance(
    machine: Machine,
    label: str | None = None,
    max_input_bits: int = EXHAUSTIVE_BOUND,
) -> ConformanceReport:
    """Check the interface declaration against actual behavior on every input.

    The two partition clauses are structural and re-stated for completeness;
    the restored-lines clause actually runs the machine and reports the first
    input on which a declared-restored line fails to hold its constant.
    """
    iface = machine.iface
    n = iface.input_width
    if n > max_input_bits:
        raise ExhaustiveBoundError(
            f"input region has {n} bits; refusing exhaustive conformance check "
            f"beyond {max_input_bits}"
        )
    clauses = [
        ClauseResult("initial-partition", True, detail="input and preset lines partition the width"),
        ClauseResult("final-partition", True, detail="output, garbage, and restored lines partition the width"),
    ]
    restored_clause = ClauseResult("restored-constants", True, detail="no restored lines declared" if not iface.restored_lines else "")
    for x in range(1 << n):
        final = run(machine.circuit, initial_state(machine, x))
        bad = [
            (line, const)
            for line, const in iface.restored_lines
            if final.bits[line] != const
        ]
        if bad:
            line, const = bad[0]
            restored_clause = ClauseResult(
                "restored-constants",
                False,
                witness=x,
                detail=f"line {line} should hold {const} but holds {final.bits[line]}",
            )
            break
    clauses.append(restored_clause)
    return ConformanceReport(
        machine_id=machine_id(machine, label),
        passed=all(c.passed for c in clauses),
        clauses=tuple(clauses),
    )


def classify_growth(points: Sequence[tuple[int, int]]) -> tuple[str, dict]:
    """Empirical growth label for (size, count) points, most specific first.

    Order of tests: exact constancy, exact affine growth, a constant
    log-count increment per size step (the signature of exponential growth),
    then a log-log power-law fit. Everything is desk-scale curve reading,
    and the details say so.
    """
    pts = sorted(set((int(n), int(c)) for n, c in points))
    if len(pts) < 3:
        raise InsufficientPointsError(f"need at least 3 distinct sizes, got {len(pts)}")
    ns = [n for n, _ in pts]
    cs = [c for _, c in pts]
    details: dict = {"basis": "empirical at desk scale", "points_used": len(pts)}

    if len(set(cs)) == 1:
        return "constant", details

    slope = Fraction(cs[1] - cs[0], ns[1] - ns[0])
    if all(Fraction(cs[i] - cs[0], ns[i] - ns[0]) == slope for i in range(1, len(pts))):
        details["slope"] = float(slope)
        return "linear", details

    # Exponential signature: log-count grows by the same amount per unit size.
    rates = [
        (math.log(cs[i + 1]) - math.log(cs[i])) / (ns[i + 1] - ns[i])
        for i in range(len(pts) - 1)
    ]
    mean_rate = sum(rates) / len(rates)
    spread = max(abs(r - mean_rate) for r in rates)
    details["log_growth_per_size"] = round(mean_rate, 6)
    if mean_rate >= math.log(1.4) and spread <= 0.15 * abs(mean_rate):
        details["doubling_base"] = round(math.exp(mean_rate), 4)
        return "superpolynomial-suspect", details

    # Power-law fit: least squares on log count vs log size.
    xs = [math.log(n) for n in ns]
    ys = [math.log(c) for c in cs]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    var = sum((x - mx) ** 2 for x in xs)
    loglog_slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / var
    intercept = my - loglog_slope * mx
    residuals = [abs(y - (loglog_slope * x + intercept)) for x, y in zip(xs, ys)]
    details["loglog_slope"] = round(loglog_slope, 4)
    details["max_log_residual"] = round(max(residuals), 4)
    degree = round(loglog_slope)
    if 0 < degree <= 4 and max(residuals) <= 0.25:
        return f"polynomial-fit({degree})", details
    return "superpolynomial-suspect", details


def growth_report(
    family: Callable[[int], Machine],
    n_range: Sequence[int],
    family_name: str | None = None,
    max_input_bits: int = EXHAUSTIVE_BOUND,
) -> GrowthReport:
    """Profile a machine family across sizes and classify the config growth."""
    sizes = sorted(set(int(n) for n in n_range))
    if len(sizes) < 3:
        raise InsufficientPointsError(f"need at least 3 sizes, got {len(sizes)}")
    points = tuple(
        (n, garbage_profile(family(n), max_input_bits=max_input_bits).config_count)
        for n in sizes
    )
    classification, details = classify_growth(points)
    return GrowthReport(
        family=family_name or getattr(family, "__name__", "family"),
        points=points,
        classification=classification,
        fit_details=details,
    )
