"""Thermodynamic bookkeeping around the measurement cost.

Covers the full engine cycle ledger (work extracted vs entropy paid), free
expansion, the Boltzmann complexion ratio, the no-erase piston reset of a
two-cell memory, and the aiming bound on a momentum-measuring demon.
"""

import io
import json
import math
from dataclasses import asdict, dataclass

import numpy as np

LN2 = math.log(2.0)

# Slack for >= 0 checks on entropy sums assembled from floats.
NET_TOL = 1e-9

MEMORY_CELLS = ("L", "R")
RESET_TARGET = "R"


@dataclass(frozen=True)
class CycleLedger:
    """Entropy and work bookkeeping for one engine cycle.

    The molecule is localized at cost delta_s_measurement (>= k ln 2), then
    isothermal expansion against the piston extracts w_extracted drawn as
    heat q_reservoir from the single reservoir, lowering the reservoir's
    entropy by q/T.  The net delta_s_net is never negative: the measurement
    pays for the work up front.
    """

    delta_s_measurement: float
    w_extracted: float
    q_reservoir: float
    delta_s_reservoir: float
    delta_s_net: float
    temperature: float
    k: float

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


@dataclass(frozen=True)
class ExpansionResult:
    """Entropy change and heat equivalent of a free expansion."""

    delta_s: float
    q_equivalent: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class ResetState:
    """Two-cell coarse phase-space snapshot of the demon's memory."""

    memory: str
    occupied_cells: frozenset
    volume: int

    def __post_init__(self):
        if self.memory not in MEMORY_CELLS:
            raise ValueError(f"memory must be one of {MEMORY_CELLS}, got {self.memory!r}")
        if not self.occupied_cells <= set(MEMORY_CELLS):
            raise ValueError(f"unknown phase cells {set(self.occupied_cells)}")
        if self.volume != len(self.occupied_cells):
            raise ValueError("volume must equal the number of occupied cells")

    def to_dict(self) -> dict:
        return {
            "memory": self.memory,
            "occupied_cells": sorted(self.occupied_cells),
            "volume": self.volume,
        }


@dataclass(frozen=True)
class ResetResult:
    """Trace of a piston reset and its final state."""

    trace: tuple
    final: ResetState

    def to_dict(self) -> dict:
        return {
            "trace": [s.to_dict() for s in self.trace],
            "final": self.final.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


@dataclass(frozen=True)
class AimReport:
    """Position spread induced by a momentum measurement vs the door width."""

    delta_p: float
    sigma_x_induced: float
    door_width: float
    feasible: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


@dataclass(frozen=True)
class MonteCarloResult:
    """Aggregates over seeded engine cycles, plus per-cycle arrays for export."""

    n_cycles: int
    mean_delta_s_net: float
    min_delta_s_net: float
    total_work: float
    work_per_cycle: float
    measurement_costs: np.ndarray
    delta_s_net: np.ndarray


def szilard_cycle(
    T: float, k: float, measurement_cost: float, efficiency: float = 1.0
) -> CycleLedger:
    """Build the ledger for one cycle with a given localization cost.

    measurement_cost must be at least k ln 2, the Gaussian lower bound on
    localizing the molecule to one half; anything smaller is unphysical.
    ``efficiency`` scales the extracted work below the ideal k T ln 2.
    """
    if T <= 0:
        raise ValueError(f"temperature must be positive, got {T}")
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    if not 0.0 < efficiency <= 1.0:
        raise ValueError(f"efficiency must be in (0, 1], got {efficiency}")
    bound = k * LN2
    if measurement_cost < bound * (1.0 - 1e-12):
        raise ValueError(
            f"measurement cost {measurement_cost} below the localization bound "
            f"k ln 2 = {bound}"
        )
    w = efficiency * k * T * LN2
    q = w
    ds_reservoir = -q / T
    return CycleLedger(
        delta_s_measurement=measurement_cost,
        w_extracted=w,
        q_reservoir=q,
        delta_s_reservoir=ds_reservoir,
        delta_s_net=measurement_cost + ds_reservoir,
        temperature=T,
        k=k,
    )


def free_expansion_entropy(
    N: int, volume_ratio: float, T: float = 1.0, k: float = 1.0
) -> ExpansionResult:
    """Entropy change N k ln(ratio) of a free expansion, via the reversible
    reference path, and the heat N k T ln(ratio) that quantity corresponds to."""
    if N < 1:
        raise ValueError(f"molecule count must be >= 1, got {N}")
    if volume_ratio <= 1.0:
        raise ValueError(f"volume ratio must exceed 1, got {volume_ratio}")
    if T <= 0:
        raise ValueError(f"temperature must be positive, got {T}")
    delta_s = N * k * math.log(volume_ratio)
    return ExpansionResult(delta_s=delta_s, q_equivalent=delta_s * T)


def boltzmann_delta_s(omega_1: float, omega_2: float, k: float = 1.0) -> float:
    """Complexion-ratio entropy difference k ln(omega_2 / omega_1)."""
    if omega_1 <= 0 or omega_2 <= 0:
        raise ValueError(f"complexion counts must be positive, got {omega_1}, {omega_2}")
    return k * math.log(omega_2 / omega_1)


def norton_reset(initial: str) -> ResetResult:
    """Push the memory to the reference cell R with a left-to-right piston.

    If the memory is already R nothing happens; if it is L the occupied cell
    moves to R.  Either way exactly one cell is occupied before and after:
    the reset relocates phase-space volume, it never compresses it.
    """
    if initial not in MEMORY_CELLS:
        raise ValueError(f"initial memory must be one of {MEMORY_CELLS}, got {initial!r}")
    start = ResetState(memory=initial, occupied_cells=frozenset({initial}), volume=1)
    if initial == RESET_TARGET:
        return ResetResult(trace=(start,), final=start)
    final = ResetState(
        memory=RESET_TARGET, occupied_cells=frozenset({RESET_TARGET}), volume=1
    )
    return ResetResult(trace=(start, final), final=final)


def speed_demon_feasibility(
    delta_p: float, door_width: float, hbar: float = 1.0
) -> AimReport:
    """Can a demon that knows the momentum to accuracy delta_p aim the molecule?

    Measuring momentum to delta_p leaves the position spread at least
    hbar/(2 delta_p); aiming through the door is feasible only if that
    spread fits the door.
    """
    if delta_p <= 0:
        raise ValueError(f"momentum accuracy must be positive, got {delta_p}")
    if door_width <= 0:
        raise ValueError(f"door width must be positive, got {door_width}")
    if hbar <= 0:
        raise ValueError(f"hbar must be positive, got {hbar}")
    sigma_x = hbar / (2.0 * delta_p)
    return AimReport(
        delta_p=delta_p,
        sigma_x_induced=sigma_x,
        door_width=door_width,
        feasible=sigma_x <= door_width,
    )


def monte_carlo_cycles(
    n_cycles: int,
    T: float,
    k: float,
    measurement_cost_sampler,
    seed: int,
    efficiency: float = 1.0,
) -> MonteCarloResult:
    """Run seeded independent cycles and aggregate the ledgers.

    measurement_cost_sampler(rng) -> cost is called once per cycle with a
    generator derived from the cycle's own spawned seed, so results are
    deterministic for a given seed and independent of evaluation order.
    """
    if n_cycles < 1:
        raise ValueError(f"cycle count must be >= 1, got {n_cycles}")
    costs = np.empty(n_cycles, dtype=np.float64)
    nets = np.empty(n_cycles, dtype=np.float64)
    work = 0.0
    for i, child in enumerate(np.random.SeedSequence(seed).spawn(n_cycles)):
        rng = np.random.default_rng(child)
        ledger = szilard_cycle(T, k, float(measurement_cost_sampler(rng)), efficiency)
        costs[i] = ledger.delta_s_measurement
        nets[i] = ledger.delta_s_net
        work = ledger.w_extracted
    return MonteCarloResult(
        n_cycles=n_cycles,
        mean_delta_s_net=float(np.mean(nets)),
        min_delta_s_net=float(np.min(nets)),
        total_work=work * n_cycles,
        work_per_cycle=work,
        measurement_costs=costs,
        delta_s_net=nets,
    )


def write_monte_carlo_csv(result: MonteCarloResult, fh) -> None:
    """Per-cycle CSV with columns cycle, measurement_cost, delta_s_net, work."""
    fh.write("cycle,measurement_cost,delta_s_net,work\n")
    for i in range(result.n_cycles):
        fh.write(
            f"{i},{result.measurement_costs[i]:.12g},"
            f"{result.delta_s_net[i]:.12g},{result.work_per_cycle:.12g}\n"
        )


def monte_carlo_csv_text(result: MonteCarloResult) -> str:
    buf = io.StringIO()
    write_monte_carlo_csv(result, buf)
    return buf.getvalue()
