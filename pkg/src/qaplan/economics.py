"""Deployment comparison and operating economics.

Builds the two candidate deployments for a scenario (all-silicon vs
annealer-offloaded baseband), prices their power difference, and finds
the bandwidth where the annealer starts winning. The annealer side keeps
platform control and transport processing on silicon; in centralized
deployments the per-site FFT stage stays on site silicon in both
candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple, Union

from .cmos import CmosProfile, cmos_power
from .qa_hardware import (
    DEFAULT_GEOMETRY,
    DeviceGeometry,
    QaProfile,
    refrigerator_qubit_capacity,
)
from .qubit_budget import QubitBudget, total_budget
from .ran_power import (
    DEFAULT_LOSSES,
    PA_W,
    RU_CHAIN_W,
    FronthaulLink,
    PowerBreakdown,
    PowerSystemLosses,
    RrhSite,
    bs_power,
    cran_power,
)
from .workload import BbuTask, BbuWorkload, CellScenario, workload

# Tasks an annealer can take over; control and transport stay on silicon.
OFFLOADABLE_TASKS = frozenset({
    BbuTask.DPD, BbuTask.FILTER, BbuTask.FFT,
    BbuTask.FD_LIN, BbuTask.FD_NL, BbuTask.FEC,
})
SILICON_RESIDENT_TASKS = frozenset({BbuTask.PCP, BbuTask.CPRI})

HOURS_PER_YEAR = 8760.0
LB_PER_METRIC_KILOTON = 2_204_622.6


@dataclass(frozen=True)
class BsTopology:
    """Standalone base station: baseband, radios, and PAs in one cabinet."""

    losses: PowerSystemLosses = DEFAULT_LOSSES


@dataclass(frozen=True)
class CranTopology:
    """Centralized pool serving n identical radio sites over fronthaul."""

    n_bs: int = 3
    fronthaul_capacity_bps: float = 100e9
    pool_losses: PowerSystemLosses = DEFAULT_LOSSES
    site_losses: PowerSystemLosses = DEFAULT_LOSSES
    # Low-L1 processing pinned at the radio site in every candidate.
    site_tasks: frozenset = frozenset({BbuTask.FFT})

    def __post_init__(self) -> None:
        if self.n_bs < 1:
            raise ValueError(f"n_bs must be at least 1, got {self.n_bs}")


Topology = Union[BsTopology, CranTopology]


def _task_watts(load: BbuWorkload, tasks, profile: CmosProfile) -> Dict[BbuTask, float]:
    return {t: cmos_power(load.tops[t], profile) for t in tasks}


def _bs_breakdown(
    load: BbuWorkload,
    tasks,
    profile: CmosProfile,
    topology: BsTopology,
    refrigeration_w: float = 0.0,
) -> PowerBreakdown:
    tasks_w = _task_watts(load, tasks, profile)
    return bs_power(
        bbu_w=sum(tasks_w.values()),
        antennas=load.scenario.antennas,
        losses=topology.losses,
        refrigeration_w=refrigeration_w,
        bbu_tasks_w=tasks_w,
    )


def _cran_breakdown(
    load: BbuWorkload,
    pool_tasks,
    profile: CmosProfile,
    topology: CranTopology,
    refrigeration_w: float = 0.0,
) -> PowerBreakdown:
    site_task_order = [t for t in BbuTask if t in topology.site_tasks]
    site_tasks_w = _task_watts(load, site_task_order, profile)
    pool_only = [t for t in pool_tasks if t not in topology.site_tasks]
    pool_tasks_w = _task_watts(load, pool_only, profile)
    link = FronthaulLink.scaled_from_reference(
        capacity_bps=topology.fronthaul_capacity_bps,
        load_bps=topology.fronthaul_capacity_bps,  # provisioned at full rate
    )
    site = RrhSite(
        ru_w=load.scenario.antennas * RU_CHAIN_W,
        pa_w=load.scenario.antennas * PA_W,
        bbu_w=sum(site_tasks_w.values()),
        losses=topology.site_losses,
        fronthaul=link,
    )
    n = topology.n_bs
    aggregate = {t: w * n for t, w in {**pool_tasks_w, **site_tasks_w}.items()}
    return cran_power(
        bbu_w=sum(pool_tasks_w.values()) * n,
        losses=topology.pool_losses,
        sites=[site] * n,
        refrigeration_w=refrigeration_w,
        bbu_tasks_w=aggregate,
    )


@dataclass(frozen=True)
class ComparisonResult:
    """Both deployment candidates for one scenario, plus the qubit ask."""

    scenario: CellScenario
    cmos: PowerBreakdown
    qa: PowerBreakdown
    budget: QubitBudget  # whole-deployment qubit requirement
    capacity: int  # qubits one refrigeration unit can hold
    capacity_exceeded: bool

    @property
    def delta_w(self) -> float:
        """Power saved by the annealer candidate (negative = it loses)."""
        return self.cmos.total_w - self.qa.total_w


def compare(
    scenario: CellScenario,
    cmos_profile: CmosProfile,
    qa_profile: QaProfile,
    samples: int,
    topology: Topology = BsTopology(),
    geometry: DeviceGeometry = DEFAULT_GEOMETRY,
    **budget_kwargs,
) -> ComparisonResult:
    """Power both candidates for one scenario and size the annealer.

    A budget above one refrigeration unit's capacity is reported via
    `capacity_exceeded`, not raised: the comparison is still meaningful
    as a lower bound.
    """
    load = workload(scenario)
    per_bs_budget = total_budget(load, qa_profile, samples, **budget_kwargs)
    refrigeration = qa_profile.refrigeration_w

    if isinstance(topology, BsTopology):
        n_bs = 1
        cmos_side = _bs_breakdown(load, tuple(BbuTask), cmos_profile, topology)
        qa_side = _bs_breakdown(
            load, [t for t in BbuTask if t in SILICON_RESIDENT_TASKS],
            cmos_profile, topology, refrigeration_w=refrigeration,
        )
    elif isinstance(topology, CranTopology):
        n_bs = topology.n_bs
        qa_pool_tasks = [t for t in BbuTask if t in SILICON_RESIDENT_TASKS
                         or t in topology.site_tasks]
        cmos_side = _cran_breakdown(load, tuple(BbuTask), cmos_profile, topology)
        qa_side = _cran_breakdown(
            load, qa_pool_tasks, cmos_profile, topology,
            refrigeration_w=refrigeration,
        )
    else:
        raise ValueError(f"unknown topology {topology!r}")

    budget = QubitBudget(
        per_task={t: n * n_bs for t, n in per_bs_budget.per_task.items()},
        covered_fraction=per_bs_budget.covered_fraction,
        total=per_bs_budget.total * n_bs,
    )
    capacity = refrigerator_qubit_capacity(geometry)
    return ComparisonResult(
        scenario=scenario,
        cmos=cmos_side,
        qa=qa_side,
        budget=budget,
        capacity=capacity,
        capacity_exceeded=budget.total > capacity,
    )


@dataclass(frozen=True)
class CostAssumptions:
    electricity_price_per_kwh: float = 0.143  # USD
    co2_lb_per_kwh: float = 0.92
    hours_per_year: float = HOURS_PER_YEAR

    def __post_init__(self) -> None:
        for name in ("electricity_price_per_kwh", "co2_lb_per_kwh", "hours_per_year"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")


DEFAULT_COSTS = CostAssumptions()


@dataclass(frozen=True)
class CostReport:
    """Savings from a power delta over a set of horizons."""

    delta_w: float
    horizons_years: Tuple[float, ...]
    opex_savings_usd: Tuple[float, ...]
    co2_savings_kt: Tuple[float, ...]

    @property
    def breakeven_capex_usd(self) -> Tuple[float, ...]:
        """Largest hardware spend the savings recoup per horizon."""
        return self.opex_savings_usd


def cost_report(
    delta_w: float,
    horizons_years: Sequence[float] = (1, 2, 5, 10),
    assumptions: CostAssumptions = DEFAULT_COSTS,
) -> CostReport:
    """Price a power saving in electricity dollars and avoided CO2."""
    if any(y < 0 for y in horizons_years):
        raise ValueError("horizons must be non-negative")
    kwh_per_year = delta_w / 1000.0 * assumptions.hours_per_year
    opex = tuple(
        kwh_per_year * years * assumptions.electricity_price_per_kwh
        for years in horizons_years
    )
    co2 = tuple(
        kwh_per_year * years * assumptions.co2_lb_per_kwh / LB_PER_METRIC_KILOTON
        for years in horizons_years
    )
    return CostReport(
        delta_w=delta_w,
        horizons_years=tuple(horizons_years),
        opex_savings_usd=opex,
        co2_savings_kt=co2,
    )


def offload_advantage_w(
    scenario: CellScenario,
    cmos_profile: CmosProfile,
    qa_profile: QaProfile,
) -> float:
    """Baseband-level watts saved by offloading (negative = loss).

    Compares only what moves: the offloadable tasks' silicon draw against
    the flat refrigeration cost. Supply losses and silicon-resident tasks
    are identical on both sides and cancel.
    """
    load = workload(scenario)
    movable = load.subset_tops([t for t in BbuTask if t in OFFLOADABLE_TASKS])
    return cmos_power(movable, cmos_profile) - qa_profile.refrigeration_w


def crossover_bandwidth_mhz(
    antennas: int,
    cmos_profile: CmosProfile,
    qa_profile: QaProfile,
    grid_mhz: Sequence[float] = tuple(range(10, 1001, 10)),
    modulation_bits: int = 6,
    coding_rate: float = 0.5,
) -> Optional[float]:
    """Smallest grid bandwidth where the annealer wins on baseband power.

    Returns None if the annealer never wins within the grid.
    """
    if antennas < 1:
        raise ValueError(f"antennas must be at least 1, got {antennas}")
    for bw in grid_mhz:
        scenario = CellScenario(
            bandwidth_mhz=bw,
            modulation_bits=modulation_bits,
            coding_rate=coding_rate,
            antennas=antennas,
        )
        if offload_advantage_w(scenario, cmos_profile, qa_profile) > 0:
            return bw
    return None
