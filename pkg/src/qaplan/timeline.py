"""Device-size growth trends and feasibility milestones.

Extrapolates annealer qubit counts from the shipped-hardware record and
answers two questions: how many qubits does a scenario need, and in what
year does the trend first supply them. Historical years are always
reported from the record itself, never from the fitted trend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence

from .cmos import CmosProfile
from .economics import offload_advantage_w
from .qa_hardware import QaProfile
from .qubit_budget import total_budget
from .workload import CellScenario, workload

# Shipped (and announced) device sizes by year.
HISTORICAL_QUBITS: Mapping[int, int] = {
    2011: 128,
    2013: 512,
    2015: 1152,
    2017: 2048,
    2020: 5436,
    2023: 7440,
}


@dataclass(frozen=True)
class GrowthTrend:
    """Geometric device-size growth anchored at one shipped device."""

    name: str
    anchor_year: int
    anchor_qubits: int
    growth_factor: float  # size multiplier per period
    period_years: float = 3.0

    def __post_init__(self) -> None:
        if self.anchor_qubits < 1:
            raise ValueError(f"anchor_qubits must be positive, got {self.anchor_qubits}")
        if self.growth_factor <= 1.0:
            raise ValueError(f"growth factor must exceed 1, got {self.growth_factor}")
        if self.period_years <= 0:
            raise ValueError(f"period must be positive, got {self.period_years}")


# Optimistic: the fastest recent generation-over-generation jump.
BEST_CASE = GrowthTrend(
    name="best-case",
    anchor_year=2020,
    anchor_qubits=5436,
    growth_factor=5436 / 2048,  # 2017 -> 2020 jump
)

# Conservative: the most recent (announced) jump.
WORST_CASE = GrowthTrend(
    name="worst-case",
    anchor_year=2023,
    anchor_qubits=7440,
    growth_factor=7440 / 5436,  # 2020 -> 2023 jump
)

BUILTIN_TRENDS = {t.name: t for t in (BEST_CASE, WORST_CASE)}


def qubits_at(trend: GrowthTrend, year: float) -> int:
    """Projected device size in `year` (whole qubits, rounded down)."""
    if year < trend.anchor_year:
        raise ValueError(
            f"{trend.name} trend starts at {trend.anchor_year}; got {year}"
        )
    periods = (year - trend.anchor_year) / trend.period_years
    return math.floor(trend.anchor_qubits * trend.growth_factor ** periods)


def year_available(trend: GrowthTrend, required_qubits: int) -> int:
    """First whole year the trend supplies `required_qubits`."""
    if required_qubits < 1:
        raise ValueError(f"required_qubits must be positive, got {required_qubits}")
    if required_qubits <= trend.anchor_qubits:
        return trend.anchor_year
    periods = math.log(required_qubits / trend.anchor_qubits) / math.log(
        trend.growth_factor
    )
    year = trend.anchor_year + math.ceil(periods * trend.period_years)
    # Closed form can land one year off either way after flooring.
    while qubits_at(trend, year) < required_qubits:
        year += 1
    while year > trend.anchor_year and qubits_at(trend, year - 1) >= required_qubits:
        year -= 1
    return year


def qubit_series(
    trend: GrowthTrend,
    years: Sequence[int],
    historical: Mapping[int, int] = HISTORICAL_QUBITS,
) -> Dict[int, int]:
    """Device size per year: the record where it exists, else the trend."""
    out: Dict[int, int] = {}
    for year in years:
        if year in historical:
            out[year] = historical[year]
        else:
            out[year] = qubits_at(trend, year)
    return out


@dataclass(frozen=True)
class TimelineProjection:
    """When one scenario's qubit ask becomes available."""

    label: str
    scenario: CellScenario
    required_qubits: int
    year_best: int
    year_worst: int
    # Baseband watts saved per silicon node if offloading (negative = loss).
    advantage_w: Mapping[str, float]


def milestones(
    scenarios: Sequence,
    cmos_profiles: Sequence[CmosProfile],
    qa_profile: QaProfile,
    samples: int,
    best: GrowthTrend = BEST_CASE,
    worst: GrowthTrend = WORST_CASE,
    **budget_kwargs,
) -> List[TimelineProjection]:
    """Feasibility projection for each (label, scenario) pair."""
    out: List[TimelineProjection] = []
    for label, scenario in scenarios:
        budget = total_budget(workload(scenario), qa_profile, samples, **budget_kwargs)
        advantage = {
            p.node: offload_advantage_w(scenario, p, qa_profile)
            for p in cmos_profiles
        }
        out.append(
            TimelineProjection(
                label=label,
                scenario=scenario,
                required_qubits=budget.total,
                year_best=year_available(best, budget.total),
                year_worst=year_available(worst, budget.total),
                advantage_w=advantage,
            )
        )
    return out
