"""Qubit sizing for annealer-offloaded baseband tasks.

The annealer matches a task's compute target when it solves problems at
the same rate the silicon does. For each offloaded task, the target TOPS
converts to problems per second through the task's operation count, and
the qubit requirement is problems/s x qubits-per-problem x seconds-per-
problem: enough problem slots in flight to sustain the rate.

Two tasks have established embeddings and dominate the load: nonlinear
frequency-domain detection and LDPC decoding. The remainder of the
baseband load is covered by provisioning qubits proportionately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Mapping, Optional

from .qa_hardware import QaProfile, qmi_runtime_us
from .workload import BbuTask, BbuWorkload

# Share of total baseband compute carried by the two modeled tasks at the
# operating points of interest; the rest gets a proportionate qubit count.
MODELED_LOAD_FRACTION = 0.75


@dataclass(frozen=True)
class TaskProblemModel:
    """How one task decomposes into annealer problem instances."""

    ops_per_problem: float  # silicon operations one instance replaces
    qubits_per_problem: int
    runtime_us: float  # wall time per instance

    def __post_init__(self) -> None:
        if self.ops_per_problem <= 0:
            raise ValueError(f"ops_per_problem must be positive, got {self.ops_per_problem}")
        if self.qubits_per_problem < 1:
            raise ValueError(
                f"qubits_per_problem must be at least 1, got {self.qubits_per_problem}"
            )
        if self.runtime_us <= 0:
            raise ValueError(f"runtime must be positive, got {self.runtime_us}")


def fdnl_problem_model(
    profile: QaProfile,
    samples: int,
    users: int = 64,
    modulation_bits: int = 6,
) -> TaskProblemModel:
    """Detection problem for a users x users MIMO system.

    Sphere decoding needs about 80M operations for the 64x64 system and
    scales quadratically with size; the annealer embedding uses one qubit
    per transmitted bit (bits/symbol x users).
    """
    if users < 1:
        raise ValueError(f"users must be at least 1, got {users}")
    ops = 80e6 * (users / 64.0) ** 2
    qubits = modulation_bits * users
    return TaskProblemModel(
        ops_per_problem=ops,
        qubits_per_problem=qubits,
        runtime_us=qmi_runtime_us(profile, samples),
    )


@dataclass(frozen=True)
class LdpcCode:
    """Parity-check matrix shape of one LDPC code."""

    rows: int  # M
    cols: int  # N
    row_weight: float  # average ones per row
    col_weight: float  # average ones per column

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("parity-check matrix must be non-empty")
        if self.row_weight <= 0 or self.col_weight <= 0:
            raise ValueError("row and column weights must be positive")


# Longest traffic-channel code in current macro deployments.
LDPC_5G_BG1 = LdpcCode(rows=4224, cols=8448, row_weight=8.64, col_weight=20.0)

# Decoder operation count per problem used for rate conversion. The
# headline convention (default) is the round 150M figure quoted for
# 20 iterations of the code above; "analytic" recomputes from the
# belief-propagation count per iteration.
FEC_HEADLINE_OPS = 150e6
FEC_HEADLINE_ITERATIONS = 20


def ldpc_ops_per_iteration(
    rows: int, cols: int, row_weight: float, col_weight: float
) -> float:
    """Belief-propagation operations per decoding iteration."""
    m, n, wr, wc = rows, cols, row_weight, col_weight
    return n + 3 * wr * wr * m - wr * m + 2 * wc * wc * n + 4 * wc * n


def ldpc_aux_depth(row_weight: float) -> int:
    """Depth of the auxiliary chain embedding a parity constraint.

    Smallest n >= 0 with 2^(n+1) - 2 covering the (evened) row weight.
    """
    if row_weight < 0:
        raise ValueError(f"row_weight must be non-negative, got {row_weight}")
    target = row_weight - math.fmod(row_weight, 2.0)
    n = 0
    while 2 ** (n + 1) - 2 < target:
        n += 1
    return n


def ldpc_problem_qubits(code: LdpcCode) -> int:
    """Qubits to embed one decoding problem: variables plus aux chains."""
    return code.cols + code.rows * ldpc_aux_depth(code.row_weight)


def fec_problem_model(
    profile: QaProfile,
    samples: int,
    code: LdpcCode = LDPC_5G_BG1,
    iterations: int = FEC_HEADLINE_ITERATIONS,
    ops_convention: str = "headline",
    programming_us: Optional[float] = None,
) -> TaskProblemModel:
    """Decoding problem for one LDPC code block.

    `programming_us` overrides the profile's programming time; decoder
    problems are larger than detection problems and may need a longer
    setup on some hardware.
    """
    if iterations < 1:
        raise ValueError(f"iterations must be at least 1, got {iterations}")
    if ops_convention == "headline":
        ops = FEC_HEADLINE_OPS * iterations / FEC_HEADLINE_ITERATIONS
    elif ops_convention == "analytic":
        ops = iterations * ldpc_ops_per_iteration(
            code.rows, code.cols, code.row_weight, code.col_weight
        )
    else:
        raise ValueError(
            f"ops_convention must be 'headline' or 'analytic', got {ops_convention!r}"
        )
    return TaskProblemModel(
        ops_per_problem=ops,
        qubits_per_problem=ldpc_problem_qubits(code),
        runtime_us=qmi_runtime_us(profile, samples, programming_us=programming_us),
    )


def task_qubits(tops: float, model: TaskProblemModel) -> int:
    """Qubits to sustain `tops` on problems shaped like `model`."""
    if tops < 0:
        raise ValueError(f"tops must be non-negative, got {tops}")
    pps = tops * 1e12 / model.ops_per_problem
    qubits = pps * model.qubits_per_problem * model.runtime_us * 1e-6
    return math.ceil(qubits)


@dataclass(frozen=True)
class QubitBudget:
    """Total qubit requirement for one cell's baseband offload."""

    per_task: Mapping[BbuTask, int]
    covered_fraction: float
    total: int


def total_budget(
    load: BbuWorkload,
    profile: QaProfile,
    samples: int,
    fdnl_users: Optional[int] = None,
    code: LdpcCode = LDPC_5G_BG1,
    iterations: int = FEC_HEADLINE_ITERATIONS,
    ops_convention: str = "headline",
    fec_programming_us: Optional[float] = None,
    covered_fraction: Optional[float] = MODELED_LOAD_FRACTION,
) -> QubitBudget:
    """Qubit budget for a cell, extrapolated over the unmodeled tasks.

    `covered_fraction=None` computes the modeled tasks' actual share of
    the scenario's total TOPS instead of using the fixed default.
    """
    scenario = load.scenario
    users = scenario.antennas if fdnl_users is None else fdnl_users
    fdnl = fdnl_problem_model(profile, samples, users, scenario.modulation_bits)
    fec = fec_problem_model(
        profile, samples, code, iterations, ops_convention,
        programming_us=fec_programming_us,
    )
    per_task: Dict[BbuTask, int] = {
        BbuTask.FD_NL: task_qubits(load.tops[BbuTask.FD_NL], fdnl),
        BbuTask.FEC: task_qubits(load.tops[BbuTask.FEC], fec),
    }
    if covered_fraction is None:
        modeled = load.tops[BbuTask.FD_NL] + load.tops[BbuTask.FEC]
        covered_fraction = modeled / load.total_tops
    if not 0 < covered_fraction <= 1:
        raise ValueError(f"covered_fraction must be in (0, 1], got {covered_fraction}")
    total = math.ceil(sum(per_task.values()) / covered_fraction)
    return QubitBudget(
        per_task=per_task,
        covered_fraction=covered_fraction,
        total=total,
    )
