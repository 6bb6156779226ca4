"""Reference report builders.

Each builder reproduces one table of the published reference analysis
this tool models, computed live from the model. Cells where the published
print is known to disagree with its own stated formulas carry a
"paper-inconsistent" note naming the cell, so downstream consumers can
tell a model bug from a known print defect.
"""

from __future__ import annotations

from typing import Callable, Dict, List

from .cmos import CMOS_14NM
from .economics import (
    BsTopology,
    CostAssumptions,
    CranTopology,
    compare,
    cost_report,
)
from .emit import Column, Table
from .qa_hardware import (
    QA_PROJECTED,
    programming_energy,
    qmi_runtime_us,
    readout_parallelism,
)
from .qubit_budget import total_budget
from .workload import BbuTask, CellScenario, workload

# Default fidelity target (samples per problem) for sizing reports.
DEFAULT_SAMPLES = 20


def targets_table() -> Table:
    """Per-task compute targets across reference cell configurations."""
    reference = CellScenario(20, 6, 1.0, 1)
    columns = [Column("task", "Task")]
    scenarios = [("reference", reference, ".3f")]
    for bw, group in ((20, "4g"), (200, "5g200"), (400, "5g400")):
        for antennas in ((2, 4, 8) if bw == 20 else (32, 64, 128)):
            key = f"{group}_{antennas}"
            spec = ".3f" if bw == 20 else ".1f"
            scenarios.append(
                (key, CellScenario(bw, 6, 0.5, antennas), spec)
            )
    for key, _, spec in scenarios:
        columns.append(Column(key, key, spec))

    loads = {key: workload(s) for key, s, _ in scenarios}
    rows: List[Dict] = []
    for task in BbuTask:
        row: Dict = {"task": task.label}
        for key, _, _ in scenarios:
            row[key] = loads[key].tops[task]
        rows.append(row)
    total_row: Dict = {"task": "Total"}
    for key, _, _ in scenarios:
        total_row[key] = loads[key].total_tops
    rows.append(total_row)
    return Table(
        name="targets",
        columns=columns,
        rows=rows,
        notes=[
            "units: TOPS; 64-QAM, coding rate 0.5 (reference column at rate 1.0), "
            "full duty cycles",
            "paper-inconsistent: total at 5g200_128; source prints 6,533.6 but its "
            "column sums to 6,553.6; tool reports the sum",
        ],
    )


# Device generations the programming-energy report covers: historical
# sizes with their shipped coupler counts, plus a projected large device.
ENERGY_DEVICES = (
    (512, 1_472),
    (2_048, 6_016),
    (5_436, 37_440),
    (10_000_000, 75_000_000),
)


def energy_table() -> Table:
    """Worst-case programming dissipation and thermalization per device."""
    columns = [
        Column("qubits", "Qubits", "d"),
        Column("couplers", "Couplers", "d"),
        Column("dacs", "DACs", "d"),
        Column("energy_55ua_j", "E @55uA (J)", ".4e"),
        Column("therm_55ua_s", "t @55uA (s)", ".4e"),
        Column("energy_1ua_j", "E @1uA (J)", ".4e"),
        Column("therm_1ua_s", "t @1uA (s)", ".4e"),
    ]
    rows = []
    for n_qubits, n_couplers in ENERGY_DEVICES:
        high = programming_energy(n_qubits, n_couplers, 55e-6)
        low = programming_energy(n_qubits, n_couplers, 1e-6)
        rows.append({
            "qubits": n_qubits,
            "couplers": n_couplers,
            "dacs": high.dacs,
            "energy_55ua_j": high.energy_j,
            "therm_55ua_s": high.thermalization_s,
            "energy_1ua_j": low.energy_j,
            "therm_1ua_s": low.thermalization_s,
        })
    return Table(
        name="energy",
        columns=columns,
        rows=rows,
        notes=[
            "paper-inconsistent: energy_1ua_j and therm_1ua_s at qubits=512; source "
            "prints ~1 fJ / 33 ps, linear scaling of its own 55 uA cell gives 1.2 fJ "
            "/ 40 ps; tool reports the computed values",
        ],
    )


READOUT_DEVICES = (512, 2_048, 5_436, 10_000_000)


def readout_table() -> Table:
    """Readout parallelism by scheme and device size."""
    columns = [
        Column("qubits", "Qubits", "d"),
        Column("time_division", "Time-division", "d"),
        Column("freq_mux_q1e3", "Freq-mux Qr=1e3", "d"),
        Column("freq_mux_q1e6", "Freq-mux Qr=1e6", "d"),
    ]
    rows = [
        {
            "qubits": n,
            "time_division": readout_parallelism(n, "time-division"),
            "freq_mux_q1e3": readout_parallelism(n, "frequency-multiplex", 1e3),
            "freq_mux_q1e6": readout_parallelism(n, "frequency-multiplex", 1e6),
        }
        for n in READOUT_DEVICES
    ]
    return Table(name="readout", columns=columns, rows=rows)


QUBITS_TIME_SCENARIO = CellScenario(400, 6, 0.5, 64)
QUBITS_TIME_SAMPLES = (1, 20, 50, 100)
# Published totals at these sample counts disagree with the published
# per-task rows; kept here to annotate emissions.
QUBITS_TIME_DIVERGENT = {1: "1.60M", 20: "1.99M"}


def qubits_time_table() -> Table:
    """Qubit requirement vs problem runtime for one heavy 5G cell."""
    columns = [
        Column("samples", "Samples", "d"),
        Column("runtime_us", "Runtime (us)", ".0f"),
        Column("fdnl_qubits", "Detection qubits", "d"),
        Column("fec_qubits", "Decoding qubits", "d"),
        Column("total_qubits", "Total qubits", "d"),
    ]
    load = workload(QUBITS_TIME_SCENARIO)
    rows = []
    notes = []
    for samples in QUBITS_TIME_SAMPLES:
        budget = total_budget(load, QA_PROJECTED, samples)
        rows.append({
            "samples": samples,
            "runtime_us": qmi_runtime_us(QA_PROJECTED, samples),
            "fdnl_qubits": budget.per_task[BbuTask.FD_NL],
            "fec_qubits": budget.per_task[BbuTask.FEC],
            "total_qubits": budget.total,
        })
        if samples in QUBITS_TIME_DIVERGENT:
            notes.append(
                f"paper-inconsistent: total_qubits at samples={samples}; source "
                f"prints {QUBITS_TIME_DIVERGENT[samples]}, which disagrees with its "
                f"own per-task rows; tool reports per-task sum scaled by covered "
                f"fraction {budget.covered_fraction}"
            )
    return Table(name="qubits-time", columns=columns, rows=rows, notes=notes)


POWERBENEFIT_BANDWIDTHS = (50, 100, 200, 400)


def powerbenefit_table() -> Table:
    """Qubit ask and power for both candidates across bandwidths (64 ant)."""
    columns = [
        Column("bandwidth_mhz", "B/W (MHz)", "d"),
        Column("qubits_bs", "Qubits BS", "d"),
        Column("qubits_cran", "Qubits C-RAN", "d"),
        Column("bs_cmos_kw", "BS CMOS (kW)", ".1f"),
        Column("bs_qa_kw", "BS QA (kW)", ".1f"),
        Column("cran_cmos_mw", "C-RAN CMOS (MW)", ".3f"),
        Column("cran_qa_mw", "C-RAN QA (MW)", ".3f"),
    ]
    rows = []
    for bw in POWERBENEFIT_BANDWIDTHS:
        scenario = CellScenario(bw, 6, 0.5, 64)
        bs = compare(scenario, CMOS_14NM, QA_PROJECTED, DEFAULT_SAMPLES, BsTopology())
        cran = compare(scenario, CMOS_14NM, QA_PROJECTED, DEFAULT_SAMPLES, CranTopology())
        rows.append({
            "bandwidth_mhz": bw,
            "qubits_bs": bs.budget.total,
            "qubits_cran": cran.budget.total,
            "bs_cmos_kw": bs.cmos.total_w / 1e3,
            "bs_qa_kw": bs.qa.total_w / 1e3,
            "cran_cmos_mw": cran.cmos.total_w / 1e6,
            "cran_qa_mw": cran.qa.total_w / 1e6,
        })
    return Table(
        name="powerbenefit",
        columns=columns,
        rows=rows,
        notes=[
            "qubit columns run ~7% above the source's printed counts (386K-3.08M "
            "BS), whose derivation from its stated per-task models is not exactly "
            "recoverable; power columns reproduce the source within 15%",
        ],
    )


# Power savings the published cost table was computed from (watts).
COSTSAVINGS_DELTAS = (
    ("bs64", 41e3),
    ("bs128", 188e3),
    ("cran", 159e3),
)
COSTSAVINGS_HORIZONS = (1, 2, 5, 10)


def costsavings_table() -> Table:
    """Operating savings of the annealer candidate at the source's deltas."""
    columns = [Column("years", "Years", "d")]
    for name, _ in COSTSAVINGS_DELTAS:
        columns.append(Column(f"cost_{name}_usd", f"Cost {name} ($)", ".0f"))
        columns.append(Column(f"co2_{name}_kt", f"CO2 {name} (kt)", ".2f"))
    reports = {
        name: cost_report(delta_w, COSTSAVINGS_HORIZONS, CostAssumptions())
        for name, delta_w in COSTSAVINGS_DELTAS
    }
    rows = []
    for i, years in enumerate(COSTSAVINGS_HORIZONS):
        row: Dict = {"years": years}
        for name, _ in COSTSAVINGS_DELTAS:
            row[f"cost_{name}_usd"] = reports[name].opex_savings_usd[i]
            row[f"co2_{name}_kt"] = reports[name].co2_savings_kt[i]
        rows.append(row)
    return Table(
        name="costsavings",
        columns=columns,
        rows=rows,
        notes=[
            "power deltas fixed at the source's stated savings (41/188/159 kW for "
            "bs64/bs128/cran); this tool's own comparison yields larger deltas "
            "within the models' agreement band",
        ],
    )


PAPER_TABLES: Dict[str, Callable[[], Table]] = {
    "targets": targets_table,
    "energy": energy_table,
    "readout": readout_table,
    "qubits-time": qubits_time_table,
    "powerbenefit": powerbenefit_table,
    "costsavings": costsavings_table,
}
