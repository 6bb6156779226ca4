"""Command-line interface.

Subcommands evaluate the configured scenarios and emit one table per
invocation in csv, json, or fixed-width text. Output is deterministic:
the same config and flags produce byte-identical bytes. Exit codes:
0 success, 1 config problem, 2 model-domain error, 3 success with
warnings (warnings go to stderr).
"""

from __future__ import annotations

import argparse
import itertools
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from .config import (
    SWEEP_AXES,
    _INTEGER_AXES,
    ConfigError,
    RunConfig,
    load_config,
)
from .economics import compare, cost_report, offload_advantage_w
from .emit import Column, Table, render
from .qa_hardware import qmi_runtime_us, refrigerator_qubit_capacity
from .qubit_budget import total_budget
from .tables import PAPER_TABLES
from .timeline import BEST_CASE, WORST_CASE, year_available
from .workload import BbuTask, CellScenario, workload

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DOMAIN = 2
EXIT_WARNINGS = 3


class _Parser(argparse.ArgumentParser):
    # Usage mistakes are config problems; keep them on exit code 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH",
                        help="json config file (default: $QAPLAN_CONFIG or built-ins)")
    parser.add_argument("--format", choices=("csv", "json", "table"),
                        default="table", help="output format (default: table)")
    parser.add_argument("--out", metavar="PATH",
                        help="write output to a file instead of stdout")
    parser.add_argument("--sweep", action="append", default=[], metavar="AXIS=V1,V2,...",
                        help="sweep an axis over values; repeatable; overrides "
                             f"config sweep; axes: {', '.join(SWEEP_AXES)}")
    parser.add_argument("--paper-table", choices=sorted(PAPER_TABLES),
                        help="emit a reference report instead of evaluating "
                             "the configured scenarios")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="qaplan",
        description="Feasibility planner for annealer-offloaded baseband processing",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("targets", "per-task compute targets (TOPS) per scenario"),
        ("power", "deployment power for silicon and annealer candidates"),
        ("qubits", "annealer qubit requirement per scenario"),
        ("economics", "operating savings of the annealer candidate"),
        ("timeline", "when the required device sizes become available"),
    ):
        _add_common_flags(sub.add_parser(name, help=help_text))
    return parser


def _parse_sweep_flags(flags: Sequence[str]) -> Dict[str, List[float]]:
    sweep: Dict[str, List[float]] = {}
    for flag in flags:
        axis, sep, values = flag.partition("=")
        if not sep or not values:
            raise ConfigError(f"--sweep needs AXIS=V1,V2,...; got {flag!r}")
        if axis not in SWEEP_AXES:
            raise ConfigError(
                f"unknown sweep axis {axis!r}; axes: {', '.join(SWEEP_AXES)}"
            )
        cast = int if axis in _INTEGER_AXES else float
        try:
            sweep[axis] = [cast(v) for v in values.split(",")]
        except ValueError as exc:
            raise ConfigError(f"--sweep {axis}: {exc}") from exc
    return sweep


def _expand_points(
    cfg: RunConfig, sweep: Dict[str, List[float]], warnings: List[str]
) -> List[Tuple[str, CellScenario, int]]:
    """Evaluation points: (name, scenario, samples) per row.

    With a sweep, the grid replaces the scenario list, anchored on the
    first configured scenario. Grid points that fail validation are
    skipped with a warning rather than aborting the run.
    """
    if not sweep:
        return [(name, s, cfg.samples) for name, s in cfg.scenarios]
    base_name, base = cfg.scenarios[0]
    axes = [axis for axis in SWEEP_AXES if axis in sweep]
    points = []
    for combo in itertools.product(*(sweep[axis] for axis in axes)):
        values = dict(zip(axes, combo))
        samples = int(values.pop("samples", cfg.samples))
        fields = {
            "bandwidth_mhz": base.bandwidth_mhz,
            "modulation_bits": base.modulation_bits,
            "coding_rate": base.coding_rate,
            "antennas": base.antennas,
            "duty_time": base.duty_time,
            "duty_freq": base.duty_freq,
        }
        fields.update(values)
        label = ",".join(
            f"{axis}={values[axis]:g}" for axis in axes if axis != "samples"
        )
        if "samples" in axes:
            label = f"{label},samples={samples}" if label else f"samples={samples}"
        name = f"{base_name}[{label}]"
        try:
            scenario = CellScenario(
                bandwidth_mhz=fields["bandwidth_mhz"],
                modulation_bits=int(fields["modulation_bits"]),
                coding_rate=fields["coding_rate"],
                antennas=int(fields["antennas"]),
                duty_time=fields["duty_time"],
                duty_freq=fields["duty_freq"],
            )
        except ValueError as exc:
            warnings.append(f"skipping sweep point {name}: {exc}")
            continue
        points.append((name, scenario, samples))
    if not points:
        raise ConfigError("sweep produced no valid points")
    return points


_SCENARIO_COLUMNS = [
    Column("name", "Scenario"),
    Column("bandwidth_mhz", "B/W (MHz)", "g"),
    Column("antennas", "Antennas", "d"),
]


def cmd_targets(cfg: RunConfig, points, warnings) -> Table:
    columns = list(_SCENARIO_COLUMNS)
    for task in BbuTask:
        columns.append(Column(f"{task.value}_tops", task.label, ".3f"))
    columns.append(Column("total_tops", "Total", ".3f"))
    rows = []
    for name, scenario, _ in points:
        load = workload(scenario)
        row = {
            "name": name,
            "bandwidth_mhz": scenario.bandwidth_mhz,
            "antennas": scenario.antennas,
            "total_tops": load.total_tops,
        }
        for task in BbuTask:
            row[f"{task.value}_tops"] = load.tops[task]
        rows.append(row)
    return Table(name="targets", columns=columns, rows=rows,
                 notes=["units: TOPS"])


def cmd_power(cfg: RunConfig, points, warnings) -> Table:
    columns = list(_SCENARIO_COLUMNS) + [
        Column("node", "Node"),
        Column("cmos_bbu_w", "CMOS BBU (W)", ".1f"),
        Column("cmos_ru_w", "RU (W)", ".1f"),
        Column("cmos_pa_w", "PA (W)", ".1f"),
        Column("cmos_ps_w", "Power sys (W)", ".1f"),
        Column("cmos_fronthaul_w", "Fronthaul (W)", ".1f"),
        Column("cmos_total_w", "CMOS total (W)", ".1f"),
        Column("qa_silicon_w", "QA-side silicon (W)", ".1f"),
        Column("qa_refrigeration_w", "Refrigeration (W)", ".1f"),
        Column("qa_total_w", "QA total (W)", ".1f"),
        Column("delta_w", "Saving (W)", ".1f"),
    ]
    rows = []
    for name, scenario, samples in points:
        for profile in cfg.cmos_profiles:
            result = compare(scenario, profile, cfg.qa_profile, samples,
                             cfg.topology)
            rows.append({
                "name": name,
                "bandwidth_mhz": scenario.bandwidth_mhz,
                "antennas": scenario.antennas,
                "node": profile.node,
                "cmos_bbu_w": result.cmos.bbu_w,
                "cmos_ru_w": result.cmos.ru_w,
                "cmos_pa_w": result.cmos.pa_w,
                "cmos_ps_w": result.cmos.power_system_w,
                "cmos_fronthaul_w": result.cmos.fronthaul_w,
                "cmos_total_w": result.cmos.total_w,
                "qa_silicon_w": result.qa.bbu_w,
                "qa_refrigeration_w": result.qa.refrigeration_w,
                "qa_total_w": result.qa.total_w,
                "delta_w": result.delta_w,
            })
    return Table(name="power", columns=columns, rows=rows)


def cmd_qubits(cfg: RunConfig, points, warnings) -> Table:
    columns = list(_SCENARIO_COLUMNS) + [
        Column("samples", "Samples", "d"),
        Column("runtime_us", "Runtime (us)", ".0f"),
        Column("fdnl_qubits", "Detection qubits", "d"),
        Column("fec_qubits", "Decoding qubits", "d"),
        Column("covered_fraction", "Covered fraction", ".4f"),
        Column("total_qubits", "Total qubits", "d"),
        Column("capacity", "Refrigerator capacity", "d"),
        Column("fits", "Fits"),
    ]
    capacity = refrigerator_qubit_capacity()
    rows = []
    for name, scenario, samples in points:
        budget = total_budget(workload(scenario), cfg.qa_profile, samples)
        fits = budget.total <= capacity
        if not fits:
            warnings.append(
                f"{name}: requirement {budget.total} exceeds refrigerator "
                f"capacity {capacity}"
            )
        rows.append({
            "name": name,
            "bandwidth_mhz": scenario.bandwidth_mhz,
            "antennas": scenario.antennas,
            "samples": samples,
            "runtime_us": qmi_runtime_us(cfg.qa_profile, samples),
            "fdnl_qubits": budget.per_task[BbuTask.FD_NL],
            "fec_qubits": budget.per_task[BbuTask.FEC],
            "covered_fraction": budget.covered_fraction,
            "total_qubits": budget.total,
            "capacity": capacity,
            "fits": "yes" if fits else "no",
        })
    return Table(name="qubits", columns=columns, rows=rows)


def _horizon_label(years: float) -> str:
    return format(years, "g")


def cmd_economics(cfg: RunConfig, points, warnings) -> Table:
    columns = list(_SCENARIO_COLUMNS) + [
        Column("node", "Node"),
        Column("delta_w", "Saving (W)", ".1f"),
    ]
    for years in cfg.horizons_years:
        label = _horizon_label(years)
        columns.append(Column(f"opex_{label}yr_usd", f"OpEx {label}yr ($)", ".0f"))
        columns.append(Column(f"co2_{label}yr_kt", f"CO2 {label}yr (kt)", ".3f"))
    rows = []
    for name, scenario, samples in points:
        for profile in cfg.cmos_profiles:
            result = compare(scenario, profile, cfg.qa_profile, samples,
                             cfg.topology)
            if result.capacity_exceeded:
                warnings.append(
                    f"{name} ({profile.node}): qubit requirement "
                    f"{result.budget.total} exceeds refrigerator capacity "
                    f"{result.capacity}"
                )
            report = cost_report(result.delta_w, cfg.horizons_years, cfg.costs)
            row = {
                "name": name,
                "bandwidth_mhz": scenario.bandwidth_mhz,
                "antennas": scenario.antennas,
                "node": profile.node,
                "delta_w": result.delta_w,
            }
            for i, years in enumerate(cfg.horizons_years):
                label = _horizon_label(years)
                row[f"opex_{label}yr_usd"] = report.opex_savings_usd[i]
                row[f"co2_{label}yr_kt"] = report.co2_savings_kt[i]
            rows.append(row)
    return Table(
        name="economics", columns=columns, rows=rows,
        notes=["negative savings mean the annealer candidate draws more power; "
               "breakeven hardware budget equals the OpEx column at each horizon"],
    )


def cmd_timeline(cfg: RunConfig, points, warnings) -> Table:
    columns = list(_SCENARIO_COLUMNS) + [
        Column("samples", "Samples", "d"),
        Column("required_qubits", "Required qubits", "d"),
        Column("year_best", "Year (best case)", "d"),
        Column("year_worst", "Year (worst case)", "d"),
    ]
    for profile in cfg.cmos_profiles:
        columns.append(Column(
            f"advantage_{profile.node}_w", f"Advantage vs {profile.node} (W)", ".1f"
        ))
    rows = []
    for name, scenario, samples in points:
        budget = total_budget(workload(scenario), cfg.qa_profile, samples)
        row = {
            "name": name,
            "bandwidth_mhz": scenario.bandwidth_mhz,
            "antennas": scenario.antennas,
            "samples": samples,
            "required_qubits": budget.total,
            "year_best": year_available(BEST_CASE, budget.total),
            "year_worst": year_available(WORST_CASE, budget.total),
        }
        for profile in cfg.cmos_profiles:
            row[f"advantage_{profile.node}_w"] = offload_advantage_w(
                scenario, profile, cfg.qa_profile
            )
        rows.append(row)
    return Table(
        name="timeline", columns=columns, rows=rows,
        notes=["years are first availability of the required device size under "
               "the best/worst historical growth trends"],
    )


_COMMANDS = {
    "targets": cmd_targets,
    "power": cmd_power,
    "qubits": cmd_qubits,
    "economics": cmd_economics,
    "timeline": cmd_timeline,
}


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    warnings: List[str] = []
    try:
        if args.paper_table:
            table = PAPER_TABLES[args.paper_table]()
        else:
            cfg = load_config(args.config)
            sweep = _parse_sweep_flags(args.sweep) or cfg.sweep
            points = _expand_points(cfg, sweep, warnings)
            table = _COMMANDS[args.command](cfg, points, warnings)
        _emit(render(table, args.format), args.out)
    except ConfigError as exc:
        print(f"qaplan: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"qaplan: model error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"qaplan: cannot write output: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    for warning in warnings:
        print(f"qaplan: warning: {warning}", file=sys.stderr)
    return EXIT_WARNINGS if warnings else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
