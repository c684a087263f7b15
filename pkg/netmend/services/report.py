"""
Metric series and the CSV/JSON artifacts of a run.

All writers use a fixed column order, six significant digits for reals and
LF line endings, so identical inputs give byte-identical files.
"""

import csv
import json
from collections.abc import Iterable
from pathlib import Path
from typing import Literal

import networkx as nx

from netmend.schemas.attack import AttackTrace
from netmend.schemas.budget import BudgetSchedule
from netmend.schemas.graph import MetricsSnapshot
from netmend.schemas.metrics import (
    SERIES_COLUMNS,
    Mechanism,
    MetricsRow,
    MetricsSeries,
    Phase,
)
from netmend.schemas.rewire import RewireRecord
from netmend.services.graph_core import snapshot
from netmend.utils.numeric import format_real, round_real

ATTACK_COLUMNS = ("step", "u", "v", "components", "L_E", "S")
PLAN_COLUMNS = (
    "r",
    "kind",
    "i",
    "j",
    "removed_u",
    "removed_v",
    "theta",
    "cost",
    "S",
    "rho",
    "n_lcc",
    "m_lcc",
)


def record_snapshot(
    series: MetricsSeries,
    state: MetricsSnapshot,
    phase: Phase,
    mechanism: Mechanism,
    cost: float = 0.0,
) -> MetricsSeries:
    """Append one row; the cumulative cost runs per (phase, mechanism)."""
    previous = series.select(phase, mechanism)
    cumulative = (previous[-1].cumulative_cost if previous else 0.0) + cost

    series.rows.append(
        MetricsRow(
            step=series.next_step(phase, mechanism),
            phase=phase,
            mechanism=mechanism,
            laplacian_energy=state.laplacian_energy,
            robustness_index=state.robustness_index,
            density=state.density,
            n_lcc=state.n_lcc,
            m_lcc=state.m_lcc,
            cumulative_cost=cumulative,
        )
    )
    return series


def record(
    series: MetricsSeries,
    g: nx.Graph,
    phase: Phase,
    mechanism: Mechanism,
    cost: float = 0.0,
) -> MetricsSeries:
    """Append the metrics of ``g``: L_E on its LCC, S and rho on the whole graph."""
    return record_snapshot(series, snapshot(g), phase, mechanism, cost)


def record_attack(series: MetricsSeries, trace: AttackTrace) -> MetricsSeries:
    record_snapshot(series, trace.initial, "attack", "none")
    for step in trace.steps:
        record_snapshot(series, step.metrics, "attack", "none")
    return series


def record_restoration(
    series: MetricsSeries,
    fragmented: nx.Graph,
    records: Iterable[RewireRecord],
    mechanism: Mechanism,
) -> MetricsSeries:
    record(series, fragmented, "restore", mechanism)
    for r in records:
        state = MetricsSnapshot(
            laplacian_energy=r.theta,
            robustness_index=r.robustness_index,
            density=r.density,
            n_lcc=r.n_lcc,
            m_lcc=r.m_lcc,
            components=r.components,
        )
        record_snapshot(series, state, "restore", mechanism, r.cost)
    return series


def _row_values(row: MetricsRow) -> dict[str, int | float | str]:
    return {
        "step": row.step,
        "phase": row.phase,
        "mechanism": row.mechanism,
        "L_E": row.laplacian_energy,
        "S": row.robustness_index,
        "rho": row.density,
        "n_lcc": row.n_lcc,
        "m_lcc": row.m_lcc,
        "cum_cost": row.cumulative_cost,
    }


def _cell(value: int | float | str | None) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format_real(value)
    return str(value)


def _write_csv(path: Path, header: Iterable[str], rows: Iterable[Iterable]) -> None:
    with path.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(value) for value in row])


def emit(series: MetricsSeries, fmt: Literal["csv", "json"], path: str | Path) -> None:
    path = Path(path)
    if fmt == "csv":
        _write_csv(
            path,
            SERIES_COLUMNS,
            ([_row_values(row)[c] for c in SERIES_COLUMNS] for row in series.rows),
        )
        return

    payload = [
        {
            key: round_real(value) if isinstance(value, float) else value
            for key, value in _row_values(row).items()
        }
        for row in series.rows
    ]
    with path.open("w", encoding="utf-8", newline="\n") as f:
        f.write(json.dumps(payload, indent=2) + "\n")


def load_series(path: str | Path) -> MetricsSeries:
    """Read a series written by :func:`emit`; the format follows the file suffix."""
    path = Path(path)
    with path.open(encoding="utf-8", newline="") as f:
        if path.suffix == ".json":
            rows = json.load(f)
        else:
            rows = list(csv.DictReader(f))
    return MetricsSeries(rows=[MetricsRow.model_validate(row) for row in rows])


def write_attack_trace(trace: AttackTrace, path: str | Path) -> None:
    _write_csv(
        Path(path),
        ATTACK_COLUMNS,
        (
            (
                s.step,
                s.u,
                s.v,
                s.components,
                s.metrics.laplacian_energy,
                s.metrics.robustness_index,
            )
            for s in trace.steps
        ),
    )


def write_rewire_plan(records: Iterable[RewireRecord], path: str | Path) -> None:
    _write_csv(
        Path(path),
        PLAN_COLUMNS,
        (
            (
                r.step,
                r.kind,
                r.i,
                r.j,
                r.removed[0] if r.removed else None,
                r.removed[1] if r.removed else None,
                r.theta,
                r.cost,
                r.robustness_index,
                r.density,
                r.n_lcc,
                r.m_lcc,
            )
            for r in records
        ),
    )


def write_budget_schedule(schedule: BudgetSchedule, path: str | Path) -> None:
    """One row per increment: the budget, then LCC energies newest first."""
    width = max((len(row.energies) for row in schedule.increments), default=0)
    _write_csv(
        Path(path),
        ["budget", *(str(k) for k in range(width))],
        (
            [row.budget, *row.energies, *[None] * (width - len(row.energies))]
            for row in schedule.increments
        ),
    )
