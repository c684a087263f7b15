"""
Budget-constrained restoration.

The strategic plan is computed first on a scratch copy. Its operations are then
replayed on the live graph in budget increments of B/10: at every increment a
0/1 knapsack picks, among the operations not executed yet, the set with the
largest total LCC energy whose cost fits in what is left of the increment.
All budget arithmetic is done in integer cost cents.
"""

import logging
from collections.abc import Sequence
from typing import Literal

import networkx as nx
import numpy as np

from netmend.core.config import settings
from netmend.core.exceptions import ConfigError, DomainError
from netmend.schemas.budget import BudgetIncrement, BudgetSchedule, KnapsackSelection
from netmend.schemas.rewire import RewireRecord
from netmend.schemas.trust import TrustProfile
from netmend.services.graph_core import components, max_degree_node
from netmend.services.restore import (
    ThresholdMode,
    TieBreak,
    attach,
    is_safe_removal,
    pick_lcc_anchor,
    rewire_threshold,
    safe_rewire_neighbor,
    strategic_restore,
)
from netmend.services.trust import edge_cost
from netmend.utils.numeric import from_cents, to_cents

logger = logging.getLogger(__name__)


def knapsack_cents(values: Sequence[float], weights: Sequence[int], capacity: int) -> list[int]:
    """
    0/1 knapsack over integer weights; returns the chosen indices, ascending.

    T[i, c] is the best value using the first i items within capacity c, and
    K[i, c] marks whether item i is taken there. Items are only taken on a
    strict improvement.
    """
    n = len(values)
    if capacity < 0 or n == 0:
        return []

    logger.debug("Knapsack table %d x %d", n + 1, capacity + 1)
    table = np.zeros((n + 1, capacity + 1))
    keep = np.zeros((n + 1, capacity + 1), dtype=bool)

    for i in range(1, n + 1):
        weight, value = weights[i - 1], values[i - 1]
        table[i] = table[i - 1]
        if weight > capacity:
            continue
        candidate = table[i - 1, : capacity + 1 - weight] + value
        better = candidate > table[i - 1, weight:]
        table[i, weight:][better] = candidate[better]
        keep[i, weight:] = better

    chosen = []
    c = capacity
    for i in range(n, 0, -1):
        if keep[i, c]:
            chosen.append(i - 1)
            c -= weights[i - 1]
    return sorted(chosen)


def knapsack(values: Sequence[float], costs: Sequence[float], budget: float) -> KnapsackSelection:
    """Subset of operations maximizing total energy with total cost within ``budget``."""
    if len(values) != len(costs):
        raise DomainError(f"{len(values)} values but {len(costs)} costs")
    if any(c <= 0 for c in costs):
        raise DomainError("all costs must be positive")
    if budget < 0:
        raise DomainError(f"budget must be non-negative, got {budget}")

    if sum(costs) <= budget and all(v >= 0 for v in values):
        chosen = list(range(len(values)))
    else:
        weights = [to_cents(c) for c in costs]
        chosen = knapsack_cents(values, weights, to_cents(budget))

    return KnapsackSelection(
        indices=chosen,
        total_value=sum(values[k] for k in chosen),
        total_cost=sum(costs[k] for k in chosen),
    )


def _plan_replay(
    live: nx.Graph,
    entry: RewireRecord,
    rng: np.random.Generator,
    threshold_mode: ThresholdMode | None,
    tiebreak: TieBreak | None,
) -> tuple[int, int, tuple[int, int] | None]:
    """Anchor, target and removed edge for replaying ``entry`` on the live graph."""
    partition = components(live)
    lcc = partition.lcc
    if entry.j in lcc:
        raise DomainError(f"node {entry.j} is already part of the LCC")

    verbatim = entry.i in lcc and (
        entry.removed is None
        or (live.has_edge(*entry.removed) and is_safe_removal(live, *entry.removed))
    )
    if verbatim:
        return entry.i, entry.j, entry.removed

    anchor = pick_lcc_anchor(live.subgraph(lcc))
    target = max_degree_node(live, partition.component_of(entry.j))
    removed = None
    if live.subgraph(lcc).number_of_edges() > rewire_threshold(
        live.number_of_nodes(), threshold_mode
    ):
        j = safe_rewire_neighbor(live, anchor, rng, tiebreak)
        if j is not None:
            removed = (anchor, j)

    logger.warning(
        "Plan step %d re-anchored: (%d, %d) -> (%d, %d)",
        entry.step,
        entry.i,
        entry.j,
        anchor,
        target,
    )
    return anchor, target, removed


def budget_restore(
    g: nx.Graph,
    trust: TrustProfile,
    budget: float | Literal["auto"] | None,
    rng: np.random.Generator,
    threshold_mode: ThresholdMode | None = None,
    tiebreak: TieBreak | None = None,
    increments: int | None = None,
) -> tuple[nx.Graph, BudgetSchedule, list[float]]:
    """
    Restore ``g`` under a total budget, released in equal increments.

    Returns the live graph, the per-increment schedule and the LCC energies in
    execution order. ``budget="auto"`` uses the full cost of the strategic plan.
    """
    increments = increments or settings.BUDGET_INCREMENTS
    if budget not in (None, "auto") and budget <= 0:
        raise ConfigError(f"budget must be positive, got {budget}")

    _, plan = strategic_restore(g, trust, rng, threshold_mode, tiebreak)
    live_rng = np.random.default_rng(int(rng.integers(2**63)))

    cost_cents = [to_cents(c) for c in plan.costs]
    total = sum(cost_cents) if budget in (None, "auto") else to_cents(budget)

    live = g.copy()
    schedule = BudgetSchedule(total_budget=from_cents(total))
    if not plan.records:
        return live, schedule, []

    pending = list(range(len(plan)))
    spent = 0
    energies: list[float] = []

    for k in range(1, increments + 1):
        limit = total * k // increments
        picked = knapsack_cents(
            [plan.records[r].theta for r in pending],
            [cost_cents[r] for r in pending],
            limit - spent,
        )
        row = BudgetIncrement(index=k, budget=from_cents(limit))

        for r in [pending[s] for s in picked]:
            anchor, target, removed = _plan_replay(
                live, plan.records[r], live_rng, threshold_mode, tiebreak
            )
            cost = to_cents(edge_cost(trust, anchor, target))
            if spent + cost > limit:
                logger.warning("Plan step %d deferred: cost exceeds increment %d", r + 1, k)
                row.deferred.append(r)
                continue

            record = attach(live, anchor, target, removed, trust, len(energies) + 1)
            spent += cost
            pending.remove(r)
            row.selected.append(r)
            energies.append(record.theta)
            row.executed.append(record)

        row.energies = energies[::-1]
        row.spent = from_cents(spent)
        schedule.increments.append(row)
        logger.info(
            "Increment %d: budget %.2f, executed %d, pending %d",
            k,
            row.budget,
            len(row.executed),
            len(pending),
        )

    if pending:
        logger.info("%d plan steps left unexecuted within the budget", len(pending))
    return live, schedule, energies
