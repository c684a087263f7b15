import logging
from pathlib import Path

import networkx as nx
import numpy as np
from pydantic import BaseModel

from netmend.schemas.metrics import MetricsSeries
from netmend.schemas.run import RunConfig
from netmend.services.attack import fragment
from netmend.services.budget import budget_restore
from netmend.services.generators import build_graph_from_spec
from netmend.services.graph_io import load_edge_list, save_edge_list
from netmend.services.report import (
    emit,
    record_attack,
    record_restoration,
    write_attack_trace,
    write_budget_schedule,
    write_rewire_plan,
)
from netmend.services.restore import random_restore, strategic_restore
from netmend.services.trust import (
    generate_transactions,
    load_transactions,
    trust_profile,
    weigh_graph,
)

logger = logging.getLogger(__name__)


class RunSummary(BaseModel):
    out: Path
    nodes: int
    edges: int
    fragmented_components: int
    removed_edges: int
    restored_edges: dict[str, int]
    final_robustness: dict[str, float]


def load_network(config: RunConfig) -> nx.Graph:
    if config.generator is not None:
        return build_graph_from_spec(config.generator)
    return load_edge_list(config.dataset)


def run_pipeline(config: RunConfig) -> RunSummary:
    """Generate or load, weigh, attack and restore one network; write every artifact."""
    out = config.out
    out.mkdir(parents=True, exist_ok=True)
    tx_seed, restore_seed = (int(s) for s in np.random.SeedSequence(config.seed).generate_state(2))

    # STEP 1: Network and trust weights
    g = load_network(config)
    if config.transactions is not None:
        matrices = load_transactions(config.transactions, g)
    else:
        matrices = generate_transactions(g, tx_seed, config.tx_low, config.tx_high)
    profile = trust_profile(matrices)
    g = weigh_graph(g, profile)
    save_edge_list(g, out / "graph_original.txt")

    # STEP 2: Fragmentation
    fragmented, trace = fragment(g, config.attack)
    save_edge_list(fragmented, out / "graph_fragmented.txt")
    write_attack_trace(trace, out / "attack_trace.csv")

    series = record_attack(MetricsSeries(), trace)
    restored_edges: dict[str, int] = {}
    final_robustness: dict[str, float] = {}

    # STEP 3: Restoration, every mechanism on its own copy of the fragmented graph
    for mechanism in config.mechanisms:
        rng = np.random.default_rng(restore_seed)
        if mechanism == "strategic":
            restored, plan = strategic_restore(
                fragmented, profile, rng, config.threshold_mode, config.tiebreak
            )
            records = plan.records
        elif mechanism == "random":
            restored, plan = random_restore(fragmented, profile, rng, config.threshold_mode)
            records = plan.records
        else:
            restored, schedule, _ = budget_restore(
                fragmented, profile, config.budget, rng, config.threshold_mode, config.tiebreak
            )
            records = schedule.records
            write_budget_schedule(schedule, out / "budget_schedule.csv")

        write_rewire_plan(records, out / f"rewire_plan_{mechanism}.csv")
        save_edge_list(restored, out / f"graph_restored_{mechanism}.txt")
        record_restoration(series, fragmented, records, mechanism)

        restored_edges[mechanism] = restored.number_of_edges()
        final_robustness[mechanism] = series.select("restore", mechanism)[-1].robustness_index

    # STEP 4: Reports
    emit(series, "csv", out / "metrics.csv")
    emit(series, "json", out / "metrics.json")

    summary = RunSummary(
        out=out,
        nodes=g.number_of_nodes(),
        edges=g.number_of_edges(),
        fragmented_components=(trace.steps[-1] if trace.steps else trace.initial).components,
        removed_edges=len(trace),
        restored_edges=restored_edges,
        final_robustness=final_robustness,
    )
    logger.info("Run complete: %s", summary.model_dump_json())
    return summary
