"""
Restoration of a fragmented network.

Each step attaches one disconnected component to the largest connected
component (LCC). When the LCC has spare edges (m_LCC above the threshold) an
LCC edge at the anchor is detached and reattached to the component; otherwise
a new edge is added. The detached edge never disconnects the LCC.
"""

import logging
from collections.abc import Iterable
from typing import Literal

import networkx as nx
import numpy as np

from netmend.core.config import settings
from netmend.core.exceptions import DomainError
from netmend.schemas.graph import ComponentPartition
from netmend.schemas.rewire import RewirePlan, RewireRecord
from netmend.schemas.trust import TrustProfile
from netmend.services.graph_core import components, max_degree_node, normalize_edge, snapshot
from netmend.services.trust import edge_cost

logger = logging.getLogger(__name__)

ThresholdMode = Literal["n", "n-1"]
TieBreak = Literal["random", "deterministic"]


def rewire_threshold(n_total: int, mode: ThresholdMode | None = None) -> int:
    """Edge count the LCC must exceed before edges are rewired instead of added."""
    mode = mode or settings.THRESHOLD_MODE
    return n_total if mode == "n" else n_total - 1


def pick_lcc_anchor(lcc: nx.Graph) -> int:
    """Max-degree node of the LCC, smallest id on ties."""
    return max_degree_node(lcc)


def pick_component_anchor(
    g: nx.Graph, partition: ComponentPartition
) -> tuple[frozenset[int], int]:
    """Largest disconnected component and its max-degree node."""
    if partition.count < 2:
        raise DomainError("no disconnected component to attach")
    component = partition.others[0]
    return component, max_degree_node(g, component)


def is_safe_removal(g: nx.Graph, u: int, v: int) -> bool:
    """True when removing (u, v) keeps u and v connected."""
    data = dict(g.edges[u, v])
    g.remove_edge(u, v)
    safe = nx.has_path(g, u, v)
    g.add_edge(u, v, **data)
    return safe


def _order_by_degree(
    g: nx.Graph, nodes: Iterable[int], rng: np.random.Generator, tiebreak: TieBreak
) -> list[int]:
    nodes = sorted(nodes)
    if tiebreak == "random":
        keys = rng.random(len(nodes))
        order = sorted(range(len(nodes)), key=lambda k: (-g.degree(nodes[k]), keys[k]))
        return [nodes[k] for k in order]
    return sorted(nodes, key=lambda v: (-g.degree(v), v))


def safe_rewire_neighbor(
    g: nx.Graph, anchor: int, rng: np.random.Generator, tiebreak: TieBreak | None = None
) -> int | None:
    """
    Neighbor j of the anchor whose edge can be detached.

    Candidates need degree >= 2 and are scanned in decreasing degree order until
    one stays connected to the anchor without the (anchor, j) edge.
    """
    tiebreak = tiebreak or settings.TIEBREAK
    candidates = [j for j in g.neighbors(anchor) if g.degree(j) >= 2]
    for j in _order_by_degree(g, candidates, rng, tiebreak):
        if is_safe_removal(g, anchor, j):
            return j
    return None


def attach(
    g: nx.Graph,
    anchor: int,
    target: int,
    removed: tuple[int, int] | None,
    trust: TrustProfile,
    step: int,
) -> RewireRecord:
    """Remove ``removed`` (if any), link anchor to target and record the new state."""
    if removed is not None:
        g.remove_edge(*removed)
    cost = edge_cost(trust, anchor, target)
    g.add_edge(anchor, target, weight=cost)

    state = snapshot(g)
    return RewireRecord(
        step=step,
        kind="rewire" if removed is not None else "add",
        i=anchor,
        j=target,
        removed=normalize_edge(*removed) if removed is not None else None,
        theta=state.laplacian_energy,
        cost=cost,
        robustness_index=state.robustness_index,
        density=state.density,
        n_lcc=state.n_lcc,
        m_lcc=state.m_lcc,
        components=state.components,
    )


def apply_operation(
    g: nx.Graph,
    anchor: int,
    target: int,
    lcc: frozenset[int],
    trust: TrustProfile,
    step: int,
    rng: np.random.Generator,
    threshold_mode: ThresholdMode | None = None,
    tiebreak: TieBreak | None = None,
) -> RewireRecord:
    """One strategic step: rewire at the anchor when the LCC has spare edges, else add."""
    m_lcc = g.subgraph(lcc).number_of_edges()
    removed = None

    if m_lcc > rewire_threshold(g.number_of_nodes(), threshold_mode):
        j = safe_rewire_neighbor(g, anchor, rng, tiebreak)
        if j is None:
            logger.warning("Step %d: no safe edge at node %d, adding instead", step, anchor)
        else:
            removed = (anchor, j)

    return attach(g, anchor, target, removed, trust, step)


def strategic_restore(
    g: nx.Graph,
    trust: TrustProfile,
    rng: np.random.Generator,
    threshold_mode: ThresholdMode | None = None,
    tiebreak: TieBreak | None = None,
) -> tuple[nx.Graph, RewirePlan]:
    """
    Reconnect every component to the LCC, largest component first.

    Works on a copy of ``g``. An already connected graph yields an empty plan.
    """
    work = g.copy()
    plan = RewirePlan(mechanism="strategic")
    partition = components(work)
    if partition.count <= 1:
        logger.info("Graph is already connected, nothing to restore")
        return work, plan

    logger.info("Strategic restoration of %d components", partition.count)
    while partition.count > 1:
        anchor = pick_lcc_anchor(work.subgraph(partition.lcc))
        _, target = pick_component_anchor(work, partition)

        record = apply_operation(
            work,
            anchor,
            target,
            partition.lcc,
            trust,
            len(plan) + 1,
            rng,
            threshold_mode,
            tiebreak,
        )
        plan.records.append(record)
        logger.debug(
            "Step %d: %s (%d, %d) L_E=%.4f S=%.4f",
            record.step,
            record.kind,
            record.i,
            record.j,
            record.theta,
            record.robustness_index,
        )
        partition = components(work)

    logger.info(
        "Restored in %d steps (%d rewires), total cost %.4f",
        len(plan),
        sum(1 for r in plan.records if r.kind == "rewire"),
        plan.total_cost,
    )
    return work, plan


def random_restore(
    g: nx.Graph,
    trust: TrustProfile,
    rng: np.random.Generator,
    threshold_mode: ThresholdMode | None = None,
) -> tuple[nx.Graph, RewirePlan]:
    """
    Comparison baseline: random LCC edge, random component, random target node.

    Uses the same rewire-vs-add threshold and bridge protection as the
    strategic mechanism.
    """
    work = g.copy()
    plan = RewirePlan(mechanism="random")
    partition = components(work)

    while partition.count > 1:
        others = partition.others
        component = sorted(others[int(rng.integers(len(others)))])
        target = component[int(rng.integers(len(component)))]

        lcc = work.subgraph(partition.lcc)
        removed = None
        if lcc.number_of_edges() > rewire_threshold(work.number_of_nodes(), threshold_mode):
            edges = sorted(normalize_edge(u, v) for u, v in lcc.edges())
            for index in rng.permutation(len(edges)):
                u, v = edges[index]
                if rng.random() < 0.5:
                    u, v = v, u
                if is_safe_removal(work, u, v):
                    removed = (u, v)
                    break

        if removed is not None:
            anchor = removed[0]
        else:
            nodes = sorted(partition.lcc)
            anchor = nodes[int(rng.integers(len(nodes)))]

        plan.records.append(attach(work, anchor, target, removed, trust, len(plan) + 1))
        partition = components(work)

    return work, plan
