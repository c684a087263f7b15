import logging

import networkx as nx
import numpy as np

from netmend.core.exceptions import AttackFailedError, DomainError
from netmend.schemas.attack import AttackSpec, AttackStep, AttackTrace
from netmend.services.graph_core import Edge, normalize_edge, snapshot

logger = logging.getLogger(__name__)


def targeted_victim(g: nx.Graph) -> Edge:
    """Edge with the largest endpoint degree sum; ties go to the smallest (u, v)."""
    best = min(
        (normalize_edge(u, v) for u, v in g.edges()),
        key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e),
        default=None,
    )
    if best is None:
        raise DomainError("cannot pick a victim edge from an edgeless graph")
    return best


def fragment(g: nx.Graph, spec: AttackSpec) -> tuple[nx.Graph, AttackTrace]:
    """
    Remove edges until the graph has at least ``spec.target_components`` components.

    Works on a copy; the input graph is left untouched. Every removal is logged
    in the trace together with the metrics right after it.
    """
    n = g.number_of_nodes()
    if spec.target_components > n:
        raise DomainError(f"cannot split {n} nodes into {spec.target_components} components")

    work = g.copy()
    state = snapshot(work)
    trace = AttackTrace(spec=spec, initial=state)
    if state.components >= spec.target_components:
        logger.info("Graph already has %d components, nothing to remove", state.components)
        return work, trace

    rng = np.random.default_rng(spec.seed)
    pool = sorted(normalize_edge(u, v) for u, v in work.edges())

    while state.components < spec.target_components:
        if spec.max_removals is not None and len(trace) >= spec.max_removals:
            raise AttackFailedError(
                f"reached {state.components} of {spec.target_components} components "
                f"after the cap of {spec.max_removals} removals",
                trace,
            )
        if not pool:
            raise AttackFailedError("ran out of edges before reaching the target", trace)

        if spec.mode == "random":
            index = int(rng.integers(len(pool)))
            pool[index], pool[-1] = pool[-1], pool[index]
            u, v = pool.pop()
        else:
            u, v = targeted_victim(work)
            pool.remove((u, v))

        work.remove_edge(u, v)
        state = snapshot(work)
        trace.steps.append(AttackStep(step=len(trace) + 1, u=u, v=v, metrics=state))
        logger.debug("Removed (%d, %d): %d components", u, v, state.components)

    logger.info(
        "%s attack removed %d edges: %d components, S=%.4f",
        spec.mode.capitalize(),
        len(trace),
        state.components,
        state.robustness_index,
    )
    return work, trace


def replay_attack(g: nx.Graph, trace: AttackTrace) -> nx.Graph:
    """Apply the removals recorded in ``trace`` to a copy of ``g``."""
    work = g.copy()
    work.remove_edges_from(trace.removed_edges)
    return work
