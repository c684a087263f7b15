"""
Graph representation helpers and robustness metrics.

Graphs are plain ``networkx.Graph`` objects with dense integer node ids
``0..n-1``. Edge weights live in the ``weight`` edge attribute and never enter
the Laplacian: every metric here is computed on the unweighted structure.
"""

import logging
from collections.abc import Iterable

import networkx as nx
import numpy as np

from netmend.core.exceptions import DomainError, NumericError
from netmend.schemas.graph import ComponentPartition, MetricsSnapshot

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


def build_graph(n: int, edges: Iterable[Edge] = ()) -> nx.Graph:
    """Create a simple undirected graph on nodes 0..n-1."""
    if n < 0:
        raise DomainError(f"node count must be non-negative, got {n}")

    g = nx.Graph()
    g.add_nodes_from(range(n))
    for u, v in edges:
        if u == v:
            raise DomainError(f"self-loop on node {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise DomainError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        g.add_edge(u, v)
    return g


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def components(g: nx.Graph) -> ComponentPartition:
    """Connected components sorted by size, ties broken by smallest node id."""
    parts = [frozenset(c) for c in nx.connected_components(g)]
    parts.sort(key=lambda c: (-len(c), min(c)))
    return ComponentPartition(components=parts)


def lcc_subgraph(g: nx.Graph, partition: ComponentPartition | None = None) -> nx.Graph:
    """Read-only view of the largest connected component."""
    partition = partition or components(g)
    return g.subgraph(partition.lcc)


def laplacian_energy_fast(g: nx.Graph) -> float:
    """
    Laplacian energy from the edge count and degree sequence.

    L_E = 1/n [2m + sum(k_i^2) - 4m^2/n], evaluated as one exact integer
    fraction so d-regular graphs come out as exactly d.
    """
    n = g.number_of_nodes()
    if n == 0:
        raise DomainError("Laplacian energy is undefined for an empty node set")

    m = g.number_of_edges()
    sum_sq = sum(k * k for _, k in g.degree())
    numerator = 2 * m * n + n * sum_sq - 4 * m * m
    return numerator / (n * n)


def laplacian_energy_spectral(g: nx.Graph) -> float:
    """Variance of the eigenvalues of L = D - A (unweighted)."""
    n = g.number_of_nodes()
    if n == 0:
        raise DomainError("Laplacian energy is undefined for an empty node set")

    adjacency = nx.to_numpy_array(g, weight=None)
    laplacian = np.diag(adjacency.sum(axis=1)) - adjacency
    try:
        eigenvalues = np.linalg.eigvalsh(laplacian)
    except np.linalg.LinAlgError as e:
        raise NumericError(f"eigensolver did not converge: {e}") from e
    return float(np.var(eigenvalues))


def laplacian_energy_from_density(g: nx.Graph) -> float:
    """Density form: rho(n-1)[1 - rho(n-1)] + (1/n) sum(k_i^2)."""
    n = g.number_of_nodes()
    rho_scaled = density(g) * (n - 1)
    sum_sq = sum(k * k for _, k in g.degree())
    return rho_scaled * (1.0 - rho_scaled) + sum_sq / n


def robustness_index(g: nx.Graph, partition: ComponentPartition | None = None) -> float:
    """Fraction of all nodes that sit in the largest connected component."""
    n = g.number_of_nodes()
    if n == 0:
        raise DomainError("robustness index is undefined for an empty node set")
    partition = partition or components(g)
    return len(partition.lcc) / n


def density(g: nx.Graph) -> float:
    n = g.number_of_nodes()
    if n < 2:
        raise DomainError(f"density needs at least two nodes, got {n}")
    return 2 * g.number_of_edges() / (n * (n - 1))


def snapshot(g: nx.Graph, partition: ComponentPartition | None = None) -> MetricsSnapshot:
    """All robustness metrics at once: L_E on the LCC, S and rho on the whole graph."""
    partition = partition or components(g)
    lcc = lcc_subgraph(g, partition)
    n = g.number_of_nodes()

    return MetricsSnapshot(
        laplacian_energy=laplacian_energy_fast(lcc) if lcc.number_of_nodes() else 0.0,
        robustness_index=robustness_index(g, partition) if n else 0.0,
        density=density(g) if n >= 2 else 0.0,
        n_lcc=lcc.number_of_nodes(),
        m_lcc=lcc.number_of_edges(),
        components=partition.count,
    )


def max_degree_node(g: nx.Graph, nodes: Iterable[int] | None = None) -> int:
    """Node with the largest degree; ties go to the smallest id."""
    candidates = g.nodes if nodes is None else nodes
    best = min(candidates, key=lambda v: (-g.degree(v), v), default=None)
    if best is None:
        raise DomainError("no candidate nodes")
    return best
