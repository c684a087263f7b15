import logging
import math

import networkx as nx
import numpy as np

from netmend.core.exceptions import DomainError
from netmend.schemas.generator import GeneratorSpec

logger = logging.getLogger(__name__)


def gen_er(n: int, p: float, seed: int) -> nx.Graph:
    """Erdos-Renyi G(n, p) on nodes 0..n-1."""
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must lie in [0, 1], got {p}")

    g = nx.fast_gnp_random_graph(n, p, seed=seed)
    logger.info("Generated ER graph n=%d p=%g m=%d", n, p, g.number_of_edges())
    return g


def power_law_degrees(n: int, gamma: float, rng: np.random.Generator) -> np.ndarray:
    """
    Degree sequence with p(k) ~ k^-gamma on k in [1, sqrt(n)].

    The sum is made even by resampling single nodes, so the sequence is
    graphical for the configuration model.
    """
    k_max = max(2, math.isqrt(n))
    ks = np.arange(1, k_max + 1)
    weights = ks.astype(float) ** -gamma
    probabilities = weights / weights.sum()

    degrees = rng.choice(ks, size=n, p=probabilities)
    while degrees.sum() % 2:
        degrees[rng.integers(n)] = rng.choice(ks, p=probabilities)
    return degrees


def gen_power_law(n: int, gamma: float, seed: int) -> nx.Graph:
    """
    Configuration-model graph with a power-law degree sequence.

    Self-loops and parallel edges produced by the stub matching are dropped,
    so realized degrees may fall slightly below the sampled ones.
    """
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if gamma <= 2.0:
        raise DomainError(f"power-law exponent must exceed 2, got {gamma}")

    rng = np.random.default_rng(seed)
    degrees = power_law_degrees(n, gamma, rng)

    multigraph = nx.configuration_model(degrees.tolist(), seed=int(rng.integers(2**32)))
    g = nx.Graph(multigraph)
    g.remove_edges_from(list(nx.selfloop_edges(g)))

    logger.info(
        "Generated power-law graph n=%d gamma=%g m=%d (%d stubs dropped)",
        n,
        gamma,
        g.number_of_edges(),
        int(degrees.sum()) - 2 * g.number_of_edges(),
    )
    return g


def build_graph_from_spec(spec: GeneratorSpec) -> nx.Graph:
    if spec.kind == "erdos_renyi":
        return gen_er(spec.n, spec.p, spec.seed)
    return gen_power_law(spec.n, spec.gamma, spec.seed)
