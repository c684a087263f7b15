import networkx as nx
import numpy as np
import pytest

from netmend.schemas.attack import AttackSpec
from netmend.schemas.trust import TrustProfile
from netmend.services.attack import fragment
from netmend.services.generators import gen_er
from netmend.services.graph_core import build_graph


@pytest.fixture
def path3() -> nx.Graph:
    return build_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def star4() -> nx.Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def cycle5() -> nx.Graph:
    return nx.cycle_graph(5)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


def uniform_trust(n: int, value: float = 0.5) -> TrustProfile:
    return TrustProfile.uniform(n, value)


def random_graph_corpus(count: int, seed: int, n_max: int = 100) -> list[nx.Graph]:
    """Random G(n, p) graphs with n in [2, n_max] and p in {0.05, ..., 0.95}."""
    rng = np.random.default_rng(seed)
    ps = np.round(np.arange(0.05, 0.96, 0.05), 2)
    return [
        nx.gnp_random_graph(int(rng.integers(2, n_max + 1)), float(rng.choice(ps)), seed=k)
        for k in range(count)
    ]


def fragmented_er(n: int, p: float, q: int, seed: int) -> nx.Graph:
    g = gen_er(n, p, seed)
    fragmented, _ = fragment(g, AttackSpec(mode="random", target_components=q, seed=seed))
    return fragmented


def edge_set(g: nx.Graph) -> set[tuple[int, int]]:
    return {(min(e), max(e)) for e in g.edges()}
