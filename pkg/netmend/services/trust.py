import csv
import logging
import math
from pathlib import Path

import networkx as nx
import numpy as np

from netmend.core.config import settings
from netmend.core.exceptions import ConfigError, DomainError, GraphParseError, UndefinedTrustError
from netmend.schemas.trust import TransactionMatrices, TrustProfile
from netmend.utils.text import read_lines

logger = logging.getLogger(__name__)


def trust_mle(psi: int, eta: int) -> float:
    """
    Maximum-likelihood trust value of a node.

    The Bernoulli log-likelihood psi*log(phi) + eta*log(1 - phi) is maximized at
    phi = psi / (psi + eta).
    """
    if psi < 0 or eta < 0:
        raise DomainError(f"transaction tallies must be non-negative, got ({psi}, {eta})")
    if psi + eta == 0:
        raise UndefinedTrustError("trust is undefined for a node without transactions")
    return psi / (psi + eta)


def _check_unit(value: float, name: str) -> None:
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value}")


def similarity(phi_i: float, phi_j: float) -> float:
    """Gamma: trust product scaled by the normalized cosine of the trust gap."""
    _check_unit(phi_i, "phi_i")
    _check_unit(phi_j, "phi_j")
    delta = abs(phi_i - phi_j)
    return (math.cos(delta) + 1.0) / 2.0 * (phi_i * phi_j)


def edge_weight(phi_i: float, phi_j: float, adjacent: int) -> float:
    """w_ij = Gamma(phi_i, phi_j) + a_ij."""
    if adjacent not in (0, 1):
        raise DomainError(f"adjacency must be 0 or 1, got {adjacent}")
    return similarity(phi_i, phi_j) + adjacent


def edge_cost(profile: TrustProfile, u: int, v: int) -> float:
    """Cost of creating the link (u, v): its weight once the edge exists."""
    return edge_weight(profile.phi[u], profile.phi[v], 1)


def generate_transactions(
    g: nx.Graph,
    seed: int,
    low: int | None = None,
    high: int | None = None,
) -> TransactionMatrices:
    """Draw success/failure counts for every edge uniformly from [low, high]."""
    low = settings.TX_LOW if low is None else low
    high = settings.TX_HIGH if high is None else high
    if low < 0 or high < low or high < 1:
        raise ConfigError(f"invalid transaction range [{low}, {high}]")

    n = g.number_of_nodes()
    successes = np.zeros((n, n), dtype=np.int64)
    failures = np.zeros((n, n), dtype=np.int64)

    edges = sorted(tuple(sorted(e)) for e in g.edges())
    if edges:
        rng = np.random.default_rng(seed)
        s = rng.integers(low, high, size=len(edges), endpoint=True)
        f = rng.integers(low, high, size=len(edges), endpoint=True)

        # every edge needs at least one transaction
        empty = np.flatnonzero(s + f == 0)
        while empty.size:
            s[empty] = rng.integers(low, high, size=empty.size, endpoint=True)
            f[empty] = rng.integers(low, high, size=empty.size, endpoint=True)
            empty = empty[s[empty] + f[empty] == 0]

        rows, cols = np.array(edges).T
        successes[rows, cols] = s
        successes[cols, rows] = s
        failures[rows, cols] = f
        failures[cols, rows] = f

    return TransactionMatrices(successes=successes, failures=failures)


def trust_profile(matrices: TransactionMatrices, default: float | None = None) -> TrustProfile:
    """Per-node tallies and trust values; silent nodes get the default trust."""
    default = settings.DEFAULT_TRUST if default is None else default

    psi = matrices.successes.sum(axis=1)
    eta = matrices.failures.sum(axis=1)
    phi = [
        trust_mle(int(p), int(e)) if p + e > 0 else default
        for p, e in zip(psi, eta, strict=True)
    ]

    silent = sum(1 for p, e in zip(psi, eta, strict=True) if p + e == 0)
    if silent:
        logger.info("%d nodes without transactions get default trust %.2f", silent, default)

    return TrustProfile(psi=psi.tolist(), eta=eta.tolist(), phi=phi)


def weigh_graph(g: nx.Graph, profile: TrustProfile) -> nx.Graph:
    """Copy of ``g`` with every edge weighted by Gamma(phi_u, phi_v) + 1."""
    missing = [v for v in g.nodes if v >= profile.node_count]
    if missing:
        raise UndefinedTrustError(f"no trust value for nodes {missing[:5]}")

    weighted = g.copy()
    for u, v in weighted.edges():
        weighted.edges[u, v]["weight"] = edge_cost(profile, u, v)
    return weighted


def load_transactions(path: str | Path, g: nx.Graph) -> TransactionMatrices:
    """
    Read `i,j,T_ij,U_ij` rows for the edges of ``g``; each pair is stored symmetrically.

    ``i`` and ``j`` are node labels as they appear in the edge list
    (``g.graph["labels"]``); graphs without labels use their ids.
    """
    path = Path(path)
    n = g.number_of_nodes()
    labels = g.graph.get("labels") or [str(v) for v in range(n)]
    ids = {label: v for v, label in enumerate(labels)}
    successes = np.zeros((n, n), dtype=np.int64)
    failures = np.zeros((n, n), dtype=np.int64)

    for line_number, line in read_lines(path):
        row = next(csv.reader([line]), [])
        if not row or row[0].lstrip().startswith("#"):
            continue
        if len(row) != 4:
            raise GraphParseError(f"expected i,j,T,U, got {line!r}", line_number, str(path))

        a, b, *counts = (value.strip() for value in row)
        try:
            t, u = (int(value) for value in counts)
        except ValueError as e:
            # header line
            if line_number == 1:
                continue
            raise GraphParseError(
                f"transaction counts must be integers: {e}", line_number, str(path)
            ) from e

        unknown = [label for label in (a, b) if label not in ids]
        if unknown:
            raise GraphParseError(f"unknown node {unknown[0]!r}", line_number, str(path))
        i, j = ids[a], ids[b]
        if not g.has_edge(i, j):
            raise GraphParseError(f"({a}, {b}) is not an edge", line_number, str(path))
        if t < 0 or u < 0:
            raise GraphParseError("transaction counts must be non-negative", line_number, str(path))

        successes[i, j] = successes[j, i] = t
        failures[i, j] = failures[j, i] = u

    return TransactionMatrices(successes=successes, failures=failures)
