"""
Edge-list text format.

One ``u v`` pair per line, whitespace separated; extra columns are ignored.
Lines starting with ``#`` are comments, except the ``# node <label>`` pragma
which declares a node that may have no edges.
"""

import logging
from pathlib import Path

import networkx as nx

from netmend.core.exceptions import GraphParseError
from netmend.utils.text import read_lines

logger = logging.getLogger(__name__)

NODE_PRAGMA = "# node "


def load_edge_list(path: str | Path) -> nx.Graph:
    """
    Load an edge list and remap labels to dense ids in order of appearance.

    The label of node ``v`` is kept in ``g.graph["labels"][v]``; dropped
    duplicates and self-loops are counted in ``g.graph["duplicates"]`` and
    ``g.graph["self_loops"]``.
    """
    path = Path(path)
    ids: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()
    duplicates = 0
    self_loops = 0

    def node_id(label: str) -> int:
        if label not in ids:
            ids[label] = len(ids)
        return ids[label]

    for line_number, raw in read_lines(path):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[:2] == ["#", "node"]:
            if len(parts) != 3:
                raise GraphParseError("node pragma needs exactly one label", line_number, str(path))
            node_id(parts[2])
            continue
        if line.startswith("#"):
            continue
        if len(parts) < 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", line_number, str(path))

        u, v = node_id(parts[0]), node_id(parts[1])
        if u == v:
            self_loops += 1
            continue
        edge = (u, v) if u < v else (v, u)
        if edge in edges:
            duplicates += 1
            continue
        edges.add(edge)

    g = nx.Graph()
    g.add_nodes_from(range(len(ids)))
    g.add_edges_from(sorted(edges))
    g.graph["labels"] = list(ids)
    g.graph["duplicates"] = duplicates
    g.graph["self_loops"] = self_loops

    if duplicates or self_loops:
        logger.warning(
            "%s: dropped %d duplicate edges and %d self-loops", path, duplicates, self_loops
        )
    logger.info("Loaded %s: n=%d m=%d", path, g.number_of_nodes(), g.number_of_edges())
    return g


def save_edge_list(g: nx.Graph, path: str | Path) -> None:
    """Write ``g`` with dense ids; isolated nodes are kept via the node pragma."""
    path = Path(path)
    lines = [f"# netmend edge list n={g.number_of_nodes()} m={g.number_of_edges()}"]
    lines.extend(f"{NODE_PRAGMA}{v}" for v in sorted(g.nodes) if g.degree(v) == 0)
    lines.extend(f"{u} {v}" for u, v in sorted((min(e), max(e)) for e in g.edges()))

    with path.open("w", encoding="utf-8", newline="\n") as f:
        f.write("\n".join(lines) + "\n")
