import argparse
import json
from pathlib import Path

from netmend.core.config import settings
from netmend.services.graph_core import (
    density,
    laplacian_energy_fast,
    laplacian_energy_spectral,
    robustness_index,
)
from netmend.services.graph_io import load_edge_list


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("metrics", help="Print robustness metrics of an edge list")
    parser.add_argument("graph", type=Path)
    parser.set_defaults(handler=cmd_metrics)


def cmd_metrics(args: argparse.Namespace) -> int:
    """Print n, m, L_E, S and rho of a graph file as JSON on stdout."""
    g = load_edge_list(args.graph)
    n = g.number_of_nodes()

    spectral = None
    if 0 < n <= settings.SPECTRAL_MAX_NODES:
        spectral = round(laplacian_energy_spectral(g), 6)

    result = {
        "n": n,
        "m": g.number_of_edges(),
        "L_E": round(laplacian_energy_fast(g), 6),
        "L_E_spectral": spectral,
        "S": round(robustness_index(g), 6),
        "rho": round(density(g), 6),
    }
    print(json.dumps(result))
    return 0
