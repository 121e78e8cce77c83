"""Removable matchings in k-connected graphs."""

import json

from ._core import (
    Graph,
    RemmatchError,
    canonical_code,
    classify_exception,
    empirical_f,
    enumerate_connected_graphs,
    families,
    find,
    hunt_conjecture,
    is_k_connected,
    mader_audit_passes,
    max_matching_size,
    max_removable_matching,
    min_degree,
    minimally_k_connected_reduction,
    minimum_vertex_cut,
    run_cli,
    verify_theorem,
    vertex_connectivity,
)

__all__ = [
    "Graph",
    "RemmatchError",
    "canonical_code",
    "classify_exception",
    "cli_json",
    "empirical_f",
    "enumerate_connected_graphs",
    "families",
    "find",
    "hunt_conjecture",
    "is_k_connected",
    "mader_audit_passes",
    "max_matching_size",
    "max_removable_matching",
    "min_degree",
    "minimally_k_connected_reduction",
    "minimum_vertex_cut",
    "run_cli",
    "verify_theorem",
    "vertex_connectivity",
]


def cli_json(*args, stdin=""):
    """Run a CLI command in-process; returns (exit_code, [stdout docs], [stderr docs])."""
    code, out, err = run_cli(list(args), stdin)
    parse = lambda text: [json.loads(line) for line in text.splitlines() if line.strip()]
    return code, parse(out), parse(err)
