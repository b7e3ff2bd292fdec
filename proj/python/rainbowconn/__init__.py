"""Exact rainbow connection numbers, graph6 utilities and t(n,d) search."""

import json

from ._core import (
    BudgetExceeded,
    Graph,
    InputError,
    RainbowError,
    bounds as _bounds,
    bridges,
    build_gdn,
    canonical_label,
    connected_graphs,
    diameter,
    graph6_decode,
    graph6_encode,
    is_connected,
    is_rainbow_connected,
    jarry_laugier,
    bridge_lower,
    hub_upper,
    rc,
    tnd as _tnd,
)


def bounds(n, d):
    return json.loads(_bounds(n, d))


def tnd(n, d, workers=1, budget=0):
    return json.loads(_tnd(n, d, workers, budget))


__all__ = [
    "BudgetExceeded",
    "Graph",
    "InputError",
    "RainbowError",
    "bounds",
    "bridges",
    "build_gdn",
    "canonical_label",
    "connected_graphs",
    "diameter",
    "graph6_decode",
    "graph6_encode",
    "is_connected",
    "is_rainbow_connected",
    "jarry_laugier",
    "bridge_lower",
    "hub_upper",
    "rc",
    "tnd",
]
