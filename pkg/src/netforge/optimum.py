"""Exhaustive social optimum and Price of Anarchy / Stability."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional

from . import _tables
from .equilibrium import ENUMERATE_CAP, _check_cap, nash_social_costs
from .model import EPS, CostVector, OwnedGraph

OPTIMUM_CAP = 7


@dataclass(frozen=True)
class OptimumReport:
    optimal_cost: float
    optimal_graphs: List[OwnedGraph]
    graphs_searched: int
    connected_graphs: int

    def every(self, predicate: Callable[[OwnedGraph], bool]) -> bool:
        return all(predicate(g) for g in self.optimal_graphs)

    def some(self, predicate: Callable[[OwnedGraph], bool]) -> bool:
        return any(predicate(g) for g in self.optimal_graphs)


@dataclass(frozen=True)
class RatioReport:
    poa: Optional[float]
    pos: Optional[float]
    worst_ne_cost: Optional[float]
    best_ne_cost: Optional[float]
    optimal_cost: float
    equilibria: int = 0
    degenerate: bool = False


def social_optimum(
    costs: CostVector, eps: float = EPS, cap: int = OPTIMUM_CAP, workers: int = 1
) -> OptimumReport:
    """Cheapest connected graph, every edge billed to its cheaper endpoint.

    All ``2**(n(n-1)/2)`` graphs are scanned; every graph within ``eps`` of the
    minimum is reported, sorted by owned-edge list.
    """
    _check_cap(costs.n, cap, "social optimum search")
    best, masks, _, n_connected = _tables.optimum_indices(costs.alphas, eps, workers)
    lay = _tables.layout(costs.n)
    graphs = []
    for mask in masks:
        owned = []
        for u, v in lay.graph_edges(int(mask)):
            owned.append((u, v) if costs[u] <= costs[v] else (v, u))
        graphs.append(OwnedGraph(costs.n, frozenset(owned)))
    graphs.sort(key=OwnedGraph.sort_key)
    return OptimumReport(best, graphs, lay.n_graphs, n_connected)


def price_ratios(
    costs: CostVector,
    eps: float = EPS,
    enumerate_cap: int = ENUMERATE_CAP,
    optimum_cap: int = OPTIMUM_CAP,
    workers: int = 1,
) -> RatioReport:
    """Worst and best equilibrium social cost over the optimum.

    ``0/0`` (the one-player game) is reported as 1.0 with ``degenerate`` set;
    ratios are ``None`` when no equilibrium exists.
    """
    _check_cap(costs.n, enumerate_cap, "Nash enumeration")
    optimum = social_optimum(costs, eps, optimum_cap, workers).optimal_cost
    ne = nash_social_costs(costs, eps, enumerate_cap, workers)
    if ne.size == 0:
        return RatioReport(None, None, None, None, optimum)
    worst, best = float(ne.max()), float(ne.min())
    if optimum == 0:
        degenerate = worst == 0
        poa = 1.0 if worst == 0 else math.inf
        pos = 1.0 if best == 0 else math.inf
        return RatioReport(poa, pos, worst, best, optimum, int(ne.size), degenerate)
    return RatioReport(worst / optimum, best / optimum, worst, best, optimum, int(ne.size))
