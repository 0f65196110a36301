"""Canonical profiles (complete, star, clique plus attached periphery) and shape tests."""

from __future__ import annotations

from .errors import InvalidInputError
from .graph import StrategyProfile, UndirectedGraph
from .model import CostVector

ALL = "all"
ONE = "one"


def complete_profile(n: int) -> StrategyProfile:
    """Lower index buys: ``s_i = {j : j > i}``."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    return StrategyProfile.from_lists([range(i + 1, n) for i in range(n)])


def star_profile(n: int, center: int = 0) -> StrategyProfile:
    """Every leaf buys its single edge to ``center``."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    if not 0 <= center < n:
        raise InvalidInputError(f"center {center} out of range [0, {n})")
    return StrategyProfile.from_lists([[] if i == center else [center] for i in range(n)])


def threshold_split(costs: CostVector, threshold: float) -> int:
    """Number of players priced at or below ``threshold``; prices must be ascending."""
    costs.require_ascending()
    return sum(1 for a in costs.alphas if a <= threshold)


def clique_star_profile(costs: CostVector, threshold: float, variant: str = ALL) -> StrategyProfile:
    """The ``j`` players priced at most ``threshold`` form a clique; the rest attach to it.

    With ``variant="all"`` each peripheral player is adjacent to every clique
    member, with ``"one"`` only to player 0. The clique side pays for every
    edge. ``j == 0`` gives the star at player 0 and ``j == n`` the complete profile.
    """
    if variant not in (ALL, ONE):
        raise InvalidInputError(f"unknown clique-star variant {variant!r}")
    n = costs.n
    j = threshold_split(costs, threshold)
    if j == 0:
        return star_profile(n, 0)
    if j == n or variant == ALL:
        return StrategyProfile.from_lists([range(i + 1, n) if i < j else [] for i in range(n)])
    purchases = [list(range(i + 1, j)) if i < j else [] for i in range(n)]
    purchases[0].extend(range(j, n))
    return StrategyProfile.from_lists(purchases)


def is_complete(graph: UndirectedGraph) -> bool:
    return len(graph.edges) == graph.n * (graph.n - 1) // 2


def is_star(graph: UndirectedGraph) -> bool:
    """Spanning star: ``n - 1`` edges sharing one endpoint. True for ``n <= 1``."""
    n = graph.n
    if n <= 1:
        return not graph.edges
    if len(graph.edges) != n - 1:
        return False
    return any(graph.degree(v) == n - 1 for v in range(n))


def is_clique_star(graph: UndirectedGraph, j: int, variant: str = ALL) -> bool:
    """Nodes ``0..j-1`` pairwise adjacent, no edge among the others, and every
    other node adjacent to all (``"all"``) or at least one (``"one"``) clique node."""
    if j <= 0:
        return is_star(graph)
    n = graph.n
    adj = graph.neighbors()
    clique = set(range(j))
    for u in range(j):
        if not clique - {u} <= adj[u]:
            return False
    for v in range(j, n):
        if adj[v] - clique:
            return False
        if variant == ALL and adj[v] != clique:
            return False
        if variant == ONE and not adj[v]:
            return False
    return True
