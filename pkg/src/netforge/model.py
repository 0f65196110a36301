"""Player and social costs for the heterogeneous-price network creation game."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from .errors import InvalidInputError
from .graph import (
    UNREACHABLE,
    StrategyProfile,
    UndirectedGraph,
    all_pairs_distances,
    induced_graph,
)

EPS = 1e-9
INFINITE = math.inf


def strictly_less(a: float, b: float, eps: float = EPS) -> bool:
    """``a`` beats ``b`` by more than ``eps``; an infinite ``b`` is beaten by any finite ``a``."""
    if math.isinf(b):
        return not math.isinf(a)
    return a < b - eps


def within(a: float, b: float, eps: float = EPS) -> bool:
    if math.isinf(a) or math.isinf(b):
        return a == b
    return abs(a - b) <= eps


@dataclass(frozen=True)
class CostVector:
    """Per-player link prices. Order is preserved; no sorting happens here."""

    alphas: Tuple[float, ...]

    def __post_init__(self):
        alphas = tuple(float(a) for a in self.alphas)
        if not alphas:
            raise InvalidInputError("cost vector must have at least one entry")
        for k, a in enumerate(alphas):
            if not math.isfinite(a):
                raise InvalidInputError(f"alphas[{k}]: must be finite, got {a}")
            if a < 0:
                raise InvalidInputError(f"alphas[{k}]: must be non-negative, got {a}")
        object.__setattr__(self, "alphas", alphas)

    @classmethod
    def of(cls, alphas: Iterable[float]) -> "CostVector":
        return cls(tuple(alphas))

    @property
    def n(self) -> int:
        return len(self.alphas)

    def __getitem__(self, i: int) -> float:
        return self.alphas[i]

    def __len__(self):
        return len(self.alphas)

    def is_ascending(self) -> bool:
        return all(a <= b for a, b in zip(self.alphas, self.alphas[1:]))

    def require_ascending(self) -> None:
        if not self.is_ascending():
            raise InvalidInputError(
                f"alphas must be sorted ascending for this operation, got {list(self.alphas)}"
            )


@dataclass(frozen=True)
class OwnedGraph:
    """Undirected graph with a single paying owner per edge."""

    n: int
    owned_edges: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        pairs = set()
        for owner, other in self.owned_edges:
            for v in (owner, other):
                if not 0 <= v < self.n:
                    raise InvalidInputError(f"edge endpoint {v} out of range [0, {self.n})")
            if owner == other:
                raise InvalidInputError(f"self-loop at node {owner}")
            key = (min(owner, other), max(owner, other))
            if key in pairs:
                raise InvalidInputError(f"edge {key} has more than one owner")
            pairs.add(key)
        object.__setattr__(self, "owned_edges", frozenset(self.owned_edges))

    @classmethod
    def cheapest_owner(cls, graph: UndirectedGraph, costs: CostVector) -> "OwnedGraph":
        """Bill every edge to the endpoint with smaller price (smaller index on ties)."""
        _check_n(graph.n, costs)
        owned = []
        for u, v in graph.edges:
            owned.append((u, v) if costs[u] <= costs[v] else (v, u))
        return cls(graph.n, frozenset(owned))

    @classmethod
    def cheapest_owner_edges(cls, n: int, edges, costs: CostVector) -> "OwnedGraph":
        return cls.cheapest_owner(UndirectedGraph.from_edges(n, edges), costs)

    def graph(self) -> UndirectedGraph:
        return UndirectedGraph(self.n, frozenset(self.owned_edges))

    def as_profile(self) -> StrategyProfile:
        purchases = [set() for _ in range(self.n)]
        for owner, other in self.owned_edges:
            purchases[owner].add(other)
        return StrategyProfile.from_lists(purchases)

    def sort_key(self) -> tuple:
        return tuple(sorted(self.owned_edges))

    def __len__(self):
        return len(self.owned_edges)


def _check_n(n: int, costs: CostVector) -> None:
    if n != costs.n:
        raise InvalidInputError(f"dimension mismatch: {n} players but {costs.n} prices")


def _as_cost(distance_sum) -> float:
    return INFINITE if distance_sum is UNREACHABLE else float(distance_sum)


def player_cost(profile: StrategyProfile, costs: CostVector, i: int) -> float:
    _check_n(profile.n, costs)
    if not 0 <= i < profile.n:
        raise InvalidInputError(f"player {i} out of range [0, {profile.n})")
    dist = all_pairs_distances(induced_graph(profile))
    return costs[i] * len(profile.purchases[i]) + _as_cost(dist.row_sum(i))


def social_cost_profile(profile: StrategyProfile, costs: CostVector) -> float:
    _check_n(profile.n, costs)
    dist = all_pairs_distances(induced_graph(profile))
    total = 0.0
    for i, s in enumerate(profile.purchases):
        total += costs[i] * len(s) + _as_cost(dist.row_sum(i))
    return total


def social_cost_owned(graph: OwnedGraph, costs: CostVector) -> float:
    _check_n(graph.n, costs)
    billed = sum(costs[owner] for owner, _ in graph.owned_edges)
    return billed + _as_cost(all_pairs_distances(graph.graph()).total())


def lower_bound_global(n: int, alpha_min: float, m: int) -> float:
    """Every pair is at distance >= 2 unless adjacent, and every edge costs >= ``alpha_min``."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    if not 0 <= m <= n * (n - 1) // 2:
        raise InvalidInputError(f"edge count {m} out of range [0, {n * (n - 1) // 2}]")
    return 2 * n * (n - 1) + (alpha_min - 2) * m


def lower_bound_case2_raw(n: int, alpha1: float, alpha2: float, m: int) -> float:
    """``n-1`` edges at the cheapest price, the rest at the second cheapest."""
    return alpha1 * (n - 1) + alpha2 * (m - n + 1) + 2 * m + 2 * (n * (n - 1) - 2 * m)


def lower_bound_case2(n: int, alpha1: float, alpha2: float, m: int) -> float:
    if n < 2:
        raise InvalidInputError(f"n must be >= 2, got {n}")
    if alpha1 > alpha2:
        raise InvalidInputError(f"need alpha1 <= alpha2, got {alpha1} > {alpha2}")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise InvalidInputError(f"edge count {m} out of range [{n - 1}, {n * (n - 1) // 2}]")
    raw = lower_bound_case2_raw(n, alpha1, alpha2, m)
    simplified = alpha1 * (n - 1) + (alpha2 - 2) * m - (n - 1) * (alpha2 - 2 * n)
    assert abs(raw - simplified) <= 1e-9 * max(1.0, abs(raw)), (raw, simplified)
    return raw

