"""Graphs induced by strategy profiles, unweighted distances and connectivity."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Sequence, Tuple

from .errors import InvalidInputError

Edge = Tuple[int, int]


class _Unreachable:
    """Distance between nodes in different components.

    Saturates under addition and compares greater than every number.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("UNREACHABLE")


UNREACHABLE = _Unreachable()


def _check_index(value, n: int, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"{what}: expected an integer player index, got {value!r}")
    if not 0 <= value < n:
        raise InvalidInputError(f"{what}: index {value} out of range [0, {n})")
    return value


@dataclass(frozen=True)
class StrategyProfile:
    """Purchase sets ``purchases[i]`` for every player ``i``."""

    n: int
    purchases: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError(f"player count must be >= 1, got {self.n}")
        if len(self.purchases) != self.n:
            raise InvalidInputError(
                f"profile has {len(self.purchases)} purchase sets for n={self.n}"
            )
        normalized = []
        for i, s in enumerate(self.purchases):
            items = frozenset(_check_index(j, self.n, f"purchases[{i}]") for j in s)
            if i in items:
                raise InvalidInputError(f"purchases[{i}]: player {i} cannot link to itself")
            normalized.append(items)
        object.__setattr__(self, "purchases", tuple(normalized))

    @classmethod
    def from_lists(cls, purchases: Sequence[Iterable[int]]) -> "StrategyProfile":
        return cls(len(purchases), tuple(frozenset(s) for s in purchases))

    @classmethod
    def empty(cls, n: int) -> "StrategyProfile":
        return cls(n, tuple(frozenset() for _ in range(n)))

    def to_lists(self) -> list:
        return [sorted(s) for s in self.purchases]

    def sort_key(self) -> tuple:
        """Lexicographic key over the sorted purchase tuples."""
        return tuple(tuple(sorted(s)) for s in self.purchases)

    def replace(self, i: int, strategy: Iterable[int]) -> "StrategyProfile":
        purchases = list(self.purchases)
        purchases[i] = frozenset(strategy)
        return StrategyProfile(self.n, tuple(purchases))

    @property
    def purchase_count(self) -> int:
        return sum(len(s) for s in self.purchases)


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: FrozenSet[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputError(f"node count must be >= 0, got {self.n}")
        normalized = set()
        for e in self.edges:
            u, v = e
            _check_index(u, self.n, "edge endpoint")
            _check_index(v, self.n, "edge endpoint")
            if u == v:
                raise InvalidInputError(f"self-loop at node {u}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "UndirectedGraph":
        return cls(n, frozenset(edges))

    @classmethod
    def complete(cls, n: int) -> "UndirectedGraph":
        return cls(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))

    def neighbors(self) -> list:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def __len__(self):
        return len(self.edges)


class DistanceMatrix:
    """All-pairs hop distances; entries are ints or ``UNREACHABLE``."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row_sum(self, i: int):
        total = 0
        for d in self.rows[i]:
            total = d + total
        return total

    def total(self):
        """Sum over ordered pairs; ``UNREACHABLE`` if any pair is disconnected."""
        total = 0
        for i in range(self.n):
            total = self.row_sum(i) + total
        return total

    def __eq__(self, other):
        return isinstance(other, DistanceMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"DistanceMatrix({[list(r) for r in self.rows]!r})"


def induced_graph(profile: StrategyProfile) -> UndirectedGraph:
    edges = set()
    for i, s in enumerate(profile.purchases):
        for j in s:
            edges.add((min(i, j), max(i, j)))
    return UndirectedGraph(profile.n, frozenset(edges))


def bfs_distances(adj: Sequence[Iterable[int]], source: int) -> list:
    dist = [UNREACHABLE] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] is UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return dist


@lru_cache(maxsize=8192)
def all_pairs_distances(graph: UndirectedGraph) -> DistanceMatrix:
    adj = graph.neighbors()
    return DistanceMatrix(bfs_distances(adj, s) for s in range(graph.n))


def is_connected(graph: UndirectedGraph) -> bool:
    if graph.n <= 1:
        return True
    dist = bfs_distances(graph.neighbors(), 0)
    return all(d is not UNREACHABLE for d in dist)
