"""Bitmask tables for exhaustive search over graphs and strategy profiles.

A graph on ``n`` nodes is an integer whose bit ``e`` marks the ``e``-th pair
``(u, v)``, ``u < v``, in lexicographic order. A strategy of player ``i`` is an
integer over the ``n - 1`` other players in ascending order, and a profile packs
the strategies of players ``0..n-1`` into consecutive ``n - 1``-bit fields.

Everything that does not depend on the prices is cached per ``n``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

CHUNK = 1 << 16
# graphs per n whose distance rows are kept in memory
TABLE_MAX_N = 6


@dataclass(frozen=True)
class Layout:
    n: int
    edges: tuple
    others: tuple
    strategy_edges: np.ndarray  # (n, 2**(n-1)) graph mask bought by each strategy code
    strategy_size: np.ndarray  # (2**(n-1),) purchases per strategy code

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_graphs(self) -> int:
        return 1 << len(self.edges)

    @property
    def n_profiles(self) -> int:
        return 1 << (self.n * (self.n - 1))

    def edge_bit(self, u: int, v: int) -> int:
        return 1 << self.edges.index((min(u, v), max(u, v)))

    def graph_mask(self, edges) -> int:
        mask = 0
        for u, v in edges:
            mask |= self.edge_bit(u, v)
        return mask

    def graph_edges(self, mask: int) -> list:
        return [e for k, e in enumerate(self.edges) if mask >> k & 1]

    def decode_profile(self, index: int) -> list:
        width = self.n - 1
        field = (1 << width) - 1
        out = []
        for i in range(self.n):
            code = (index >> (i * width)) & field
            out.append([self.others[i][k] for k in range(width) if code >> k & 1])
        return out

    def encode_profile(self, purchases) -> int:
        width = self.n - 1
        index = 0
        for i, s in enumerate(purchases):
            code = 0
            for j in s:
                code |= 1 << self.others[i].index(j)
            index |= code << (i * width)
        return index


@lru_cache(maxsize=None)
def layout(n: int) -> Layout:
    edges = tuple((u, v) for u in range(n) for v in range(u + 1, n))
    index = {e: k for k, e in enumerate(edges)}
    others = tuple(tuple(j for j in range(n) if j != i) for i in range(n))
    width = n - 1
    codes = np.arange(1 << width, dtype=np.int64)
    strategy_edges = np.zeros((n, 1 << width), dtype=np.int64)
    for i in range(n):
        for k, j in enumerate(others[i]):
            bit = np.int64(1) << index[(min(i, j), max(i, j))]
            strategy_edges[i] |= np.where((codes >> k) & 1, bit, 0)
    size = np.bitwise_count(codes).astype(np.int64)
    return Layout(n, edges, others, strategy_edges, size)


def distance_rows(n: int, graphs: np.ndarray) -> np.ndarray:
    """Per-source distance sums for each graph mask, ``-1`` where some node is unreachable."""
    lay = layout(n)
    g = np.asarray(graphs, dtype=np.int64)
    nbr = np.zeros((n, g.size), dtype=np.int64)
    for e, (u, v) in enumerate(lay.edges):
        bit = (g >> e) & 1
        nbr[u] |= bit << v
        nbr[v] |= bit << u
    full = (1 << n) - 1
    out = np.empty((g.size, n), dtype=np.int32)
    for s in range(n):
        reached = np.full(g.size, 1 << s, dtype=np.int64)
        frontier = reached.copy()
        total = np.zeros(g.size, dtype=np.int32)
        for level in range(1, n):
            nxt = np.zeros_like(frontier)
            for v in range(n):
                nxt |= nbr[v] * ((frontier >> v) & 1)
            nxt &= ~reached
            if not nxt.any():
                break
            total += level * np.bitwise_count(nxt).astype(np.int32)
            reached |= nxt
            frontier = nxt
        out[:, s] = np.where(reached == full, total, -1)
    return out


@lru_cache(maxsize=None)
def graph_table(n: int) -> np.ndarray:
    """Distance rows of every graph on ``n`` nodes, as floats with ``inf`` for unreachable."""
    rows = distance_rows(n, np.arange(layout(n).n_graphs, dtype=np.int64))
    return np.where(rows < 0, np.inf, rows.astype(np.float64))


@lru_cache(maxsize=None)
def deviation_distances(n: int) -> np.ndarray:
    """``[i, g, code]``: distance sum of ``i`` when it buys ``code`` on top of others' graph ``g``."""
    lay = layout(n)
    table = graph_table(n)
    graphs = np.arange(lay.n_graphs, dtype=np.int64)[:, None]
    out = np.empty((n, lay.n_graphs, 1 << (n - 1)), dtype=np.float64)
    for i in range(n):
        out[i] = table[graphs | lay.strategy_edges[i][None, :], i]
    return out


def best_response_costs(alphas) -> np.ndarray:
    """``[i, g]``: cheapest cost player ``i`` can reach when the others have built graph ``g``."""
    n = len(alphas)
    lay = layout(n)
    dev = deviation_distances(n)
    out = np.empty((n, lay.n_graphs))
    for i in range(n):
        out[i] = (alphas[i] * lay.strategy_size[None, :] + dev[i]).min(axis=1)
    return out


def _nash_chunk(args):
    alphas, start, stop, eps = args
    n = len(alphas)
    lay = layout(n)
    table = graph_table(n)
    br = best_response_costs(alphas)
    width = n - 1
    field = (1 << width) - 1
    p = np.arange(start, stop, dtype=np.int64)
    codes = [(p >> (i * width)) & field for i in range(n)]
    bought = [lay.strategy_edges[i][codes[i]] for i in range(n)]
    # prefix/suffix ORs give each player's view of the others' graph
    prefix = [np.zeros_like(p)]
    for b in bought:
        prefix.append(prefix[-1] | b)
    suffix = [np.zeros_like(p)]
    for b in reversed(bought):
        suffix.append(suffix[-1] | b)
    suffix.reverse()
    graph = prefix[-1]
    ok = np.ones(p.size, dtype=bool)
    social = np.zeros(p.size)
    for i in range(n):
        cost = alphas[i] * lay.strategy_size[codes[i]] + table[graph, i]
        ok &= cost <= br[i][prefix[i] | suffix[i + 1]] + eps
        social += cost
    return p[ok], social[ok]


def _ranges(total: int, chunk: int = CHUNK):
    return [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]


def _run(fn, jobs, workers: int):
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs))
    return [fn(job) for job in jobs]


def nash_indices(alphas, eps: float, workers: int = 1):
    """Indices and social costs of all weak Nash profiles, in index order."""
    alphas = tuple(float(a) for a in alphas)
    jobs = [(alphas, lo, hi, eps) for lo, hi in _ranges(layout(len(alphas)).n_profiles)]
    parts = _run(_nash_chunk, jobs, workers)
    return np.concatenate([q for q, _ in parts]), np.concatenate([c for _, c in parts])


def _optimum_chunk(args):
    alphas, start, stop, eps = args
    n = len(alphas)
    lay = layout(n)
    g = np.arange(start, stop, dtype=np.int64)
    if n <= TABLE_MAX_N:
        rows = graph_table(n)[start:stop]
    else:
        raw = distance_rows(n, g)
        rows = np.where(raw < 0, np.inf, raw.astype(np.float64))
    cost = rows.sum(axis=1)
    for e, (u, v) in enumerate(lay.edges):
        cost += ((g >> e) & 1) * min(alphas[u], alphas[v])
    connected = np.isfinite(cost)
    n_connected = int(connected.sum())
    if not n_connected:
        return np.inf, g[:0], cost[:0], 0
    best = cost[connected].min()
    keep = connected & (cost <= best + eps)
    return float(best), g[keep], cost[keep], n_connected


def optimum_indices(alphas, eps: float, workers: int = 1):
    """Minimum owned-graph cost, the minimizing masks with their costs, and the connected-graph count."""
    alphas = tuple(float(a) for a in alphas)
    jobs = [(alphas, lo, hi, eps) for lo, hi in _ranges(layout(len(alphas)).n_graphs)]
    parts = _run(_optimum_chunk, jobs, workers)
    best = min(p[0] for p in parts)
    masks = np.concatenate([p[1] for p in parts])
    costs = np.concatenate([p[2] for p in parts])
    keep = costs <= best + eps
    return best, masks[keep], costs[keep], sum(p[3] for p in parts)


def connected_owned_costs(alphas):
    """Masks, edge counts and cheapest-owner social costs of every connected graph."""
    alphas = tuple(float(a) for a in alphas)
    n = len(alphas)
    lay = layout(n)
    g = np.arange(lay.n_graphs, dtype=np.int64)
    if n <= TABLE_MAX_N:
        rows = graph_table(n)
    else:
        raw = distance_rows(n, g)
        rows = np.where(raw < 0, np.inf, raw.astype(np.float64))
    cost = rows.sum(axis=1)
    for e, (u, v) in enumerate(lay.edges):
        cost += ((g >> e) & 1) * min(alphas[u], alphas[v])
    keep = np.isfinite(cost)
    return g[keep], np.bitwise_count(g[keep]).astype(np.int64), cost[keep]
