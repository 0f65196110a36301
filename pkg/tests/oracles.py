"""Reference implementations that share no code with the engine."""

import itertools

import networkx as nx
import numpy as np


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for k in range(1 << len(pairs)):
        yield [p for b, p in enumerate(pairs) if k >> b & 1]


def matrix_power_distances(n, edges):
    """d(i, j) = smallest k with (I + A)^k reaching j from i; None if never."""
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in edges:
        a[u, v] = a[v, u] = 1
    step = ((a + np.eye(n, dtype=np.int64)) > 0).astype(np.int64)
    reach = np.eye(n, dtype=np.int64)
    dist = [[0 if i == j else None for j in range(n)] for i in range(n)]
    for k in range(1, n):
        reach = ((reach @ step) > 0).astype(np.int64)
        for i in range(n):
            for j in range(n):
                if dist[i][j] is None and reach[i, j]:
                    dist[i][j] = k
    return dist


def nx_graph(purchases):
    g = nx.Graph()
    g.add_nodes_from(range(len(purchases)))
    for i, s in enumerate(purchases):
        for j in s:
            g.add_edge(i, j)
    return g


def nx_player_cost(purchases, alphas, i):
    g = nx_graph(purchases)
    lengths = nx.single_source_shortest_path_length(g, i)
    if len(lengths) < len(purchases):
        return float("inf")
    return alphas[i] * len(purchases[i]) + sum(lengths.values())


def nx_social_cost(purchases, alphas):
    return sum(nx_player_cost(purchases, alphas, i) for i in range(len(purchases)))


def brute_best_cost(purchases, alphas, i):
    """Minimum cost of player i over every subset of the other players."""
    n = len(purchases)
    others = [j for j in range(n) if j != i]
    best = float("inf")
    for mask in range(1 << len(others)):
        trial = [list(s) for s in purchases]
        trial[i] = [others[k] for k in range(len(others)) if mask >> k & 1]
        best = min(best, nx_player_cost(trial, alphas, i))
    return best


def brute_is_weak_nash(purchases, alphas, eps=1e-9):
    for i in range(len(purchases)):
        current = nx_player_cost(purchases, alphas, i)
        best = brute_best_cost(purchases, alphas, i)
        if best < current - eps or (current == float("inf") and best < current):
            return False
    return True


def owned_cost(n, owned, alphas):
    """Edge bills plus ordered-pair distance sum, via networkx."""
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(owned)
    if n > 1 and not nx.is_connected(g):
        return float("inf")
    dist = sum(sum(nx.single_source_shortest_path_length(g, s).values()) for s in range(n))
    return sum(alphas[o] for o, _ in owned) + dist


def all_profiles(n):
    others = [[j for j in range(n) if j != i] for i in range(n)]
    for choice in itertools.product(range(1 << (n - 1)), repeat=n):
        yield [[others[i][k] for k in range(n - 1) if choice[i] >> k & 1] for i in range(n)]
