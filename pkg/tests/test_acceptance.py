"""Exit criteria. Each test prints one PASS/FAIL line; run with ``pytest tests/test_acceptance.py -v``."""

import itertools
import random
import time

import networkx as nx
import numpy as np
import pytest

from netforge import _tables
from netforge.cli import main
from netforge.constructions import (
    clique_star_profile,
    complete_profile,
    is_complete,
    is_star,
    star_profile,
    threshold_split,
)
from netforge.equilibrium import Mode, best_response, enumerate_nash, is_nash
from netforge.graph import UNREACHABLE, StrategyProfile, UndirectedGraph, all_pairs_distances
from netforge.model import (
    EPS,
    CostVector,
    OwnedGraph,
    lower_bound_case2,
    lower_bound_global,
    social_cost_owned,
)
from netforge.optimum import price_ratios, social_optimum
from oracles import all_graphs, all_profiles, brute_best_cost, matrix_power_distances, nx_player_cost

SEED = 20261016


@pytest.fixture
def verdict(capsys):
    def emit(criterion, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        assert ok, detail

    return emit


def test_ac1_complete_profile_cheap_links(verdict):
    rng = random.Random(SEED + 1)
    started = time.perf_counter()
    checked = failures = 0
    for n in (2, 3, 4, 5):
        vectors = [[rng.uniform(0, 1) for _ in range(n)] for _ in range(50)] + [[1.0] * n]
        for alphas in vectors:
            checked += 1
            failures += not is_nash(complete_profile(n), CostVector.of(alphas), Mode.EXACT).is_nash
    elapsed = time.perf_counter() - started
    verdict("AC1 complete profile is weak NE when max price <= 1",
            failures == 0 and elapsed < 30,
            f"{checked} vectors, {failures} failures, {elapsed:.2f}s (limit 30s)")


def test_ac2_star_profile_dear_links(verdict):
    rng = random.Random(SEED + 2)
    started = time.perf_counter()
    checked = failures = 0
    for n in (2, 3, 4, 5):
        vectors = [sorted(1 + rng.uniform(1e-6, 3) for _ in range(n)) for _ in range(50)]
        vectors.append([1 + EPS] * n)
        for alphas in vectors:
            assert min(alphas) > 1
            checked += 1
            failures += not is_nash(star_profile(n, 0), CostVector.of(alphas), Mode.EXACT).is_nash
    elapsed = time.perf_counter() - started
    verdict("AC2 star (leaves buy, center 0) is weak NE when min price > 1",
            failures == 0 and elapsed < 30,
            f"{checked} vectors, {failures} failures, {elapsed:.2f}s (limit 30s)")


def test_ac3_clique_star_harness(verdict):
    rng = random.Random(SEED + 3)
    vectors = []
    for k in range(240):
        n = (3, 4, 5)[k % 3]
        j = rng.randint(1, n - 1)
        cheap = [rng.uniform(0, 1) for _ in range(j)]
        dear = [1 + rng.uniform(1e-6, 3) for _ in range(n - j)]
        vectors.append(sorted(cheap + dear))
    passed = bad_witness = 0
    for alphas in vectors:
        costs = CostVector.of(alphas)
        assert 1 <= threshold_split(costs, 1.0) <= costs.n - 1
        profile = clique_star_profile(costs, 1.0)
        report = is_nash(profile, costs, Mode.EXACT)
        if report.is_nash:
            passed += 1
            continue
        w = report.witness
        lists = profile.to_lists()
        old = nx_player_cost(lists, alphas, w.player)
        lists[w.player] = sorted(w.new_strategy)
        new = nx_player_cost(lists, alphas, w.player)
        bad_witness += not (old - new > EPS)
    failed = len(vectors) - passed
    verdict("AC3 clique-star verdicts with self-validating witnesses",
            len(vectors) >= 200 and bad_witness == 0,
            f"{len(vectors)} vectors, NE pass rate {passed / len(vectors):.3f}, "
            f"{failed} failures, {bad_witness} witnesses not re-validated")


def _optimum_shape_run(rng, low, high):
    vectors = []
    for n in (3, 4, 5):
        vectors += [[rng.uniform(low, high) for _ in range(n)] for _ in range(20)]
    return vectors


def test_ac4_expensive_optimum_is_star(verdict):
    rng = random.Random(SEED + 4)
    started = time.perf_counter()
    violations = 0
    vectors = _optimum_shape_run(rng, 2 + 1e-6, 5)
    for alphas in vectors:
        report = social_optimum(CostVector.of(alphas))
        for g in report.optimal_graphs:
            graph = nx.Graph(list(g.owned_edges))
            ok = (
                len(g) == g.n - 1
                and nx.is_tree(graph)
                and max(d for _, d in graph.degree()) == g.n - 1
                and is_star(g.graph())
            )
            violations += not ok
    elapsed = time.perf_counter() - started
    verdict("AC4 every optimum is a spanning star when min price > 2",
            violations == 0 and elapsed < 120,
            f"{len(vectors)} vectors, {violations} violations, {elapsed:.2f}s (limit 120s)")


def test_ac5_cheap_optimum_is_complete(verdict):
    rng = random.Random(SEED + 5)
    started = time.perf_counter()
    violations = 0
    vectors = _optimum_shape_run(rng, 0, 2 - 1e-6)
    for alphas in vectors:
        report = social_optimum(CostVector.of(alphas))
        violations += not (
            len(report.optimal_graphs) == 1 and is_complete(report.optimal_graphs[0].graph())
        )
    elapsed = time.perf_counter() - started
    verdict("AC5 unique optimum is complete when max price < 2",
            violations == 0 and elapsed < 120,
            f"{len(vectors)} vectors, {violations} violations, {elapsed:.2f}s (limit 120s)")


def _ownerships(edges):
    for flips in itertools.product((False, True), repeat=len(edges)):
        yield [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)]


def test_ac6_bound_soundness(verdict):
    """n <= 4: every ownership of every connected graph. n = 5: cheapest-endpoint
    ownership, which minimizes the bill edge by edge and so dominates all others."""
    rng = random.Random(SEED + 6)
    violations = checked = 0
    tight_needed = tight_missing = 0
    for n in (3, 4, 5):
        graphs = []
        for edges in all_graphs(n):
            g = nx.empty_graph(n)
            g.add_edges_from(edges)
            if nx.is_connected(g):
                graphs.append(edges)
        for k in range(20):
            low = 0 if k < 10 else 2
            alphas = sorted(rng.uniform(low, 4) for _ in range(n))
            costs = CostVector.of(alphas)
            attained = False
            for edges in graphs:
                m = len(edges)
                owners = _ownerships(edges) if n <= 4 else [
                    sorted(OwnedGraph.cheapest_owner_edges(n, edges, costs).owned_edges)
                ]
                for owned in owners:
                    c = social_cost_owned(OwnedGraph(n, frozenset(owned)), costs)
                    g_bound = lower_bound_global(n, min(alphas), m)
                    c_bound = lower_bound_case2(n, alphas[0], alphas[1], m)
                    checked += 1
                    violations += (c < g_bound - EPS) + (c < c_bound - EPS)
                    attained |= abs(c - g_bound) <= EPS
            if min(alphas) >= 2:
                tight_needed += 1
                tight_missing += not attained
    verdict("AC6 lower bounds sound, global bound tight when min price >= 2",
            violations == 0 and tight_missing == 0,
            f"{checked} owned graphs, {violations} violations, "
            f"tightness attained {tight_needed - tight_missing}/{tight_needed}")


def test_ac7_ratio_sanity(verdict):
    grid = [0.25 * k for k in range(1, 13)]
    started = time.perf_counter()
    vectors = violations = 0
    for n in (2, 3, 4):
        for alphas in itertools.product(grid, repeat=n):
            vectors += 1
            costs = CostVector.of(alphas)
            r = price_ratios(costs)
            ok = r.pos is not None and 1 - EPS <= r.pos <= r.poa
            ne = _tables.nash_indices(alphas, EPS)[1]
            ok = ok and ne.size > 0 and bool(np.all(ne >= r.optimal_cost - EPS))
            violations += not ok
    elapsed = time.perf_counter() - started
    verdict("AC7 1 <= PoS <= PoA and no equilibrium beats the optimum",
            violations == 0 and elapsed < 300,
            f"{vectors} price vectors (full 0.25-step grid), {violations} violations, "
            f"{elapsed:.2f}s (limit 300s)")


def test_ac8_oracle_equivalence(verdict):
    rng = random.Random(SEED + 8)
    br_mismatch = br_checked = 0
    for _ in range(10):
        alphas_all = [round(rng.uniform(0, 3), 3) for _ in range(4)]
        for n in (1, 2, 3, 4):
            alphas = alphas_all[:n]
            costs = CostVector.of(alphas)
            for lists in all_profiles(n):
                p = StrategyProfile.from_lists(lists)
                for i in range(n):
                    _, cost = best_response(p, costs, i)
                    want = brute_best_cost(lists, alphas, i)
                    br_checked += 1
                    br_mismatch += not (cost == want or abs(cost - want) <= EPS)
    d_mismatch = d_checked = 0
    for n in range(1, 6):
        for edges in all_graphs(n):
            d = all_pairs_distances(UndirectedGraph.from_edges(n, edges))
            oracle = matrix_power_distances(n, edges)
            d_checked += 1
            d_mismatch += any(
                d[i, j] != (UNREACHABLE if oracle[i][j] is None else oracle[i][j])
                for i in range(n) for j in range(n)
            )
    verdict("AC8 best response and distances agree with independent oracles",
            br_mismatch == 0 and d_mismatch == 0,
            f"{br_checked} best responses ({br_mismatch} mismatches), "
            f"{d_checked} graphs ({d_mismatch} mismatches)")


def test_ac9_enumeration_performance(verdict, capsys, tmp_path):
    costs4 = CostVector.of([0.4, 0.9, 1.6, 2.5])
    started = time.perf_counter()
    ne4 = enumerate_nash(costs4)
    t4 = time.perf_counter() - started
    direct = [
        StrategyProfile.from_lists(lists)
        for lists in all_profiles(4)
        if is_nash(StrategyProfile.from_lists(lists), costs4).is_nash
    ]
    agrees = ne4 == sorted(direct, key=StrategyProfile.sort_key)

    argv = ["enumerate-nash", "--alphas", "0.5,0.9,1.5,2.5,3"]
    outputs, times = {}, {}
    for workers in (1, 4):
        started = time.perf_counter()
        code = main(argv + ["--workers", str(workers)])
        times[workers] = time.perf_counter() - started
        outputs[workers] = capsys.readouterr().out.encode()
        assert code == 0
    same = outputs[1] == outputs[4]
    ok = t4 < 5 and times[4] < 300 and same and agrees
    verdict("AC9 enumeration speed and worker-independent output",
            ok,
            f"n=4: {len(ne4)} NE in {t4:.2f}s (limit 5s, matches direct checks: {agrees}); "
            f"n=5: {times[1]:.2f}s with 1 worker, {times[4]:.2f}s with 4 (limit 300s); "
            f"identical bytes: {same}")


def test_ac10_sweep_determinism(verdict, capsys, tmp_path):
    texts = []
    for run in range(2):
        out = tmp_path / f"run{run}.csv"
        for mode in (["--alpha-grid", "0.5:3.0:0.5"], ["--alpha-grid", "0:4:0.25", "--samples", "40"]):
            code = main(["sweep", "--n", "4", "--seed", "99", "--check", "claims",
                         "--out", str(out), *mode])
            capsys.readouterr()
            assert code == 0
            texts.append(out.read_bytes())
    same = texts[0] == texts[2] and texts[1] == texts[3]
    verdict("AC10 repeated seeded sweeps give byte-identical CSV", same,
            f"grid CSV {len(texts[0])} bytes, sampled CSV {len(texts[1])} bytes, identical: {same}")
