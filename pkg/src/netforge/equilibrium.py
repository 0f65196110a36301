"""Nash checks, best responses, best-response dynamics and equilibrium enumeration."""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from typing import FrozenSet, List, NamedTuple, Optional, Tuple

from . import _tables
from .errors import CapacityError
from .graph import StrategyProfile, UndirectedGraph, all_pairs_distances
from .model import EPS, INFINITE, CostVector, _as_cost, _check_n, player_cost, strictly_less

BEST_RESPONSE_CAP = 12
ENUMERATE_CAP = 5


class Mode(str, enum.Enum):
    EXACT = "exact"
    LOCAL = "local"


class Order(str, enum.Enum):
    ROUND_ROBIN = "round_robin"
    RANDOM = "random"


@dataclass(frozen=True)
class DeviationWitness:
    player: int
    new_strategy: FrozenSet[int]
    old_cost: float
    new_cost: float

    @property
    def improvement(self) -> float:
        return self.old_cost - self.new_cost

    def revalidate(self, profile: StrategyProfile, costs: CostVector, eps: float = EPS) -> bool:
        old = player_cost(profile, costs, self.player)
        new = player_cost(profile.replace(self.player, self.new_strategy), costs, self.player)
        return strictly_less(new, old, eps)


@dataclass(frozen=True)
class NashReport:
    is_nash: bool
    mode: Mode
    witness: Optional[DeviationWitness] = None


class DynamicsResult(NamedTuple):
    final: StrategyProfile
    converged: bool
    rounds: int


def _tie_key(strategy) -> tuple:
    return (len(strategy), tuple(sorted(strategy)))


class _Deviations:
    """Cost of player ``i`` for alternative strategies, others held fixed."""

    def __init__(self, profile: StrategyProfile, costs: CostVector, i: int):
        self.n = profile.n
        self.i = i
        self.alpha = costs[i]
        base = [set() for _ in range(self.n)]
        for j, s in enumerate(profile.purchases):
            if j == i:
                continue
            for k in s:
                base[j].add(k)
                base[k].add(j)
        self.base_edges = frozenset(
            (min(u, v), max(u, v)) for u in range(self.n) for v in base[u]
        )

    def cost(self, strategy) -> float:
        i = self.i
        edges = set(self.base_edges)
        edges.update((min(i, j), max(i, j)) for j in strategy)
        dist = all_pairs_distances(UndirectedGraph(self.n, frozenset(edges)))
        return self.alpha * len(strategy) + _as_cost(dist.row_sum(i))


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapacityError(f"{what} limited to n <= {cap}, got n={n}")


def best_response(
    profile: StrategyProfile, costs: CostVector, i: int, cap: int = BEST_RESPONSE_CAP
) -> Tuple[FrozenSet[int], float]:
    """Cheapest purchase set for ``i`` over all subsets of the other players.

    Ties go to fewer purchases, then the lexicographically smallest set.
    """
    _check_n(profile.n, costs)
    _check_cap(profile.n, cap, "best response")
    dev = _Deviations(profile, costs, i)
    others = [j for j in range(profile.n) if j != i]
    best, best_cost = None, INFINITE
    # sizes ascending, combinations lexicographic: first strict improvement wins ties
    for size in range(len(others) + 1):
        for combo in itertools.combinations(others, size):
            c = dev.cost(combo)
            if best is None or strictly_less(c, best_cost):
                best, best_cost = frozenset(combo), c
    return best, best_cost


def _local_moves(strategy: FrozenSet[int], others):
    absent = [j for j in others if j not in strategy]
    for j in sorted(strategy):
        yield strategy - {j}
    for j in absent:
        yield strategy | {j}
    for j in sorted(strategy):
        for k in absent:
            yield (strategy - {j}) | {k}


def _all_strategies(others):
    for size in range(len(others) + 1):
        for combo in itertools.combinations(others, size):
            yield frozenset(combo)


def is_nash(
    profile: StrategyProfile,
    costs: CostVector,
    mode: Mode = Mode.EXACT,
    strict: bool = False,
    eps: float = EPS,
    cap: int = BEST_RESPONSE_CAP,
) -> NashReport:
    """Weak Nash check: fails only on a deviation better by more than ``eps``.

    With ``strict=True`` the profile also fails when some other strategy is
    merely no worse; the witness is then that non-worsening deviation.
    LOCAL mode only tries single adds, drops and swaps.
    """
    mode = Mode(mode)
    _check_n(profile.n, costs)
    if mode is Mode.EXACT:
        _check_cap(profile.n, cap, "exact Nash check")
    for i in range(profile.n):
        current = profile.purchases[i]
        dev = _Deviations(profile, costs, i)
        old = dev.cost(current)
        others = [j for j in range(profile.n) if j != i]
        moves = _all_strategies(others) if mode is Mode.EXACT else _local_moves(current, others)
        best, best_cost = None, INFINITE
        for s in moves:
            if s == current:
                continue
            c = dev.cost(s)
            if best is None or strictly_less(c, best_cost) or (
                not strictly_less(best_cost, c) and _tie_key(s) < _tie_key(best)
            ):
                best, best_cost = s, c
        if best is None:
            continue
        failed = strictly_less(best_cost, old, eps)
        if strict and not failed:
            failed = not strictly_less(old, best_cost, eps)
        if failed:
            return NashReport(False, mode, DeviationWitness(i, best, old, best_cost))
    return NashReport(True, mode)


def best_response_dynamics(
    initial: StrategyProfile,
    costs: CostVector,
    order: Order = Order.ROUND_ROBIN,
    seed: Optional[int] = None,
    max_rounds: int = 100,
    eps: float = EPS,
    cap: int = BEST_RESPONSE_CAP,
) -> DynamicsResult:
    """Let one player at a time switch to a best response until a full pass is quiet.

    ``RANDOM`` order reshuffles the players every pass from ``random.Random(seed)``.
    """
    order = Order(order)
    _check_n(initial.n, costs)
    _check_cap(initial.n, cap, "best-response dynamics")
    rng = random.Random(seed)
    profile = initial
    for rounds in range(1, max_rounds + 1):
        players = list(range(profile.n))
        if order is Order.RANDOM:
            rng.shuffle(players)
        changed = False
        for i in players:
            strategy, cost = best_response(profile, costs, i, cap=cap)
            if strictly_less(cost, player_cost(profile, costs, i), eps):
                profile = profile.replace(i, strategy)
                changed = True
        if not changed:
            return DynamicsResult(profile, True, rounds)
    return DynamicsResult(profile, False, max_rounds)


def enumerate_nash(
    costs: CostVector, eps: float = EPS, cap: int = ENUMERATE_CAP, workers: int = 1
) -> List[StrategyProfile]:
    """Every weak Nash profile, sorted lexicographically by purchase sets.

    Runs over all ``2**(n(n-1))`` profiles; the profile space is split into
    chunks that may be evaluated by ``workers`` processes.
    """
    _check_cap(costs.n, cap, "Nash enumeration")
    indices, _ = _tables.nash_indices(costs.alphas, eps, workers)
    lay = _tables.layout(costs.n)
    profiles = [StrategyProfile.from_lists(lay.decode_profile(int(p))) for p in indices]
    profiles.sort(key=StrategyProfile.sort_key)
    return profiles


def nash_social_costs(costs: CostVector, eps: float = EPS, cap: int = ENUMERATE_CAP, workers: int = 1):
    """Social costs of all weak Nash profiles (in profile-index order), without building profiles."""
    _check_cap(costs.n, cap, "Nash enumeration")
    return _tables.nash_indices(costs.alphas, eps, workers)[1]
