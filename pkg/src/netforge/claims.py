"""Instance-by-instance adjudication of the equilibrium and optimum case claims.

Claim ids:

NE-C1        max price <= 1: the complete profile is a Nash equilibrium.
NE-C2        min price > 1: the star at player 0 (leaves buy) is a Nash equilibrium.
NE-C3        split at price 1 with 1 <= j <= n-1: the clique-star profile is a Nash equilibrium.
OPT-C1       min price > 2: every social optimum is a star.
OPT-C2-BOUND cheapest price <= 2: the two-price bound holds on every connected graph.
OPT-C3-BOUND second cheapest price < 2: same bound, same check.
OPT-C4       max price < 2: the complete graph is the unique social optimum.
OPT-C5       split at price 2 with 1 <= j <= n-1: every social optimum is a clique-star.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Union

from . import _tables
from .constructions import (
    ALL,
    clique_star_profile,
    complete_profile,
    is_clique_star,
    is_complete,
    is_star,
    star_profile,
    threshold_split,
)
from .equilibrium import BEST_RESPONSE_CAP, DeviationWitness, Mode, _check_cap, is_nash
from .model import EPS, CostVector, OwnedGraph, lower_bound_case2, social_cost_profile
from .optimum import OPTIMUM_CAP, OptimumReport, social_optimum

CLAIM_IDS = (
    "NE-C1",
    "NE-C2",
    "NE-C3",
    "OPT-C1",
    "OPT-C2-BOUND",
    "OPT-C3-BOUND",
    "OPT-C4",
    "OPT-C5",
)


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: str
    applicable: bool
    holds: Optional[bool] = None
    witness: Union[DeviationWitness, OwnedGraph, None] = None
    social_cost: Optional[float] = None
    note: str = ""

    def summary(self) -> str:
        w = self.witness
        if w is None:
            return ""
        if isinstance(w, DeviationWitness):
            return (
                f"player {w.player} -> {sorted(w.new_strategy)}: "
                f"{w.old_cost:.9f} -> {w.new_cost:.9f}"
            )
        return "edges " + " ".join(f"{a}>{b}" for a, b in sorted(w.owned_edges))


def _ne_verdict(claim_id, profile, costs, eps, cap, note=""):
    report = is_nash(profile, costs, Mode.EXACT, eps=eps, cap=cap)
    return ClaimVerdict(
        claim_id,
        True,
        report.is_nash,
        report.witness,
        social_cost_profile(profile, costs),
        note,
    )


def _shape_verdict(claim_id, optimum: OptimumReport, predicate, note=""):
    """Holds when every minimizer has the shape; the note says whether some minimizer does."""
    bad = [g for g in optimum.optimal_graphs if not predicate(g.graph())]
    some = len(bad) < len(optimum.optimal_graphs)
    note = " ".join(
        x for x in (note, f"minimizers={len(optimum.optimal_graphs)}", f"some_match={some}") if x
    )
    return ClaimVerdict(
        claim_id, True, not bad, bad[0] if bad else None, optimum.optimal_cost, note
    )


def _bound_verdict(claim_id, costs: CostVector, eps: float) -> ClaimVerdict:
    n = costs.n
    a1, a2 = costs[0], costs[1]
    masks, edge_counts, owned = _tables.connected_owned_costs(costs.alphas)
    worst_gap, witness = None, None
    for mask, m, c in zip(masks, edge_counts, owned):
        gap = float(c) - lower_bound_case2(n, a1, a2, int(m))
        if worst_gap is None or gap < worst_gap:
            worst_gap = gap
            if gap < -eps:
                edges = _tables.layout(n).graph_edges(int(mask))
                witness = OwnedGraph.cheapest_owner_edges(n, edges, costs)
    return ClaimVerdict(
        claim_id,
        True,
        witness is None,
        witness,
        None,
        f"min slack {worst_gap:.9f} over {len(masks)} connected graphs",
    )


def verify_claims(
    costs: CostVector,
    eps: float = EPS,
    nash_cap: int = BEST_RESPONSE_CAP,
    optimum_cap: int = OPTIMUM_CAP,
) -> List[ClaimVerdict]:
    """One verdict per claim id, in ``CLAIM_IDS`` order. Prices must be ascending."""
    costs.require_ascending()
    n = costs.n
    alphas = costs.alphas
    lo, hi = alphas[0], alphas[-1]
    _check_cap(n, nash_cap, "exact Nash check")
    _check_cap(n, optimum_cap, "social optimum search")
    optimum = None

    def opt():
        nonlocal optimum
        if optimum is None:
            optimum = social_optimum(costs, eps, optimum_cap)
        return optimum

    out = []
    out.append(
        _ne_verdict("NE-C1", complete_profile(n), costs, eps, nash_cap)
        if hi <= 1
        else ClaimVerdict("NE-C1", False)
    )
    out.append(
        _ne_verdict("NE-C2", star_profile(n, 0), costs, eps, nash_cap)
        if lo > 1
        else ClaimVerdict("NE-C2", False)
    )
    j1 = threshold_split(costs, 1.0)
    out.append(
        _ne_verdict("NE-C3", clique_star_profile(costs, 1.0), costs, eps, nash_cap, f"j={j1}")
        if 1 <= j1 <= n - 1
        else ClaimVerdict("NE-C3", False, note=f"j={j1}")
    )
    out.append(
        _shape_verdict("OPT-C1", opt(), is_star) if lo > 2 else ClaimVerdict("OPT-C1", False)
    )
    out.append(
        _bound_verdict("OPT-C2-BOUND", costs, eps)
        if n >= 2 and alphas[0] <= 2
        else ClaimVerdict("OPT-C2-BOUND", False)
    )
    out.append(
        _bound_verdict("OPT-C3-BOUND", costs, eps)
        if n >= 2 and alphas[1] < 2
        else ClaimVerdict("OPT-C3-BOUND", False)
    )
    out.append(
        _shape_verdict(
            "OPT-C4", opt(), lambda g: is_complete(g) and len(opt().optimal_graphs) == 1
        )
        if hi < 2
        else ClaimVerdict("OPT-C4", False)
    )
    j2 = threshold_split(costs, 2.0)
    out.append(
        _shape_verdict("OPT-C5", opt(), lambda g: is_clique_star(g, j2, ALL), f"j={j2}")
        if 1 <= j2 <= n - 1
        else ClaimVerdict("OPT-C5", False, note=f"j={j2}")
    )
    return out
