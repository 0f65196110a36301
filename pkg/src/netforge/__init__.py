"""Heterogeneous-price network creation games: costs, equilibria, optima and case checks."""

__version__ = "0.1.0"

from .errors import CapacityError, InvalidInputError, NetforgeError
from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    StrategyProfile,
    UndirectedGraph,
    all_pairs_distances,
    induced_graph,
    is_connected,
)
from .model import (
    EPS,
    INFINITE,
    CostVector,
    OwnedGraph,
    lower_bound_case2,
    lower_bound_global,
    player_cost,
    social_cost_owned,
    social_cost_profile,
)
from .equilibrium import (
    DeviationWitness,
    DynamicsResult,
    Mode,
    NashReport,
    Order,
    best_response,
    best_response_dynamics,
    enumerate_nash,
    is_nash,
)
from .optimum import OptimumReport, RatioReport, price_ratios, social_optimum
from .constructions import (
    clique_star_profile,
    complete_profile,
    is_clique_star,
    is_complete,
    is_star,
    star_profile,
    threshold_split,
)
from .claims import CLAIM_IDS, ClaimVerdict, verify_claims

__all__ = [
    "CLAIM_IDS",
    "CapacityError",
    "ClaimVerdict",
    "CostVector",
    "DeviationWitness",
    "DistanceMatrix",
    "DynamicsResult",
    "EPS",
    "INFINITE",
    "InvalidInputError",
    "Mode",
    "NashReport",
    "NetforgeError",
    "OptimumReport",
    "Order",
    "OwnedGraph",
    "RatioReport",
    "StrategyProfile",
    "UNREACHABLE",
    "UndirectedGraph",
    "all_pairs_distances",
    "best_response",
    "best_response_dynamics",
    "clique_star_profile",
    "complete_profile",
    "enumerate_nash",
    "induced_graph",
    "is_clique_star",
    "is_complete",
    "is_connected",
    "is_nash",
    "is_star",
    "lower_bound_case2",
    "lower_bound_global",
    "player_cost",
    "price_ratios",
    "social_cost_owned",
    "social_cost_profile",
    "social_optimum",
    "star_profile",
    "threshold_split",
    "verify_claims",
]
