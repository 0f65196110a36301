"""Command-line entry point.

Exit codes: 0 ok, 1 claim failure under --strict, 2 invalid input, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .claims import verify_claims
from .equilibrium import (
    BEST_RESPONSE_CAP,
    ENUMERATE_CAP,
    Mode,
    Order,
    best_response,
    best_response_dynamics,
    enumerate_nash,
    is_nash,
)
from .errors import CapacityError, InvalidInputError
from .formats import load_alphas, load_profile, parse_alpha_list, profile_from_shorthand, render
from .graph import induced_graph, is_connected
from .model import EPS, player_cost, social_cost_profile
from .optimum import OPTIMUM_CAP, price_ratios, social_optimum
from .sweep import SweepConfig, parse_values, run_sweep, write_record


def _workers(args) -> int:
    if args.workers is not None:
        return args.workers
    env = os.environ.get("NETFORGE_WORKERS")
    if env is None:
        return 1
    try:
        value = int(env)
    except ValueError:
        raise InvalidInputError(f"NETFORGE_WORKERS: not an integer: {env!r}") from None
    if value < 1:
        raise InvalidInputError("NETFORGE_WORKERS must be >= 1")
    return value


def _costs(args):
    if args.alphas_file:
        return load_alphas(args.alphas_file)
    if args.alphas:
        return parse_alpha_list(args.alphas)
    raise InvalidInputError("prices required: pass --alphas or --alphas-file")


def _profile(args, costs):
    if args.profile_file:
        profile = load_profile(args.profile_file)
        if profile.n != costs.n:
            raise InvalidInputError(
                f"{args.profile_file}: has {profile.n} players, prices have {costs.n}"
            )
        return profile
    if args.profile is None:
        raise InvalidInputError("profile required: pass --profile or --profile-file")
    return profile_from_shorthand(args.profile, costs.n, costs)


def _witness(w):
    if w is None:
        return None
    return {
        "player": w.player,
        "new_strategy": sorted(w.new_strategy),
        "old_cost": w.old_cost,
        "new_cost": w.new_cost,
    }


def _owned(g):
    return [list(e) for e in sorted(g.owned_edges)]


def _doc(command, costs, result, witnesses=(), **inputs):
    return {
        "command": command,
        "inputs": {"alphas": list(costs.alphas), **inputs},
        "result": result,
        "witnesses": [w for w in witnesses if w is not None],
    }


def cmd_cost(args):
    costs = _costs(args)
    profile = _profile(args, costs)
    result = {
        "player_costs": [player_cost(profile, costs, i) for i in range(costs.n)],
        "social_cost": social_cost_profile(profile, costs),
        "connected": is_connected(induced_graph(profile)),
    }
    return _doc("cost", costs, result, profile=profile.to_lists()), 0


def cmd_nash_check(args):
    costs = _costs(args)
    profile = _profile(args, costs)
    report = is_nash(profile, costs, Mode(args.mode), args.strict_nash, args.eps, args.max_br_n)
    result = {"is_nash": report.is_nash, "mode": report.mode.value, "strict": args.strict_nash}
    doc = _doc(
        "nash-check", costs, result, [_witness(report.witness)], profile=profile.to_lists()
    )
    return doc, 0


def cmd_best_response(args):
    costs = _costs(args)
    profile = _profile(args, costs)
    strategy, cost = best_response(profile, costs, args.player, args.max_br_n)
    result = {
        "player": args.player,
        "strategy": sorted(strategy),
        "cost": cost,
        "current_cost": player_cost(profile, costs, args.player),
    }
    return _doc("best-response", costs, result, profile=profile.to_lists()), 0


def cmd_dynamics(args):
    costs = _costs(args)
    profile = _profile(args, costs)
    out = best_response_dynamics(
        profile, costs, Order(args.order), args.seed, args.max_rounds, args.eps, args.max_br_n
    )
    result = {
        "final": out.final.to_lists(),
        "converged": out.converged,
        "rounds": out.rounds,
        "social_cost": social_cost_profile(out.final, costs),
    }
    inputs = dict(profile=profile.to_lists(), order=args.order, seed=args.seed)
    return _doc("dynamics", costs, result, max_rounds=args.max_rounds, **inputs), 0


def cmd_enumerate_nash(args):
    costs = _costs(args)
    profiles = enumerate_nash(costs, args.eps, args.max_enum_n, _workers(args))
    result = {
        "count": len(profiles),
        "equilibria": [
            {"profile": p.to_lists(), "social_cost": social_cost_profile(p, costs)}
            for p in profiles
        ],
    }
    return _doc("enumerate-nash", costs, result), 0


def cmd_optimum(args):
    costs = _costs(args)
    report = social_optimum(costs, args.eps, args.max_opt_n, _workers(args))
    result = {
        "optimal_cost": report.optimal_cost,
        "graphs_searched": report.graphs_searched,
        "connected_graphs": report.connected_graphs,
        "minimizers": [_owned(g) for g in report.optimal_graphs],
    }
    return _doc("optimum", costs, result), 0


def cmd_ratios(args):
    costs = _costs(args)
    r = price_ratios(costs, args.eps, args.max_enum_n, args.max_opt_n, _workers(args))
    result = {
        "poa": "UNDEFINED" if r.poa is None else r.poa,
        "pos": "UNDEFINED" if r.pos is None else r.pos,
        "worst_ne_cost": r.worst_ne_cost,
        "best_ne_cost": r.best_ne_cost,
        "optimal_cost": r.optimal_cost,
        "equilibria": r.equilibria,
        "degenerate": r.degenerate,
    }
    return _doc("ratios", costs, result), 0


def cmd_verify_claims(args):
    costs = _costs(args)
    verdicts = verify_claims(costs, args.eps, args.max_br_n, args.max_opt_n)
    result, witnesses = [], []
    for v in verdicts:
        result.append(
            {
                "claim_id": v.claim_id,
                "applicable": v.applicable,
                "holds": v.holds,
                "social_cost": v.social_cost,
                "note": v.note,
            }
        )
        if v.witness is not None:
            w = v.witness
            body = _witness(w) if hasattr(w, "player") else {"owned_edges": _owned(w)}
            witnesses.append({"claim_id": v.claim_id, **body})
    failed = any(v.applicable and v.holds is False for v in verdicts)
    return _doc("verify-claims", costs, result, witnesses), 1 if failed and args.strict else 0


def cmd_sweep(args):
    if args.alpha_spec:
        specs = args.alpha_spec.split(";")
        if len(specs) != args.n:
            raise InvalidInputError(f"--alpha-spec has {len(specs)} entries for --n {args.n}")
    elif args.alpha_grid:
        specs = [args.alpha_grid] * args.n
    else:
        raise InvalidInputError("sweep needs --alpha-grid or --alpha-spec")
    config = SweepConfig(
        n=args.n,
        alpha_values=tuple(parse_values(s) for s in specs),
        seed=args.seed,
        sample_count=args.samples,
        normalize=not args.no_normalize,
        check=args.check,
        enumerate_cap=args.max_enum_n,
        optimum_cap=args.max_opt_n,
        nash_cap=args.max_br_n,
        eps=args.eps,
        workers=_workers(args),
    )
    result = run_sweep(config)
    if args.record:
        write_record(args.record, result)
    code = 1 if result.failures and args.strict else 0
    if args.out:
        Path(args.out).write_text(result.csv_text())
        summary = {
            "command": "sweep",
            "inputs": config.echo(),
            "result": {"instances": len(result.instances), "rows": len(result.rows),
                       "failures": result.failures, "out": args.out},
            "witnesses": [],
        }
        return summary, code
    return result.csv_text(), code


COMMANDS = {
    "cost": (cmd_cost, "player and social costs of a profile"),
    "nash-check": (cmd_nash_check, "exact or local Nash check with a deviation witness"),
    "best-response": (cmd_best_response, "best response of one player"),
    "dynamics": (cmd_dynamics, "best-response dynamics from a starting profile"),
    "enumerate-nash": (cmd_enumerate_nash, "all weak Nash profiles"),
    "optimum": (cmd_optimum, "exhaustive social optimum"),
    "ratios": (cmd_ratios, "price of anarchy and stability"),
    "verify-claims": (cmd_verify_claims, "adjudicate the case claims at one price vector"),
    "sweep": (cmd_sweep, "claims or ratios over a price grid, as CSV"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphas", help="comma-separated link prices, e.g. 0.5,1,3")
    common.add_argument("--alphas-file", help="JSON array of link prices")
    common.add_argument("--eps", type=float, default=EPS)
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes (default: $NETFORGE_WORKERS or 1)")
    common.add_argument("--max-enum-n", type=int, default=ENUMERATE_CAP)
    common.add_argument("--max-opt-n", type=int, default=OPTIMUM_CAP)
    common.add_argument("--max-br-n", type=int, default=BEST_RESPONSE_CAP)
    common.add_argument("--out", help="also write the result here")

    with_profile = argparse.ArgumentParser(add_help=False)
    with_profile.add_argument(
        "--profile", help="complete | empty | star:<center> | clique-star:<threshold> | JSON"
    )
    with_profile.add_argument("--profile-file", help="JSON array of index arrays")

    parser = argparse.ArgumentParser(prog="netforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    parsers = {}
    for name, (_, help_text) in COMMANDS.items():
        parents = [common]
        if name in ("cost", "nash-check", "best-response", "dynamics"):
            parents.append(with_profile)
        parsers[name] = sub.add_parser(name, parents=parents, help=help_text)

    p = parsers["nash-check"]
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.EXACT.value)
    p.add_argument("--strict-nash", action="store_true",
                   help="also fail on deviations that are no worse")
    parsers["best-response"].add_argument("--player", type=int, required=True)
    p = parsers["dynamics"]
    p.add_argument("--order", choices=[o.value for o in Order], default=Order.ROUND_ROBIN.value)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-rounds", type=int, default=100)
    p.set_defaults(profile="empty")
    parsers["verify-claims"].add_argument("--strict", action="store_true",
                                          help="exit 1 if an applicable claim fails")
    p = parsers["sweep"]
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha-grid", help="start:stop:step applied to every player")
    p.add_argument("--alpha-spec", help="per-player specs separated by ';'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=0, help="random draws instead of the full grid")
    p.add_argument("--check", choices=["claims", "ratios"], default="claims")
    p.add_argument("--no-normalize", action="store_true", help="keep unsorted price vectors")
    p.add_argument("--record", help="write a JSON run record here")
    p.add_argument("--strict", action="store_true", help="exit 1 if an applicable claim fails")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        if args.workers is not None and args.workers < 1:
            raise InvalidInputError("--workers must be >= 1")
        doc, code = handler(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return 3
    text = doc if isinstance(doc, str) else render(doc)
    sys.stdout.write(text)
    if args.out and args.command != "sweep":
        Path(args.out).write_text(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
