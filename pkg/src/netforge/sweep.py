"""Price-grid sweeps, CSV emission and run records."""

from __future__ import annotations

import csv
import io
import itertools
import random
import time
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from decimal import Decimal, InvalidOperation
from typing import List, Tuple

from . import __version__
from .claims import verify_claims
from .equilibrium import BEST_RESPONSE_CAP, ENUMERATE_CAP, _check_cap
from .errors import InvalidInputError
from .formats import fmt, render
from .model import EPS, CostVector
from .optimum import OPTIMUM_CAP, price_ratios, social_optimum

CHECKS = ("claims", "ratios")


def parse_values(spec: str) -> Tuple[float, ...]:
    """``"0.5"``, ``"0.5,1,2"`` or the inclusive range ``"0.5:3.0:0.5"``."""
    try:
        if ":" in spec:
            parts = spec.split(":")
            if len(parts) != 3:
                raise InvalidInputError(f"range {spec!r} must be start:stop:step")
            start, stop, step = (Decimal(p) for p in parts)
            if step <= 0 or stop < start:
                raise InvalidInputError(f"range {spec!r} is empty or has non-positive step")
            count = int((stop - start) / step) + 1
            values = tuple(float(start + k * step) for k in range(count))
        else:
            values = tuple(float(Decimal(p)) for p in spec.split(","))
    except InvalidOperation:
        raise InvalidInputError(f"not a number in price spec {spec!r}") from None
    for v in values:
        if v < 0:
            raise InvalidInputError(f"negative price {v} in spec {spec!r}")
    return values


@dataclass(frozen=True)
class SweepConfig:
    n: int
    alpha_values: Tuple[Tuple[float, ...], ...]  # candidate prices per player
    seed: int = 0
    sample_count: int = 0  # 0 = full grid
    normalize: bool = True  # keep only ascending price vectors
    check: str = "claims"
    enumerate_cap: int = ENUMERATE_CAP
    optimum_cap: int = OPTIMUM_CAP
    nash_cap: int = BEST_RESPONSE_CAP
    eps: float = EPS
    workers: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError(f"--n must be >= 1, got {self.n}")
        if len(self.alpha_values) != self.n or not all(self.alpha_values):
            raise InvalidInputError("need a non-empty price spec for every player")
        if self.sample_count < 0:
            raise InvalidInputError("--samples must be >= 0")
        if self.check not in CHECKS:
            raise InvalidInputError(f"--check must be one of {CHECKS}")
        if self.check == "claims" and not self.normalize:
            raise InvalidInputError("claim checks need ascending prices; drop --no-normalize")
        if not 0 <= self.seed < 2**64:
            raise InvalidInputError("--seed must fit in 64 bits")

    def vectors(self) -> List[Tuple[float, ...]]:
        if self.sample_count:
            rng = random.Random(self.seed)
            out = []
            for _ in range(self.sample_count):
                v = tuple(rng.choice(vals) for vals in self.alpha_values)
                out.append(tuple(sorted(v)) if self.normalize else v)
            return out
        grid = itertools.product(*self.alpha_values)
        if self.normalize:
            return sorted({tuple(sorted(v)) for v in grid})
        return list(grid)

    def echo(self) -> dict:
        d = asdict(self)
        d["alpha_values"] = [list(v) for v in self.alpha_values]
        return d


def columns(n: int) -> List[str]:
    return [f"alpha_{i}" for i in range(n)] + [
        "claim_id",
        "applicable",
        "holds",
        "witness_summary",
        "social_cost",
        "optimal_cost",
        "poa",
        "pos",
    ]


def _flag(x) -> str:
    return "" if x is None else ("true" if x else "false")


def run_instance(config: SweepConfig, alphas) -> Tuple[List[list], dict]:
    costs = CostVector.of(alphas)
    prices = [fmt(a) for a in alphas]
    ratios = None
    if costs.n <= config.enumerate_cap:
        ratios = price_ratios(
            costs, config.eps, config.enumerate_cap, config.optimum_cap, config.workers
        )
    if ratios is not None:
        optimal = ratios.optimal_cost
    else:
        optimal = social_optimum(costs, config.eps, config.optimum_cap, config.workers).optimal_cost
    poa = fmt(ratios.poa) if ratios else ""
    pos = fmt(ratios.pos) if ratios else ""
    record = {"alphas": list(alphas), "optimal_cost": optimal}
    if ratios is not None:
        record.update(poa=ratios.poa, pos=ratios.pos, equilibria=ratios.equilibria)
    rows = []
    if config.check == "claims":
        verdicts = verify_claims(costs, config.eps, config.nash_cap, config.optimum_cap)
        record["verdicts"] = []
        for v in verdicts:
            rows.append(
                prices
                + [
                    v.claim_id,
                    _flag(v.applicable),
                    _flag(v.holds),
                    v.summary(),
                    fmt(v.social_cost),
                    fmt(optimal),
                    poa,
                    pos,
                ]
            )
            record["verdicts"].append(
                {"claim_id": v.claim_id, "applicable": v.applicable, "holds": v.holds,
                 "witness": v.summary(), "note": v.note}
            )
    else:
        worst = fmt(ratios.worst_ne_cost) if ratios else ""
        rows.append(prices + ["RATIOS", "", "", "", worst, fmt(optimal), poa, pos])
    return rows, record


@dataclass
class SweepResult:
    config: SweepConfig
    rows: List[list]
    instances: List[dict]
    wall_time: float
    timestamp: str
    failures: int = 0

    def csv_text(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns(self.config.n))
        writer.writerows(self.rows)
        return buf.getvalue()

    def run_record(self) -> dict:
        return {
            "config": self.config.echo(),
            "instances": self.instances,
            "failures": self.failures,
            "wall_time": self.wall_time,
            "engine_version": __version__,
            "timestamp": self.timestamp,
        }


def run_sweep(config: SweepConfig) -> SweepResult:
    if config.check == "claims":
        _check_cap(config.n, config.optimum_cap, "social optimum search")
    started = time.perf_counter()
    timestamp = datetime.now(timezone.utc).isoformat()
    rows, instances = [], []
    for alphas in config.vectors():
        r, rec = run_instance(config, alphas)
        rows.extend(r)
        instances.append(rec)
    failures = sum(
        1 for rec in instances for v in rec.get("verdicts", ()) if v["applicable"] and v["holds"] is False
    )
    return SweepResult(config, rows, instances, time.perf_counter() - started, timestamp, failures)


def write_record(path, result: SweepResult) -> None:
    with open(path, "w") as fh:
        fh.write(render(result.run_record()))
