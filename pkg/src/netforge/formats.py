"""Flat-file formats and structured output.

alphas file:  JSON array of non-negative decimals, e.g. ``[0.5, 1, 3]``
profile file: JSON array of arrays of 0-based player indices, e.g. ``[[1, 2], [], [1]]``
"""

from __future__ import annotations

import json
import math
import re
from pathlib import Path

from .constructions import clique_star_profile, complete_profile, star_profile
from .errors import InvalidInputError
from .graph import StrategyProfile
from .model import CostVector

_NUM = "@@num@@"


def _decode(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def parse_alphas(text: str, source: str = "<alphas>") -> CostVector:
    data = _decode(text, source)
    if not isinstance(data, list) or not data:
        raise InvalidInputError(f"{source}: expected a non-empty array of decimals")
    for k, a in enumerate(data):
        if not _is_number(a):
            raise InvalidInputError(f"{source}: alphas[{k}]: expected a number, got {a!r}")
        if a < 0:
            raise InvalidInputError(f"{source}: alphas[{k}]: negative price {a}")
    try:
        return CostVector.of(data)
    except InvalidInputError as exc:
        raise InvalidInputError(f"{source}: {exc}") from None


def parse_profile(text: str, source: str = "<profile>") -> StrategyProfile:
    data = _decode(text, source)
    if not isinstance(data, list) or not data:
        raise InvalidInputError(f"{source}: expected a non-empty array of index arrays")
    for i, s in enumerate(data):
        if not isinstance(s, list):
            raise InvalidInputError(f"{source}: profile[{i}]: expected an array, got {s!r}")
        for k, j in enumerate(s):
            if isinstance(j, bool) or not isinstance(j, int):
                raise InvalidInputError(f"{source}: profile[{i}][{k}]: expected an integer, got {j!r}")
        if len(set(s)) != len(s):
            raise InvalidInputError(f"{source}: profile[{i}]: duplicate index")
    try:
        return StrategyProfile.from_lists(data)
    except InvalidInputError as exc:
        raise InvalidInputError(f"{source}: {exc}") from None


def load_alphas(path) -> CostVector:
    path = Path(path)
    return parse_alphas(path.read_text(), str(path))


def load_profile(path) -> StrategyProfile:
    path = Path(path)
    return parse_profile(path.read_text(), str(path))


def save_alphas(path, costs: CostVector) -> None:
    Path(path).write_text(json.dumps(list(costs.alphas)) + "\n")


def save_profile(path, profile: StrategyProfile) -> None:
    Path(path).write_text(json.dumps(profile.to_lists()) + "\n")


def parse_alpha_list(text: str) -> CostVector:
    """Comma-separated decimals from the command line."""
    values = []
    for k, item in enumerate(text.split(",")):
        try:
            values.append(float(item))
        except ValueError:
            raise InvalidInputError(f"--alphas: entry {k}: not a number: {item!r}") from None
    return CostVector.of(values)


def profile_from_shorthand(text: str, n: int, costs: CostVector = None) -> StrategyProfile:
    """``complete``, ``empty``, ``star:<center>``, ``clique-star:<threshold>`` or inline JSON."""
    name, _, arg = text.partition(":")
    try:
        if name == "complete":
            return complete_profile(n)
        if name == "empty":
            return StrategyProfile.empty(n)
        if name == "star":
            return star_profile(n, int(arg) if arg else 0)
        if name == "clique-star":
            if costs is None:
                raise InvalidInputError("clique-star profile needs prices")
            return clique_star_profile(costs, float(arg) if arg else 1.0)
    except ValueError as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"--profile: bad argument in {text!r}") from None
    profile = parse_profile(text, "--profile")
    if profile.n != n:
        raise InvalidInputError(f"--profile: has {profile.n} players, prices have {n}")
    return profile


def fmt(x) -> str:
    """Decimal rendering used everywhere a cost or ratio is printed."""
    if x is None:
        return ""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.9f}"


def _prepare(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return "INFINITE"
        return _NUM + f"{obj:.9f}"
    if isinstance(obj, dict):
        return {str(k): _prepare(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_prepare(v) for v in obj]
    if hasattr(obj, "item"):
        return _prepare(obj.item())
    raise TypeError(f"cannot render {type(obj).__name__}")


def render(doc) -> str:
    """JSON text with every float fixed to 9 decimals and infinities spelled ``INFINITE``."""
    text = json.dumps(_prepare(doc), indent=2)
    return re.sub(r'"' + _NUM + r'(-?[0-9.]+)"', r"\1", text) + "\n"
