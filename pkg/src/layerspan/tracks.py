"""Player tracks: validation, pointwise distance and step classification.

A track is a sequence of flat vertex ids, one per time step.  Internally
tracks are 0-indexed; every step number reported in a :class:`Verdict` is
1-indexed so it lines up with positions ``1..l``.
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass
from typing import Sequence

from .errors import GraphParseError, InvalidStepError, TrackLengthError
from .graph import Graph, Layering, LayeredVertexId, distance

Track = Sequence[int]


class MovementRule(enum.Enum):
    TRADITIONAL = "traditional"
    ACTIVE = "active"
    LAZY = "lazy"

    @property
    def span_name(self) -> str:
        return _SPAN_NAMES[self]

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def parse(cls, text: str) -> MovementRule:
        key = text.strip().lower()
        for rule in cls:
            if key in (rule.value, rule.span_name):
                return rule
        raise ValueError(f"unknown movement rule {text!r}")


_SPAN_NAMES = {MovementRule.TRADITIONAL: "strong", MovementRule.ACTIVE: "direct", MovementRule.LAZY: "cartesian"}
_SYMBOLS = {MovementRule.TRADITIONAL: "⊠", MovementRule.ACTIVE: "×", MovementRule.LAZY: "□"}

# serialization order
RULES = (MovementRule.TRADITIONAL, MovementRule.ACTIVE, MovementRule.LAZY)


class StepKind(enum.Enum):
    STILL = "still"
    UP = "up"
    DOWN = "down"
    CLOCKWISE = "clockwise"
    COUNTER_CLOCKWISE = "counter-clockwise"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None
    step: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        where = f" at step {self.step}" if self.step is not None else ""
        return f"{self.reason}{where}"


OK = Verdict(True)


def _check_ids(graph: Graph, f: Track) -> Verdict:
    if len(f) == 0:
        return Verdict(False, "empty track")
    n = graph.vertex_count
    for i, v in enumerate(f):
        if not (isinstance(v, int) and 0 <= v < n):
            return Verdict(False, f"invalid vertex id {v!r}", i + 1)
    return OK


def _check_surjective(graph: Graph, f: Track) -> Verdict:
    missing = set(graph.vertices()).difference(f)
    if missing:
        return Verdict(False, f"not surjective, misses {sorted(missing)[:8]}")
    return OK


def validate_ltrack(graph: Graph, f: Track, *, walk_only: bool = False) -> Verdict:
    """Every consecutive pair is an edge, and (unless ``walk_only``) ``f`` visits every vertex."""
    verdict = _check_ids(graph, f)
    if not verdict:
        return verdict
    for i in range(len(f) - 1):
        if not graph.has_edge(f[i], f[i + 1]):
            return Verdict(False, f"non-edge step {f[i]} -> {f[i + 1]}", i + 1)
    return OK if walk_only else _check_surjective(graph, f)


def validate_lazy(graph: Graph, f: Track, *, walk_only: bool = False) -> Verdict:
    """Like :func:`validate_ltrack` but a step may also stand still."""
    verdict = _check_ids(graph, f)
    if not verdict:
        return verdict
    for i in range(len(f) - 1):
        if f[i] != f[i + 1] and not graph.has_edge(f[i], f[i + 1]):
            return Verdict(False, f"non-edge step {f[i]} -> {f[i + 1]}", i + 1)
    return OK if walk_only else _check_surjective(graph, f)


def _require_same_length(f: Track, g: Track) -> None:
    if len(f) != len(g):
        raise TrackLengthError(f"tracks have lengths {len(f)} and {len(g)}")


def validate_opposite(graph: Graph, f: Track, g: Track, *, walk_only: bool = False) -> Verdict:
    """Both are lazy tracks and at every step exactly one of them moves."""
    _require_same_length(f, g)
    for name, track in (("f", f), ("g", g)):
        verdict = validate_lazy(graph, track, walk_only=walk_only)
        if not verdict:
            return Verdict(False, f"{name}: {verdict.reason}", verdict.step)
    for i in range(len(f) - 1):
        f_moves = f[i] != f[i + 1]
        g_moves = g[i] != g[i + 1]
        if f_moves == g_moves:
            what = "both players move" if f_moves else "both players stand still"
            return Verdict(False, what, i + 1)
    return OK


def validate_for_rule(graph: Graph, rule: MovementRule, f: Track, g: Track, *, walk_only: bool = False) -> Verdict:
    """Check the track kind a movement rule asks for: lazy pair, l-track pair or opposite lazy pair."""
    _require_same_length(f, g)
    if rule is MovementRule.LAZY:
        return validate_opposite(graph, f, g, walk_only=walk_only)
    check = validate_ltrack if rule is MovementRule.ACTIVE else validate_lazy
    for name, track in (("f", f), ("g", g)):
        verdict = check(graph, track, walk_only=walk_only)
        if not verdict:
            return Verdict(False, f"{name}: {verdict.reason}", verdict.step)
    return OK


def pointwise_distances(graph: Graph, f: Track, g: Track) -> list[int]:
    _require_same_length(f, g)
    return [distance(graph, a, b) for a, b in zip(f, g)]


def track_distance(graph: Graph, f: Track, g: Track) -> int:
    """Minimum over all time steps of the distance between the two players."""
    _require_same_length(f, g)
    if not f:
        raise ValueError("tracks must have at least one position")
    return min(pointwise_distances(graph, f, g))


# multilayered cycles --------------------------------------------------------


def classify_step(n: int, k: int, src: LayeredVertexId | tuple[int, int], dst: LayeredVertexId | tuple[int, int]) -> StepKind:
    """Name the lazy step ``src -> dst`` on a multilayered cycle with ``n`` columns and ``k`` layers."""
    (x, y), (x2, y2) = src, dst
    for base, layer in (src, dst):
        if not (0 <= base < n and 1 <= layer <= k):
            raise InvalidStepError(f"({base},{layer}) is not a vertex of MC_{n}^{k}")
    if y == y2:
        delta = (x2 - x) % n
        if delta == 0:
            return StepKind.STILL
        if delta == 1:
            return StepKind.COUNTER_CLOCKWISE
        if delta == n - 1:
            return StepKind.CLOCKWISE
    elif x == x2:
        if y2 == y + 1:
            return StepKind.UP
        if y2 == y - 1:
            return StepKind.DOWN
    raise InvalidStepError(f"({x},{y}) -> ({x2},{y2}) is not a lazy step on MC_{n}^{k}")


def step_kinds(layering: Layering, f: Track) -> list[StepKind]:
    n, k = layering.base_count, layering.layers
    labels = [layering.from_flat(v) for v in f]
    return [classify_step(n, k, a, b) for a, b in zip(labels, labels[1:])]


def same_layer_index(layering: Layering, f: Track, g: Track) -> int | None:
    """First 1-indexed position where both players share a layer, or ``None``."""
    _require_same_length(f, g)
    for i, (a, b) in enumerate(zip(f, g)):
        if layering.layer_of(a) == layering.layer_of(b):
            return i + 1
    return None


def near_layer_index(layering: Layering, f: Track, g: Track) -> int | None:
    """First 1-indexed position where the players' layers differ by at most one, or ``None``."""
    _require_same_length(f, g)
    for i, (a, b) in enumerate(zip(f, g)):
        if abs(layering.layer_of(a) - layering.layer_of(b)) <= 1:
            return i + 1
    return None


# random tracks ---------------------------------------------------------------


def random_cover_walk(graph: Graph, rng: random.Random, *, stay_probability: float = 0.2, start: int | None = None) -> list[int]:
    """Random lazy walk that keeps going until every vertex has been visited."""
    graph.require_connected()
    v = rng.randrange(graph.vertex_count) if start is None else start
    walk = [v]
    unseen = set(graph.vertices()) - {v}
    while unseen:
        if rng.random() < stay_probability or not graph.neighbors(v):
            walk.append(v)
            continue
        v = rng.choice(graph.neighbors(v))
        walk.append(v)
        unseen.discard(v)
    return walk


def random_lazy_pair(graph: Graph, rng: random.Random, *, stay_probability: float = 0.2) -> tuple[list[int], list[int]]:
    """Two independent surjective lazy tracks, the shorter one padded by standing still."""
    f = random_cover_walk(graph, rng, stay_probability=stay_probability)
    g = random_cover_walk(graph, rng, stay_probability=stay_probability)
    length = max(len(f), len(g))
    f += [f[-1]] * (length - len(f))
    g += [g[-1]] * (length - len(g))
    return f, g


# JSON ----------------------------------------------------------------------


def tracks_to_json(graph: Graph, f: Track, g: Track, rule: MovementRule, *, claim: int | None = None) -> dict:
    data: dict = {"graph": graph.to_dict(), "tracks": [list(f), list(g)], "rule": rule.value}
    if claim is not None:
        data["claim"] = claim
    if graph.layering is not None:
        data["labels"] = [[graph.layering.label(v) for v in track] for track in (f, g)]
    return data


def tracks_from_json(data: dict | str) -> tuple[Graph, list[int], list[int], MovementRule, int | None]:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise GraphParseError(f"invalid track JSON: {exc}") from exc
    try:
        graph = Graph.from_dict(data["graph"])
        f, g = ([int(v) for v in track] for track in data["tracks"])
        rule = MovementRule.parse(data["rule"])
        claim = data.get("claim")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphParseError):
            raise
        raise GraphParseError(f"bad track document: {exc}") from exc
    return graph, f, g, rule, None if claim is None else int(claim)
