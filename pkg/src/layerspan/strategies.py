"""Explicit two-player strategies on multilayered cycles.

``cartesian_strategy`` moves the players one at a time (opposite lazy
tracks) and keeps them ``n // 2`` apart; ``strong_strategy`` moves both
players at every step (l-tracks) and keeps them ``n // 2 + 1`` apart.
Every generated pair is re-validated before it is returned.
"""

from __future__ import annotations

import csv
import io
import logging
from typing import Iterator, NamedTuple

from .errors import GraphPreconditionError
from .graph import Graph, LayeredVertexId, multilayered_cycle
from .tracks import MovementRule, pointwise_distances, step_kinds, track_distance, validate_for_rule

log = logging.getLogger(__name__)

# (player, column delta, layer delta); column +1 is counter-clockwise
_Move = tuple[str, int, int]


class StrategyPair(NamedTuple):
    f: list[int]
    g: list[int]

    @property
    def length(self) -> int:
        return len(self.f)


def _check_params(n: int, k: int) -> None:
    if n < 3 or k < 2:
        raise GraphPreconditionError(f"strategies need n >= 3 and k >= 2, got n={n}, k={k}")


def _cartesian_moves(k: int) -> Iterator[_Move]:
    # The players alternate, f first.  Vertical stages are taken from the
    # column-snake; a horizontal move is only made while the other player
    # sits one layer away, otherwise the column gap of n // 2 would shrink.
    while True:
        for _ in range(k - 1):
            yield from (("f", 0, 1), ("g", 0, 1))
        yield from (("f", 0, -1), ("g", 1, 0), ("f", 1, 0), ("g", 0, -1), ("f", 0, 1), ("g", 0, 1))
        for _ in range(k - 1):
            yield from (("f", 0, -1), ("g", 0, -1))
        yield from (("f", 0, 1), ("g", 1, 0), ("f", 1, 0), ("g", 0, 1), ("f", 0, -1), ("g", 0, -1))


def cartesian_strategy(n: int, k: int) -> StrategyPair:
    """Opposite lazy tracks on MC_n^k that stay ``n // 2`` apart.

    f starts at (0, 1) and g at (n // 2, 1).  Both sweep their column up,
    shift one column counter-clockwise at the top, sweep down, shift at the
    bottom, and so on until every vertex has been seen by both.
    """
    _check_params(n, k)
    graph = multilayered_cycle(n, k)
    start = {"f": LayeredVertexId(0, 1), "g": LayeredVertexId(n // 2, 1)}
    f, g = _run(graph, start, (((who, dx, dy),) for who, dx, dy in _cartesian_moves(k)))
    expected = 2 * n * k - 1
    if len(f) != expected:
        log.debug("cartesian strategy on MC_%d^%d has length %d (2nk-1 = %d)", n, k, len(f), expected)
    return _validated(graph, MovementRule.LAZY, f, g, n // 2)


def _strong_moves(n: int, k: int) -> Iterator[tuple[_Move, _Move]]:
    sweep = [(("f", -1, 0), ("g", -1, 0))] * n
    g_layer = 2
    yield from sweep
    for change in range(1, k):
        g_dy = -1 if change == 1 else 1
        # guard for a move off the top or bottom; never triggers for k >= 2
        if not 1 <= g_layer + g_dy <= k:
            g_dy = -g_dy
        g_layer += g_dy
        yield ("f", 0, 1), ("g", 0, g_dy)
        yield from sweep
    g_dy = 1 if g_layer < k else -1
    yield ("f", 0, -1), ("g", 0, g_dy)
    yield from sweep


def strong_strategy(n: int, k: int) -> StrategyPair:
    """l-tracks on MC_n^k that stay ``n // 2 + 1`` apart while both players move every step.

    f sweeps layer after layer clockwise from (0, 1), then steps back down
    and sweeps once more.  g starts at (n // 2, 2), copies every clockwise
    move, steps down at f's first layer change and up at every later one.
    """
    _check_params(n, k)
    graph = multilayered_cycle(n, k)
    start = {"f": LayeredVertexId(0, 1), "g": LayeredVertexId(n // 2, 2)}
    f, g = _run(graph, start, _strong_moves(n, k))
    return _validated(graph, MovementRule.ACTIVE, f, g, n // 2 + 1)


def _run(graph: Graph, start: dict[str, LayeredVertexId], steps) -> tuple[list[int], list[int]]:
    layering = graph.layering
    n = layering.base_count
    pos = dict(start)
    tracks = {who: [layering.to_flat(v)] for who, v in pos.items()}
    unseen = {who: set(graph.vertices()) - {t[0]} for who, t in tracks.items()}
    for step in steps:
        if not unseen["f"] and not unseen["g"]:
            break
        for who, dx, dy in step:
            base, layer = pos[who]
            pos[who] = LayeredVertexId((base + dx) % n, layer + dy)
        for who in ("f", "g"):
            v = layering.to_flat(pos[who])
            tracks[who].append(v)
            unseen[who].discard(v)
    return tracks["f"], tracks["g"]


def _validated(graph: Graph, rule: MovementRule, f: list[int], g: list[int], claim: int) -> StrategyPair:
    verdict = validate_for_rule(graph, rule, f, g)
    if not verdict:
        raise AssertionError(f"{graph.name}: generated {rule.value} tracks are invalid: {verdict}")
    if track_distance(graph, f, g) < claim:
        raise AssertionError(f"{graph.name}: generated tracks come closer than {claim}")
    return StrategyPair(f, g)


def strategy_for_rule(n: int, k: int, rule: MovementRule) -> StrategyPair:
    """Lazy uses the one-at-a-time strategy; both other rules accept the l-track pair."""
    if rule is MovementRule.LAZY:
        return cartesian_strategy(n, k)
    return strong_strategy(n, k)


def trace_rows(graph: Graph, f: list[int], g: list[int]) -> list[dict]:
    """One row per position: labels, the kind of step just taken, and the current distance."""
    layering = graph.layering
    kinds_f = [None, *step_kinds(layering, f)]
    kinds_g = [None, *step_kinds(layering, g)]
    rows = []
    for i, d in enumerate(pointwise_distances(graph, f, g)):
        rows.append({
            "step": i + 1,
            "f": layering.label(f[i]),
            "g": layering.label(g[i]),
            "f_move": kinds_f[i].value if kinds_f[i] else "",
            "g_move": kinds_g[i].value if kinds_g[i] else "",
            "distance": d,
        })
    return rows


def trace_csv(graph: Graph, f: list[int], g: list[int]) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=["step", "f", "g", "f_move", "g_move", "distance"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(trace_rows(graph, f, g))
    return out.getvalue()
