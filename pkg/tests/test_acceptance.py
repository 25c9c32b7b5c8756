"""Exit criteria.  Each test records one PASS/FAIL line shown in the terminal summary."""

import random
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE_LINES
from layerspan.engine import span_by_components, span_oracle, span_oracle_value, witness_tracks
from layerspan.graph import multilayered_cycle
from layerspan.strategies import cartesian_strategy, strong_strategy
from layerspan.tracks import (
    MovementRule,
    near_layer_index,
    random_lazy_pair,
    same_layer_index,
    track_distance,
    validate_lazy,
    validate_ltrack,
    validate_opposite,
)

TRAD, ACTIVE, LAZY = MovementRule.TRADITIONAL, MovementRule.ACTIVE, MovementRule.LAZY

TABLE_N, TABLE_K = range(3, 11), range(2, 6)
STRATEGY_N, STRATEGY_K = range(3, 13), range(2, 7)
RANDOM_PAIRS_PER_GRAPH = 100


@contextmanager
def criterion(name: str, budget: float | None = None):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"FAIL  {name}: {exc}")
        raise
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed > budget:
        ACCEPTANCE_LINES.append(f"FAIL  {name}: {elapsed:.2f}s exceeds {budget}s")
        raise AssertionError(f"{name} took {elapsed:.2f}s, budget {budget}s")
    ACCEPTANCE_LINES.append(f"PASS  {name} ({elapsed:.2f}s)")


def test_table_grid():
    with criterion("span table for MC_n^k, n 3..10, k 2..5", budget=60):
        for n in TABLE_N:
            for k in TABLE_K:
                g = multilayered_cycle(n, k)
                got = tuple(span_by_components(g, rule).value for rule in (TRAD, ACTIVE, LAZY))
                assert got == (n // 2 + 1, n // 2 + 1, n // 2), f"MC_{n}^{k}: {got}"


def test_oracle_equivalence(small_connected_graphs):
    graphs = small_connected_graphs + [multilayered_cycle(3, 2), multilayered_cycle(4, 2)]
    with criterion(f"oracle agrees with components on {len(graphs)} graphs", budget=120):
        for g in graphs:
            for rule in MovementRule:
                oracle = span_oracle_value(g, rule).value
                components = span_by_components(g, rule).value
                assert oracle == components, f"{g!r} {rule.value}: oracle {oracle}, components {components}"


def test_strategy_reproduction():
    with criterion("strategies on MC_n^k, n 3..12, k 2..6", budget=30):
        for n in STRATEGY_N:
            for k in STRATEGY_K:
                g = multilayered_cycle(n, k)
                f, h = cartesian_strategy(n, k)
                assert validate_opposite(g, f, h), (n, k)
                assert set(f) == set(h) == set(g.vertices())
                assert track_distance(g, f, h) == n // 2, (n, k)
                f, h = strong_strategy(n, k)
                assert validate_ltrack(g, f) and validate_ltrack(g, h), (n, k)
                assert track_distance(g, f, h) == n // 2 + 1, (n, k)


def _produced_pairs():
    """Every pair the library generates on the grid graphs, tagged with whether it is an opposite pair."""
    for n in STRATEGY_N:
        for k in STRATEGY_K:
            g = multilayered_cycle(n, k)
            yield g, cartesian_strategy(n, k), True
            yield g, strong_strategy(n, k), False
    for n in TABLE_N:
        for k in TABLE_K:
            g = multilayered_cycle(n, k)
            for rule in MovementRule:
                pair = witness_tracks(g, rule, span_by_components(g, rule).value)
                yield g, pair, rule is LAZY


def test_lemma_properties():
    counterexamples = []
    checked_opposite = checked_lazy = 0
    with criterion("same-layer and adjacent-layer positions exist"):
        for g, (f, h), opposite in _produced_pairs():
            lay = g.layering
            if opposite:
                assert validate_opposite(g, f, h)
                checked_opposite += 1
                if same_layer_index(lay, f, h) is None:
                    counterexamples.append(("same layer", g.name))
            assert validate_lazy(g, f) and validate_lazy(g, h)
            checked_lazy += 1
            if near_layer_index(lay, f, h) is None:
                counterexamples.append(("adjacent layer", g.name))
        rng = random.Random(20240601)
        for n in STRATEGY_N:
            for k in STRATEGY_K:
                g = multilayered_cycle(n, k)
                for _ in range(RANDOM_PAIRS_PER_GRAPH):
                    f, h = random_lazy_pair(g, rng)
                    checked_lazy += 1
                    if near_layer_index(g.layering, f, h) is None:
                        counterexamples.append(("adjacent layer, random", g.name))
        assert checked_opposite > 0 and checked_lazy > 0
        assert counterexamples == []


def test_upper_bound_cross_check():
    with criterion("oracle rejects distance 2 (lazy, MC_3^2) and 4 (traditional, MC_4^2)"):
        assert span_oracle(multilayered_cycle(3, 2), LAZY, 2) is False
        assert span_oracle(multilayered_cycle(4, 2), TRAD, 4) is False


def test_scale():
    g = multilayered_cycle(20, 6)
    with criterion("all three spans of MC_20^6 (120 vertices)", budget=5):
        values = [span_by_components(g, rule).value for rule in (TRAD, ACTIVE, LAZY)]
        assert values == [11, 11, 10]
