import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from layerspan.errors import InvalidStepError, TrackLengthError
from layerspan.graph import complete, cycle, multilayered_cycle
from layerspan.strategies import cartesian_strategy, strong_strategy
from layerspan.tracks import (
    MovementRule,
    StepKind,
    classify_step,
    random_cover_walk,
    random_lazy_pair,
    step_kinds,
    track_distance,
    tracks_from_json,
    tracks_to_json,
    validate_for_rule,
    validate_lazy,
    validate_ltrack,
    validate_opposite,
)


def test_ltrack_examples():
    assert validate_ltrack(cycle(3), [0, 1, 2, 0])
    verdict = validate_ltrack(cycle(3), [0, 1, 0])
    assert not verdict and "surjective" in verdict.reason
    verdict = validate_ltrack(cycle(4), [0, 2, 3, 1])
    assert not verdict and verdict.step == 1 and "non-edge" in verdict.reason


def test_ltrack_rejects_standing_still():
    verdict = validate_ltrack(cycle(3), [0, 0, 1, 2])
    assert not verdict and verdict.step == 1


def test_lazy_examples():
    assert validate_lazy(cycle(3), [0, 0, 1, 2])
    assert not validate_lazy(cycle(3), [0, 0])
    assert validate_lazy(complete(2), [0, 1, 1])


def test_walk_only_skips_coverage():
    assert validate_lazy(cycle(5), [0, 0, 1], walk_only=True)
    assert not validate_lazy(cycle(5), [0, 0, 1])


def test_invalid_vertex_ids():
    assert not validate_lazy(cycle(3), [0, 3])
    assert not validate_lazy(cycle(3), [])


def test_opposite_examples():
    k2 = complete(2)
    assert validate_opposite(k2, [0, 1, 1, 0, 0], [1, 1, 0, 0, 1])
    f = [0, 0, 1, 2]
    verdict = validate_opposite(cycle(3), f, f)
    assert not verdict and verdict.step == 1 and "still" in verdict.reason
    g = multilayered_cycle(6, 3)
    assert validate_opposite(g, *cartesian_strategy(6, 3))


def test_opposite_length_mismatch():
    with pytest.raises(TrackLengthError):
        validate_opposite(cycle(3), [0, 1, 2], [0, 1])


def test_track_distance_examples():
    f = [0, 1, 2, 0]
    assert track_distance(cycle(3), f, f) == 0
    assert track_distance(multilayered_cycle(6, 4), *strong_strategy(6, 4)) == 4
    assert track_distance(multilayered_cycle(6, 3), *cartesian_strategy(6, 3)) == 3
    with pytest.raises(TrackLengthError):
        track_distance(cycle(3), [0], [0, 1])


def test_classify_examples():
    assert classify_step(6, 3, (0, 1), (0, 2)) is StepKind.UP
    assert classify_step(6, 3, (0, 2), (0, 1)) is StepKind.DOWN
    assert classify_step(6, 3, (0, 1), (5, 1)) is StepKind.CLOCKWISE
    assert classify_step(6, 3, (5, 1), (0, 1)) is StepKind.COUNTER_CLOCKWISE
    assert classify_step(6, 3, (3, 2), (3, 2)) is StepKind.STILL
    # n = 3: +1 and -1 are different labels, no tie
    assert classify_step(3, 2, (0, 1), (1, 1)) is StepKind.COUNTER_CLOCKWISE
    assert classify_step(3, 2, (0, 1), (2, 1)) is StepKind.CLOCKWISE


@pytest.mark.parametrize("src,dst", [((0, 1), (2, 1)), ((0, 1), (1, 2)), ((0, 1), (0, 3)), ((0, 3), (0, 4))])
def test_classify_rejects_non_steps(src, dst):
    with pytest.raises(InvalidStepError):
        classify_step(6, 3, src, dst)


def test_rule_parse_and_order():
    assert MovementRule.parse("cartesian") is MovementRule.LAZY
    assert MovementRule.parse("Strong") is MovementRule.TRADITIONAL
    assert [r.symbol for r in MovementRule] == ["⊠", "×", "□"]
    with pytest.raises(ValueError):
        MovementRule.parse("sideways")


def test_json_roundtrip():
    g = multilayered_cycle(4, 2)
    f, h = strong_strategy(4, 2)
    doc = tracks_to_json(g, f, h, MovementRule.ACTIVE, claim=3)
    assert doc["labels"][0][0] == "0,1"
    g2, f2, h2, rule, claim = tracks_from_json(doc)
    assert (g2, f2, h2, rule, claim) == (g, f, h, MovementRule.ACTIVE, 3)


mc_params = st.tuples(st.integers(3, 8), st.integers(2, 4))


@given(mc_params, st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_every_lazy_step_has_exactly_one_kind(params, seed):
    n, k = params
    g = multilayered_cycle(n, k)
    walk = random_cover_walk(g, random.Random(seed))
    assert validate_lazy(g, walk)
    kinds = step_kinds(g.layering, walk)
    assert len(kinds) == len(walk) - 1
    for (a, b), kind in zip(zip(walk, walk[1:]), kinds):
        matches = [
            kind_ for kind_, ok in (
                (StepKind.STILL, a == b),
                (StepKind.UP, b == a + n),
                (StepKind.DOWN, b == a - n),
                (StepKind.COUNTER_CLOCKWISE, b != a and b // n == a // n and b % n == (a + 1) % n),
                (StepKind.CLOCKWISE, b != a and b // n == a // n and b % n == (a - 1) % n),
            ) if ok
        ]
        assert matches == [kind]


@given(st.integers(3, 9), st.integers(0, 10_000))
@settings(max_examples=40)
def test_ltrack_implies_lazy(n, seed):
    rng = random.Random(seed)
    g = cycle(n)
    walk = [rng.randrange(n)]
    while len(set(walk)) < n:
        walk.append(rng.choice(g.neighbors(walk[-1])))
    assert validate_ltrack(g, walk)
    assert validate_lazy(g, walk)


@given(st.integers(0, 10_000))
def test_opposite_is_symmetric(seed):
    rng = random.Random(seed)
    g = cycle(4)
    f, h = [0], [2]
    for _ in range(rng.randrange(1, 30)):
        if rng.random() < 0.5:
            f, h = f + [rng.choice(g.neighbors(f[-1]))], h + [h[-1]]
        else:
            f, h = f + [f[-1]], h + [rng.choice(g.neighbors(h[-1]))]
    assert bool(validate_opposite(g, f, h, walk_only=True))
    assert bool(validate_opposite(g, f, h)) == bool(validate_opposite(g, h, f))


@given(st.integers(0, 10_000), st.integers(0, 10_000))
@settings(max_examples=50)
def test_distance_symmetric_and_concatenation_never_raises_it(s1, s2):
    g = multilayered_cycle(5, 2)
    f1, g1 = random_lazy_pair(g, random.Random(s1))
    f2, g2 = random_lazy_pair(g, random.Random(s2))
    d1 = track_distance(g, f1, g1)
    assert d1 == track_distance(g, g1, f1) == min(g.dist[a][b] for a, b in zip(f1, g1))
    assert track_distance(g, f1 + f2, g1 + g2) <= d1


def test_validate_for_rule_dispatch():
    g = multilayered_cycle(4, 2)
    f, h = strong_strategy(4, 2)
    for rule in MovementRule:
        expected = rule is not MovementRule.LAZY
        assert bool(validate_for_rule(g, rule, f, h)) is expected
    f, h = cartesian_strategy(4, 2)
    assert validate_for_rule(g, MovementRule.LAZY, f, h)
    assert validate_for_rule(g, MovementRule.TRADITIONAL, f, h)
    assert not validate_for_rule(g, MovementRule.ACTIVE, f, h)
