import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from incentives import (
    MULTIPLE,
    NUMERICAL,
    TRIVIAL,
    IncentiveSpec,
    InvalidGenerators,
    NotAdmissible,
    closure_membership,
    closure_msg,
    half_theta_is_incentive,
    is_admissible,
    is_incentive,
    strip_zero,
    theta,
)
from oracles import oracle_closure_member, oracle_is_incentive


def test_spec_and_theta():
    assert theta({-3, 2}) == 3
    assert theta({1, 2}) == 0
    assert theta({-4}) == 4
    assert theta({0}) == 0
    assert str(IncentiveSpec.of([2, -3])) == "{-3,2}"
    with pytest.raises(InvalidGenerators):
        IncentiveSpec.of([])


def test_strip_zero():
    assert strip_zero({-3, 0, 2}).c_set == (-3, 2)
    marker = strip_zero({0})
    assert marker.c_set == ()
    assert marker.theta == 0


KNOWN_INCENTIVE = {
    ((3, 7, 8), (-3, 2)): True,
    ((3,), (-4,)): False,
    ((1,), (-2,)): True,
    ((1,), (-3,)): False,
    ((2, 3), (-2,)): True,
    ((3, 5, 7), (-2,)): False,
    ((5, 7, 9, 11, 13), (-3, 2)): True,
    ((5, 7, 9, 11), (-3, 2)): False,
    ((4, 6), (-2, 2)): True,
    ((3,), (0,)): True,
}


def test_is_incentive_known_values():
    for (gens, cs), want in KNOWN_INCENTIVE.items():
        assert is_incentive(gens, cs) == want, (gens, cs)


@given(
    st.sets(st.integers(min_value=1, max_value=18), min_size=1, max_size=4),
    st.sets(st.integers(min_value=-6, max_value=8), min_size=1, max_size=3),
)
@settings(max_examples=120)
def test_is_incentive_matches_oracle(gens, cs):
    assert is_incentive(gens, cs) == oracle_is_incentive(sorted(gens), sorted(cs))


def test_half_theta_known_values():
    assert half_theta_is_incentive({-4, 6})
    assert half_theta_is_incentive({-2})
    assert not half_theta_is_incentive({-4, 7})
    assert not half_theta_is_incentive({-3, 2})
    assert not half_theta_is_incentive({2})
    assert not half_theta_is_incentive({-6, 2})
    assert half_theta_is_incentive({-6, 3})


def test_admissibility_battery():
    assert not is_admissible({3}, {-4})
    assert is_admissible({2, 8}, {-4, 6})
    assert not is_admissible({3}, {-4, 6})
    assert not is_admissible({2}, {-4, 7})
    assert is_admissible(set(), {-4})
    assert is_admissible({0}, {-4})
    assert is_admissible({4}, {-4})
    assert is_admissible({9}, {-3, 2})


def test_closure_golden():
    r = closure_msg({5, 7, 9, 11}, {-3, 2})
    assert r.kind == NUMERICAL
    assert r.scale == 1
    assert r.msg.elements == (5, 7, 9, 11, 13)
    assert r.semigroup.frobenius == 8
    assert r.semigroup.genus == 6
    # same closure from the single seed 5
    assert closure_msg({5}, {-3, 2}).msg.elements == (5, 7, 9, 11, 13)


def test_closure_reduction_path():
    r = closure_msg({4, 6}, {-2, 2})
    assert r.kind == MULTIPLE
    assert r.scale == 2
    assert r.msg.elements == (4, 6)
    assert r.semigroup.msg.elements == (2, 3)

    r2 = closure_msg({6}, {-6, 3})
    assert r2.kind == MULTIPLE
    assert r2.scale == 3
    assert r2.msg.elements == (6, 15)
    assert r2.semigroup.msg.elements == (2, 5)


def test_closure_below_threshold_branch():
    r = closure_msg({2, 8}, {-4, 6})
    assert r.kind == MULTIPLE
    assert r.scale == 2
    assert r.msg.elements == (2,)
    assert [n for n in range(12) if r.member(n)] == [0, 2, 4, 6, 8, 10]

    r2 = closure_msg({1}, {-2})
    assert r2.kind == NUMERICAL
    assert r2.msg.elements == (1,)


def test_closure_trivial_and_errors():
    r = closure_msg((), {-3, 2})
    assert r.kind == TRIVIAL
    assert r.msg is None
    assert r.member(0) and not r.member(3)
    with pytest.raises(NotAdmissible):
        closure_msg({3}, {-4})
    with pytest.raises(NotAdmissible):
        closure_membership({3}, {-4}, 6)


def test_closure_zero_adjustment_is_plain_monoid():
    r = closure_msg({4, 7}, {0})
    assert r.kind == NUMERICAL
    assert r.msg.elements == (4, 7)


CURATED_PAIRS = [
    ((5, 7, 9, 11), (-3, 2)),
    ((5,), (-3, 2)),
    ((3, 7), (-3, 2)),
    ((4, 9), (-2,)),
    ((3, 4), (-1, 1)),
    ((7, 10), (-6, 2, 3)),
    ((6, 8), (-5, 1)),
    ((2, 3), (1,)),
    ((9, 12), (-4, 6)),
    ((5, 6), (0,)),
]


def test_closure_member_matches_counting_oracle():
    for xs, cs in CURATED_PAIRS:
        r = closure_msg(xs, cs)
        for n in range(37):
            want = oracle_closure_member(xs, cs, n)
            assert r.member(n) == want, (xs, cs, n)
            assert closure_membership(xs, cs, n) == want, (xs, cs, n)


def test_two_engines_agree_randomized():
    rng = random.Random(4251)
    done = 0
    while done < 30:
        th = rng.randint(1, 6)
        cs = {-th}
        for _ in range(rng.randint(0, 2)):
            cs.add(rng.randint(-th, 10))
        cs.discard(0)
        xs = {rng.randint(th, 24) for _ in range(rng.randint(1, 3))}
        if min(cs) != -th or not is_admissible(xs, cs):
            continue
        r = closure_msg(xs, cs)
        for n in range(121):
            assert closure_membership(xs, cs, n) == r.member(n), (xs, cs, n)
        done += 1


def test_scaling_property():
    rng = random.Random(88)
    done = 0
    while done < 15:
        th = rng.randint(1, 5)
        cs = {-th, rng.randint(1, 7)}
        cs.discard(0)
        xs = {rng.randint(th, 20) for _ in range(rng.randint(1, 3))}
        if not xs or gcd(*xs, *(abs(c) for c in cs)) != 1:
            continue
        if min(cs) != -th or not is_admissible(xs, cs):
            continue
        base = closure_msg(xs, cs)
        for d in (2, 3):
            scaled = closure_msg({d * x for x in xs}, {d * c for c in cs})
            assert scaled.kind == MULTIPLE
            assert scaled.scale == d
            assert scaled.msg.elements == tuple(d * g for g in base.msg.elements)
        done += 1


@given(
    st.sets(st.integers(min_value=1, max_value=20), min_size=1, max_size=3),
    st.integers(min_value=1, max_value=5),
)
@settings(max_examples=60)
def test_closure_contains_seeds_and_is_incentive(xs, th):
    cs = (-th, th + 1)
    xs = {v for v in xs if v >= th}
    if not xs or not is_admissible(xs, cs):
        return
    r = closure_msg(xs, cs)
    assert r.kind in (NUMERICAL, MULTIPLE)
    for x in xs:
        assert r.member(x)
    assert is_incentive(r.msg, cs)


def test_closure_kind_tracks_gcd():
    for xs, cs in CURATED_PAIRS:
        r = closure_msg(xs, cs)
        d = gcd(*xs, *(abs(c) for c in cs))
        if d == 1:
            assert r.kind == NUMERICAL and r.scale == 1
        else:
            assert r.kind == MULTIPLE and r.scale > 1
