import json
import time

import pytest
from hypothesis import given, settings, strategies as st

from powersemi import oracles
from powersemi.errors import CofinitenessError, InputError
from powersemi.numsgp import (
    build_from_generators,
    contains,
    frobenius_of,
    gaps,
    parse_semigroup,
    semigroup_from_json,
)

from strategies import grounds


@pytest.mark.parametrize("gens, frob, gap_set", [
    ((1,), -1, ()),
    ((2, 3), 1, (1,)),
    ((3, 5), 7, (1, 2, 4, 7)),
    ((3, 5, 7), 4, (1, 2, 4)),
])
def test_frobenius_and_gaps(gens, frob, gap_set):
    S = build_from_generators(gens)
    assert frobenius_of(S) == frob
    assert gaps(S) == gap_set
    assert oracles.frobenius_by_closure(gens) == frob
    window = oracles.closure_members(gens, frob + 1)
    assert tuple(n for n in range(1, frob + 1) if n not in window) == gap_set


@pytest.mark.parametrize("gens", [(4, 6), (2,), (6, 10, 14)])
def test_non_cofinite_rejected(gens):
    with pytest.raises(CofinitenessError):
        build_from_generators(gens)


@pytest.mark.parametrize("gens", [(), (0, 1), (-1, 2)])
def test_bad_generators(gens):
    with pytest.raises(InputError):
        build_from_generators(gens)


def test_contains_examples(N, S23, S35):
    assert not contains(S23, 1)
    assert contains(N, 0)
    assert contains(S35, 8)
    assert not contains(S35, -3)


def test_without_zero_variant():
    S = build_from_generators([1], includes_zero=False)
    assert not contains(S, 0)
    assert contains(S, 1)
    assert S.frobenius == 0
    assert gaps(S) == ()
    assert gaps(S, complement_in_n=True) == (0,)
    T = build_from_generators([3, 5], includes_zero=False)
    assert T.frobenius == 7
    assert gaps(T, complement_in_n=True) == (0, 1, 2, 4, 7)


def test_generators_are_minimal():
    assert build_from_generators([2, 3, 4, 5, 6]).generators == (2, 3)
    assert build_from_generators([2, 3]) == build_from_generators([3, 2, 5, 7])


@given(st.lists(st.integers(1, 25), min_size=1, max_size=4))
def test_matches_closure_oracle(gens):
    try:
        S = build_from_generators(gens)
    except CofinitenessError:
        return
    assert S.frobenius == oracles.frobenius_by_closure(gens)
    members = oracles.closure_members(gens, S.frobenius + 5)
    assert all(contains(S, n) == (n in members) for n in range(S.frobenius + 6))


@given(grounds)
def test_everything_past_frobenius_is_member(S):
    assert all(contains(S, n) for n in range(S.frobenius + 1, S.frobenius + 1001))


@settings(max_examples=50)
@given(grounds, st.data())
def test_closed_under_addition(S, data):
    members = [n for n in range(10_001) if contains(S, n)]
    for _ in range(20):
        a, b = data.draw(st.sampled_from(members)), data.draw(st.sampled_from(members))
        assert contains(S, a + b)


@given(grounds)
def test_rebuild_from_members_is_stable(S):
    window = S.frobenius + 1 + max(S.generators)
    members = [n for n in range(1, window + 1) if contains(S, n)]
    assert build_from_generators(members, S.includes_zero) == S


def test_sieve_window_invariants(S35):
    bits = S35.sieve
    assert bits.bit_length() <= S35.frobenius + 2
    for a in range(S35.frobenius + 2):
        for b in range(S35.frobenius + 2 - a):
            if (bits >> a) & 1 and (bits >> b) & 1:
                assert (bits >> (a + b)) & 1


def test_text_and_json_round_trip(S35):
    assert S35.to_text() == "<3,5;0>"
    assert parse_semigroup("<3,5;0>") == S35
    assert parse_semigroup("<5, 3>") == S35
    assert parse_semigroup("<1;no0>") == build_from_generators([1], False)
    payload = json.dumps(S35.to_dict())
    assert json.loads(payload) == {"generators": [3, 5], "includes_zero": True, "frobenius": 7}
    assert semigroup_from_json(payload) == S35
    with pytest.raises(InputError):
        semigroup_from_json({"generators": [3, 5], "frobenius": 6})
    with pytest.raises(InputError):
        parse_semigroup("3,5")


def test_fast_enough():
    t = time.perf_counter()
    build_from_generators([97, 101, 103])
    assert time.perf_counter() - t < 1.0
