import pytest
from hypothesis import given, strategies as st

from powersemi.errors import GroundSetError, InputError
from powersemi.oracles import window_set
from powersemi.setrep import PSet, canonicalize, member, min_of, parse_pset, pset_from_json

from strategies import grounds, psets


def test_canonicalize_examples(N, S23):
    X = canonicalize(N, [0, 2])
    assert X.kind == "Finite" and X.head == (0, 2)
    Y = canonicalize(N, [0, 3, 4], 5)
    assert (Y.kind, Y.head, Y.threshold) == ("Tail", (0,), 3)
    Z = canonicalize(S23, [0], 2)
    assert (Z.head, Z.threshold) == ((), 0)


def test_canonical_examples_by_membership(N, S23):
    # raw and canonical forms denote the same set in a wide window
    raw = {0, 3, 4} | set(range(5, 40))
    assert window_set(canonicalize(N, [0, 3, 4], 5), 39) == raw
    assert window_set(canonicalize(S23, [0], 2), 39) == {0} | set(range(2, 40))


def test_threshold_lands_on_a_member(S35):
    X = canonicalize(S35, [], 8)
    assert X.threshold == 8
    assert canonicalize(S35, [], 7) == X
    assert canonicalize(S35, [6, 8], 9) == canonicalize(S35, [], 6)
    assert canonicalize(S35, [6], 9) != canonicalize(S35, [], 6)


def test_member_examples(N, S35):
    assert not member(canonicalize(N, [0], 2), 1)
    assert member(canonicalize(N, [0, 2]), 2)
    assert member(canonicalize(S35, [0], 8), 9)
    assert not member(canonicalize(S35, [0], 8), 7)


def test_min_examples(N, S35):
    assert min_of(canonicalize(S35, [3, 5])) == 3
    assert min_of(canonicalize(S35, [], 8)) == 8
    assert min_of(canonicalize(N, [0], 4)) == 0


def test_errors(N, S23):
    with pytest.raises(GroundSetError):
        canonicalize(S23, [0, 1])
    with pytest.raises(GroundSetError):
        canonicalize(S23, [1, 4], 3)
    with pytest.raises(InputError):
        canonicalize(N, [])
    with pytest.raises(GroundSetError):
        canonicalize(N, [-1])


@given(psets())
def test_canonicalize_is_a_projection(X):
    assert canonicalize(X.ground, X.head, X.threshold) == X


@given(psets())
def test_min_is_a_member(X):
    assert member(X, min_of(X))
    assert not any(member(X, n) for n in range(min_of(X)))


@given(grounds, st.data())
def test_structural_equality_iff_window_membership(H, data):
    X = data.draw(psets(ground=H, bound=8))
    Y = data.draw(psets(ground=H, bound=8))
    W = max(X.bits.bit_length(), Y.bits.bit_length(), X.threshold or 0, Y.threshold or 0) + H.frobenius + 1
    assert (X == Y) == (window_set(X, W) == window_set(Y, W))


def test_literal_grammar(N, S23):
    X = parse_pset("{0,2,~7}", N)
    assert X == canonicalize(N, [0, 2], 7)
    assert X.to_literal() == "{0,2,~7}"
    assert parse_pset("{ 0 , 2 }", N).to_literal() == "{0,2}"
    assert parse_pset("{~0}", S23) == canonicalize(S23, [0, 2, 3], 4)
    for bad in ("0,2", "{0,~2,~3}", "{a}"):
        with pytest.raises(InputError):
            parse_pset(bad, N)


@given(psets())
def test_literal_and_json_round_trip(X):
    assert parse_pset(X.to_literal(), X.ground) == X
    assert pset_from_json(X.to_dict(), X.ground) == X


def test_len_only_for_finite(N):
    assert len(PSet.finite(N, [0, 4, 9])) == 3
    with pytest.raises(TypeError):
        len(PSet.tail(N, [0], 3))
