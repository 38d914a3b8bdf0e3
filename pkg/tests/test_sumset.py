import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from powersemi import oracles
from powersemi.errors import GroundSetError, InputError
from powersemi.numsgp import build_from_generators
from powersemi.setrep import PSet, canonicalize, min_of, semiline
from powersemi.sumset import add, convolve, power, translate, truncate

from strategies import grounds, psets


def _finite(H, *xs):
    return PSet.finite(H, xs)


def test_add_examples(N):
    X = canonicalize(N, [0, 3], 5)
    assert add(X, _finite(N, 0)) == X
    assert add(_finite(N, 0, 1), _finite(N, 0, 1)) == _finite(N, 0, 1, 2)
    assert oracles.sumset_window({0, 1}, {0, 1}, 10) == {0, 1, 2}
    H2 = canonicalize(N, [0], 2)
    assert add(H2, H2) == H2
    assert oracles.sumset_window(oracles.window_set(H2, 30), oracles.window_set(H2, 30), 30) == oracles.window_set(H2, 30)


def test_power_examples(N, S35):
    assert power(_finite(N, 0, 1), 3) == _finite(N, 0, 1, 2, 3)
    X = canonicalize(S35, [0, 3], 9)
    assert power(X, 1) == X
    assert power(_finite(S35, 0, 3), 2) == _finite(S35, 0, 3, 6)
    assert oracles.sumset_window({0, 3}, {0, 3}, 20) == {0, 3, 6}
    with pytest.raises(InputError):
        power(X, 0)


def test_translate_examples(N, S35):
    assert translate(_finite(N, 0, 1), 3) == _finite(N, 3, 4)
    assert translate(_finite(S35, 3, 5), -3, N) == _finite(N, 0, 2)
    assert translate(semiline(N, 7), -7, N) == canonicalize(N, [], 0)


def test_translate_errors(N, S23):
    with pytest.raises(GroundSetError):
        translate(_finite(N, 0, 1), -1)
    with pytest.raises(GroundSetError):
        translate(_finite(N, 0, 1), 0, S23)
    with pytest.raises(GroundSetError):
        translate(canonicalize(N, [], 0), 0, S23)


def test_truncate_examples(N, S23):
    assert truncate(semiline(N, 2), 4) == 0b11100
    assert truncate(_finite(N, 0, 9), 4) == 0b1
    assert truncate(canonicalize(S23, [], 0), 3) == 0b1101


def test_ground_mismatch(N, S23):
    with pytest.raises(InputError):
        add(_finite(N, 0), _finite(S23, 0))


@given(grounds, st.data())
def test_add_matches_window_oracle(H, data):
    X = data.draw(psets(ground=H))
    Y = data.draw(psets(ground=H))
    W = 80
    want = oracles.sumset_window(oracles.window_set(X, W), oracles.window_set(Y, W), W)
    got = add(X, Y)
    assert oracles.window_set(got, W) == want
    assert got.threshold is None or got.threshold <= 12 + 12 + 2 * (H.frobenius + 4)


@given(psets(), psets())
def test_add_commutative_when_grounds_agree(X, Y):
    if X.ground == Y.ground:
        assert add(X, Y) == add(Y, X)


@given(grounds, st.data())
def test_min_is_additive(H, data):
    X, Y = data.draw(psets(ground=H)), data.draw(psets(ground=H))
    assert min_of(add(X, Y)) == min_of(X) + min_of(Y)


@given(grounds, st.data())
def test_semiline_identity(H, data):
    k = data.draw(st.integers(H.frobenius + 1, H.frobenius + 30))
    X = data.draw(psets(ground=H))
    assert add(semiline(H, k), X) == semiline(H, k + min_of(X))


@given(psets(tail=False), psets(tail=False))
def test_cardinality_lower_bound(X, Y):
    if X.ground == Y.ground:
        assert len(add(X, Y)) >= len(X) + len(Y) - 1


@given(st.integers(0, 2**40), st.integers(0, 2**40), st.integers(0, 90))
def test_truncated_convolution_is_a_truncation(x, y, limit):
    assert convolve(x, y, limit) == convolve(x, y) & ((1 << (limit + 1)) - 1)


def _small_universe(H):
    """Every canonical PSet with head in [0, 6] and threshold <= 8."""
    sets = set()
    for mask in range(1, 1 << 7):
        head = [i for i in range(7) if mask >> i & 1]
        try:
            sets.add(canonicalize(H, head))
        except GroundSetError:
            pass
    for tau in range(9):
        for mask in range(1 << 7):
            head = [i for i in range(7) if mask >> i & 1]
            try:
                sets.add(canonicalize(H, head, tau))
            except GroundSetError:
                pass
    return sorted(sets, key=lambda s: (s.threshold is not None, s.threshold or 0, s.bits))


@pytest.mark.parametrize("gens", [(1,), (2, 3)])
def test_exhaustive_commutativity_and_associativity(gens):
    H = build_from_generators(gens)
    U = _small_universe(H)
    ids = {}

    def ident(s):
        return ids.setdefault(s, len(ids))

    for s in U:
        ident(s)
    n = len(U)
    S = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(U):
        for j, y in enumerate(U):
            S[i, j] = ident(add(x, y))
    assert (S == S.T).all()
    values = list(ids)
    sums = sorted(set(S.ravel().tolist()))
    L = {s: [ident(add(values[s], z)) for z in U] for s in sums}
    R = {s: [ident(add(x, values[s])) for x in U] for s in sums}
    left = np.array([L[s] for s in sums])  # (s, z)
    right = np.array([R[s] for s in sums])  # (s, x)
    pos = {s: k for k, s in enumerate(sums)}
    P = np.vectorize(pos.get)(S)
    for x in range(n):
        lhs = left[P[x, :], :]          # [(x+y)+z] over (y, z)
        rhs = right[P, x]               # [x+(y+z)] over (y, z)
        assert (lhs == rhs).all()


def test_sampled_associativity_beyond_small_universe():
    rng = random.Random(7)
    gs = [build_from_generators(g) for g in [(1,), (2, 3), (3, 5), (3, 5, 7), (4, 7)]]

    def draw(H):
        pool = [h for h in range(25) if h in H]
        head = rng.sample(pool, rng.randint(1, 6))
        if rng.random() < 0.5:
            return canonicalize(H, head, rng.randint(0, 30))
        return canonicalize(H, head)

    for _ in range(10_000):
        H = rng.choice(gs)
        X, Y, Z = draw(H), draw(H), draw(H)
        assert add(add(X, Y), Z) == add(X, add(Y, Z))
