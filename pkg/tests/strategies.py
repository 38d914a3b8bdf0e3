"""Hypothesis strategies shared across test modules."""

from hypothesis import strategies as st

from powersemi.numsgp import build_from_generators, contains
from powersemi.setrep import canonicalize

GROUND_GENS = [(1,), (2, 3), (3, 5), (3, 5, 7), (4, 7), (5, 6, 9)]

grounds = st.sampled_from([build_from_generators(g) for g in GROUND_GENS])


@st.composite
def psets(draw, ground=None, bound=12, zero=None, tail=None):
    """Finite or tail PSets over ``ground`` (drawn when None) with head in
    ``[0, bound]``."""
    H = draw(grounds) if ground is None else ground
    pool = [h for h in range(bound + 1) if contains(H, h)]
    head = set(draw(st.lists(st.sampled_from(pool), max_size=6)))
    if zero is True:
        head.add(0)
    elif zero is False:
        head.discard(0)
    is_tail = draw(st.booleans()) if tail is None else tail
    if is_tail:
        return canonicalize(H, head, draw(st.integers(0, bound + H.frobenius + 3)))
    if not head:
        head.add(draw(st.sampled_from([p for p in pool if p] if zero is False else pool)))
    return canonicalize(H, head)
