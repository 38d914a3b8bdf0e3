"""Conjugacy by singleton translates and the normal form ``X - min X``.

The cancellative elements of P(H) are the singletons, so ``X`` and ``Y`` are
conjugate when ``X + u == Y + v`` for some ``u, v`` in H. A class is stored
as its representative translated down to minimum 0, which lives in P_0(N).
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InputError, PreconditionError
from .numsgp import NumericalSemigroup, contains
from .setrep import PSet, member, min_of
from .sumset import translate


@lru_cache(maxsize=None)
def naturals() -> NumericalSemigroup:
    return NumericalSemigroup.naturals()


def normalize(X: PSet) -> PSet:
    return translate(X, -min_of(X), naturals())


def conjugate_related(X: PSet, Y: PSet) -> bool:
    if X.ground != Y.ground:
        raise InputError(f"ground mismatch: {X.ground} vs {Y.ground}")
    return normalize(X) == normalize(Y)


def lift(A: PSet, S: NumericalSemigroup, k: int) -> PSet:
    """``A + k`` over ``S``; inverse to :func:`normalize` for ``k > F(S)``."""
    if not member(A, 0):
        raise PreconditionError(f"{A} does not contain 0")
    if k <= S.frobenius:
        raise PreconditionError(f"k={k} must exceed the Frobenius number {S.frobenius}")
    return translate(A, k, S)


def conjugacy_witness(X: PSet, Y: PSet, bound: int | None = None) -> tuple[int, int] | None:
    """Brute-force search for ``(u, v)`` in H with ``X + u == Y + v``.

    Only finite sets are accepted. The default search bound is
    ``F + max(head) + 1``; the first pair in ``(u, v)`` order is returned.
    """
    if X.ground != Y.ground:
        raise InputError(f"ground mismatch: {X.ground} vs {Y.ground}")
    if X.threshold is not None or Y.threshold is not None:
        raise InputError("witness search only handles finite sets")
    H = X.ground
    if bound is None:
        bound = H.frobenius + max(X.bits.bit_length(), Y.bits.bit_length()) + 1
    units = [h for h in range(bound + 1) if contains(H, h)]
    for u in units:
        xu = X.bits << u
        for v in units:
            if xu == Y.bits << v:
                return u, v
    return None
