"""Sumset arithmetic on :class:`~powersemi.setrep.PSet` values.

Tail thresholds
---------------
Let ``F`` be the Frobenius number and ``m(Z) = max(threshold(Z), F + 1)``.
Every integer ``>= m(Z)`` lies in a tail set ``Z``. Hence

* tail + tail: every ``n >= m(X) + m(Y)`` splits as ``m(X) + (n - m(X))``
  with both parts in their sets;
* finite + tail: every ``n >= min(X) + m(Y)`` is ``min(X) + (n - min(X))``.

Below that bound ``sigma`` a sum only uses summands below ``sigma``, so an
exact convolution of the two truncated bit-vectors gives the result there.
"""

from __future__ import annotations

from .errors import GroundSetError, InputError, ThresholdOverflow
from .numsgp import NumericalSemigroup
from .setrep import MAX_THRESHOLD, PSet, iter_bits, min_of


def convolve(x: int, y: int, limit: int | None = None) -> int:
    """Bit-vector sumset: bit ``i + j`` for every set bit ``i`` of ``x`` and
    ``j`` of ``y``; restricted to bits ``<= limit`` when given."""
    if x.bit_count() > y.bit_count():
        x, y = y, x
    out = 0
    if limit is None:
        for i in iter_bits(x):
            out |= y << i
        return out
    mask = (1 << (limit + 1)) - 1
    y &= mask
    for i in iter_bits(x):
        if i > limit:
            break
        out |= y << i
    return out & mask


def _same_ground(X: PSet, Y: PSet) -> NumericalSemigroup:
    if X.ground != Y.ground:
        raise InputError(f"ground mismatch: {X.ground} vs {Y.ground}")
    return X.ground


def add(X: PSet, Y: PSet) -> PSet:
    H = _same_ground(X, Y)
    if X.threshold is None and Y.threshold is None:
        return PSet(H, convolve(X.bits, Y.bits), None)
    if X.threshold is None:
        X, Y = Y, X
    # X now has a tail
    full = H.frobenius + 1
    if Y.threshold is None:
        sigma = min_of(Y) + max(X.threshold, full)
    else:
        sigma = max(X.threshold, full) + max(Y.threshold, full)
    if sigma > MAX_THRESHOLD:
        raise ThresholdOverflow(f"sumset threshold {sigma} exceeds {MAX_THRESHOLD}")
    head = convolve(X.window_bits(sigma), Y.window_bits(sigma), sigma - 1)
    return PSet.from_bits(H, head, sigma)


def power(A: PSet, n: int) -> PSet:
    """n-fold sumset ``A + ... + A`` by left fold."""
    if n < 1:
        raise InputError(f"power exponent must be >= 1, got {n}")
    out = A
    for _ in range(n - 1):
        out = add(out, A)
    return out


def translate(X: PSet, t: int, target: NumericalSemigroup | None = None) -> PSet:
    """``{x + t : x in X}`` as a canonical set over ``target`` (default: X's
    own ground). Raises :class:`GroundSetError` if an element leaves it."""
    H = X.ground
    T = H if target is None else target
    if min_of(X) + t < 0:
        raise GroundSetError(f"translate by {t} produces negative element {min_of(X) + t}")
    if X.threshold is None:
        return PSet.from_bits(T, _shift(X.bits, t), None)
    # past max(threshold, F_H + 1) the source is full, so the image is full past sigma
    start = max(X.threshold, H.frobenius + 1)
    sigma = start + t
    if sigma <= T.frobenius:
        raise GroundSetError(f"translate by {t}: {T.frobenius} is in the image but not in {T}")
    return PSet.from_bits(T, _shift(X.window_bits(start), t), sigma)


def _shift(bits: int, t: int) -> int:
    return bits << t if t >= 0 else bits >> -t


def truncate(X: PSet, N: int) -> int:
    """Characteristic bitmask of ``X`` intersected with ``[0, N]``."""
    if N < 0:
        raise InputError(f"window must be >= 0, got {N}")
    return X.window_bits(N + 1)


def difference(X: PSet, remove: PSet | set[int] | frozenset[int]) -> PSet:
    """Set difference ``X minus remove`` for finite ``X``."""
    if X.threshold is not None:
        raise InputError("difference is only defined here for finite X")
    if isinstance(remove, PSet):
        if remove.threshold is not None:
            raise InputError("cannot remove a tail set")
        rbits = remove.bits
    else:
        rbits = 0
        for r in remove:
            if r >= 0:
                rbits |= 1 << r
    return PSet.from_bits(X.ground, X.bits & ~rbits, None)
