"""Exact representation of finite and eventually full subsets of H.

A :class:`PSet` is either a finite set, or ``head | {h in H : h >= threshold}``.
Heads are stored as integer bitmasks (bit ``n`` set iff ``n`` is in the head).

Canonical form
--------------
For a tail set the threshold is the least member ``t`` of ``H`` such that the
denoted set contains every member of ``H`` that is ``>= t``, and the head keeps
only elements below ``t``. A finite set never carries a threshold. Both
choices are forced by the denoted set, so dataclass equality coincides with
set equality.

Finite comparison window: two canonical sets with thresholds and heads below
``W`` agree everywhere as soon as they agree on ``[0, W + F + 1]``; past
``max(W, F + 1)`` both contain every integer (tails) or nothing (finite).
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GroundSetError, InputError, ThresholdOverflow
from .numsgp import NumericalSemigroup, contains

MAX_THRESHOLD = int(os.environ.get("POWERSEMI_MAX_THRESHOLD", 1 << 20))


def bits_of(elements: Iterable[int]) -> int:
    b = 0
    for e in elements:
        if e < 0:
            raise GroundSetError(f"negative element {e}")
        b |= 1 << e
    return b


def iter_bits(b: int) -> Iterator[int]:
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


@dataclass(frozen=True)
class PSet:
    """Canonical element of P(H). Build instances with :func:`canonicalize`
    or the ``finite``/``tail`` helpers, never directly."""

    ground: NumericalSemigroup
    bits: int
    threshold: int | None = None

    @classmethod
    def finite(cls, ground: NumericalSemigroup, elements: Iterable[int]) -> PSet:
        return canonicalize(ground, elements)

    @classmethod
    def tail(cls, ground: NumericalSemigroup, head: Iterable[int], threshold: int) -> PSet:
        return canonicalize(ground, head, threshold)

    @classmethod
    def from_bits(cls, ground: NumericalSemigroup, bits: int, threshold: int | None = None) -> PSet:
        return _canonical_from_bits(ground, bits, threshold)

    @property
    def kind(self) -> str:
        return "Finite" if self.threshold is None else "Tail"

    @property
    def is_finite(self) -> bool:
        return self.threshold is None

    @property
    def head(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def __contains__(self, n: int) -> bool:
        return member(self, n)

    def __len__(self) -> int:
        if self.threshold is not None:
            raise TypeError("tail set is infinite")
        return self.bits.bit_count()

    def window_bits(self, hi: int) -> int:
        """Bitmask of the members below ``hi``."""
        b = self.bits & ((1 << hi) - 1) if hi > 0 else 0
        if self.threshold is not None:
            b |= self.ground.members_mask(self.threshold, hi)
        return b

    def to_literal(self) -> str:
        parts = [str(e) for e in self.head]
        if self.threshold is not None:
            parts.append(f"~{self.threshold}")
        return "{" + ",".join(parts) + "}"

    def to_dict(self) -> dict:
        return {"head": list(self.head), "threshold": self.threshold}

    def __str__(self) -> str:
        return self.to_literal()

    def __repr__(self) -> str:
        return f"PSet({self.to_literal()} over {self.ground.to_text()})"


def _canonical_from_bits(ground: NumericalSemigroup, bits: int, threshold: int | None) -> PSet:
    if threshold is None:
        if bits == 0:
            raise InputError("empty set is not an element of P(H)")
        _check_ground(ground, bits)
        return PSet(ground, bits, None)

    _check_ground(ground, bits)
    t = max(threshold, 0)
    bits &= (1 << t) - 1
    # lower t while doing so leaves the denoted set unchanged
    while t > 0 and (not contains(ground, t - 1) or (bits >> (t - 1)) & 1):
        t -= 1
        bits &= ~(1 << t)
    t = ground.next_member(t)
    if t > MAX_THRESHOLD:
        raise ThresholdOverflow(f"threshold {t} exceeds configured maximum {MAX_THRESHOLD}")
    return PSet(ground, bits, t)


def _check_ground(ground: NumericalSemigroup, bits: int) -> None:
    outside = bits & ~ground.members_mask(0, bits.bit_length())
    if outside:
        bad = next(iter_bits(outside))
        raise GroundSetError(f"{bad} is not a member of {ground.to_text()}")


def canonicalize(ground: NumericalSemigroup, head: Iterable[int], threshold: int | None = None) -> PSet:
    """Unique canonical PSet denoting ``head`` (finite) or
    ``head | (H >= threshold)``."""
    return _canonical_from_bits(ground, bits_of(head), threshold)


def member(X: PSet, n: int) -> bool:
    if n < 0:
        return False
    if (X.bits >> n) & 1:
        return True
    return X.threshold is not None and n >= X.threshold and contains(X.ground, n)


def min_of(X: PSet) -> int:
    if X.bits:
        return (X.bits & -X.bits).bit_length() - 1
    return X.threshold


def max_of(X: PSet) -> int:
    if X.threshold is not None:
        raise InputError("tail set has no maximum")
    return X.bits.bit_length() - 1


def semiline(ground: NumericalSemigroup, k: int) -> PSet:
    """``H`` intersected with ``[k, oo)``."""
    return canonicalize(ground, (), k)


_LITERAL_RE = re.compile(r"^\s*\{(.*)\}\s*$")


def parse_pset(text: str, ground: NumericalSemigroup) -> PSet:
    """Parse ``"{0,2,3}"`` (finite) or ``"{0,2,~7}"`` (tail from 7 on)."""
    m = _LITERAL_RE.match(text)
    if not m:
        raise InputError(f"cannot parse set literal {text!r}")
    head, threshold = [], None
    for tok in (t.strip() for t in m.group(1).split(",")):
        if not tok:
            continue
        try:
            if tok.startswith("~"):
                if threshold is not None:
                    raise InputError(f"two tail markers in {text!r}")
                threshold = int(tok[1:])
            else:
                head.append(int(tok))
        except ValueError:
            raise InputError(f"bad token {tok!r} in {text!r}") from None
    return canonicalize(ground, head, threshold)


def pset_from_json(payload: str | dict, ground: NumericalSemigroup) -> PSet:
    data = json.loads(payload) if isinstance(payload, str) else payload
    try:
        return canonicalize(ground, data["head"], data.get("threshold"))
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad set JSON: {exc}") from None
