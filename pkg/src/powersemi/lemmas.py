"""Witness constructions and membership tests for power monoids of H.

Everything here is verified with the exact :func:`~powersemi.sumset.add`
kernel; nothing is sampled or approximated.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import CapExceeded, InputError, PreconditionError
from .numsgp import NumericalSemigroup, contains
from .setrep import PSet, canonicalize, iter_bits, member
from .sumset import add, difference, power

SUBSET_CAP = int(os.environ.get("POWERSEMI_SUBSET_CAP", 24))
MAX_A_SIZE = 6


@dataclass
class WitnessReport:
    witnesses: list[PSet]
    verified: list[bool]
    bound_claimed: int
    distinct_count: int
    target: PSet | None = None
    labels: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.verified) and self.distinct_count >= self.bound_claimed

    def to_dict(self) -> dict:
        return {
            "schema": "1",
            "witnesses": [w.to_dict() for w in self.witnesses],
            "literals": [w.to_literal() for w in self.witnesses],
            "labels": self.labels,
            "verified": self.verified,
            "bound_claimed": self.bound_claimed,
            "distinct_count": self.distinct_count,
            "target": None if self.target is None else self.target.to_literal(),
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _report(witnesses, verified, bound, target, labels) -> WitnessReport:
    return WitnessReport(witnesses, verified, bound, len(set(witnesses)), target, labels)


def is_idempotent(E: PSet) -> bool:
    return add(E, E) == E


def doubleton_absorb_test(E: PSet, y: int) -> bool:
    """Whether ``{0, y} + E == E``; for an idempotent ``E`` containing 0 this
    holds exactly when ``y`` is in ``E``."""
    if not member(E, 0):
        raise PreconditionError(f"{E} does not contain 0")
    if not is_idempotent(E):
        raise PreconditionError(f"{E} is not idempotent")
    if not contains(E.ground, y):
        raise PreconditionError(f"{y} is not in {E.ground}")
    return add(PSet.finite(E.ground, {0, y}), E) == E


def halo_pair(S: NumericalSemigroup, y: int) -> tuple[PSet, PSet]:
    """``({0} | S>=y, {0} | S>=y minus {y})``."""
    if not S.includes_zero:
        raise PreconditionError(f"{S} has no zero element")
    if y == 0 or not contains(S, y):
        raise PreconditionError(f"y={y} must be a non-zero member of {S}")
    return canonicalize(S, [0], y), canonicalize(S, [0], y + 1)


def member_by_halo(S: NumericalSemigroup, X: PSet, y: int) -> bool:
    if X.ground != S:
        raise InputError(f"ground mismatch: {X.ground} vs {S}")
    if not member(X, 0):
        raise PreconditionError(f"{X} does not contain 0")
    full, punctured = halo_pair(S, y)
    return add(full, X) == add(punctured, X)


def _require_finite(A: PSet, name: str = "A") -> None:
    if A.threshold is not None:
        raise InputError(f"{name} must be finite, got {A}")


def lemma_Q_witnesses(A: PSet, n: int) -> WitnessReport:
    """For each ``B`` inside ``A minus {0}``, the set ``Q = A^(n-1) minus B``
    satisfies ``Q + A == A^n``."""
    _require_finite(A)
    if not member(A, 0):
        raise PreconditionError(f"{A} does not contain 0")
    if n < 3:
        raise PreconditionError(f"n must be > 2, got {n}")
    if len(A) > MAX_A_SIZE:
        raise CapExceeded(f"|A| = {len(A)} exceeds cap {MAX_A_SIZE}")
    target = power(A, n)
    base = power(A, n - 1)
    nonzero = [a for a in A.head if a != 0]
    witnesses, verified, labels = [], [], []
    for r in range(len(nonzero) + 1):
        for B in combinations(nonzero, r):
            Q = difference(base, set(B))
            witnesses.append(Q)
            verified.append(add(Q, A) == target)
            labels.append("B={%s}" % ",".join(map(str, B)))
    return _report(witnesses, verified, 2 ** len(nonzero), target, labels)


def conjugate_witnesses(A: PSet, n: int, x_tuple: Sequence[int]) -> WitnessReport:
    """``A^n`` itself plus ``A^n minus {a + x}`` for each ``a != x_tuple[0]``,
    where ``x = sum(x_tuple)``; each satisfies ``A^n + X == A^(2n)``."""
    _require_finite(A)
    if n < 2:
        raise PreconditionError(f"n must be > 1, got {n}")
    x_tuple = tuple(x_tuple)
    if len(x_tuple) != n - 1:
        raise InputError(f"x_tuple must have n-1 = {n - 1} entries, got {len(x_tuple)}")
    for xi in x_tuple:
        if not member(A, xi):
            raise InputError(f"tuple entry {xi} is not in {A}")
    x = sum(x_tuple)
    An = power(A, n)
    target = power(A, 2 * n)
    witnesses = [An]
    labels = ["A^n"]
    for a in A.head:
        if a == x_tuple[0]:
            continue
        witnesses.append(difference(An, {a + x}))
        labels.append(f"a={a}")
    verified = [add(An, X) == target for X in witnesses]
    return _report(witnesses, verified, len(A), target, labels)


def enumerate_translate_solutions(A: PSet, B: PSet, cap: int | None = None) -> list[PSet]:
    """All finite ``X`` with ``X + A == B``, sorted by their element tuples.

    Any solution satisfies ``X + a`` inside ``B`` for every ``a`` in ``A``, so
    ``X`` lies in ``D = intersection of (B - a)``; conversely every subset of
    ``D`` already has ``X + A`` inside ``B``, leaving only coverage of ``B``
    to check.
    """
    _require_finite(A)
    _require_finite(B, "B")
    H = A.ground
    if B.ground != H:
        raise InputError(f"ground mismatch: {A.ground} vs {B.ground}")
    cap = SUBSET_CAP if cap is None else cap
    D = -1
    for a in A.head:
        D &= B.bits >> a
    D &= H.members_mask(0, D.bit_length())
    cands = list(iter_bits(D))
    if len(cands) > cap:
        raise CapExceeded(f"search space |D| = {len(cands)} exceeds cap {cap}")

    # contribution of each candidate and of all candidates from index i on
    contrib = [A.bits << d for d in cands]
    suffix = [0] * (len(cands) + 1)
    for i in range(len(cands) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | contrib[i]
    goal = B.bits
    found: list[int] = []

    def walk(i: int, chosen: int, covered: int) -> None:
        if covered | suffix[i] != goal:
            return
        if i == len(cands):
            if chosen:
                found.append(chosen)
            return
        walk(i + 1, chosen | (1 << cands[i]), covered | contrib[i])
        walk(i + 1, chosen, covered)

    walk(0, 0, 0)
    sols = [PSet.from_bits(H, b, None) for b in found]
    return sorted(sols, key=lambda X: X.head)


def image_size_bound(solution_count: int) -> int:
    """Largest ``m`` with ``2**(m-1) <= solution_count``."""
    if solution_count < 1:
        raise InputError(f"solution count must be >= 1, got {solution_count}")
    return solution_count.bit_length()
