"""Numerical semigroups and monoids given by generators.

A numerical semigroup is a cofinite subset of the non-negative integers
closed under addition. Membership is answered from a bit sieve covering
``[0, F + 1]`` where ``F`` is the Frobenius number; everything above ``F``
is a member.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable

from .errors import CofinitenessError, InputError


@dataclass(frozen=True)
class NumericalSemigroup:
    """Immutable numerical semigroup (``includes_zero=False``) or monoid.

    ``generators`` is the minimal generating set, so two instances compare
    equal exactly when they denote the same set of integers. ``sieve`` is a
    bitmask: bit ``n`` is set iff ``n`` is a member, for ``0 <= n <= F + 1``.
    """

    generators: tuple[int, ...]
    includes_zero: bool
    frobenius: int
    sieve: int = field(repr=False)

    @classmethod
    def from_generators(cls, gens: Iterable[int], includes_zero: bool = True) -> NumericalSemigroup:
        return build_from_generators(gens, includes_zero)

    @classmethod
    def naturals(cls, includes_zero: bool = True) -> NumericalSemigroup:
        return build_from_generators([1], includes_zero)

    def __contains__(self, n: int) -> bool:
        return contains(self, n)

    def members_mask(self, lo: int, hi: int) -> int:
        """Bitmask of the members ``n`` with ``lo <= n < hi``."""
        lo = max(lo, 0)
        if hi <= lo:
            return 0
        cut = self.frobenius + 1
        full = (1 << hi) - 1
        mask = (self.sieve & ((1 << cut) - 1) & full) | (full & ~((1 << cut) - 1))
        return mask & ~((1 << lo) - 1)

    def next_member(self, n: int) -> int:
        """Least member ``>= n``."""
        n = max(n, 0)
        while not contains(self, n):
            n += 1
        return n

    @property
    def gaps(self) -> tuple[int, ...]:
        return gaps(self)

    def to_text(self) -> str:
        return "<%s;%s>" % (",".join(map(str, self.generators)), "0" if self.includes_zero else "no0")

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "includes_zero": self.includes_zero,
            "frobenius": self.frobenius,
        }

    def __str__(self) -> str:
        return self.to_text()


def _minimal_generators(gens: list[int], sieve_of_sums: int) -> tuple[int, ...]:
    # g is redundant iff g = a + b with a, b positive members
    out = []
    for g in gens:
        if not any((sieve_of_sums >> a) & 1 and (sieve_of_sums >> (g - a)) & 1 for a in range(1, g)):
            out.append(g)
    return tuple(out)


def build_from_generators(gens: Iterable[int], includes_zero: bool = True) -> NumericalSemigroup:
    """Smallest subsemigroup of N containing ``gens`` (plus 0 if requested).

    Raises :class:`CofinitenessError` when ``gcd(gens) != 1``.
    """
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise InputError("generator set is empty")
    if gens[0] < 1:
        raise InputError(f"generators must be positive, got {gens[0]}")
    g = reduce(math.gcd, gens)
    if g != 1:
        raise CofinitenessError(f"gcd of generators is {g}; the semigroup is not cofinite")

    # every integer >= (min-1)(max-1) is a member, so this window holds all gaps
    bound = gens[0] * gens[-1] + gens[-1]
    reach = 1  # bit 0: the empty sum
    for n in range(1, bound + 1):
        if any(n >= x and (reach >> (n - x)) & 1 for x in gens):
            reach |= 1 << n
    frob = -1
    for n in range(bound, -1, -1):
        if not (reach >> n) & 1:
            frob = n
            break
    minimal = _minimal_generators(gens, reach)
    if not includes_zero:
        reach &= ~1
        frob = max(frob, 0)
    sieve = reach & ((1 << (frob + 2)) - 1)
    return NumericalSemigroup(minimal, includes_zero, frob, sieve)


def contains(S: NumericalSemigroup, n: int) -> bool:
    if n < 0:
        return False
    if n > S.frobenius:
        return True
    return bool((S.sieve >> n) & 1)


def frobenius_of(S: NumericalSemigroup) -> int:
    return S.frobenius


def gaps(S: NumericalSemigroup, complement_in_n: bool = False) -> tuple[int, ...]:
    """Sorted positive non-members.

    For the variant without zero, 0 is listed only when ``complement_in_n``
    is true.
    """
    start = 0 if complement_in_n else 1
    return tuple(n for n in range(start, S.frobenius + 1) if not contains(S, n))


_TEXT_RE = re.compile(r"^\s*<\s*([0-9,\s]+?)\s*(?:;\s*(0|no0)\s*)?>\s*$")


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Parse ``"<3,5;0>"`` or ``"<1;no0>"``. The suffix defaults to ``0``."""
    m = _TEXT_RE.match(text)
    if not m:
        raise InputError(f"cannot parse semigroup literal {text!r}")
    try:
        gens = [int(tok) for tok in m.group(1).split(",") if tok.strip()]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return build_from_generators(gens, m.group(2) != "no0")


def semigroup_from_json(payload: str | dict) -> NumericalSemigroup:
    data = json.loads(payload) if isinstance(payload, str) else payload
    try:
        S = build_from_generators(data["generators"], bool(data.get("includes_zero", True)))
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad semigroup JSON: {exc}") from None
    if "frobenius" in data and data["frobenius"] != S.frobenius:
        raise InputError(f"frobenius field {data['frobenius']} disagrees with computed {S.frobenius}")
    return S
