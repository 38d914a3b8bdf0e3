"""Window-truncated power monoids and their automorphisms.

For a window ``N`` the elements are subsets of ``H`` inside ``[0, N]`` and
the operation is ``X (+) Y = (X + Y) & [0, N]``. This is associative: a sum
``<= N`` never uses a summand ``> N``, so truncating before or after adding
gives the same set, and ``Z -> Z & [0, N]`` is a homomorphism from P(H)
(with the empty set adjoined) onto the truncated structure.

In the ``P`` variant a sum can fall entirely outside the window. Such
products are recorded as :data:`OVERFLOW` (the empty set), an absorbing
element that every automorphism must preserve. It is not listed among the
elements.

The truncated monoid is not a submonoid of P(H) and loses structure: for
example, non-zero singletons stop being cancellative. The checks in
:func:`proof_pipeline` are window analogues, not statements about P(H).
"""

from __future__ import annotations

import json
import os
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import CapExceeded, InputError
from .numsgp import NumericalSemigroup, contains
from .setrep import iter_bits
from .sumset import convolve

OVERFLOW = -1
ELEMENT_CAP = int(os.environ.get("POWERSEMI_ELEMENT_CAP", 1 << 14))
MATERIALIZE_LIMIT = 1 << 10
SEARCH_TIMEOUT = float(os.environ.get("POWERSEMI_TIMEOUT", 60))

VARIANTS = ("P0", "P")


def bits_literal(b: int) -> str:
    return "{" + ",".join(map(str, iter_bits(b))) + "}"


@dataclass
class TruncatedPowerMonoid:
    ground: NumericalSemigroup
    window: int
    variant: str
    elements: tuple[int, ...]
    index: dict[int, int] = field(repr=False)
    _table: np.ndarray | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def materialized(self) -> bool:
        return self._table is not None

    def raw_op(self, x: int, y: int) -> int:
        return convolve(x, y, self.window)

    def op(self, i: int, j: int) -> int:
        if self._table is not None:
            return int(self._table[i, j])
        z = self.raw_op(self.elements[i], self.elements[j])
        return self.index[z] if z else OVERFLOW

    def table(self) -> np.ndarray:
        """Full Cayley table (computed and cached on first call)."""
        if self._table is None:
            self._table = _build_table(self)
        return self._table

    @property
    def identity(self) -> int | None:
        return self.index.get(1)

    def literal(self, i: int) -> str:
        return "{}" if i == OVERFLOW else bits_literal(self.elements[i])

    def to_dict(self) -> dict:
        return {
            "schema": "1",
            "ground": self.ground.to_dict(),
            "window": self.window,
            "variant": self.variant,
            "size": len(self),
            "elements": [list(iter_bits(b)) for b in self.elements],
        }


def _build_table(M: TruncatedPowerMonoid) -> np.ndarray:
    n = len(M)
    T = np.empty((n, n), dtype=np.int32)
    els, idx, N = M.elements, M.index, M.window
    for i in range(n):
        x = els[i]
        for j in range(i, n):
            z = convolve(x, els[j], N)
            k = idx[z] if z else OVERFLOW
            T[i, j] = T[j, i] = k
    return T


def element_count(S: NumericalSemigroup, N: int, variant: str) -> int:
    m = sum(1 for h in range(0, N + 1) if contains(S, h))
    if variant == "P0":
        return 2 ** (m - 1)
    return 2**m - 1


def build_truncated(S: NumericalSemigroup, N: int, variant: str = "P0", cap: int | None = None) -> TruncatedPowerMonoid:
    variant = _variant(variant)
    if N < 0:
        raise InputError(f"window must be >= 0, got {N}")
    if variant == "P0" and not S.includes_zero:
        raise InputError(f"P0 variant needs 0 in the ground semigroup, got {S}")
    cap = ELEMENT_CAP if cap is None else cap
    count = element_count(S, N, variant)
    if count > cap:
        raise CapExceeded(f"{count} elements exceeds cap {cap}")
    points = [h for h in range(1 if variant == "P0" else 0, N + 1) if contains(S, h)]
    base = 1 if variant == "P0" else 0
    elements = []
    for r in range(len(points) + 1):
        for combo in combinations(points, r):
            b = base
            for p in combo:
                b |= 1 << p
            if b:
                elements.append(b)
    elements.sort()
    M = TruncatedPowerMonoid(S, N, variant, tuple(elements), {b: i for i, b in enumerate(elements)})
    if count <= MATERIALIZE_LIMIT:
        M.table()
    return M


def _variant(v: str) -> str:
    u = v.upper()
    if u not in VARIANTS:
        raise InputError(f"unknown variant {v!r}; expected one of {VARIANTS}")
    return u


# -- structural checks -------------------------------------------------------


def _apply(perm: Sequence[int], k: int) -> int:
    return OVERFLOW if k == OVERFLOW else perm[k]


def homomorphism_failure(M: TruncatedPowerMonoid, perm: Sequence[int]) -> tuple[int, int] | None:
    """First pair ``(i, j)`` with ``f(i (+) j) != f(i) (+) f(j)``, or None."""
    n = len(M)
    for i in range(n):
        for j in range(i, n):
            if _apply(perm, M.op(i, j)) != M.op(perm[i], perm[j]):
                return i, j
    return None


def is_automorphism(M: TruncatedPowerMonoid, perm: Sequence[int]) -> bool:
    return sorted(perm) == list(range(len(M))) and homomorphism_failure(M, perm) is None


def associativity_failure(M: TruncatedPowerMonoid, samples: int = 100_000, seed: int = 0, exhaustive_limit: int = 64):
    """Check ``(x (+) y) (+) z == x (+) (y (+) z)``.

    Exhaustive when ``len(M) <= exhaustive_limit``, otherwise ``samples``
    random triples. Returns ``(exhaustive, checked, counterexample)``.
    """
    n = len(M)

    def mul(a, b):
        if a == OVERFLOW or b == OVERFLOW:
            return OVERFLOW
        return M.op(a, b)

    if n <= exhaustive_limit:
        checked = 0
        for x in range(n):
            for y in range(n):
                xy = mul(x, y)
                for z in range(n):
                    checked += 1
                    if mul(xy, z) != mul(x, mul(y, z)):
                        return True, checked, (x, y, z)
        return True, checked, None
    rng = random.Random(seed)
    for t in range(samples):
        x, y, z = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        if mul(mul(x, y), z) != mul(x, mul(y, z)):
            return False, t + 1, (x, y, z)
    return False, samples, None


def is_group(perms: Sequence[Sequence[int]]) -> bool:
    """Closure of a set of permutations under composition and inverse."""
    pool = {tuple(p) for p in perms}
    if not pool:
        return False
    n = len(next(iter(pool)))
    if tuple(range(n)) not in pool:
        return False
    for p in pool:
        inv = [0] * n
        for i, pi in enumerate(p):
            inv[pi] = i
        if tuple(inv) not in pool:
            return False
        for q in pool:
            if tuple(p[q[i]] for i in range(n)) not in pool:
                return False
    return True


def find_cancellative(M: TruncatedPowerMonoid) -> list[int]:
    """Indices ``e`` for which ``x -> x (+) e`` is injective on M."""
    n = len(M)
    out = []
    for e in range(n):
        images = [M.op(x, e) for x in range(n)]
        if len(set(images)) == n:
            out.append(e)
    return out


# -- invariants and colour refinement ---------------------------------------


def _power_profile(M: TruncatedPowerMonoid, i: int) -> tuple[int, int, bool]:
    seen = {i: 1}
    cur, k = i, 1
    while True:
        cur = M.op(cur, i) if cur != OVERFLOW else OVERFLOW
        k += 1
        if cur in seen:
            return seen[cur], k - seen[cur], cur == OVERFLOW
        seen[cur] = k


def invariant_colours(M: TruncatedPowerMonoid, refine: bool = True) -> np.ndarray:
    """Partition of the elements that every automorphism must respect.

    Starts from per-element invariants (identity, idempotency, power
    profile, square-root count, row image size, annihilator count) and
    refines by the multiset of ``(colour(y), colour(x (+) y))`` over ``y``
    until stable.
    """
    n = len(M)
    T = M.table()
    ident = M.identity
    squares = Counter(int(T[i, i]) for i in range(n))
    base = []
    for i in range(n):
        row = T[i]
        base.append((
            i == ident,
            int(row[i]) == i,
            _power_profile(M, i),
            squares.get(i, 0),
            len(np.unique(row)),
            int(np.count_nonzero(row == OVERFLOW)),
            int(np.count_nonzero(row == i)),
        ))
    colours = _relabel(base)
    while refine:
        k = int(colours.max()) + 2
        ext = np.append(colours, -1) + 1  # ext[OVERFLOW] -> 0
        codes = colours[None, :] * k + ext[T]
        codes.sort(axis=1)
        _, row_ids = np.unique(codes, axis=0, return_inverse=True)
        refined = _relabel(list(zip(colours.tolist(), np.ravel(row_ids).tolist())))
        if refined.max() == colours.max():
            return refined
        colours = refined
    return colours


def _relabel(keys: list) -> np.ndarray:
    order = {key: c for c, key in enumerate(sorted(set(keys)))}
    return np.array([order[key] for key in keys], dtype=np.int64)


# -- search ----------------------------------------------------------------


@dataclass
class SearchResult:
    automorphisms: list[tuple[int, ...]]
    complete: bool
    elapsed: float
    generators: list[int]
    colour_classes: int

    @property
    def only_identity(self) -> bool:
        return self.complete and len(self.automorphisms) == 1 and list(self.automorphisms[0]) == sorted(self.automorphisms[0])

    def to_dict(self, M: TruncatedPowerMonoid | None = None) -> dict:
        d = {
            "schema": "1",
            "complete": self.complete,
            "count": len(self.automorphisms),
            "automorphisms": [list(p) for p in self.automorphisms],
            "generators": self.generators,
            "colour_classes": self.colour_classes,
        }
        if M is not None:
            d["monoid"] = M.to_dict()
            d["generator_literals"] = [M.literal(g) for g in self.generators]
        return d


def _closure(M: TruncatedPowerMonoid, seeds: set[int]) -> set[int]:
    span = set(seeds)
    todo = list(span)
    while todo:
        a = todo.pop()
        for b in list(span):
            c = M.op(a, b)
            if c != OVERFLOW and c not in span:
                span.add(c)
                todo.append(c)
    return span


def _generating_set(M: TruncatedPowerMonoid, forced: set[int], colours: np.ndarray) -> list[int]:
    sizes = Counter(colours.tolist())
    order = sorted(range(len(M)), key=lambda i: (sizes[int(colours[i])], i))
    gens: list[int] = []
    span = _closure(M, forced)
    for x in order:
        if x not in span:
            gens.append(x)
            span = _closure(M, span | {x})
    return gens


def _propagate(M, f, used, known, new, colours) -> bool:
    """Extend ``f`` through products of ``new`` with every mapped element.
    Mutates ``f``, ``used``, ``known``; returns False on contradiction."""
    queue = list(new)
    while queue:
        a = queue.pop()
        known.append(a)
        for b in known:
            p = M.op(a, b)
            fp = M.op(f[a], f[b])
            if p == OVERFLOW or fp == OVERFLOW:
                if p != fp:
                    return False
                continue
            if f[p] == -1:
                if used[fp] or colours[p] != colours[fp]:
                    return False
                f[p] = fp
                used[fp] = True
                queue.append(p)
            elif f[p] != fp:
                return False
    return True


def find_automorphisms(M: TruncatedPowerMonoid, timeout: float | None = None, refine: bool = True) -> SearchResult:
    """Every operation-preserving bijection of M, sorted lexicographically.

    If ``timeout`` seconds pass first, the permutations found so far are
    returned with ``complete=False``. ``refine=False`` keeps only the coarse
    per-element invariants, which makes the backtracking do more work.
    """
    if len(M) > ELEMENT_CAP:
        raise CapExceeded(f"{len(M)} elements exceeds cap {ELEMENT_CAP}")
    timeout = SEARCH_TIMEOUT if timeout is None else timeout
    start = time.monotonic()
    n = len(M)
    colours = invariant_colours(M, refine)
    members: dict[int, list[int]] = {}
    for i, c in enumerate(colours.tolist()):
        members.setdefault(c, []).append(i)
    forced = {v[0] for v in members.values() if len(v) == 1}
    gens = _generating_set(M, forced, colours)

    f0 = [-1] * n
    used0 = [False] * n
    for x in forced:
        f0[x] = x
        used0[x] = True
    known0: list[int] = []
    found: list[tuple[int, ...]] = []
    complete = True
    if not _propagate(M, f0, used0, known0, sorted(forced), colours):
        return SearchResult([], True, time.monotonic() - start, gens, len(members))

    def walk(depth, f, used, known):
        nonlocal complete
        if time.monotonic() - start > timeout:
            complete = False
            return
        if depth == len(gens):
            if -1 not in f:
                found.append(tuple(f))
            return
        g = gens[depth]
        if f[g] != -1:
            walk(depth + 1, f, used, known)
            return
        for cand in members[int(colours[g])]:
            if used[cand]:
                continue
            f2, used2, known2 = f[:], used[:], known[:]
            f2[g] = cand
            used2[cand] = True
            if _propagate(M, f2, used2, known2, [g], colours):
                walk(depth + 1, f2, used2, known2)
            if not complete:
                return

    walk(0, f0, used0, known0)
    found.sort()
    return SearchResult(found, complete, time.monotonic() - start, gens, len(members))


# -- proof skeleton ----------------------------------------------------------


@dataclass
class StepResult:
    name: str
    passed: bool
    checked: int
    witness: str | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked, "witness": self.witness, "note": self.note}


@dataclass
class ProofPipelineReport:
    steps: list[StepResult]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)

    def step(self, name: str) -> StepResult:
        for s in self.steps:
            if s.name == name:
                return s
        raise KeyError(name)

    def first_failure(self) -> StepResult | None:
        return next((s for s in self.steps if not s.passed), None)

    def to_dict(self) -> dict:
        return {"schema": "1", "passed": self.passed, "steps": [s.to_dict() for s in self.steps]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _halo_equal(M: TruncatedPowerMonoid, x: int, y: int, H_y: int, H_y_star: int) -> bool:
    return M.raw_op(H_y, x) == M.raw_op(H_y_star, x)


def proof_pipeline(M: TruncatedPowerMonoid, f: Sequence[int]) -> ProofPipelineReport:
    """Run the window analogues of the triviality argument against ``f``.

    Steps: homomorphism; fixes doubletons ``{0, x}`` (singletons ``{x}`` in
    the P variant); fixes idempotents; halo membership transfer; minimum
    preserved; induced map on translation classes well defined.
    """
    n = len(M)
    f = list(f)
    if sorted(f) != list(range(n)):
        raise InputError("candidate map is not a bijection of the elements")
    els = M.elements
    H, N = M.ground, M.window
    steps = []

    bad = homomorphism_failure(M, f)
    steps.append(StepResult(
        "homomorphism", bad is None, n * (n + 1) // 2,
        None if bad is None else "X=%s Y=%s" % (M.literal(bad[0]), M.literal(bad[1])),
    ))

    if M.variant == "P0":
        name, small = "doubletons_fixed", [1 | (1 << x) for x in range(1, N + 1) if contains(H, x)]
    else:
        name, small = "singletons_fixed", [1 << x for x in range(N + 1) if contains(H, x)]
    moved = [b for b in small if els[f[M.index[b]]] != b]
    steps.append(StepResult(name, not moved, len(small), bits_literal(moved[0]) if moved else None))

    idem = [i for i in range(n) if M.op(i, i) == i]
    moved = [i for i in idem if f[i] != i]
    steps.append(StepResult("idempotents_fixed", not moved, len(idem), M.literal(moved[0]) if moved else None))

    if H.includes_zero:
        window = (1 << (N + 1)) - 1
        checked, witness = 0, None
        for y in range(1, N + 1):
            if not contains(H, y):
                continue
            H_y = 1 | (H.members_mask(y, N + 1) & window)
            H_y_star = H_y & ~(1 << y)
            for i in range(n):
                if not els[i] & 1:
                    continue
                checked += 1
                in_x = bool((els[i] >> y) & 1)
                if _halo_equal(M, els[f[i]], y, H_y, H_y_star) != in_x:
                    witness = "X=%s y=%d" % (M.literal(i), y)
                    break
            if witness:
                break
        steps.append(StepResult("halo_membership", witness is None, checked, witness,
                                "y in X iff H_y (+) f(X) == H_y* (+) f(X)"))
    else:
        steps.append(StepResult("halo_membership", True, 0, None, "skipped: ground has no zero"))

    low = lambda b: (b & -b).bit_length() - 1
    moved = [i for i in range(n) if low(els[f[i]]) != low(els[i])]
    steps.append(StepResult("min_preserved", not moved, n, M.literal(moved[0]) if moved else None))

    classes: dict[int, list[int]] = {}
    for i in range(n):
        classes.setdefault(els[i] >> low(els[i]), []).append(i)
    checked, witness = 0, None
    for members in classes.values():
        images = {els[f[i]] >> low(els[f[i]]) for i in members}
        checked += len(members)
        if len(images) > 1:
            witness = "class of %s" % M.literal(members[0])
            break
    steps.append(StepResult("quotient_well_defined", witness is None, checked, witness,
                            "only translates that stay inside the window are compared"))
    return ProofPipelineReport(steps)


def transposition(M: TruncatedPowerMonoid, a: int, b: int) -> list[int]:
    """Identity permutation with elements ``a`` and ``b`` swapped."""
    perm = list(range(len(M)))
    perm[a], perm[b] = b, a
    return perm
