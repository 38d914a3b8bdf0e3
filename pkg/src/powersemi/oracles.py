"""Deliberately naive reference implementations.

Nothing here touches the bitmask kernels: sets are plain ``set[int]``
restricted to a window ``[0, W]``. The test suite and the ``verify``
command cross-check the fast code paths against these.
"""

from __future__ import annotations

from itertools import combinations, permutations


def closure_members(gens, window, includes_zero=True):
    """Members of the semigroup generated by ``gens`` inside ``[0, window]``,
    by repeated addition until nothing new appears."""
    members = set(g for g in gens if g <= window)
    frontier = set(members)
    while frontier:
        new = {a + b for a in frontier for b in members if a + b <= window} - members
        members |= new
        frontier = new
    if includes_zero:
        members.add(0)
    return members


def frobenius_by_closure(gens, includes_zero=True):
    # all integers past prod(gens)-ish are members; use a generous window
    window = 2 * max(gens) * min(gens) + 2 * max(gens) + 2
    members = closure_members(gens, window, includes_zero)
    missing = [n for n in range(window + 1) if n not in members]
    return max(missing) if missing else -1


def window_set(X, W):
    """Members of a PSet in ``[0, W]`` via its public membership query."""
    return {n for n in range(W + 1) if n in X}


def sumset_window(xs, ys, W):
    return {x + y for x in xs for y in ys if x + y <= W}


def subsets(elements):
    elements = sorted(elements)
    for r in range(len(elements) + 1):
        for combo in combinations(elements, r):
            yield set(combo)


def translate_solutions_wide(A, B, H_members):
    """Every non-empty X inside ``[0, max B]`` intersected with H with
    ``X + A == B``, ignoring the containment argument entirely."""
    A, B = set(A), set(B)
    candidates = sorted(h for h in H_members if h <= max(B))
    out = []
    for X in subsets(candidates):
        if X and {x + a for x in X for a in A} == B:
            out.append(frozenset(X))
    return out


def table_automorphisms(table, absorbing=-1):
    """All bijections of ``range(n)`` preserving a Cayley table, by trying
    every permutation. Only usable for n <= 8."""
    n = len(table)
    found = []
    for perm in permutations(range(n)):
        ok = True
        for i in range(n):
            for j in range(n):
                k = table[i][j]
                img = absorbing if k == absorbing else perm[k]
                if table[perm[i]][perm[j]] != img:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(perm)
    return found
