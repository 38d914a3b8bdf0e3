"""Executable acceptance criteria.

Each ``criterion_*`` function returns a :class:`CriterionResult`. They are
shared by ``tests/test_acceptance.py`` and the ``verify`` CLI command. All
randomness is seeded, so runs are reproducible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from . import oracles
from .autosearch import (
    associativity_failure,
    build_truncated,
    find_automorphisms,
    find_cancellative,
    is_automorphism,
    is_group,
    proof_pipeline,
    transposition,
)
from .lemmas import (
    conjugate_witnesses,
    doubleton_absorb_test,
    enumerate_translate_solutions,
    image_size_bound,
    is_idempotent,
    lemma_Q_witnesses,
    member_by_halo,
)
from .errors import CapExceeded
from .numsgp import NumericalSemigroup, build_from_generators, contains
from .quotient import lift, normalize, naturals
from .setrep import PSet, canonicalize, member, min_of, semiline
from .sumset import add, power

GROUND_GENERATORS = ([1], [2, 3], [3, 5], [3, 5, 7])
SEED = 20261017


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.2f}s)"


def grounds() -> list[NumericalSemigroup]:
    return [build_from_generators(g) for g in GROUND_GENERATORS]


def random_member(rng: random.Random, H: NumericalSemigroup, lo: int, hi: int) -> int:
    choices = [h for h in range(lo, hi + 1) if contains(H, h)]
    return rng.choice(choices)


def random_pset(rng: random.Random, H: NumericalSemigroup, bound: int, zero: bool | None = None, tail: bool | None = None) -> PSet:
    """Random finite or tail set with head inside ``[0, bound]``."""
    pool = [h for h in range(bound + 1) if contains(H, h)]
    if zero is True:
        pool = [h for h in pool if h != 0]
    head = set(rng.sample(pool, rng.randint(0 if zero else 1, min(len(pool), 5))))
    if zero is True:
        head.add(0)
    elif zero is False:
        head.discard(0)
        if not head:
            head.add(random_member(rng, H, 1, bound + 5))
    if tail is None:
        tail = rng.random() < 0.5
    if tail:
        return canonicalize(H, head, rng.randint(0, bound + H.frobenius + 3))
    return canonicalize(H, head)


def _timed(number: int, name: str, fn: Callable[[], tuple[bool, str]]) -> CriterionResult:
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, not an aborted run
        passed, detail = False, f"raised {type(exc).__name__}: {exc}"
    return CriterionResult(number, name, passed, detail, time.perf_counter() - start)


def criterion_1() -> CriterionResult:
    expected = {(2, 3): 1, (3, 5): 7, (3, 5, 7): 4, (1,): -1}

    def run():
        bad = []
        for gens, want in expected.items():
            t = time.perf_counter()
            got = build_from_generators(gens).frobenius
            dt = time.perf_counter() - t
            oracle = oracles.frobenius_by_closure(gens)
            if got != want or oracle != want or dt >= 1.0:
                bad.append(f"{gens}: got {got}, oracle {oracle}, {dt:.3f}s")
        return not bad, "; ".join(bad) or "4/4 Frobenius numbers match closure oracle, each < 1 s"

    return _timed(1, "Frobenius numbers", run)


def criterion_2() -> CriterionResult:
    def run():
        N = naturals()
        A, B = PSet.finite(N, [0, 1]), PSet.finite(N, [0, 1, 2, 3])
        got = {frozenset(X.head) for X in enumerate_translate_solutions(A, B)}
        want = {frozenset({0, 2}), frozenset({0, 1, 2})}
        wide = set(oracles.translate_solutions_wide({0, 1}, {0, 1, 2, 3}, range(4)))
        ok = got == want == wide
        return ok, f"solutions {sorted(map(sorted, got))}, wide brute force agrees: {wide == got}"

    return _timed(2, "XA = B has finitely many solutions", run)


def _q_instances(count: int = 50):
    rng = random.Random(SEED + 3)
    gs = grounds()
    for _ in range(count):
        H = rng.choice(gs)
        A = random_pset(rng, H, 10, zero=True, tail=False)
        while len(A) > 4:
            A = random_pset(rng, H, 10, zero=True, tail=False)
        yield H, A


def criterion_3() -> CriterionResult:
    def run():
        passed = enumerated = 0
        failures = []
        for H, A in _q_instances():
            rep = lemma_Q_witnesses(A, 3)
            ok = rep.ok and rep.distinct_count == 2 ** (len(A) - 1) == len(rep.witnesses)
            try:
                sols = set(enumerate_translate_solutions(A, power(A, 3)))
                enumerated += 1
                ok = ok and set(rep.witnesses) <= sols
            except CapExceeded:
                pass
            if ok:
                passed += 1
            else:
                failures.append(f"{A} over {H}")
        return not failures, f"{passed}/50 instances pass, {enumerated} cross-checked by enumerator" + (
            f"; failures: {failures[:3]}" if failures else "")

    return _timed(3, "at least 2^(|A|-1) solutions", run)


def criterion_4() -> CriterionResult:
    def run():
        rng = random.Random(SEED + 4)
        gs = grounds()
        failures = []
        for _ in range(50):
            H = rng.choice(gs)
            A = random_pset(rng, H, 10, tail=False)
            while len(A) > 4:
                A = random_pset(rng, H, 10, tail=False)
            x1 = rng.choice(A.head)
            rep = conjugate_witnesses(A, 2, (x1,))
            if not (rep.ok and rep.distinct_count >= len(A)):
                failures.append(f"{A} over {H}")
        return not failures, f"{50 - len(failures)}/50 instances have >= |A| distinct verified witnesses"

    return _timed(4, "at least |A| solutions", run)


def criterion_5() -> CriterionResult:
    def run():
        rng = random.Random(SEED + 5)
        total = mismatches = 0
        for H in grounds():
            for _ in range(1000):
                X = random_pset(rng, H, 12, zero=True)
                y = random_member(rng, H, 1, 12 + H.frobenius + 4)
                total += 1
                if member_by_halo(H, X, y) != member(X, y):
                    mismatches += 1
        return mismatches == 0, f"{total - mismatches}/{total} pairs agree with direct membership"

    return _timed(5, "halo membership oracle", run)


def random_idempotent(rng: random.Random, H: NumericalSemigroup) -> PSet:
    """A cofinite submonoid of H, as a tail set."""
    if rng.random() < 0.3:
        return canonicalize(H, [0], rng.randint(0, H.frobenius + 10))
    while True:
        gens = [random_member(rng, H, 1, 15) for _ in range(rng.randint(1, 4))]
        try:
            E = build_from_generators(gens)
        except Exception:
            continue
        head = [n for n in range(E.frobenius + 1) if contains(E, n)]
        return canonicalize(H, head, E.frobenius + 1)


def criterion_6() -> CriterionResult:
    def run():
        rng = random.Random(SEED + 6)
        gs = grounds()
        probes = mismatches = not_idem = 0
        for _ in range(200):
            H = rng.choice(gs)
            E = random_idempotent(rng, H)
            if not is_idempotent(E):
                not_idem += 1
                continue
            for _ in range(5):
                y = random_member(rng, H, 0, E.threshold + H.frobenius + 2)
                probes += 1
                if doubleton_absorb_test(E, y) != member(E, y):
                    mismatches += 1
        ok = mismatches == 0 and not_idem == 0
        return ok, f"200 idempotents, {probes - mismatches}/{probes} probes agree" + (
            f", {not_idem} generated sets were not idempotent" if not_idem else "")

    return _timed(6, "doubleton absorption oracle", run)


def criterion_7() -> CriterionResult:
    def run():
        rng = random.Random(SEED + 7)
        gs = grounds()
        bad = 0
        for _ in range(200):
            H = rng.choice(gs)
            k = rng.randint(H.frobenius + 1, H.frobenius + 30)
            X = random_pset(rng, H, 15)
            if add(semiline(H, k), X) != semiline(H, k + min_of(X)):
                bad += 1
        return bad == 0, f"{200 - bad}/200 exact canonical equalities"

    return _timed(7, "semiline identity", run)


def criterion_8() -> CriterionResult:
    def run():
        rng = random.Random(SEED + 8)
        gs = grounds()
        hom_bad = trip_bad = 0
        for _ in range(500):
            H = rng.choice(gs)
            X, Y = random_pset(rng, H, 12), random_pset(rng, H, 12)
            if normalize(add(X, Y)) != add(normalize(X), normalize(Y)):
                hom_bad += 1
        for _ in range(200):
            S = rng.choice(gs)
            A = random_pset(rng, naturals(), 12, zero=True)
            k = rng.randint(S.frobenius + 1, S.frobenius + 50)
            if normalize(lift(A, S, k)) != A:
                trip_bad += 1
        ok = hom_bad == 0 and trip_bad == 0
        return ok, f"homomorphism {500 - hom_bad}/500, round trip {200 - trip_bad}/200"

    return _timed(8, "normal form is an isomorphism", run)


def criterion_9() -> CriterionResult:
    def run():
        notes, ok = [], True
        N, S23 = naturals(), build_from_generators([2, 3])
        M2 = build_truncated(N, 2, "P0")
        res = find_automorphisms(M2)
        brute = oracles.table_automorphisms(M2.table().tolist())
        if not (res.only_identity and brute == [tuple(range(len(M2)))]):
            ok = False
            notes.append("(N,2,P0) is not identity-only")
        for H, label in ((N, "N"), (S23, "<2,3>")):
            for w in range(5):
                M = build_truncated(H, w, "P0")
                t = time.perf_counter()
                r = find_automorphisms(M, timeout=60)
                dt = time.perf_counter() - t
                ident = tuple(range(len(M)))
                good = (r.complete and dt < 60 and ident in r.automorphisms
                        and all(is_automorphism(M, p) for p in r.automorphisms)
                        and is_group(r.automorphisms))
                if not good:
                    ok = False
                    notes.append(f"({label},{w}) failed")
                if len(r.automorphisms) > 1:
                    notes.append(f"({label},{w}): {len(r.automorphisms)} maps")
                if not proof_pipeline(M, ident).passed:
                    ok = False
                    notes.append(f"pipeline rejects identity on ({label},{w})")
        swap = transposition(M2, M2.index[0b101], M2.index[0b111])
        fail = proof_pipeline(M2, swap).first_failure()
        if fail is None or fail.name != "homomorphism" or not fail.witness:
            ok = False
            notes.append("idempotent swap not rejected at homomorphism step")
        else:
            notes.append(f"swap rejected: {fail.witness}")
        return ok, "; ".join(notes)

    return _timed(9, "automorphism search", run)


def criterion_10() -> CriterionResult:
    def run():
        notes, ok = [], True
        exhaustive = 0
        for H in grounds():
            for variant in ("P0", "P"):
                w = 0
                while True:
                    M = build_truncated(H, w, variant)
                    if len(M) > 64:
                        break
                    full, _, bad = associativity_failure(M)
                    exhaustive += 1
                    if bad is not None or not full:
                        ok = False
                        notes.append(f"non-associative {H} w={w} {variant}")
                    w += 1
        notes.append(f"{exhaustive} structures checked exhaustively")
        for gens, w in (([1], 10), ([1], 14)):
            M = build_truncated(build_from_generators(gens), w, "P0")
            _, checked, bad = associativity_failure(M, samples=100_000, seed=SEED)
            if bad is not None:
                ok = False
            notes.append(f"{checked} sampled triples on {len(M)} elements")
        M2 = build_truncated(naturals(), 2, "P0")
        canc = [M2.literal(i) for i in find_cancellative(M2)]
        if canc != ["{0}"]:
            ok = False
        notes.append(f"cancellative in (N,2,P0): {canc}")
        return ok, "; ".join(notes)

    return _timed(10, "truncation soundness", run)


def criterion_11() -> CriterionResult:
    def run():
        checked = bad = 0
        for H, A in _q_instances():
            try:
                count = len(enumerate_translate_solutions(A, power(A, 3)))
            except CapExceeded:
                continue
            checked += 1
            if len(A) > image_size_bound(count):
                bad += 1
        return bad == 0 and checked > 0, f"{checked - bad}/{checked} completed enumerations respect the bound"

    return _timed(11, "image size bound", run)


CRITERIA = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
]


def run_all(echo: Callable[[str], None] | None = print) -> list[CriterionResult]:
    results = []
    for crit in CRITERIA:
        r = crit()
        if echo is not None:
            echo(r.line())
        results.append(r)
    return results
