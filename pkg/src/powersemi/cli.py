"""Command-line front end.

Exit codes: 0 success, 1 a verification did not hold, 2 input error,
3 cap or timeout exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import autosearch, lemmas, quotient
from .errors import CapExceeded, InputError
from .numsgp import build_from_generators, gaps
from .quotient import naturals
from .setrep import member, min_of, parse_pset
from .sumset import add, power, translate

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _gens(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad generator list {text!r}") from None


def _ints(text: str) -> list[int]:
    return _gens(text)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--gens", type=_gens, default=[1], help="comma-separated generators (default: 1)")
    p.add_argument("--no-zero", action="store_true", help="semigroup variant without 0")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="powersemi", description="Power semigroups of numerical semigroups.")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def sub(group, name, help_text):
        return group.add_parser(name, parents=[common], help=help_text)

    g = groups.add_parser("nsgp", help="numerical semigroup queries").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name in ("info", "frobenius", "gaps"):
        sub(g, name, f"{name} of the ground semigroup")

    g = groups.add_parser("set", help="set representation").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sub(g, "canon", "canonical form of a set literal").add_argument("--set", required=True)
    p = sub(g, "member", "membership query")
    p.add_argument("--set", required=True)
    p.add_argument("--n", type=int, required=True)
    sub(g, "min", "least element").add_argument("--set", required=True)

    g = groups.add_parser("sum", help="sumset arithmetic").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = sub(g, "add", "X + Y")
    p.add_argument("--set", required=True)
    p.add_argument("--set2", required=True)
    p = sub(g, "pow", "n-fold sumset")
    p.add_argument("--set", required=True)
    p.add_argument("--n", type=int, required=True)
    p = sub(g, "translate", "X + t")
    p.add_argument("--set", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--to-naturals", action="store_true", help="express the result over N")

    g = groups.add_parser("lemma", help="lemma witnesses and oracles").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = sub(g, "q-witness", "Q = A^(n-1) minus B witnesses")
    p.add_argument("--set", required=True)
    p.add_argument("--n", type=int, default=3)
    p = sub(g, "conjugate", "X_a = A^n minus {a+x} witnesses")
    p.add_argument("--set", required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--x", type=_ints, help="comma-separated n-1 elements of A (default: min A repeated)")
    p = sub(g, "enumerate", "all finite X with X + A = B")
    p.add_argument("--set", required=True, help="A")
    p.add_argument("--target", required=True, help="B")
    p = sub(g, "halo", "membership via halo sets")
    p.add_argument("--set", required=True)
    p.add_argument("--y", type=int, required=True)
    p = sub(g, "idem", "idempotency and doubleton absorption")
    p.add_argument("--set", required=True)
    p.add_argument("--y", type=int)

    g = groups.add_parser("quotient", help="translation classes").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sub(g, "normalize", "X - min X over N").add_argument("--set", required=True)
    p = sub(g, "related", "same translation class?")
    p.add_argument("--set", required=True)
    p.add_argument("--set2", required=True)
    p = sub(g, "lift", "A + k over the ground semigroup (A given over N)")
    p.add_argument("--set", required=True)
    p.add_argument("--k", type=int, required=True)

    g = groups.add_parser("aut", help="truncated power monoids").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, text in (("build", "list elements"), ("search", "find all automorphisms"),
                       ("pipeline", "run the proof skeleton on a map"), ("cancellative", "cancellative elements")):
        p = sub(g, name, text)
        p.add_argument("--window", type=int, required=True)
        p.add_argument("--variant", default="p0", choices=("p0", "p", "P0", "P"))
        if name == "search":
            p.add_argument("--timeout", type=float)
        if name == "pipeline":
            m = p.add_mutually_exclusive_group()
            m.add_argument("--perm", type=_ints, help="image index of each element")
            m.add_argument("--swap", nargs=2, metavar="SET", help="transpose two elements given as literals")

    p = groups.add_parser("verify", help="run every acceptance criterion")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        payload = {"schema": "1", **payload}
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _run(args) -> int:
    if args.group == "verify":
        return _verify(args)
    H = build_from_generators(args.gens, not args.no_zero)
    fn = globals()[f"_{args.group}_{args.cmd.replace('-', '_')}"]
    return fn(args, H) or EXIT_OK


def _nsgp_info(args, H):
    _emit(args, f"{H.to_text()} frobenius={H.frobenius} gaps={list(gaps(H))}",
          {**H.to_dict(), "gaps": list(gaps(H))})


def _nsgp_frobenius(args, H):
    _emit(args, str(H.frobenius), {"frobenius": H.frobenius})


def _nsgp_gaps(args, H):
    g = list(gaps(H))
    _emit(args, ",".join(map(str, g)), {"gaps": g})


def _set_payload(X) -> dict:
    return {"set": X.to_dict(), "literal": X.to_literal()}


def _set_canon(args, H):
    X = parse_pset(args.set, H)
    _emit(args, X.to_literal(), _set_payload(X))


def _set_member(args, H):
    X = parse_pset(args.set, H)
    m = member(X, args.n)
    _emit(args, _flag(m), {"member": m})


def _set_min(args, H):
    X = parse_pset(args.set, H)
    _emit(args, str(min_of(X)), {"min": min_of(X)})


def _sum_add(args, H):
    Z = add(parse_pset(args.set, H), parse_pset(args.set2, H))
    _emit(args, Z.to_literal(), _set_payload(Z))


def _sum_pow(args, H):
    Z = power(parse_pset(args.set, H), args.n)
    _emit(args, Z.to_literal(), _set_payload(Z))


def _sum_translate(args, H):
    Z = translate(parse_pset(args.set, H), args.t, naturals() if args.to_naturals else None)
    _emit(args, Z.to_literal(), _set_payload(Z))


def _report_out(args, rep) -> int:
    lines = [f"{lab}: {w.to_literal()} verified={_flag(v)}" for lab, w, v in zip(rep.labels, rep.witnesses, rep.verified)]
    lines.append(f"count={rep.distinct_count} bound={rep.bound_claimed} ok={_flag(rep.ok)}")
    _emit(args, "\n".join(lines), rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_VERIFY


def _lemma_q_witness(args, H):
    return _report_out(args, lemmas.lemma_Q_witnesses(parse_pset(args.set, H), args.n))


def _lemma_conjugate(args, H):
    A = parse_pset(args.set, H)
    x = args.x if args.x is not None else [min_of(A)] * (args.n - 1)
    return _report_out(args, lemmas.conjugate_witnesses(A, args.n, x))


def _lemma_enumerate(args, H):
    sols = lemmas.enumerate_translate_solutions(parse_pset(args.set, H), parse_pset(args.target, H))
    lits = [X.to_literal() for X in sols]
    bound = lemmas.image_size_bound(len(sols)) if sols else None
    _emit(args, "\n".join(lits + [f"solutions={len(sols)}"]),
          {"solutions": lits, "count": len(sols), "image_size_bound": bound})


def _lemma_halo(args, H):
    X = parse_pset(args.set, H)
    eq = lemmas.member_by_halo(H, X, args.y)
    m = member(X, args.y)
    _emit(args, f"member={_flag(m)} equality={_flag(eq)} consistent={_flag(eq == m)}",
          {"member": m, "equality": eq, "consistent": eq == m})
    return EXIT_OK if eq == m else EXIT_VERIFY


def _lemma_idem(args, H):
    E = parse_pset(args.set, H)
    idem = lemmas.is_idempotent(E)
    if args.y is None:
        _emit(args, f"idempotent={_flag(idem)}", {"idempotent": idem})
        return
    absorbs = lemmas.doubleton_absorb_test(E, args.y)
    m = member(E, args.y)
    _emit(args, f"idempotent={_flag(idem)} member={_flag(m)} absorbs={_flag(absorbs)} consistent={_flag(absorbs == m)}",
          {"idempotent": idem, "member": m, "absorbs": absorbs, "consistent": absorbs == m})
    return EXIT_OK if absorbs == m else EXIT_VERIFY


def _quotient_normalize(args, H):
    Z = quotient.normalize(parse_pset(args.set, H))
    _emit(args, Z.to_literal(), _set_payload(Z))


def _quotient_related(args, H):
    r = quotient.conjugate_related(parse_pset(args.set, H), parse_pset(args.set2, H))
    _emit(args, _flag(r), {"related": r})


def _quotient_lift(args, H):
    Z = quotient.lift(parse_pset(args.set, naturals()), H, args.k)
    _emit(args, Z.to_literal(), _set_payload(Z))


def _monoid(args, H):
    return autosearch.build_truncated(H, args.window, args.variant)


def _aut_build(args, H):
    M = _monoid(args, H)
    lines = [f"{i}: {M.literal(i)}" for i in range(len(M))] + [f"elements={len(M)}"]
    _emit(args, "\n".join(lines), M.to_dict())


def _aut_search(args, H):
    M = _monoid(args, H)
    res = autosearch.find_automorphisms(M, timeout=args.timeout)
    if res.only_identity:
        text = "automorphisms=1 (identity)"
    else:
        text = f"automorphisms={len(res.automorphisms)}"
        if not res.complete:
            text += " (partial: timeout)"
        for p in res.automorphisms:
            moved = [f"{M.literal(i)}->{M.literal(j)}" for i, j in enumerate(p) if i != j]
            text += "\n" + (" ".join(moved) if moved else "identity")
    _emit(args, text, res.to_dict(M))
    return EXIT_OK if res.complete else EXIT_CAP


def _aut_pipeline(args, H):
    M = _monoid(args, H)
    if args.perm is not None:
        f = args.perm
    elif args.swap is not None:
        a, b = (M.index.get(parse_pset(s, H).bits) for s in args.swap)
        if a is None or b is None:
            raise InputError("--swap sets must be finite elements of the truncated monoid")
        f = autosearch.transposition(M, a, b)
    else:
        f = list(range(len(M)))
    if len(f) != len(M):
        raise InputError(f"--perm needs {len(M)} entries, got {len(f)}")
    rep = autosearch.proof_pipeline(M, f)
    lines = [f"{s.name}: {'pass' if s.passed else 'FAIL'} ({s.checked} checked)" + (f" witness {s.witness}" if s.witness else "")
             for s in rep.steps]
    _emit(args, "\n".join(lines), rep.to_dict())
    return EXIT_OK if rep.passed else EXIT_VERIFY


def _aut_cancellative(args, H):
    M = _monoid(args, H)
    lits = [M.literal(i) for i in autosearch.find_cancellative(M)]
    _emit(args, " ".join(lits), {"cancellative": lits})


def _verify(args) -> int:
    from .acceptance import run_all

    results = run_all(echo=print if args.format == "text" else None)
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(json.dumps({"schema": "1", "passed": ok, "criteria": [
            {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ]}, sort_keys=True))
    else:
        print("all criteria passed" if ok else "verification FAILED")
    return EXIT_OK if ok else EXIT_VERIFY


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
