"""Command-line front end.

Subcommands::

    ringprob compute   --ring SPEC [--subring NAME]
    ringprob verify    --theorems IDS (--corpus builtin<=N | --ring SPEC ...) [--cap N]
    ringprob isoclinic --pair SPEC1 SPEC2 [--subring NAME1 NAME2] [--budget N]
    ringprob subrings  --ring SPEC [--cap N]

A SPEC is a ring-spec file, a builtin call such as ``zn(8)``, or inline spec
text with ``;`` between lines. Exit codes: 0 success, 1 a theorem check
failed, 2 input or usage error, 3 a budget or cap was exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .abelian import DEFAULT_CAP
from .bounds import REGISTRY, resolve_theorems, run_sweep
from .corpus import builtin_corpus, entry_for, parse_corpus_selector
from .errors import CapExceeded, RingProbError, RingSpecError, SearchBudgetExceeded
from .isoclin import (
    DEFAULT_BUDGET,
    RingPair,
    decide_isoclinism,
    pair_invariants,
    verify_coset_commutator_iso,
    verify_invariance,
)
from .prob import pr_all
from .report import Report
from .ring import (
    FiniteRing,
    center,
    centralizer,
    commutator_set,
    commutator_subgroup,
    enumerate_subrings,
    is_ideal,
    relative_center,
    subring_as_ring,
)
from .ringspec import RingSpecDocument, load_ring_argument

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _coords(R: FiniteRing, elements) -> list[list[int]]:
    return [list(R.coords(x)) for x in sorted(elements)]


def _input(label: str, doc: RingSpecDocument) -> dict:
    return {"label": label, "sha256": doc.digest}


def _ring_summary(R: FiniteRing) -> dict:
    return {
        "name": R.name,
        "order": R.order,
        "cyclic_orders": list(R.additive.cyclic_orders),
        "invariant_factors": list(R.additive.invariant_factors()),
        "commutative": R.is_commutative,
    }


def cmd_compute(doc: RingSpecDocument, subring: str | None = None) -> Report:
    """Pr(R), and for a subring S: Pr(S,R), Pr(S), Z(S,R), K(S,R), [S,R] and
    the centralizer orders |C_R(s)|. Every probability is cross-checked by
    all three computation routes."""
    R = doc.ring
    report = Report("compute", inputs=[_input("ring", doc)])
    Z = center(R)
    report.results.append({
        "kind": "ring",
        **_ring_summary(R),
        "pr": pr_all(R.whole(), R),
        "center": _coords(R, Z.members),
    })
    if subring is not None or doc.subrings:
        S = doc.subring(subring)
        label = subring or next(iter(doc.subrings))
        ZS = relative_center(S, R)
        K = commutator_subgroup(S, R)
        S_ring = subring_as_ring(S)
        report.results.append({
            "kind": "subring",
            "subring": label,
            "order": S.order,
            "elements": _coords(R, S.members),
            "commutative": S.is_commutative,
            "pr_relative": pr_all(S, R),
            "pr_subring": pr_all(S_ring.whole(), S_ring),
            "relative_center": _coords(R, ZS.members),
            "commutator_set": _coords(R, commutator_set(S, R)),
            "commutator_subgroup": _coords(R, K.members),
            "centralizer_orders": [
                {"element": list(R.coords(s)), "order": centralizer(R.whole(), s).order}
                for s in S.sorted_elements],
        })
    report.summary = {"results": len(report.results)}
    return report


def _verify_entries(docs: list[RingSpecDocument], cap: int):
    for doc in docs:
        R = doc.ring
        if R.order > cap:
            raise CapExceeded(f"ring order {R.order} exceeds cap {cap}")
        yield entry_for(R, subring_cap=cap, noncommutative_cap=cap)


def cmd_verify(theorems: str, corpus: str | None = None,
               docs: list[RingSpecDocument] | None = None, cap: int = DEFAULT_CAP,
               max_failures: int = 20) -> Report:
    ids = resolve_theorems(theorems.split(",") if theorems != "all" else "all")
    report = Report("verify")
    if corpus is not None:
        n = parse_corpus_selector(corpus)
        if n > cap:
            raise CapExceeded(f"corpus order bound {n} exceeds cap {cap}")
        entries = list(builtin_corpus(n))
        report.inputs.append({"label": "corpus", "selector": f"builtin<={n}"})
    else:
        docs = docs or []
        entries = list(_verify_entries(docs, cap))
        report.inputs.extend(_input(f"ring[{i}]", d) for i, d in enumerate(docs))
    stats = run_sweep(entries, ids, max_failures=max_failures)
    report.results = [stats[t].to_dict() for t in ids]
    failed = sum(s.failed for s in stats.values())
    report.summary = {
        "theorems": len(ids),
        "rings": len(entries),
        "pairs": sum(len(e.subrings) for e in entries),
        "checked": sum(s.checked for s in stats.values()),
        "vacuous": sum(s.vacuous for s in stats.values()),
        "passed": sum(s.passed for s in stats.values()),
        "failed": failed,
    }
    report.exit_status = EXIT_FAILED if failed else EXIT_OK
    return report


def cmd_isoclinic(doc1: RingSpecDocument, doc2: RingSpecDocument,
                  subrings: tuple[str | None, str | None] = (None, None),
                  budget: int = DEFAULT_BUDGET) -> Report:
    P1 = RingPair(doc1.ring, doc1.subring(subrings[0]))
    P2 = RingPair(doc2.ring, doc2.subring(subrings[1]))
    report = Report("isoclinic", inputs=[_input("pair[0]", doc1), _input("pair[1]", doc2)])
    result = decide_isoclinism(P1, P2, budget)
    report.results.append({
        "kind": "decision",
        "status": result.status,
        "reason": result.reason,
        "candidates_examined": result.candidates_examined,
        "invariants": [pair_invariants(P1).to_dict(), pair_invariants(P2).to_dict()],
    })
    failed = False
    if result.witness is not None:
        report.results.append({"kind": "witness", **result.witness.to_dict(P1, P2)})
        for check in (verify_invariance(P1, P2, result.witness),
                      verify_coset_commutator_iso(P1, P2, result.witness)):
            report.results.append({"kind": "check", **check.to_dict()})
            failed |= not check.passed
    report.summary = {"status": result.status, "checks_failed": int(failed)}
    if result.status == "undecided":
        report.exit_status = EXIT_BUDGET
    else:
        report.exit_status = EXIT_FAILED if failed else EXIT_OK
    return report


def cmd_subrings(doc: RingSpecDocument, cap: int = DEFAULT_CAP) -> Report:
    R = doc.ring
    report = Report("subrings", inputs=[_input("ring", doc)])
    for S in enumerate_subrings(R, cap=cap):
        report.results.append({
            "order": S.order,
            "elements": _coords(R, S.members),
            "generators": [list(R.coords(g)) for g in S.generators],
            "commutative": S.is_commutative,
            "ideal": is_ideal(R, S),
            "pr": pr_all(S, R),
        })
    report.summary = {"ring": R.name, "order": R.order, "subrings": len(report.results)}
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ringprob",
                                     description="Exact commuting probabilities of finite rings.")
    parser.add_argument("--version", action="version", version=f"ringprob {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text", "csv"), default="text")
        return p

    p = common(sub.add_parser("compute", help="commuting probabilities and invariants"))
    p.add_argument("--ring", required=True)
    p.add_argument("--subring")

    p = common(sub.add_parser("verify", help="check the theorem registry over rings"))
    p.add_argument("--theorems", default="all",
                   help="'all' or comma-separated ids: " + ", ".join(REGISTRY))
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--corpus", help="builtin<=N")
    src.add_argument("--ring", action="append")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--max-failures", type=int, default=20)

    p = common(sub.add_parser("isoclinic", help="decide Z-isoclinism of two pairs"))
    p.add_argument("--pair", nargs=2, required=True, metavar=("SPEC1", "SPEC2"))
    p.add_argument("--subring", nargs=2, metavar=("NAME1", "NAME2"))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = common(sub.add_parser("subrings", help="list every subring with Pr(S,R)"))
    p.add_argument("--ring", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    return parser


def run(args) -> Report:
    if args.command == "compute":
        return cmd_compute(load_ring_argument(args.ring), args.subring)
    if args.command == "verify":
        docs = [load_ring_argument(r) for r in args.ring] if args.ring else None
        return cmd_verify(args.theorems, args.corpus, docs, args.cap, args.max_failures)
    if args.command == "isoclinic":
        docs = [load_ring_argument(s) for s in args.pair]
        return cmd_isoclinic(docs[0], docs[1], tuple(args.subring or (None, None)), args.budget)
    if args.command == "subrings":
        return cmd_subrings(load_ring_argument(args.ring), args.cap)
    raise AssertionError(args.command)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = run(args)
    except (CapExceeded, SearchBudgetExceeded) as exc:
        print(f"ringprob: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (RingSpecError, KeyError, ValueError, RingProbError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"ringprob: {msg}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(report.render(args.format))
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
