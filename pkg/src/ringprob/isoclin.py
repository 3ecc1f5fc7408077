"""Z-isoclinism between (subring, ring) pairs, decided by witness search.

A witness is a pair (phi, psi): phi an additive isomorphism
R1/Z(S1,R1) -> R2/Z(S2,R2) carrying S1/Z(S1,R1) onto S2/Z(S2,R2), and psi an
additive isomorphism [S1,R1] -> [S2,R2] with psi([u,v]) = [u',v'] whenever
phi sends the cosets of u, v to those of u', v'.

psi is never searched for. Given phi, the relation {([u,v], [u',v'])}
generates a subgroup G of [S1,R1] ⊕ [S2,R2]; psi exists exactly when G is the
graph of a bijection, and then G is that graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import abelian
from .abelian import QuotientGroup, Subgroup
from .bounds import TheoremCheck
from .errors import InvalidWitness, MembershipError, SearchBudgetExceeded
from .prob import pr_pair_count
from .ring import FiniteRing, Subring, _as_subring, commutator_subgroup, relative_center

DEFAULT_BUDGET = 10 ** 6
LIFT_CHECK_LIMIT = 64


class RingPair:
    """A subring S of a finite ring R with the derived groups of the pair."""

    def __init__(self, ring: FiniteRing, sub: Subring | None = None):
        sub = ring.whole() if sub is None else _as_subring(sub)
        if sub.parent is not ring:
            raise MembershipError("subring does not belong to the given ring")
        self.ring = ring
        self.sub = sub

    def __repr__(self):
        return f"RingPair(|S|={self.sub.order}, R={self.ring.name})"

    @cached_property
    def center(self) -> Subring:
        return relative_center(self.sub, self.ring)

    @cached_property
    def quotient(self) -> QuotientGroup:
        Z = Subgroup(self.ring.additive, (), self.center.members)
        return abelian.quotient(self.ring.additive, Z)

    @cached_property
    def sub_image(self) -> frozenset[int]:
        """S/Z(S,R) as a set of cosets of R/Z(S,R)."""
        return self.quotient.image(self.sub.members)

    @cached_property
    def commutator(self) -> Subgroup:
        return commutator_subgroup(self.sub, self.ring)

    @cached_property
    def probability(self) -> Fraction:
        return pr_pair_count(self.sub, self.ring)

    def coset_bracket(self, u: int, v: int) -> int:
        """[u', v'] for the canonical lifts of cosets u, v."""
        Q = self.quotient
        return self.ring.bracket(Q.lift(u), Q.lift(v))


@dataclass(frozen=True)
class PairInvariants:
    quotient: tuple[int, ...]
    sub_quotient: tuple[int, ...]
    commutator: tuple[int, ...]
    probability: Fraction

    def to_dict(self):
        return {
            "quotient": list(self.quotient),
            "sub_quotient": list(self.sub_quotient),
            "commutator": list(self.commutator),
            "probability": f"{self.probability.numerator}/{self.probability.denominator}",
        }


def pair_invariants(P: RingPair) -> PairInvariants:
    Q = P.quotient
    image = Subgroup(Q, (), P.sub_image)
    return PairInvariants(
        tuple(Q.invariant_factors()),
        tuple(abelian.invariant_factors(image)),
        tuple(abelian.invariant_factors(P.commutator)),
        P.probability,
    )


def _first_difference(a: PairInvariants, b: PairInvariants) -> str | None:
    for name, label in (("quotient", "quotient invariants"),
                        ("sub_quotient", "subring quotient invariants"),
                        ("commutator", "commutator invariants")):
        x, y = getattr(a, name), getattr(b, name)
        if x != y:
            return f"{label} {list(x)} vs {list(y)}"
    if a.probability != b.probability:
        return f"relative commuting probabilities {a.probability} vs {b.probability}"
    return None


@dataclass
class IsoclinismWitness:
    phi: dict[int, int]  # coset of R1/Z1 -> coset of R2/Z2
    psi: dict[int, int]  # element of [S1,R1] -> element of [S2,R2]
    transcript: list[str] = field(default_factory=list)

    def to_dict(self, P1: RingPair, P2: RingPair) -> dict:
        Q1, Q2 = P1.quotient, P2.quotient
        c1, c2 = P1.ring.coords, P2.ring.coords
        return {
            "phi": [{"from": list(c1(Q1.lift(a))), "to": list(c2(Q2.lift(b)))}
                    for a, b in sorted(self.phi.items())],
            "psi": [{"from": list(c1(a)), "to": list(c2(b))} for a, b in sorted(self.psi.items())],
            "transcript": list(self.transcript),
        }


@dataclass
class IsoclinismResult:
    status: str  # isoclinic | not_isoclinic | undecided
    witness: IsoclinismWitness | None
    reason: str
    candidates_examined: int


def _psi_from_phi(P1: RingPair, P2: RingPair, phi: dict[int, int]) -> dict[int, int] | None:
    relation = set()
    for u in sorted(P1.sub_image):
        for v in P1.quotient.elements():
            relation.add((P1.coset_bracket(u, v), P2.coset_bracket(phi[u], phi[v])))
    add1, add2 = P1.ring.add, P2.ring.add
    graph = {(0, 0)}
    for g in sorted(relation):
        if g in graph:
            continue
        step = g
        grown = set(graph)
        while step not in graph:
            grown.update((add1(a, step[0]), add2(b, step[1])) for a, b in graph)
            step = (add1(step[0], g[0]), add2(step[1], g[1]))
        graph = grown
    psi = {}
    for a, b in graph:
        if psi.setdefault(a, b) != b:
            return None  # not single-valued
    if len(set(psi.values())) != len(psi):
        return None  # not injective
    if set(psi) != P1.commutator.members or set(psi.values()) != P2.commutator.members:
        return None
    return psi


def decide_isoclinism(P1: RingPair, P2: RingPair, budget: int = DEFAULT_BUDGET,
                      prefilter: bool = True) -> IsoclinismResult:
    """Full decision procedure; never raises on budget exhaustion."""
    if prefilter:
        diff = _first_difference(pair_invariants(P1), pair_invariants(P2))
        if diff is not None:
            return IsoclinismResult("not_isoclinic", None, diff, 0)
    target = P2.sub_image
    examined = 0
    for iso in abelian.isomorphisms(P1.quotient, P2.quotient):
        examined += 1
        if examined > budget:
            return IsoclinismResult("undecided", None,
                                    f"budget of {budget} phi candidates exhausted", budget)
        phi = iso.mapping
        if frozenset(phi[c] for c in P1.sub_image) != target:
            continue
        psi = _psi_from_phi(P1, P2, phi)
        if psi is None:
            continue
        witness = IsoclinismWitness(dict(sorted(phi.items())), dict(sorted(psi.items())))
        witness.transcript = verify_witness(P1, P2, witness)
        return IsoclinismResult("isoclinic", witness,
                                f"witness found after {examined} phi candidates", examined)
    if examined == 0:
        reason = (f"quotient invariants {P1.quotient.invariant_factors()} vs "
                  f"{P2.quotient.invariant_factors()}")
        if P1.quotient.invariant_factors() == P2.quotient.invariant_factors():
            reason = "no additive isomorphism between the quotients"
    else:
        reason = f"none of {examined} phi candidates admits a compatible psi"
    return IsoclinismResult("not_isoclinic", None, reason, examined)


def find_isoclinism(P1: RingPair, P2: RingPair, budget: int = DEFAULT_BUDGET,
                    prefilter: bool = True) -> IsoclinismWitness | None:
    """A Z-isoclinism witness, or None when none exists.

    Raises SearchBudgetExceeded when more than ``budget`` phi candidates would
    be needed to decide.
    """
    result = decide_isoclinism(P1, P2, budget, prefilter)
    if result.status == "undecided":
        raise SearchBudgetExceeded(result.reason)
    return result.witness


def rings_isoclinic(R1: FiniteRing, R2: FiniteRing,
                    budget: int = DEFAULT_BUDGET) -> IsoclinismWitness | None:
    return find_isoclinism(RingPair(R1), RingPair(R2), budget)


# --------------------------------------------------------------------------
# independent verification

def verify_witness(P1: RingPair, P2: RingPair, w: IsoclinismWitness) -> list[str]:
    """Re-check every defining condition of a witness from scratch.

    Returns the transcript of verified conditions; raises InvalidWitness on
    the first failure.
    """
    Q1, Q2 = P1.quotient, P2.quotient
    phi, psi = w.phi, w.psi
    log = []

    def need(ok, what):
        if not ok:
            raise InvalidWitness(what)
        log.append(what)

    need(set(phi) == set(Q1.elements()) and sorted(phi.values()) == list(Q2.elements()),
         f"phi is a bijection of {Q1.order} cosets")
    need(all(phi[Q1.add(a, b)] == Q2.add(phi[a], phi[b])
             for a in Q1.elements() for b in Q1.elements()),
         "phi is additive")
    need(frozenset(phi[c] for c in P1.sub_image) == P2.sub_image,
         f"phi maps S1/Z1 onto S2/Z2 ({len(P1.sub_image)} cosets)")
    C1, C2 = P1.commutator.members, P2.commutator.members
    need(set(psi) == C1 and set(psi.values()) == C2 and len(C1) == len(C2),
         f"psi is a bijection [S1,R1] -> [S2,R2] of order {len(C1)}")
    add1, add2 = P1.ring.add, P2.ring.add
    need(all(psi[add1(a, b)] == add2(psi[a], psi[b]) for a in C1 for b in C1),
         "psi is additive")
    R1, R2 = P1.ring, P2.ring
    lift = Q2.lift
    ok = all(
        psi[R1.bracket(u, v)] == R2.bracket(lift(phi[Q1.project(u)]), lift(phi[Q1.project(v)]))
        for u in P1.sub.sorted_elements for v in R1.elements())
    need(ok, f"psi([u,v]) = [u',v'] for all {P1.sub.order * R1.order} pairs (u,v) in S1 x R1")
    if R2.order <= LIFT_CHECK_LIMIT:
        Z2 = P2.center.sorted_elements
        ok = all(R2.bracket(add2(lift(a), z1), add2(lift(b), z2)) == R2.bracket(lift(a), lift(b))
                 for a in P2.sub_image for b in Q2.elements() for z1 in Z2 for z2 in Z2)
        need(ok, "[u',v'] is independent of the chosen lifts (all central shifts checked)")
    return log


def verify_invariance(P1: RingPair, P2: RingPair, w: IsoclinismWitness) -> TheoremCheck:
    """Pr(S1, R1) = Pr(S2, R2) for pairs joined by a verified witness."""
    transcript = verify_witness(P1, P2, w)
    a, b = P1.probability, P2.probability
    return TheoremCheck("isoclinism-invariance", True, a == b, a, b, None, a == b,
                        details={"conditions_verified": len(transcript)},
                        witness=None if a == b else f"{P1!r} vs {P2!r}")


def verify_coset_commutator_iso(P1: RingPair, P2: RingPair,
                                w: IsoclinismWitness) -> TheoremCheck:
    """[s1, R1] ≅ [s2, R2] whenever phi sends s1's coset to s2's, with psi
    restricting to an isomorphism between them."""
    verify_witness(P1, P2, w)
    Q1, Q2 = P1.quotient, P2.quotient
    R1, R2 = P1.ring, P2.ring
    bad = None
    for c in sorted(P1.sub_image):
        s1, s2 = Q1.lift(c), Q2.lift(w.phi[c])
        E1 = frozenset(R1.bracket_table[s1])
        E2 = frozenset(R2.bracket_table[s2])
        image = frozenset(w.psi[x] for x in E1)
        f1 = abelian.invariant_factors(abelian.as_subgroup(R1.additive, E1))
        f2 = abelian.invariant_factors(abelian.as_subgroup(R2.additive, E2))
        if image != E2 or f1 != f2:
            bad = f"coset of {list(R1.coords(s1))}"
            break
    return TheoremCheck("isolem", True, bad is None, inequality_holds=None,
                        details={"cosets_checked": len(P1.sub_image)}, witness=bad)


def isoclinism_sweep(pairs: list[RingPair], budget: int = DEFAULT_BUDGET) -> dict:
    """Pairwise decisions over ``pairs`` with invariance checks and
    transitivity statistics (recorded, not asserted)."""
    n = len(pairs)
    verdict = [[None] * n for _ in range(n)]
    invariance_failures = 0
    witnesses = 0
    undecided = 0
    for i in range(n):
        for j in range(n):
            r = decide_isoclinism(pairs[i], pairs[j], budget)
            verdict[i][j] = r.status
            if r.status == "undecided":
                undecided += 1
            if r.witness is not None:
                witnesses += 1
                if not verify_invariance(pairs[i], pairs[j], r.witness).passed:
                    invariance_failures += 1
    iso = [[v == "isoclinic" for v in row] for row in verdict]
    triples = closed = 0
    for i in range(n):
        for j in range(n):
            if not iso[i][j]:
                continue
            for k in range(n):
                if iso[j][k]:
                    triples += 1
                    closed += iso[i][k]
    symmetric = all(iso[i][j] == iso[j][i] for i in range(n) for j in range(n))
    return {
        "pairs": n,
        "witnesses": witnesses,
        "undecided": undecided,
        "invariance_failures": invariance_failures,
        "symmetric": symmetric,
        "transitivity_triples": triples,
        "transitivity_closed": closed,
        "verdicts": verdict,
    }
