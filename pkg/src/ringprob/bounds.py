"""Executable checks for the commuting-probability bounds.

Each ``check_*`` function evaluates one inequality (and, where there is one,
its equality condition) exactly and returns a :class:`TheoremCheck`. Inputs
that violate a theorem's hypotheses produce ``hypotheses_hold=False`` rather
than an exception, so sweeps can record and skip them. ``REGISTRY`` maps every
theorem id to the check that covers it and the kind of tuple it runs on;
:func:`run_sweep` drives the registry over a corpus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import abelian
from .errors import MembershipError, PreconditionError
from .prob import fraction_str, pr_pair_count
from .ring import (
    FiniteRing,
    Subring,
    _as_subring,
    centralizer,
    commutator_set,
    commutator_subgroup,
    element_commutator_subgroup,
    is_ideal,
    quotient_ring_map,
    relative_center,
    smallest_prime_divisor,
    sum_set,
)


@dataclass
class TheoremCheck:
    theorem_id: str
    hypotheses_hold: bool
    passed: bool
    lhs: Fraction | None = None
    rhs: Fraction | None = None
    inequality_holds: bool | None = None
    equality_attained: bool | None = None
    equality_condition_predicted: bool | None = None
    p: int | None = None
    witness: str | None = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "hypotheses_hold": self.hypotheses_hold,
            "passed": self.passed,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "inequality_holds": self.inequality_holds,
            "equality_attained": self.equality_attained,
            "equality_condition_predicted": self.equality_condition_predicted,
            "p": self.p,
            "witness": self.witness,
            "details": {k: _jsonable(v) for k, v in self.details.items()},
        }


def _jsonable(v):
    if isinstance(v, Fraction):
        return fraction_str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _vacuous(theorem_id, reason, **details) -> TheoremCheck:
    return TheoremCheck(theorem_id, False, True, details={"reason": reason, **details})


# --------------------------------------------------------------------------
# memoised invariants (cached on the parent ring)

def _memo(R: FiniteRing, name: str) -> dict:
    return R._memo.setdefault(("bounds", name), {})


def _pr(S, T) -> Fraction:
    S, T = _as_subring(S), _as_subring(T)
    cache = _memo(S.parent, "pr")
    key = (S.members, T.members)
    if key not in cache:
        cache[key] = pr_pair_count(S, T)
    return cache[key]


def _zrel(S: Subring) -> Subring:
    cache = _memo(S.parent, "zrel")
    if S.members not in cache:
        cache[S.members] = relative_center(S, S.parent)
    return cache[S.members]


def _kset(S: Subring) -> frozenset[int]:
    cache = _memo(S.parent, "kset")
    if S.members not in cache:
        cache[S.members] = commutator_set(S, S.parent)
    return cache[S.members]


def _ksub(S: Subring) -> frozenset[int]:
    cache = _memo(S.parent, "ksub")
    if S.members not in cache:
        cache[S.members] = commutator_subgroup(S, S.parent).members
    return cache[S.members]


def _spans(S: Subring, r: int) -> bool:
    """Whether S + C_R(r) = R."""
    R = S.parent
    cache = _memo(R, "spans")
    key = (S.members, r)
    if key not in cache:
        cache[key] = len(sum_set(R, S.members, R.centralizer_of(r))) == R.order
    return cache[key]


def _describe(S: Subring) -> str:
    R = S.parent
    els = [list(R.coords(x)) for x in S.sorted_elements]
    return f"ring={R.name} S={els}"


def _pair_args(S, R) -> tuple[Subring, FiniteRing]:
    S = _as_subring(S)
    if R is None:
        R = S.parent
    if S.parent is not R:
        raise MembershipError("subring does not belong to the given ring")
    return S, R


def _finish(check: TheoremCheck, context: str) -> TheoremCheck:
    if not check.passed and check.witness is None:
        check.witness = context
    return check


# --------------------------------------------------------------------------
# index lemma and the Pr(R) <= Pr(S,R) <= Pr(S) family

def check_lemma_index(S, R: FiniteRing, r: int) -> TheoremCheck:
    """|S : C_S(r)| <= |R : C_R(r)|, equality iff S + C_R(r) = R."""
    S, R = _pair_args(S, R)
    if r not in R:
        raise MembershipError(f"{r!r} is not an element of {R.name}")
    lhs = Fraction(S.order, centralizer(S, r).order)
    rhs = Fraction(R.order, len(R.centralizer_of(r)))
    ineq = lhs <= rhs
    attained = lhs == rhs
    predicted = _spans(S, r)
    return _finish(TheoremCheck(
        "lemma1", True, ineq and attained == predicted, lhs, rhs, ineq, attained, predicted,
        details={"r": list(R.coords(r))},
    ), f"{_describe(S)} r={list(R.coords(r))}")


def check_sandwich(S, R: FiniteRing | None = None) -> TheoremCheck:
    """Pr(R) <= Pr(S, R) <= Pr(S)."""
    S, R = _pair_args(S, R)
    a, b, c = _pr(R, R), _pr(S, R), _pr(S, S)
    ineq = a <= b <= c
    return _finish(TheoremCheck(
        "theorem01", True, ineq, a, c, ineq, a == b == c,
        details={"pr_R": a, "pr_SR": b, "pr_S": c},
    ), _describe(S))


def check_equality_conditions(S, R: FiniteRing | None = None) -> TheoremCheck:
    """Both biconditionals:
    Pr(S,R) = Pr(R) iff S + C_R(r) = R for all r in R, and
    Pr(S,R) = Pr(S) iff S + C_R(r) = R for all r in S.
    """
    S, R = _pair_args(S, R)
    a, b, c = _pr(R, R), _pr(S, R), _pr(S, S)
    cond_r = all(_spans(S, r) for r in R.elements())
    cond_s = cond_r or all(_spans(S, r) for r in S.sorted_elements)
    att_r, att_s = a == b, b == c
    ok = (att_r == cond_r) and (att_s == cond_s)
    return _finish(TheoremCheck(
        "cor1", True, ok, b, a, None, att_r, cond_r,
        details={"pr_R": a, "pr_SR": b, "pr_S": c,
                 "part2_attained": att_s, "part2_predicted": cond_s},
    ), _describe(S))


def check_chain(S1, S2, R: FiniteRing | None = None) -> TheoremCheck:
    """Pr(S2, R) <= Pr(S1, R) <= Pr(S1, S2) for S1 ⊆ S2, plus the outer
    comparisons Pr(R) <= Pr(S2, R) and Pr(S1, S2) <= Pr(S1)."""
    S1, R = _pair_args(S1, R)
    S2, _ = _pair_args(S2, R)
    if not S1.members <= S2.members:
        return _vacuous("refine", "S1 is not contained in S2")
    a, b, c = _pr(S2, R), _pr(S1, R), _pr(S1, S2)
    outer_lo, outer_hi = _pr(R, R), _pr(S1, S1)
    ineq = a <= b <= c and outer_lo <= a and c <= outer_hi
    return _finish(TheoremCheck(
        "refine", True, ineq, a, c, ineq,
        details={"pr_S2R": a, "pr_S1R": b, "pr_S1S2": c, "pr_R": outer_lo, "pr_S1": outer_hi},
    ), f"{_describe(S1)} S2={[list(R.coords(x)) for x in S2.sorted_elements]}")


# --------------------------------------------------------------------------
# bounds in terms of the smallest prime divisor

def _prime_bounds(p, z, s, n):
    lower = Fraction(z, s) + Fraction(p * (s - z), s * n)
    upper = Fraction((p - 1) * z + s, p * s)
    return lower, upper


def check_prime_bounds(S, R: FiniteRing | None = None, theorem_id="theorem001") -> TheoremCheck:
    """|Z|/|S| + p(|S|-|Z|)/(|S||R|) <= Pr(S,R) <= ((p-1)|Z| + |S|)/(p|S|)."""
    S, R = _pair_args(S, R)
    if R.order < 2:
        return _vacuous(theorem_id, "trivial ring has no smallest prime divisor")
    p = smallest_prime_divisor(R.order)
    z, s = _zrel(S).order, S.order
    lower, upper = _prime_bounds(p, z, s, R.order)
    val = _pr(S, R)
    ineq = lower <= val <= upper
    return _finish(TheoremCheck(
        theorem_id, True, ineq, lower, upper, ineq, val in (lower, upper), p=p,
        details={"pr": val, "center_order": z, "tight_lower": val == lower,
                 "tight_upper": val == upper},
    ), _describe(S))


def check_pr_prime_bounds(R: FiniteRing) -> TheoremCheck:
    """S = R case, plus the comparison with (p^2+p-1)/p^3 for non-commutative R."""
    check = check_prime_bounds(R.whole(), R, theorem_id="corprbd")
    if not check.hypotheses_hold or R.is_commutative:
        check.details["noncommutative"] = False
        return check
    p = check.p
    cap = Fraction(p * p + p - 1, p ** 3)
    better = check.rhs <= cap
    below = check.details["pr"] <= cap
    index_ok = R.order // check.details["center_order"] >= p * p
    check.details.update(noncommutative=True, classical_bound=cap, upper_beats_classical=better,
                         pr_below_classical=below, center_index_at_least_p2=index_ok)
    check.passed = check.passed and better and below and index_ok
    check.inequality_holds = check.passed
    return _finish(check, f"ring={R.name}")


def check_noncentral_thresholds(S, R: FiniteRing | None = None,
                                theorem_id="theorem02") -> TheoremCheck:
    """For S not inside Z(R): Pr(S,R) <= (2p-1)/p^2 (S commutative) or
    (p^2+p-1)/p^3 (S non-commutative). ``theorem_id="theorem2"`` uses the
    p-free thresholds 3/4 and 5/8."""
    S, R = _pair_args(S, R)
    if _zrel(S).members == S.members:
        return _vacuous(theorem_id, "S is contained in Z(R)")
    p = smallest_prime_divisor(R.order)
    comm = S.is_commutative
    if theorem_id == "theorem2":
        bound = Fraction(3, 4) if comm else Fraction(5, 8)
    else:
        bound = Fraction(2 * p - 1, p * p) if comm else Fraction(p * p + p - 1, p ** 3)
    val = _pr(S, R)
    ineq = val <= bound
    return _finish(TheoremCheck(
        theorem_id, True, ineq, val, bound, ineq, val == bound, p=p,
        details={"s_commutative": comm},
    ), _describe(S))


def _extremal_targets(p):
    return Fraction(2 * p - 1, p * p), Fraction(p * p + p - 1, p ** 3)


def _quotient_factors(S: Subring) -> list[int]:
    Z = _zrel(S)
    R = S.parent
    SG = abelian.Subgroup(R.additive, S.generators, S.members)
    return abelian.quotient(SG, abelian.Subgroup(R.additive, (), Z.members)).invariant_factors()


def classify_extremal(S, R: FiniteRing | None = None) -> TheoremCheck:
    """Structure of S/Z(S,R) when Pr(S,R) attains (2p-1)/p^2 or (p^2+p-1)/p^3.

    p is the smallest prime dividing |R|. Raises PreconditionError when Pr(S,R)
    is not the extremal value matching S's commutativity.
    """
    S, R = _pair_args(S, R)
    if R.order < 2:
        raise PreconditionError("trivial ring")
    p = smallest_prime_divisor(R.order)
    comm = S.is_commutative
    target = _extremal_targets(p)[0 if comm else 1]
    val = _pr(S, R)
    if val != target:
        raise PreconditionError(
            f"Pr(S,R) = {fraction_str(val)} is not the extremal value {fraction_str(target)}")
    factors = _quotient_factors(S)
    expected = [p] if comm else [p, p]
    divides = R.order % p == 0
    return _finish(TheoremCheck(
        "dc001" if comm else "dc002", True, divides and factors == expected, val, target,
        p=p, details={"quotient_factors": factors, "expected_factors": expected},
    ), _describe(S))


def _prime_root(q: int, k: int) -> int | None:
    r = round(q ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 2 and c ** k == q and smallest_prime_divisor(c) == c:
            return c
    return None


def check_extremal(S, R: FiniteRing | None = None, theorem_id="dc001") -> TheoremCheck:
    """Registry form of the extremal-structure theorems.

    dc001/dc002: if Pr(S,R) = (2p-1)/p^2 (resp. (p^2+p-1)/p^3) for some prime
    p, then p | |R|, and if p is the smallest such prime the quotient is Z_p
    (resp. Z_p x Z_p). dc: the p = 2 values 3/4 and 5/8.
    """
    S, R = _pair_args(S, R)
    comm = S.is_commutative
    val = _pr(S, R)
    if theorem_id == "dc":
        if not ((comm and val == Fraction(3, 4)) or (not comm and val == Fraction(5, 8))):
            return _vacuous(theorem_id, "Pr(S,R) is not 3/4 with S commutative or 5/8 otherwise")
        p = 2
    else:
        if comm != (theorem_id == "dc001"):
            return _vacuous(theorem_id, "commutativity of S does not match")
        p = _prime_root(val.denominator, 2 if comm else 3)
        if p is None or val != _extremal_targets(p)[0 if comm else 1]:
            return _vacuous(theorem_id, "Pr(S,R) is not an extremal value")
    divides = R.order % p == 0
    smallest = divides and smallest_prime_divisor(R.order) == p
    factors = _quotient_factors(S)
    expected = [p] if comm else [p, p]
    ok = divides and (factors == expected or not smallest)
    if theorem_id == "dc":
        ok = divides and factors == expected
    return _finish(TheoremCheck(
        theorem_id, True, ok, val, _extremal_targets(p)[0 if comm else 1], p=p,
        details={"p_divides_order": divides, "p_smallest": smallest,
                 "quotient_factors": factors, "expected_factors": expected},
    ), _describe(S))


# --------------------------------------------------------------------------
# quotients by ideals

def check_quotient_factorization(H, N, R: FiniteRing | None = None,
                                 theorem_id="theorem3") -> TheoremCheck:
    """Pr(H, R) <= Pr(H/N, R/N) Pr(N), with equality if N ∩ [H, R] = {0}.

    ``theorem_id="lemma2"`` checks the centralizer inclusion
    (C_H(x) + N)/N ⊆ C_{H/N}(x + N) for every x instead, with equality under
    the same condition.
    """
    H, R = _pair_args(H, R)
    N, _ = _pair_args(N, R)
    if not N.members <= H.members:
        return _vacuous(theorem_id, "N is not contained in H")
    if not is_ideal(R, N):
        return _vacuous(theorem_id, "N is not an ideal of R")
    cond = not (N.members & _ksub(H) - {0})
    qr = quotient_ring_map(R, N)
    Hq = qr.image(H)
    noncomm = not R.is_commutative
    context = f"{_describe(H)} N={[list(R.coords(x)) for x in N.sorted_elements]}"
    if theorem_id == "lemma2":
        proj = qr.projection
        included = equal = True
        for x in R.elements():
            img = frozenset(proj[c] for c in centralizer(H, x).members)
            cent = centralizer(Hq, proj[x]).members
            included &= img <= cent
            equal &= img == cent
        ok = included and (equal or not cond)
        return _finish(TheoremCheck(
            theorem_id, True, ok, None, None, included, equal, cond,
            details={"ring_noncommutative": noncomm},
        ), context)
    lhs = _pr(H, R)
    rhs = _pr(Hq, qr.ring) * _pr(N, N)
    ineq = lhs <= rhs
    attained = lhs == rhs
    return _finish(TheoremCheck(
        theorem_id, True, ineq and (attained or not cond), lhs, rhs, ineq, attained, cond,
        details={"ring_noncommutative": noncomm,
                 "equality_without_condition": attained and not cond},
    ), context)


# --------------------------------------------------------------------------
# commutator subgroups and the lower bounds

def check_centralizer_quotient_iso(R: FiniteRing, x: int) -> TheoremCheck:
    """R/C_R(x) ≅ [x, R] as additive groups."""
    if x not in R:
        raise MembershipError(f"{x!r} is not an element of {R.name}")
    C = abelian.Subgroup(R.additive, (), R.centralizer_of(x))
    left = abelian.quotient(R.additive, C).invariant_factors()
    right = abelian.invariant_factors(element_commutator_subgroup(R, x))
    return _finish(TheoremCheck(
        "obs2.1", True, left == right, details={"quotient_factors": left,
                                                 "commutator_factors": right},
    ), f"ring={R.name} x={list(R.coords(x))}")


def check_commutator_chain(S, R: FiniteRing | None = None) -> TheoremCheck:
    """|[S, R]| >= |K(S, R)| >= |[s, R]| = |R : C_R(s)| for every s in S."""
    S, R = _pair_args(S, R)
    k, c = len(_kset(S)), len(_ksub(S))
    ok = c >= k
    bad = None
    for s in S.sorted_elements:
        e = len(set(R.bracket_table[s]))
        idx = R.order // len(R.centralizer_of(s))
        if not (k >= e and e == idx):
            ok, bad = False, s
            break
    check = TheoremCheck("eqlb", True, ok, Fraction(c), Fraction(k), ok,
                         details={"commutator_subgroup_order": c, "commutator_set_order": k})
    if bad is not None:
        check.witness = f"{_describe(S)} s={list(R.coords(bad))}"
    return _finish(check, _describe(S))


def _lower_bound(size, t):
    return Fraction(1, size) * (1 + Fraction(size - 1, t))


def check_lower_bounds(S, R: FiniteRing | None = None, theorem_id="newlb1") -> TheoremCheck:
    """Lower bounds through |K(S,R)| (newlb1, newlb3) or |[S,R]| (newlb2,
    newlb4), and their comparison with each other and with the prime bound
    (``bound-comparisons``). newlb3/newlb4 require S = R."""
    S, R = _pair_args(S, R)
    if theorem_id in ("newlb3", "newlb4") and S.members != R.whole().members:
        return _vacuous(theorem_id, "ring-level corollary needs S = R")
    z = _zrel(S).order
    t = S.order // z
    kset, ksub = _kset(S), _ksub(S)
    val = _pr(S, R)
    if theorem_id in ("newlb1", "newlb2", "newlb3", "newlb4"):
        size = len(kset) if theorem_id in ("newlb1", "newlb3") else len(ksub)
        bound = _lower_bound(size, t)
        ineq = val >= bound
        strict_needed = z != S.order
        strict_ok = val > Fraction(1, size) if strict_needed else True
        return _finish(TheoremCheck(
            theorem_id, True, ineq and strict_ok, val, bound, ineq and strict_ok, val == bound,
            details={"size": size, "center_index": t, "strict_required": strict_needed},
        ), _describe(S))
    lb1, lb2 = _lower_bound(len(kset), t), _lower_bound(len(ksub), t)
    b_ok = lb1 >= lb2 and ((lb1 == lb2) == (kset == ksub))
    details = {"lb_K": lb1, "lb_commutator": lb2, "K_equals_commutator": kset == ksub}
    a_ok = True
    if ksub != R.whole().members and z != S.order and R.order >= 2:
        p = smallest_prime_divisor(R.order)
        plb, _ = _prime_bounds(p, z, S.order, R.order)
        idx = R.order // len(ksub)
        a_ok = lb2 >= plb and ((lb2 == plb) == (idx == p))
        details.update(prime_lower=plb, commutator_index=idx, p=p, part_a_applies=True,
                       part_a_attained=lb2 == plb, part_a_predicted=idx == p)
    else:
        details["part_a_applies"] = False
    return _finish(TheoremCheck(
        "bound-comparisons", True, a_ok and b_ok, lb1, lb2, lb1 >= lb2, lb1 == lb2,
        kset == ksub, details=details,
    ), _describe(S))


# --------------------------------------------------------------------------
# registry and sweeps

@dataclass(frozen=True)
class TheoremSpec:
    theorem_id: str
    domain: str  # pair | ring | pair_element | element | chain | ideal | ring_ideal
    run: Callable[..., TheoremCheck]
    condition: str | None = None  # "iff" / "if" when an equality condition is stated


def _ring_level(fn, tid):
    return lambda R: fn(R.whole(), R, theorem_id=tid)


REGISTRY: dict[str, TheoremSpec] = {s.theorem_id: s for s in [
    TheoremSpec("lemma1", "pair_element", check_lemma_index, "iff"),
    TheoremSpec("theorem01", "pair", check_sandwich),
    TheoremSpec("cor1", "pair", check_equality_conditions, "iff"),
    TheoremSpec("refine", "chain", check_chain),
    TheoremSpec("theorem001", "pair", check_prime_bounds),
    TheoremSpec("corprbd", "ring", check_pr_prime_bounds),
    TheoremSpec("theorem02", "pair", lambda S, R: check_noncentral_thresholds(S, R, "theorem02")),
    TheoremSpec("theorem2", "pair", lambda S, R: check_noncentral_thresholds(S, R, "theorem2")),
    TheoremSpec("dc001", "pair", lambda S, R: check_extremal(S, R, "dc001")),
    TheoremSpec("dc002", "pair", lambda S, R: check_extremal(S, R, "dc002")),
    TheoremSpec("dc", "pair", lambda S, R: check_extremal(S, R, "dc")),
    TheoremSpec("lemma2", "ideal",
                lambda H, N, R: check_quotient_factorization(H, N, R, "lemma2"), "if"),
    TheoremSpec("theorem3", "ideal",
                lambda H, N, R: check_quotient_factorization(H, N, R, "theorem3"), "if"),
    TheoremSpec("theorem3-corollary", "ring_ideal",
                lambda N, R: check_quotient_factorization(R.whole(), N, R, "theorem3-corollary"),
                "if"),
    TheoremSpec("obs2.1", "element", check_centralizer_quotient_iso),
    TheoremSpec("eqlb", "pair", check_commutator_chain),
    TheoremSpec("newlb1", "pair", lambda S, R: check_lower_bounds(S, R, "newlb1")),
    TheoremSpec("newlb2", "pair", lambda S, R: check_lower_bounds(S, R, "newlb2")),
    TheoremSpec("newlb3", "ring", _ring_level(check_lower_bounds, "newlb3")),
    TheoremSpec("newlb4", "ring", _ring_level(check_lower_bounds, "newlb4")),
    TheoremSpec("bound-comparisons", "pair",
                lambda S, R: check_lower_bounds(S, R, "bound-comparisons"), "iff"),
]}


def resolve_theorems(selector: str | Iterable[str]) -> list[str]:
    if isinstance(selector, str):
        selector = [s.strip() for s in selector.split(",") if s.strip()]
    ids = list(selector)
    if ids == ["all"]:
        return list(REGISTRY)
    unknown = [t for t in ids if t not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown theorem id(s): {', '.join(unknown)}")
    return [t for t in REGISTRY if t in ids]


@dataclass
class TheoremStats:
    theorem_id: str
    checked: int = 0
    vacuous: int = 0
    passed: int = 0
    failed: int = 0
    equality_attained: int = 0
    condition_outcomes: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def record(self, check: TheoremCheck, max_failures: int):
        self.checked += 1
        if not check.hypotheses_hold:
            self.vacuous += 1
            return
        if check.passed:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < max_failures:
                self.failures.append(check.to_dict())
        if check.equality_attained:
            self.equality_attained += 1
        if check.equality_condition_predicted is not None:
            key = (f"predicted={str(check.equality_condition_predicted).lower()},"
                   f"attained={str(bool(check.equality_attained)).lower()}")
            self.condition_outcomes[key] = self.condition_outcomes.get(key, 0) + 1
        if check.details.get("equality_without_condition"):
            self.notes["equality_without_condition"] = \
                self.notes.get("equality_without_condition", 0) + 1
        for name, predicted in check.details.items():
            if name.endswith("_predicted"):
                part = name[: -len("_predicted")]
                attained = check.details[part + "_attained"]
                key = (f"{part}:predicted={str(predicted).lower()},"
                       f"attained={str(attained).lower()}")
                self.condition_outcomes[key] = self.condition_outcomes.get(key, 0) + 1

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "checked": self.checked,
            "vacuous": self.vacuous,
            "passed": self.passed,
            "failed": self.failed,
            "equality_attained": self.equality_attained,
            "condition_outcomes": dict(sorted(self.condition_outcomes.items())),
            "notes": dict(sorted(self.notes.items())),
            "failures": self.failures,
        }


def tasks_for(spec: TheoremSpec, R: FiniteRing, subrings: Sequence[Subring]):
    """Argument tuples for one theorem over one ring and its subrings."""
    d = spec.domain
    if d == "pair":
        for S in subrings:
            yield (S, R)
    elif d == "ring":
        yield (R,)
    elif d == "element":
        for x in R.elements():
            yield (R, x)
    elif d == "pair_element":
        for S in subrings:
            for r in R.elements():
                yield (S, R, r)
    elif d == "chain":
        for S2 in subrings:
            for S1 in subrings:
                if S1.members <= S2.members:
                    yield (S1, S2, R)
    elif d in ("ideal", "ring_ideal"):
        ideal_list = [N for N in subrings if is_ideal(R, N)]
        if d == "ring_ideal":
            for N in ideal_list:
                yield (N, R)
        else:
            for H in subrings:
                for N in ideal_list:
                    if N.members <= H.members:
                        yield (H, N, R)
    else:
        raise ValueError(f"unknown domain {d}")


def run_sweep(entries, theorem_ids: Iterable[str] | str = "all",
              max_failures: int = 20, fail_fast: bool = False) -> dict[str, TheoremStats]:
    """Run the selected checks over ``entries`` (objects with ``ring`` and
    ``subrings``). Results are aggregated per theorem in registry order."""
    ids = resolve_theorems(theorem_ids)
    stats = {t: TheoremStats(t) for t in ids}
    for entry in entries:
        R, subrings = entry.ring, list(entry.subrings)
        for tid in ids:
            spec = REGISTRY[tid]
            for args in tasks_for(spec, R, subrings):
                check = spec.run(*args)
                stats[tid].record(check, max_failures)
                if fail_fast and check.hypotheses_hold and not check.passed:
                    return stats
    return stats
