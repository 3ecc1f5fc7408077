"""Exact relative commuting probabilities.

Three independent routes to the same rational:

* ``pr_pair_count``: count commuting pairs in S x T directly;
* ``pr_centralizer_sum``: sum centralizer orders, both ways round;
* ``pr_coset_form``: average 1/|[s, R]| over cosets of the relative center.

``Fraction`` is the probability type: always reduced, exact.
"""

from __future__ import annotations

from fractions import Fraction

from . import abelian
from .errors import InternalMismatch, MembershipError
from .ring import (
    FiniteRing,
    Subring,
    _as_subring,
    centralizer,
    element_commutator_subgroup,
    relative_center,
)

Probability = Fraction


def _pair(S, T):
    S, T = _as_subring(S), _as_subring(T)
    if S.parent is not T.parent:
        raise MembershipError("both arguments must live in the same ring")
    if not S.members <= T.members:
        raise MembershipError("first argument must be contained in the second")
    return S, T


def pr_pair_count(S, T) -> Fraction:
    """|{(s, t) in S x T : st = ts}| / (|S||T|)."""
    S, T = _pair(S, T)
    mt = S.parent.mul_table
    tt = T.sorted_elements
    hits = 0
    for s in S.sorted_elements:
        row = mt[s]
        hits += sum(1 for t in tt if row[t] == mt[t][s])
    return Fraction(hits, S.order * T.order)


def pr_centralizer_sum(S, T) -> Fraction:
    """(1/|S||T|) sum_{s in S} |C_T(s)|, checked against sum_{t in T} |C_S(t)|."""
    S, T = _pair(S, T)
    by_s = sum(centralizer(T, s).order for s in S.sorted_elements)
    by_t = sum(centralizer(S, t).order for t in T.sorted_elements)
    if by_s != by_t:
        raise InternalMismatch(f"centralizer sums disagree: {by_s} != {by_t}")
    return Fraction(by_s, S.order * T.order)


def pr_coset_form(S, R) -> Fraction:
    """(1/|S : Z(S,R)|) * sum over cosets s + Z(S,R) of 1/|[s, R]|.

    Uses R/C_R(s) ≅ [s, R]. Only defined with the whole ring as ambient.
    """
    if isinstance(R, Subring):
        if R.members != R.parent.whole().members:
            raise MembershipError("pr_coset_form needs the whole ring as second argument")
        R = R.parent
    S = _as_subring(S)
    if S.parent is not R:
        raise MembershipError("subring does not belong to the given ring")
    Z = relative_center(S, R)
    SG = abelian.Subgroup(R.additive, S.generators, S.members)
    Q = abelian.quotient(SG, abelian.Subgroup(R.additive, (), Z.members))
    total = sum(Fraction(1, element_commutator_subgroup(R, s).order) for s in Q.coset_reps)
    return total / Q.order


def pr(R: FiniteRing) -> Fraction:
    return pr_centralizer_sum(R, R)


def pr_all(S, R) -> Fraction:
    """Pr(S, R) by all three routes; raises InternalMismatch on disagreement."""
    a = pr_pair_count(S, R)
    b = pr_centralizer_sum(S, R)
    c = pr_coset_form(S, R)
    if not a == b == c:
        raise InternalMismatch(f"Pr routes disagree: pair={a} centralizer={b} coset={c}")
    return a


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"
