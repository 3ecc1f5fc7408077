from fractions import Fraction

import pytest

from ringprob.bounds import (
    REGISTRY,
    TheoremCheck,
    check_centralizer_quotient_iso,
    check_chain,
    check_commutator_chain,
    check_equality_conditions,
    check_extremal,
    check_lemma_index,
    check_lower_bounds,
    check_noncentral_thresholds,
    check_pr_prime_bounds,
    check_prime_bounds,
    check_quotient_factorization,
    check_sandwich,
    classify_extremal,
    resolve_theorems,
    run_sweep,
)
from ringprob.corpus import builtin_corpus
from ringprob.errors import MembershipError, PreconditionError
from ringprob.ring import mat_row, mat_upper_tri, subring_closure, zn

EXPECTED_IDS = [
    "lemma1", "theorem01", "cor1", "refine", "theorem001", "corprbd", "theorem02",
    "theorem2", "dc001", "dc002", "dc", "lemma2", "theorem3", "theorem3-corollary",
    "obs2.1", "eqlb", "newlb1", "newlb2", "newlb3", "newlb4", "bound-comparisons",
]


@pytest.fixture
def row():
    R = mat_row(2)
    S = subring_closure(R, [R.element((1, 1))])
    return R, S


def test_registry_complete():
    assert list(REGISTRY) == EXPECTED_IDS
    assert resolve_theorems("all") == EXPECTED_IDS
    assert resolve_theorems("theorem01,lemma1") == ["lemma1", "theorem01"]
    with pytest.raises(KeyError):
        resolve_theorems("theorem99")


def test_lemma_index_example(row):
    R, S = row
    e1 = R.element((1, 0))
    c = check_lemma_index(S, R, e1)
    assert (c.lhs, c.rhs) == (2, 2)
    assert c.equality_attained and c.equality_condition_predicted and c.passed
    # r = e2: C_S(e2) = {0}, C_R(e2) = {0, e2}, S + C_R(e2) = R
    c = check_lemma_index(S, R, R.element((0, 1)))
    assert (c.lhs, c.rhs) == (2, 2) and c.passed


def test_lemma_index_strict_case():
    R = mat_row(2)
    c = check_lemma_index(R.zero_subring(), R, R.element((1, 0)))
    assert c.lhs == 1 and c.rhs == 2
    assert not c.equality_attained and not c.equality_condition_predicted and c.passed


def test_lemma_index_membership(row):
    R, S = row
    with pytest.raises(MembershipError):
        check_lemma_index(S, R, 99)


def test_sandwich_example(row):
    R, S = row
    c = check_sandwich(S, R)
    assert c.passed
    assert c.details["pr_R"] == Fraction(5, 8)
    assert c.details["pr_SR"] == Fraction(3, 4)
    assert c.details["pr_S"] == 1


def test_equality_conditions_example(row):
    R, S = row
    c = check_equality_conditions(S, R)
    assert c.passed
    # Pr(S,R) = 3/4 differs from Pr(R) = 5/8, so the first condition must fail
    assert not c.equality_attained and not c.equality_condition_predicted
    # Pr(S,R) = 3/4 differs from Pr(S) = 1 as well
    assert not c.details["part2_attained"] and not c.details["part2_predicted"]


def test_equality_conditions_whole_ring(row):
    R, _ = row
    c = check_equality_conditions(R.whole(), R)
    assert c.passed and c.equality_attained and c.equality_condition_predicted


def test_chain(row):
    R, S = row
    assert check_chain(R.zero_subring(), S, R).passed
    assert check_chain(S, R.whole(), R).passed
    assert not check_chain(R.whole(), S, R).hypotheses_hold


def test_prime_bounds_tight_on_row_ring(row):
    R, _ = row
    c = check_prime_bounds(R.whole(), R)
    assert c.p == 2
    assert c.lhs == c.rhs == Fraction(5, 8)
    assert c.passed and c.equality_attained


def test_prime_bounds_trivial_ring_vacuous():
    R = zn(1)
    assert not check_prime_bounds(R.whole(), R).hypotheses_hold


@pytest.mark.parametrize("p", [2, 3, 5])
def test_pr_prime_bounds_upper_triangular(p):
    R = mat_upper_tri(p)
    c = check_pr_prime_bounds(R)
    assert c.passed
    assert c.details["noncommutative"]
    assert c.details["classical_bound"] == Fraction(p * p + p - 1, p ** 3)


def test_noncentral_thresholds(row):
    R, S = row
    c = check_noncentral_thresholds(S, R, "theorem2")
    assert c.passed and c.rhs == Fraction(3, 4) and c.equality_attained
    c = check_noncentral_thresholds(R.whole(), R, "theorem02")
    assert c.passed and c.rhs == Fraction(5, 8) and c.equality_attained
    assert not check_noncentral_thresholds(R.zero_subring(), R).hypotheses_hold


def test_classify_extremal(row):
    R, S = row
    c = classify_extremal(S, R)
    assert c.passed and c.details["quotient_factors"] == [2]
    c = classify_extremal(R.whole(), R)
    assert c.passed and c.details["quotient_factors"] == [2, 2]


def test_classify_extremal_precondition():
    R = zn(4)
    with pytest.raises(PreconditionError):
        classify_extremal(R.whole(), R)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_extremal_upper_triangular(p):
    # Pr = (p^2 + p - 1)/p^3 exactly, with R/Z(R) of type [p, p]
    R = mat_upper_tri(p)
    c = check_extremal(R.whole(), R, "dc002")
    assert c.hypotheses_hold and c.passed
    assert c.p == p and c.details["quotient_factors"] == [p, p]
    assert classify_extremal(R.whole(), R).details["quotient_factors"] == [p, p]


def test_extremal_dc_records(row):
    R, S = row
    assert check_extremal(S, R, "dc").passed
    assert check_extremal(R.whole(), R, "dc").passed
    assert not check_extremal(R.zero_subring(), R, "dc").hypotheses_hold


def test_quotient_factorization(row):
    R, _ = row
    N = subring_closure(R, [R.element((0, 1))])
    c = check_quotient_factorization(R.whole(), N, R, "theorem3")
    assert c.passed
    assert c.lhs == Fraction(5, 8) and c.rhs == 1
    # N meets [R, R] = N, so equality is not predicted
    assert c.equality_condition_predicted is False
    assert check_quotient_factorization(R.whole(), N, R, "lemma2").passed


def test_quotient_factorization_zero_ideal(row):
    R, _ = row
    c = check_quotient_factorization(R.whole(), R.zero_subring(), R, "theorem3")
    assert c.passed and c.equality_condition_predicted and c.equality_attained


def test_quotient_factorization_vacuous(row):
    R, S = row
    N = subring_closure(R, [R.element((0, 1))])
    assert not check_quotient_factorization(S, N, R).hypotheses_hold


def test_centralizer_quotient_iso_all_elements(row):
    R, _ = row
    for x in R.elements():
        assert check_centralizer_quotient_iso(R, x).passed


def test_commutator_chain(row):
    R, S = row
    c = check_commutator_chain(S, R)
    assert c.passed
    assert c.details == {"commutator_subgroup_order": 2, "commutator_set_order": 2}


@pytest.mark.parametrize("tid", ["newlb1", "newlb2", "newlb3", "newlb4"])
def test_lower_bounds(row, tid):
    R, S = row
    target = R.whole() if tid in ("newlb3", "newlb4") else S
    c = check_lower_bounds(target, R, tid)
    assert c.passed
    assert c.lhs >= c.rhs


def test_ring_level_lower_bound_needs_whole_ring(row):
    R, S = row
    assert not check_lower_bounds(S, R, "newlb3").hypotheses_hold


def test_bound_comparisons(row):
    R, S = row
    c = check_lower_bounds(S, R, "bound-comparisons")
    assert c.passed
    assert c.details["K_equals_commutator"]


def test_to_dict_serializes_rationals(row):
    R, S = row
    d = check_sandwich(S, R).to_dict()
    assert d["details"]["pr_SR"] == "3/4"
    assert d["theorem_id"] == "theorem01"


def test_failed_check_is_reported():
    # run_sweep must surface a failing record with its witness
    bad = TheoremCheck("theorem01", True, False, Fraction(1), Fraction(0), False,
                       witness="S=[]")

    class Entry:
        ring = zn(2)
        subrings = [zn(2).whole()]

    from ringprob import bounds
    original = REGISTRY["theorem01"]
    REGISTRY["theorem01"] = bounds.TheoremSpec("theorem01", "pair", lambda S, R: bad)
    try:
        stats = run_sweep([Entry()], ["theorem01"])
    finally:
        REGISTRY["theorem01"] = original
    assert stats["theorem01"].failed == 1
    assert stats["theorem01"].failures[0]["witness"] == "S=[]"


def test_sweep_small_corpus_passes():
    stats = run_sweep(builtin_corpus(12), "all")
    for tid, s in stats.items():
        assert s.failed == 0, (tid, s.failures[:1])
        assert s.checked > 0
    # both outcomes of the index lemma's equality condition occur
    outcomes = stats["lemma1"].condition_outcomes
    assert outcomes.get("predicted=true,attained=true", 0) > 0
    assert outcomes.get("predicted=false,attained=false", 0) > 0
    assert set(outcomes) <= {"predicted=true,attained=true", "predicted=false,attained=false"}
