"""End-to-end acceptance checks, one test (or parametrized group) per criterion.

The full corpus is every builtin ring of order <= 64. All subrings are
enumerated for rings of order <= 32 and for every non-commutative ring up to
order 64; larger commutative rings contribute {0}, Z(R) and R.
"""

import subprocess
import sys
import time
from fractions import Fraction

import pytest

from ringprob import abelian
from ringprob.bounds import REGISTRY, check_centralizer_quotient_iso, run_sweep
from ringprob.cli import cmd_compute
from ringprob.corpus import builtin_corpus
from ringprob.isoclin import RingPair, decide_isoclinism, find_isoclinism, verify_invariance
from ringprob.prob import pr_all, pr_centralizer_sum, pr_coset_form, pr_pair_count
from ringprob.ring import center, mat_row, mat_upper_tri, relative_center, subring_closure, zn
from ringprob.ringspec import load_ring_argument

FULL_ORDER = 64


@pytest.fixture(scope="module")
def corpus():
    return list(builtin_corpus(FULL_ORDER))


@pytest.mark.criterion(1, "golden example Pr(R)=5/8, Pr(S,R)=3/4, Pr(S)=1")
def test_golden_example():
    start = time.perf_counter()
    report = cmd_compute(load_ring_argument("ring mat_row 2\nsubring S gen e1+e2"))
    ring, sub = report.to_dict()["results"]
    elapsed = time.perf_counter() - start
    assert ring["pr"] == "5/8"
    assert sub["pr_relative"] == "3/4"
    assert sub["pr_subring"] == "1/1"
    R = mat_row(2)
    S = subring_closure(R, [R.element((1, 1))])
    assert pr_all(R.whole(), R) == Fraction(5, 8)
    assert pr_all(S, R) == Fraction(3, 4)
    assert pr_pair_count(S, S) == 1
    assert elapsed < 1.0


@pytest.mark.criterion(2, "three Pr routes agree exactly on the full corpus")
def test_oracle_equivalence(corpus):
    start = time.perf_counter()
    pairs = 0
    for entry in corpus:
        R = entry.ring
        for S in entry.subrings:
            a, b, c = pr_pair_count(S, R), pr_centralizer_sum(S, R), pr_coset_form(S, R)
            assert a == b == c, f"{R.name} S={S.sorted_elements}: {a} {b} {c}"
            pairs += 1
    assert len(corpus) > 200 and pairs > 3000
    assert time.perf_counter() - start < 300


@pytest.mark.criterion(3, "every registered check passes on the full corpus")
def test_theorem_sweep(corpus):
    stats = run_sweep(corpus, "all", max_failures=5)
    failures = {t: s.failures for t, s in stats.items() if s.failed}
    for t, fails in failures.items():
        print(f"VIOLATION {t}: {fails[0]}")
    assert not failures
    assert list(stats) == list(REGISTRY)
    for tid, s in stats.items():
        assert s.checked - s.vacuous > 0, f"{tid} never applied"
    # both directions of each biconditional are exercised
    for tid in ("lemma1", "cor1", "bound-comparisons"):
        outcomes = stats[tid].condition_outcomes
        for part in {k.rsplit("predicted=", 1)[0] for k in outcomes}:
            assert outcomes.get(part + "predicted=true,attained=true", 0) > 0, (tid, part)
            assert outcomes.get(part + "predicted=false,attained=false", 0) > 0, (tid, part)
            assert not outcomes.get(part + "predicted=true,attained=false")
            assert not outcomes.get(part + "predicted=false,attained=true")


@pytest.mark.criterion(4, "R/C_R(x) and [x,R] have equal invariant factors")
def test_centralizer_quotient_iso(corpus):
    checked = 0
    for entry in corpus:
        R = entry.ring
        for x in R.elements():
            c = check_centralizer_quotient_iso(R, x)
            assert c.passed, c.witness
            checked += 1
    assert checked > 0


def _scalar_pair(p):
    U = mat_upper_tri(p)
    return RingPair(U, subring_closure(U, [U.element(U.subring_hints["scalars"][0])]))


@pytest.mark.criterion(5, "positive isoclinism fixture for p = 2, 3")
@pytest.mark.parametrize("p", [2, 3])
def test_isoclinism_positive(p):
    start = time.perf_counter()
    R = mat_row(p)
    P1, P2 = _scalar_pair(p), RingPair(R, R.zero_subring())
    w = find_isoclinism(P1, P2)
    assert w is not None
    check = verify_invariance(P1, P2, w)
    assert check.passed and check.lhs == check.rhs
    assert time.perf_counter() - start < 30


@pytest.mark.criterion(6, "negative isoclinism fixture rejected with [4] vs [3]")
def test_isoclinism_negative():
    start = time.perf_counter()
    Z8, Z12 = zn(8), zn(12)
    P1 = RingPair(Z8, subring_closure(Z8, [4]))
    P2 = RingPair(Z12, subring_closure(Z12, [3]))
    result = decide_isoclinism(P1, P2)
    assert result.status == "not_isoclinic"
    assert result.reason == "quotient invariants [4] vs [3]"
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(7, "extremal pairs have S/Z(S,R) of type [2] or [2,2]")
def test_extremal_structure(corpus):
    seen_comm = seen_noncomm = 0
    for entry in corpus:
        R = entry.ring
        Z = center(R).members
        for S in entry.subrings:
            val = pr_all(S, R)
            comm = S.is_commutative
            if comm and val == Fraction(3, 4) and not S.members <= Z:
                expected = [2]
                seen_comm += 1
            elif not comm and val == Fraction(5, 8):
                expected = [2, 2]
                seen_noncomm += 1
            else:
                continue
            ZS = relative_center(S, R)
            Q = abelian.quotient(abelian.as_subgroup(R.additive, S.members),
                                 abelian.as_subgroup(R.additive, ZS.members))
            assert Q.invariant_factors() == expected, (R.name, S.sorted_elements)
    assert seen_comm >= 1 and seen_noncomm >= 1


@pytest.mark.criterion(8, "R/Z(R) is not cyclic for non-commutative rings")
def test_noncyclic_central_quotient(corpus):
    count = 0
    for entry in corpus:
        R = entry.ring
        if R.is_commutative:
            continue
        Q = abelian.quotient(R.additive, abelian.as_subgroup(R.additive, center(R).members))
        assert not abelian.is_cyclic(Q), R.name
        count += 1
    assert count > 0


@pytest.mark.criterion(9, "verify --format json is byte-identical across runs")
def test_determinism():
    cmd = [sys.executable, "-m", "ringprob", "verify", "--theorems", "all",
           "--corpus", "builtin<=16", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == second.returncode == 0
    assert first.stdout and first.stdout == second.stdout
