from fractions import Fraction

import pytest

from ringprob.corpus import builtin_rings
from ringprob.errors import InvalidWitness, MembershipError, SearchBudgetExceeded
from ringprob.isoclin import (
    IsoclinismWitness,
    RingPair,
    decide_isoclinism,
    find_isoclinism,
    isoclinism_sweep,
    pair_invariants,
    rings_isoclinic,
    verify_coset_commutator_iso,
    verify_invariance,
    verify_witness,
)
from ringprob.ring import (
    enumerate_subrings,
    mat_row,
    mat_upper_tri,
    subring_closure,
    zn,
)


def scalar_pair(p):
    U = mat_upper_tri(p)
    return RingPair(U, subring_closure(U, [U.element(U.subring_hints["scalars"][0])]))


def row_pair(p):
    R = mat_row(p)
    return RingPair(R, R.zero_subring())


def cyclic_pair(n, g):
    R = zn(n)
    return RingPair(R, subring_closure(R, [g]))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_positive_fixture(p):
    P1, P2 = scalar_pair(p), row_pair(p)
    w = find_isoclinism(P1, P2)
    assert w is not None
    assert verify_witness(P1, P2, w)
    check = verify_invariance(P1, P2, w)
    assert check.passed and check.lhs == check.rhs == 1
    assert verify_coset_commutator_iso(P1, P2, w).passed


def test_negative_fixture():
    P1, P2 = cyclic_pair(8, 4), cyclic_pair(12, 3)
    r = decide_isoclinism(P1, P2)
    assert r.status == "not_isoclinic"
    assert r.reason == "quotient invariants [4] vs [3]"
    assert find_isoclinism(P1, P2) is None
    # same verdict by exhaustive search alone
    r = decide_isoclinism(P1, P2, prefilter=False)
    assert r.status == "not_isoclinic"
    assert "[4] vs [3]" in r.reason


def test_pair_invariants():
    inv = pair_invariants(cyclic_pair(8, 4))
    assert inv.quotient == (4,)
    inv = pair_invariants(RingPair(mat_row(2)))
    assert inv.quotient == (2, 2) and inv.commutator == (2,)
    assert inv.probability == Fraction(5, 8)


def test_ring_level():
    assert rings_isoclinic(zn(2), zn(3)) is not None
    assert rings_isoclinic(mat_row(2), zn(4)) is None
    assert rings_isoclinic(mat_row(2), mat_row(3)) is None
    w = rings_isoclinic(mat_row(2), mat_upper_tri(2))
    assert w is not None


def test_reflexive_identity_witness():
    R = mat_row(2)
    P = RingPair(R)
    w = find_isoclinism(P, P)
    assert w is not None
    assert all(a == b for a, b in w.phi.items())
    assert all(a == b for a, b in w.psi.items())


def test_witness_tampering_detected():
    P1, P2 = RingPair(mat_row(2)), RingPair(mat_upper_tri(2))
    w = find_isoclinism(P1, P2)
    bad_psi = {a: 0 for a in w.psi}
    with pytest.raises(InvalidWitness):
        verify_witness(P1, P2, IsoclinismWitness(w.phi, bad_psi))
    # moving the zero coset breaks additivity
    swapped = dict(w.phi)
    swapped[0], swapped[1] = w.phi[1], w.phi[0]
    with pytest.raises(InvalidWitness):
        verify_witness(P1, P2, IsoclinismWitness(swapped, w.psi))


def test_budget_exhaustion_is_undecided():
    P = RingPair(mat_row(3))
    r = decide_isoclinism(P, P, budget=0)
    assert r.status == "undecided"
    with pytest.raises(SearchBudgetExceeded):
        find_isoclinism(P, P, budget=0)


def test_pair_membership():
    with pytest.raises(MembershipError):
        RingPair(zn(4), zn(2).whole())


def small_pairs():
    pairs = []
    for R in builtin_rings(8):
        if R.order in (4, 8):
            pairs.extend(RingPair(R, S) for S in enumerate_subrings(R))
    return pairs


def test_sweep_symmetry_reflexivity_and_invariance():
    pairs = small_pairs()
    stats = isoclinism_sweep(pairs)
    assert stats["symmetric"]
    assert stats["undecided"] == 0
    assert stats["invariance_failures"] == 0
    verdicts = stats["verdicts"]
    assert all(verdicts[i][i] == "isoclinic" for i in range(len(pairs)))
    assert stats["transitivity_triples"] >= stats["transitivity_closed"] > 0


def test_prefilter_does_not_change_verdicts():
    pairs = [P for P in small_pairs() if P.ring.order == 4]
    for P1 in pairs:
        for P2 in pairs:
            a = decide_isoclinism(P1, P2).status
            b = decide_isoclinism(P1, P2, prefilter=False).status
            assert a == b
