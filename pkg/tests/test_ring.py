import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringprob.errors import (
    AssociativityViolation,
    CapExceeded,
    MembershipError,
    NotAnIdeal,
    WellDefinednessViolation,
)
from ringprob.ring import (
    bracket,
    builtin,
    center,
    centralizer,
    commutator_set,
    commutator_subgroup,
    direct_sum,
    element_commutator_subgroup,
    enumerate_subrings,
    ideals,
    is_ideal,
    is_subring,
    make_subring,
    mat_full,
    mat_row,
    mat_upper_tri,
    mul,
    quotient_ring,
    quotient_ring_map,
    relative_center,
    ring_from_structure,
    subring_as_ring,
    subring_closure,
    sum_set,
    zero_ring,
    zn,
)

from oracles import matmul, ring_isomorphic_zn

UNITS = {
    "mat_row": [(0, 0), (0, 1)],
    "mat_upper_tri": [(0, 0), (0, 1), (1, 1)],
    "mat_full": [(0, 0), (0, 1), (1, 0), (1, 1)],
}


def as_matrix(R, x, units, n=2):
    M = [[0] * n for _ in range(n)]
    for (i, j), c in zip(units, R.coords(x)):
        M[i][j] = c
    return tuple(tuple(r) for r in M)


@pytest.mark.parametrize("family, p", [("mat_row", 2), ("mat_row", 3), ("mat_upper_tri", 2),
                                       ("mat_upper_tri", 3), ("mat_full", 2)])
def test_matrix_builtins_match_matrix_multiplication(family, p):
    R = mat_full(2, p) if family == "mat_full" else builtin(family, p)
    units = UNITS[family]
    for x, y in itertools.product(R.elements(), repeat=2):
        X, Y = as_matrix(R, x, units), as_matrix(R, y, units)
        assert as_matrix(R, R.mul(x, y), units) == matmul(X, Y, p)


def test_row_ring_example():
    R = mat_row(2)
    e1, e2 = R.element((1, 0)), R.element((0, 1))
    assert bracket(R, e1, e2) == e2
    assert mul(R, e1, e2) == e2
    assert mul(R, e2, e1) == 0
    assert centralizer(R.whole(), e2).members == {0, e2}
    assert commutator_set(R, R) == {0, e2}
    assert commutator_subgroup(R, R).members == {0, e2}
    assert is_ideal(R, {0, e2})
    assert center(R).members == {0}


def test_zn_is_commutative_with_unit():
    R = zn(6)
    assert R.is_commutative
    assert center(R).members == frozenset(R.elements())
    assert all(R.mul(1, x) == x for x in R.elements())


def test_zn_one_is_trivial():
    R = zn(1)
    assert R.order == 1
    assert list(R.elements()) == [0]


def test_zero_ring_products_vanish():
    R = zero_ring([2, 4])
    assert all(R.mul(x, y) == 0 for x in R.elements() for y in R.elements())


def test_structure_rejects_bad_order():
    # e1 * e1 = 1 in Z_2 x Z_4 coordinate of order 4 while gcd(2, 2) = 2
    with pytest.raises(WellDefinednessViolation):
        ring_from_structure([2, 4], [[[0, 1], [0, 0]], [[0, 0], [0, 0]]])


def test_structure_rejects_nonassociative():
    with pytest.raises(AssociativityViolation) as info:
        ring_from_structure([2, 2], [[[0, 1], [0, 0]], [[1, 0], [0, 0]]])
    assert len(info.value.triple) == 3


def test_structure_zn_from_table():
    R = ring_from_structure([5], [[[1]]])
    assert R.mul(2, 3) == 1


@pytest.mark.parametrize("R", [mat_row(2), mat_upper_tri(2), zn(6), zero_ring([2, 2]),
                               direct_sum(mat_row(2), zn(2))], ids=lambda R: R.name)
def test_ring_axioms_exhaustive(R):
    els = list(R.elements())
    for x, y, z in itertools.product(els, repeat=3):
        assert R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z))
        assert R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z))
        assert R.mul(R.add(x, y), z) == R.add(R.mul(x, z), R.mul(y, z))


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_bracket_is_alternating_and_bilinear(data):
    R = mat_upper_tri(3)
    x, y, z = (data.draw(st.integers(0, R.order - 1)) for _ in range(3))
    assert R.bracket(x, x) == 0
    assert R.bracket(x, y) == R.neg(R.bracket(y, x))
    assert R.bracket(R.add(x, y), z) == R.add(R.bracket(x, z), R.bracket(y, z))


def test_membership_errors():
    R = zn(4)
    with pytest.raises(MembershipError):
        R.mul(1, 9)


def test_subring_closure_and_checks():
    R = mat_row(2)
    S = subring_closure(R, [R.element((1, 1))])
    assert S.members == {0, R.element((1, 1))}
    assert is_subring(R, S.members)
    assert not is_subring(R, {0, 1, 2})
    with pytest.raises(MembershipError):
        make_subring(R, {0, 1, 2})


@pytest.mark.parametrize("R, count", [(zn(4), 3), (zn(1), 1), (zn(6), 4), (zero_ring([2, 2]), 5)],
                         ids=lambda v: getattr(v, "name", str(v)))
def test_subring_counts(R, count):
    subs = list(enumerate_subrings(R))
    assert len(subs) == count
    keys = [S.sort_key() for S in subs]
    assert keys == sorted(keys)


def test_row_ring_subrings_brute_force():
    R = mat_row(2)
    els = list(R.elements())
    brute = set()
    for r in range(len(els) + 1):
        for subset in itertools.combinations(els, r):
            T = set(subset)
            if 0 in T and all(R.add(a, b) in T and R.mul(a, b) in T for a in T for b in T):
                brute.add(frozenset(T))
    assert {S.members for S in enumerate_subrings(R)} == brute


def test_subring_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_subrings(zn(128)))


def test_ideals_of_row_ring():
    R = mat_row(2)
    found = {I.members for I in ideals(R)}
    e2 = R.element((0, 1))
    assert frozenset({0, e2}) in found
    assert frozenset({0}) in found and frozenset(R.elements()) in found
    # {0, e1}: e1 e2 = e2 is outside
    assert frozenset({0, R.element((1, 0))}) not in found


def test_relative_center_is_center_intersection():
    R = mat_upper_tri(2)
    for S in enumerate_subrings(R):
        assert relative_center(S, R).members == center(R).members & S.members


def test_element_commutator_subgroup_row():
    R = mat_row(2)
    e1 = R.element((1, 0))
    assert element_commutator_subgroup(R, e1).members == {0, R.element((0, 1))}


def test_sum_set():
    R = zn(6)
    assert sum_set(R, {0, 2, 4}, {0, 3}) == frozenset(range(6))


def test_quotient_zn8_by_4():
    R = zn(8)
    Q = quotient_ring(R, {0, 4})
    assert Q.order == 4
    n = Q.order
    add = [[Q.add(a, b) for b in range(n)] for a in range(n)]
    mult = [[Q.mul(a, b) for b in range(n)] for a in range(n)]
    assert ring_isomorphic_zn(add, mult, 4)


def test_quotient_projection_is_homomorphism():
    R = mat_row(2)
    N = {0, R.element((0, 1))}
    qm = quotient_ring_map(R, N)
    Q = qm.ring
    for x, y in itertools.product(R.elements(), repeat=2):
        assert qm.projection[R.mul(x, y)] == Q.mul(qm.projection[x], qm.projection[y])
        assert qm.projection[R.add(x, y)] == Q.add(qm.projection[x], qm.projection[y])


def test_quotient_needs_ideal():
    R = mat_row(2)
    with pytest.raises(NotAnIdeal):
        quotient_ring(R, {0, R.element((1, 0))})


def test_subring_as_ring():
    R = mat_upper_tri(2)
    S = subring_closure(R, [R.element((1, 0, 1))])
    T = subring_as_ring(S)
    assert T.order == 2 and T.is_commutative


def test_builtin_lookup():
    assert builtin("zero_ring", 2, 2).order == 4
    assert builtin("mat_full", 2, 2).order == 16
    with pytest.raises(ValueError):
        builtin("nope", 3)
    with pytest.raises(ValueError):
        zn(0)
