"""Finite rings given by structure constants on a finite abelian group.

A ring is an ``AbelianGroup`` (its additive group) together with the products
e_i * e_j of the canonical generators, extended bilinearly. Rings need not be
unital or commutative. Ring elements are the additive group's ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import abelian
from .abelian import AbelianGroup, Subgroup
from .errors import (
    AssociativityViolation,
    CapExceeded,
    ClosureViolation,
    InternalMismatch,
    MembershipError,
    NotAnIdeal,
    WellDefinednessViolation,
)

DEFAULT_CAP = abelian.DEFAULT_CAP


class FiniteRing:
    """Finite (possibly non-unital, non-commutative) ring.

    Build through :func:`ring_from_structure` or :func:`builtin`; the
    constructor validates eagerly, so every instance satisfies the ring axioms.
    """

    def __init__(self, additive: AbelianGroup, structure, name: str | None = None,
                 subring_hints: dict[str, tuple] | None = None):
        k = additive.rank
        table = tuple(tuple(tuple(int(c) for c in structure[i][j]) for j in range(k))
                      for i in range(k))
        self.additive = additive
        self.structure = table
        self.name = name or f"custom({','.join(map(str, additive.cyclic_orders))})"
        self.subring_hints = dict(subring_hints or {})
        self._memo: dict = {}
        self._validate()

    def __repr__(self):
        return f"FiniteRing({self.name}, order={self.order})"

    # -- validation ------------------------------------------------------

    def _validate(self):
        G, k = self.additive, self.additive.rank
        d = G.cyclic_orders
        for i in range(k):
            for j in range(k):
                c = self.structure[i][j]
                if len(c) != k:
                    raise WellDefinednessViolation(
                        f"product e{i + 1}e{j + 1} has {len(c)} coordinates, expected {k}")
                g = math.gcd(d[i], d[j])
                o = G.element_order(G.index(c))
                if g % o:
                    raise WellDefinednessViolation(
                        f"additive order {o} of e{i + 1}e{j + 1} does not divide "
                        f"gcd({d[i]}, {d[j]}) = {g}")
        for i in range(k):
            for j in range(k):
                for m in range(k):
                    a, b, c = G.basis(i), G.basis(j), G.basis(m)
                    if self._mul(self._mul(a, b), c) != self._mul(a, self._mul(b, c)):
                        raise AssociativityViolation((i + 1, j + 1, m + 1))

    def _mul(self, x: int, y: int) -> int:
        """Bilinear extension of the structure constants; no tables."""
        G = self.additive
        cx, cy = G.coords(x), G.coords(y)
        acc = [0] * G.rank
        for i, a in enumerate(cx):
            if not a:
                continue
            for j, b in enumerate(cy):
                if not b:
                    continue
                for t, c in enumerate(self.structure[i][j]):
                    acc[t] += a * b * c
        return G.index(acc)

    # -- basic arithmetic ------------------------------------------------

    @property
    def order(self) -> int:
        return self.additive.order

    def elements(self) -> range:
        return self.additive.elements()

    def __contains__(self, x) -> bool:
        return x in self.additive

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements())

    def element(self, coords: Sequence[int]) -> int:
        return self.additive.index(coords)

    def coords(self, x: int) -> tuple[int, ...]:
        return self.additive.coords(x)

    def basis(self, i: int) -> int:
        return self.additive.basis(i)

    @cached_property
    def mul_table(self) -> list[list[int]]:
        G = self.additive
        X = G.coord_array
        if G.rank == 0:
            return [[0]]
        M = np.array(self.structure, dtype=np.int64)
        prod = np.einsum("ai,bj,ijc->abc", X, X, M, optimize=True)
        return G.encode_array(prod).tolist()

    @cached_property
    def bracket_table(self) -> list[list[int]]:
        mt, add, neg = self.mul_table, self.additive.add_table, self.additive.neg_table
        n = self.order
        return [[add[mt[x][y]][neg[mt[y][x]]] for y in range(n)] for x in range(n)]

    def _in(self, *xs):
        n = self.order
        for x in xs:
            if not 0 <= x < n:
                raise MembershipError(f"{x!r} is not an element of {self.name}")

    def add(self, x, y):
        self._in(x, y)
        return self.additive.add_table[x][y]

    def neg(self, x):
        self._in(x)
        return self.additive.neg_table[x]

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        self._in(x, y)
        return self.mul_table[x][y]

    def bracket(self, x, y):
        self._in(x, y)
        return self.bracket_table[x][y]

    @cached_property
    def is_commutative(self) -> bool:
        s = self.structure
        k = self.additive.rank
        return all(s[i][j] == s[j][i] for i in range(k) for j in range(i + 1, k))

    def whole(self) -> "Subring":
        if "whole" not in self._memo:
            self._memo["whole"] = Subring(self, frozenset(self.elements()),
                                          tuple(self.basis(i) for i in range(self.additive.rank)))
        return self._memo["whole"]

    def zero_subring(self) -> "Subring":
        return Subring(self, frozenset([0]), ())

    def centralizer_of(self, r: int) -> frozenset[int]:
        """C_R(r) as a bare set, memoised per element."""
        cache = self._memo.setdefault("centralizers", {})
        if r not in cache:
            row = self.bracket_table[r]
            cache[r] = frozenset(y for y in self.elements() if row[y] == 0)
        return cache[r]


@dataclass(frozen=True, eq=False)
class Subring:
    parent: FiniteRing
    members: frozenset[int] = field(repr=False)
    generators: tuple[int, ...] = ()

    def __eq__(self, other):
        return (isinstance(other, Subring) and other.parent is self.parent
                and other.members == self.members)

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __repr__(self):
        return f"Subring(order={self.order} of {self.parent.name})"

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.sorted_elements)

    def __contains__(self, x):
        return x in self.members

    @cached_property
    def sorted_elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def as_subgroup(self) -> Subgroup:
        return Subgroup(self.parent.additive, self.generators, self.members)

    @cached_property
    def is_commutative(self) -> bool:
        br = self.parent.bracket_table
        els = self.sorted_elements
        return all(br[a][b] == 0 for i, a in enumerate(els) for b in els[i + 1:])

    def issubset(self, other) -> bool:
        return self.members <= _members(other)

    def sort_key(self):
        return (self.order, self.sorted_elements)


def _members(T) -> frozenset[int]:
    if isinstance(T, Subring):
        return T.members
    if isinstance(T, FiniteRing):
        return frozenset(T.elements())
    if isinstance(T, Subgroup):
        return T.members
    return frozenset(T)


def _as_subring(T) -> Subring:
    if isinstance(T, FiniteRing):
        return T.whole()
    return T


def _check_elements(R: FiniteRing, xs: Iterable[int]):
    for x in xs:
        if x not in R:
            raise MembershipError(f"{x!r} is not an element of {R.name}")


# --------------------------------------------------------------------------
# construction

def ring_from_structure(cyclic_orders: Sequence[int], mult_table, name: str | None = None,
                        subring_hints=None) -> FiniteRing:
    """Validated ring on Z_{d_1} x ... x Z_{d_k} with e_i e_j = mult_table[i][j].

    ``mult_table[i][j]`` is a coordinate vector. Raises
    ``WellDefinednessViolation`` or ``AssociativityViolation``.
    """
    G = AbelianGroup(tuple(cyclic_orders))
    k = G.rank
    if len(mult_table) != k or any(len(row) != k for row in mult_table):
        raise WellDefinednessViolation(f"multiplication table must be {k}x{k}")
    table = [[tuple(int(c) % d for c, d in zip(mult_table[i][j], G.cyclic_orders))
              if len(mult_table[i][j]) == k else tuple(mult_table[i][j])
              for j in range(k)] for i in range(k)]
    return FiniteRing(G, table, name, subring_hints)


def _unit(k, i, scale=1):
    v = [0] * k
    v[i] = scale
    return v


def zn(n: int) -> FiniteRing:
    n = int(n)
    if n < 1:
        raise ValueError(f"zn needs n >= 1, got {n}")
    if n == 1:
        return ring_from_structure([], [], name="zn(1)")
    return ring_from_structure([n], [[[1]]], name=f"zn({n})")


def zero_ring(orders: Sequence[int]) -> FiniteRing:
    orders = [int(d) for d in orders]
    k = len(orders)
    name = "zero_ring(" + ",".join(map(str, orders)) + ")"
    return ring_from_structure(orders, [[[0] * k for _ in range(k)] for _ in range(k)], name=name)


def _matrix_units_ring(m: int, units: list[tuple[int, int]], name: str, hints=None) -> FiniteRing:
    """Span over Z_m of the given matrix units, closed under E_ab E_cd = [b==c] E_ad."""
    pos = {u: i for i, u in enumerate(units)}
    k = len(units)
    table = []
    for (a, b) in units:
        row = []
        for (c, d) in units:
            v = [0] * k
            if b == c:
                if (a, d) not in pos:
                    raise ValueError(f"matrix units {units} are not closed under products")
                v[pos[(a, d)]] = 1
            row.append(v)
        table.append(row)
    return ring_from_structure([m] * k, table, name=name, subring_hints=hints)


def mat_full(n: int, m: int) -> FiniteRing:
    n, m = int(n), int(m)
    if n < 1 or m < 2:
        raise ValueError("mat_full needs n >= 1 and m >= 2")
    units = [(a, b) for a in range(n) for b in range(n)]
    return _matrix_units_ring(m, units, f"mat_full({n},{m})")


def mat_upper_tri(m: int) -> FiniteRing:
    """{[a b; 0 c]} over Z_m with basis e1=E11, e2=E12, e3=E22."""
    m = int(m)
    if m < 2:
        raise ValueError("mat_upper_tri needs m >= 2")
    return _matrix_units_ring(m, [(0, 0), (0, 1), (1, 1)], f"mat_upper_tri({m})",
                              hints={"scalars": ((1, 0, 1),)})


def mat_row(m: int) -> FiniteRing:
    """{[x y; 0 0]} over Z_m with basis e1=E11, e2=E12."""
    m = int(m)
    if m < 2:
        raise ValueError("mat_row needs m >= 2")
    return _matrix_units_ring(m, [(0, 0), (0, 1)], f"mat_row({m})")


def mat_scalar_subring_ambient(m: int) -> FiniteRing:
    """Upper-triangular 2x2 ring over Z_m, carrying the scalar subring as hint 'scalars'."""
    R = mat_upper_tri(m)
    R.name = f"mat_scalar_subring_ambient({int(m)})"
    return R


def direct_sum(*rings: FiniteRing) -> FiniteRing:
    orders, blocks = [], []
    for R in rings:
        orders.extend(R.additive.cyclic_orders)
        blocks.append(R.additive.rank)
    k = len(orders)
    table = [[[0] * k for _ in range(k)] for _ in range(k)]
    off = 0
    for R, b in zip(rings, blocks):
        for i in range(b):
            for j in range(b):
                table[off + i][off + j][off:off + b] = list(R.structure[i][j])
        off += b
    name = "direct_sum(" + ",".join(R.name for R in rings) + ")"
    return ring_from_structure(orders, table, name=name)


BUILTINS = {
    "zn": zn,
    "zero_ring": zero_ring,
    "mat_full": mat_full,
    "mat_upper_tri": mat_upper_tri,
    "mat_row": mat_row,
    "mat_scalar_subring_ambient": mat_scalar_subring_ambient,
    "direct_sum": direct_sum,
}


def builtin(name: str, *params) -> FiniteRing:
    """Named ring constructor; see ``BUILTINS`` for the families."""
    try:
        make = BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown builtin ring {name!r}; known: {sorted(BUILTINS)}") from None
    if name == "zero_ring" and len(params) == 1 and not isinstance(params[0], int):
        params = (list(params[0]),)
    elif name == "zero_ring":
        params = (list(params),)
    return make(*params)


# --------------------------------------------------------------------------
# element operations

def mul(R: FiniteRing, x: int, y: int) -> int:
    _check_elements(R, (x, y))
    return R.mul(x, y)


def bracket(R: FiniteRing, x: int, y: int) -> int:
    """Additive commutator xy - yx."""
    _check_elements(R, (x, y))
    return R.bracket(x, y)


def sum_set(R: FiniteRing, A, B) -> frozenset[int]:
    add = R.additive.add_table
    B = _members(B)
    return frozenset(add[a][b] for a in _members(A) for b in B)


# --------------------------------------------------------------------------
# subrings and ideals

def subring_closure(R: FiniteRing, gens: Iterable[int]) -> Subring:
    """Smallest subring containing ``gens``."""
    gens = tuple(dict.fromkeys(int(g) for g in gens))
    _check_elements(R, gens)
    H = abelian.subgroup_generated(R.additive, gens)
    members = H.members
    mt = R.mul_table
    while True:
        products = {mt[a][b] for a in members for b in members} - members
        if not products:
            break
        members = abelian.subgroup_generated(R.additive, tuple(members) + tuple(products)).members
    return Subring(R, frozenset(members), gens)


def is_subring(R: FiniteRing, T) -> bool:
    T = _members(T)
    if 0 not in T or any(x not in R for x in T):
        return False
    add, neg, mt = R.additive.add_table, R.additive.neg_table, R.mul_table
    return all(neg[a] in T for a in T) and all(
        add[a][b] in T and mt[a][b] in T for a in T for b in T)


def is_ideal(R: FiniteRing, N) -> bool:
    N = _members(N)
    if not is_subring(R, N):
        return False
    mt = R.mul_table
    return all(mt[r][n] in N and mt[n][r] in N for r in R.elements() for n in N)


def make_subring(R: FiniteRing, T, generators=()) -> Subring:
    T = frozenset(_members(T))
    if not is_subring(R, T):
        raise MembershipError("set is not a subring")
    return Subring(R, T, tuple(generators))


def enumerate_subrings(R: FiniteRing, cap: int = DEFAULT_CAP) -> Iterator[Subring]:
    """Every subring exactly once: additive subgroups closed under products."""
    if R.order > cap:
        raise CapExceeded(f"ring order {R.order} exceeds subring enumeration cap {cap}")
    memo = R._memo.get(("subrings", cap))
    if memo is None:
        mt = R.mul_table
        memo = []
        for H in abelian.all_subgroups(R.additive, cap=cap):
            els = H.members
            if all(mt[a][b] in els for a in els for b in els):
                memo.append(Subring(R, els, H.generators))
        R._memo[("subrings", cap)] = memo
    return iter(memo)


def ideals(R: FiniteRing, cap: int = DEFAULT_CAP) -> list[Subring]:
    return [S for S in enumerate_subrings(R, cap) if is_ideal(R, S)]


# --------------------------------------------------------------------------
# centralizers, centers, commutators

def centralizer(S, r: int) -> Subring:
    """C_S(r) = {s in S : sr = rs}."""
    S = _as_subring(S)
    R = S.parent
    _check_elements(R, (r,))
    row = R.bracket_table[r]
    members = frozenset(s for s in S.members if row[s] == 0)
    return Subring(R, members)


def center(R: FiniteRing) -> Subring:
    """Z(R), tested against the basis only (enough by bilinearity)."""
    if "center" not in R._memo:
        basis = [R.basis(i) for i in range(R.additive.rank)]
        mt = R.mul_table
        members = frozenset(x for x in R.elements() if all(mt[x][b] == mt[b][x] for b in basis))
        R._memo["center"] = Subring(R, members)
    return R._memo["center"]


def relative_center(S, R: FiniteRing | None = None) -> Subring:
    """Z(S, R) = {s in S : sr = rs for all r in R}, cross-checked against Z(R) ∩ S."""
    S = _as_subring(S)
    R = S.parent if R is None else R
    if S.parent is not R:
        raise MembershipError("subring does not belong to the given ring")
    br = R.bracket_table
    n = R.order
    members = frozenset(s for s in S.members if not any(br[s][y] for y in range(n)))
    if members != center(R).members & S.members:
        raise InternalMismatch("relative center disagrees with Z(R) ∩ S")
    return Subring(R, members)


def commutator_set(S, R: FiniteRing | None = None) -> frozenset[int]:
    """K(S, R) = {[s, r] : s in S, r in R}."""
    S = _as_subring(S)
    R = S.parent if R is None else R
    br = R.bracket_table
    return frozenset(br[s][r] for s in S.members for r in R.elements())


def commutator_subgroup(S, R: FiniteRing | None = None) -> Subgroup:
    """[S, R]: the additive subgroup generated by K(S, R)."""
    S = _as_subring(S)
    R = S.parent if R is None else R
    return abelian.subgroup_generated(R.additive, sorted(commutator_set(S, R) - {0}))


def element_commutator_subgroup(R: FiniteRing, x: int) -> Subgroup:
    """[x, R] = {[x, y] : y in R}, checked to be closed under + and -."""
    _check_elements(R, (x,))
    members = frozenset(R.bracket_table[x])
    add, neg = R.additive.add_table, R.additive.neg_table
    if any(neg[a] not in members for a in members) or any(
            add[a][b] not in members for a in members for b in members):
        raise ClosureViolation(f"[x, R] is not a subgroup for x = {R.coords(x)}")
    return Subgroup(R.additive, tuple(sorted(members)), members)


# --------------------------------------------------------------------------
# quotient rings

@dataclass(frozen=True)
class QuotientRing:
    ring: FiniteRing
    projection: tuple[int, ...]  # element of the parent -> element of ``ring``

    def image(self, T) -> Subring:
        return Subring(self.ring, frozenset(self.projection[x] for x in _members(T)))


def quotient_ring_map(R: FiniteRing, N) -> QuotientRing:
    """R/N realised on the canonical group of R/N, with the projection map."""
    if not is_ideal(R, N):
        raise NotAnIdeal("quotient_ring needs an ideal")
    key = ("quotient", _members(N))
    if key in R._memo:
        return R._memo[key]
    Q = abelian.quotient(R.additive, abelian.as_subgroup(R.additive, _members(N), check=False))
    A = AbelianGroup(Q.structure)
    iso = next(abelian.isomorphisms(A, Q))
    to_A = iso.inverse_mapping()
    mt = R.mul_table
    k = A.rank
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            xi, xj = Q.lift(iso(A.basis(i))), Q.lift(iso(A.basis(j)))
            row.append(A.coords(to_A[Q.project(mt[xi][xj])]))
        table.append(row)
    members = sorted(_members(N))
    label = f"{R.name}/<{len(members)}>"
    ring = ring_from_structure(list(A.cyclic_orders), table, name=label)
    projection = tuple(to_A[Q.project(x)] for x in R.elements())
    out = QuotientRing(ring, projection)
    R._memo[key] = out
    return out


def quotient_ring(R: FiniteRing, N) -> FiniteRing:
    return quotient_ring_map(R, N).ring


def subring_as_ring(S) -> FiniteRing:
    """S as a ring in its own right, on the canonical group of its additive structure."""
    S = _as_subring(S)
    R = S.parent
    key = ("as_ring", S.members)
    if key in R._memo:
        return R._memo[key]
    H = abelian.as_subgroup(R.additive, S.members, check=False)
    A = AbelianGroup(tuple(abelian.invariant_factors(H)))
    iso = next(abelian.isomorphisms(A, H))
    back = iso.inverse_mapping()
    mt = R.mul_table
    table = [[list(A.coords(back[mt[iso(A.basis(i))][iso(A.basis(j))]]))
              for j in range(A.rank)] for i in range(A.rank)]
    ring = ring_from_structure(list(A.cyclic_orders), table, name=f"{R.name}|<{S.order}>")
    R._memo[key] = ring
    return ring


def smallest_prime_divisor(n: int) -> int:
    if n < 2:
        raise ValueError(f"smallest_prime_divisor needs n >= 2, got {n}")
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n
