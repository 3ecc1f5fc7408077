"""Finite abelian groups as products of cyclic groups.

Elements are plain ints. For ``AbelianGroup`` an element is the mixed-radix
encoding of its residue vector (first coordinate most significant), so the
natural order of ints is the lexicographic order of coordinate vectors and
0 is always the identity. Subgroups and quotients reuse the same int
convention: a subgroup's elements are parent ints, a quotient's elements are
coset indices ``0..m-1`` numbered by smallest representative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapExceeded, MembershipError, NotASubgroup, SearchBudgetExceeded

DEFAULT_CAP = 64


# --------------------------------------------------------------------------
# integer linear algebra

def smith_diagonal(rows: Sequence[Sequence[int]], ncols: int) -> list[int]:
    """Nonzero diagonal of the Smith normal form of an integer matrix.

    Entries come back positive and in divisibility order (each divides the
    next). Only the diagonal is produced; the transforms are not tracked.
    """
    A = [list(r) for r in rows]
    m, n = len(A), ncols
    out = []
    for t in range(min(m, n)):
        pivot = _min_nonzero(A, t, t, m, n)
        if pivot is None:
            break
        _move_to(A, t, pivot)
        while True:
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    for row in A:
                        row[j] -= q * row[t]
            leftover = [(i, t) for i in range(t + 1, m) if A[i][t]]
            leftover += [(t, j) for j in range(t + 1, n) if A[t][j]]
            if leftover:
                best = min(leftover, key=lambda ij: abs(A[ij[0]][ij[1]]))
                _move_to(A, t, best)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        out.append(abs(A[t][t]))
    return out


def _min_nonzero(A, r0, c0, m, n):
    best = None
    for i in range(r0, m):
        for j in range(c0, n):
            if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                best = (i, j)
    return best


def _move_to(A, t, ij):
    i, j = ij
    A[t], A[i] = A[i], A[t]
    for row in A:
        row[t], row[j] = row[j], row[t]


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def canonical_factors(orders: Iterable[int]) -> list[int]:
    """Invariant factors of a product of cyclic groups of the given orders."""
    orders = [int(d) for d in orders]
    if not orders:
        return []
    diag = smith_diagonal([[d if i == j else 0 for j in range(len(orders))]
                           for i, d in enumerate(orders)], len(orders))
    return sorted(d for d in diag if d != 1)


# --------------------------------------------------------------------------
# groups

class FiniteAbelianGroup:
    """Common surface of every finite abelian group in this package.

    Subclasses provide ``order``, ``elements``, ``add`` and ``neg``; 0 is the
    identity in every subclass.
    """

    zero = 0

    order: int

    def elements(self) -> Sequence[int]:
        raise NotImplementedError

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def multiple(self, a: int, k: int) -> int:
        k %= self.exponent
        acc, base = 0, a
        while k:
            if k & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            k >>= 1
        return acc

    def __contains__(self, a) -> bool:
        return a in self.element_set

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements())

    @cached_property
    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements())

    def element_order(self, a: int) -> int:
        return self.element_orders[a]

    @cached_property
    def element_orders(self) -> dict[int, int]:
        orders = {}
        for a in self.elements():
            k, x = 1, a
            while x != 0:
                x = self.add(x, a)
                k += 1
            orders[a] = k
        return orders

    @cached_property
    def exponent(self) -> int:
        return math.lcm(1, *self.element_orders.values())

    def invariant_factors(self) -> list[int]:
        return invariant_factors_from_orders(self)


def invariant_factors_from_orders(G: FiniteAbelianGroup) -> list[int]:
    """Invariant factors recovered from element-order statistics alone.

    For each prime p the number of elements killed by p**k is
    p**(sum_i min(k, e_i)); successive differences of the logarithms give the
    conjugate partition of the p-primary exponents.
    """
    orders = list(G.element_orders.values()) if G.order > 1 else [1]
    columns: list[list[int]] = []
    for p, top in sorted(_factorize(G.order).items()):
        logs = [0]
        for k in range(1, top + 1):
            count = sum(1 for o in orders if (p ** k) % o == 0)
            logs.append(round(math.log(count, p)))
        conj = [logs[k] - logs[k - 1] for k in range(1, top + 1)]
        nparts = conj[0] if conj else 0
        exps = [sum(1 for c in conj if c > i) for i in range(nparts)]
        columns.append([p ** e for e in exps])
    width = max((len(c) for c in columns), default=0)
    factors = []
    for i in range(width):
        factors.append(math.prod(c[i] for c in columns if i < len(c)))
    return sorted(f for f in factors if f > 1)


@dataclass(frozen=True, eq=False)
class AbelianGroup(FiniteAbelianGroup):
    """Z_{d_1} x ... x Z_{d_k}; the empty list is the trivial group."""

    cyclic_orders: tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(int(d) for d in self.cyclic_orders)
        if any(d < 2 for d in orders):
            raise ValueError(f"cyclic orders must be >= 2, got {list(orders)}")
        object.__setattr__(self, "cyclic_orders", orders)

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.cyclic_orders == other.cyclic_orders

    def __hash__(self):
        return hash(("AbelianGroup", self.cyclic_orders))

    def __repr__(self):
        if not self.cyclic_orders:
            return "AbelianGroup(trivial)"
        return "AbelianGroup(" + " x ".join(f"Z{d}" for d in self.cyclic_orders) + ")"

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @cached_property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @cached_property
    def _strides(self) -> tuple[int, ...]:
        strides, s = [], 1
        for d in reversed(self.cyclic_orders):
            strides.append(s)
            s *= d
        return tuple(reversed(strides))

    def elements(self) -> range:
        return range(self.order)

    def __contains__(self, a) -> bool:
        return isinstance(a, (int, np.integer)) and 0 <= a < self.order

    def index(self, coords: Sequence[int]) -> int:
        if len(coords) != self.rank:
            raise MembershipError(f"expected {self.rank} coordinates, got {len(coords)}")
        return sum((int(c) % d) * s for c, d, s in zip(coords, self.cyclic_orders, self._strides))

    def coords(self, a: int) -> tuple[int, ...]:
        self._check(a)
        return tuple((a // s) % d for d, s in zip(self.cyclic_orders, self._strides))

    def basis(self, i: int) -> int:
        """The canonical generator e_{i+1} (0-based i)."""
        return self._strides[i]

    @cached_property
    def coord_array(self) -> np.ndarray:
        idx = np.arange(self.order, dtype=np.int64)
        cols = [(idx // s) % d for d, s in zip(self.cyclic_orders, self._strides)]
        if not cols:
            return np.zeros((self.order, 0), dtype=np.int64)
        return np.stack(cols, axis=1)

    def encode_array(self, coords: np.ndarray) -> np.ndarray:
        """Vectorised ``index`` over the last axis of an int array."""
        mod = np.asarray(self.cyclic_orders, dtype=np.int64)
        strides = np.asarray(self._strides, dtype=np.int64)
        if mod.size == 0:
            return np.zeros(coords.shape[:-1], dtype=np.int64)
        return ((coords % mod) * strides).sum(axis=-1)

    @cached_property
    def add_table(self) -> list[list[int]]:
        X = self.coord_array
        return self.encode_array(X[:, None, :] + X[None, :, :]).tolist()

    @cached_property
    def neg_table(self) -> list[int]:
        return self.encode_array(-self.coord_array).tolist()

    def add(self, a: int, b: int) -> int:
        if a < 0 or b < 0:
            raise MembershipError(f"negative element index in {self!r}")
        try:
            return self.add_table[a][b]
        except IndexError:
            raise MembershipError(f"({a}, {b}) are not both elements of {self!r}") from None

    def neg(self, a: int) -> int:
        self._check(a)
        return self.neg_table[a]

    @cached_property
    def element_orders(self) -> dict[int, int]:
        out = {}
        for a in self.elements():
            c = self.coords(a)
            out[a] = math.lcm(1, *(d // math.gcd(x, d) for x, d in zip(c, self.cyclic_orders)))
        return out

    def invariant_factors(self) -> list[int]:
        return canonical_factors(self.cyclic_orders)

    def _check(self, a):
        if a not in self:
            raise MembershipError(f"{a!r} is not an element of {self!r}")


@dataclass(frozen=True, eq=False)
class Subgroup(FiniteAbelianGroup):
    parent: FiniteAbelianGroup
    generators: tuple[int, ...]
    members: frozenset[int] = field(repr=False)

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.members == self.members)

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __repr__(self):
        return f"Subgroup(order={self.order}, gens={list(self.generators)})"

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def sorted_elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def elements(self) -> tuple[int, ...]:
        return self.sorted_elements

    @property
    def element_set(self) -> frozenset[int]:
        return self.members

    def add(self, a, b):
        return self.parent.add(a, b)

    def neg(self, a):
        return self.parent.neg(a)

    def issubset(self, other) -> bool:
        return self.members <= _member_set(other)


@dataclass(frozen=True, eq=False)
class QuotientGroup(FiniteAbelianGroup):
    """parent / kernel with cosets numbered by their smallest element."""

    parent: FiniteAbelianGroup
    kernel: Subgroup
    coset_reps: tuple[int, ...]
    projection: dict[int, int] = field(repr=False)
    structure: tuple[int, ...] = ()

    def __repr__(self):
        return f"QuotientGroup(order={self.order}, structure={list(self.structure)})"

    @property
    def order(self) -> int:
        return len(self.coset_reps)

    def elements(self) -> range:
        return range(self.order)

    def __contains__(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < self.order

    @cached_property
    def add_table(self) -> list[list[int]]:
        reps, proj, add = self.coset_reps, self.projection, self.parent.add
        return [[proj[add(a, b)] for b in reps] for a in reps]

    def add(self, a, b):
        return self.add_table[a][b]

    def neg(self, a):
        return self.projection[self.parent.neg(self.coset_reps[a])]

    def project(self, x: int) -> int:
        return self.projection[x]

    def lift(self, c: int) -> int:
        return self.coset_reps[c]

    def coset(self, c: int) -> frozenset[int]:
        rep = self.coset_reps[c]
        return frozenset(self.parent.add(rep, k) for k in self.kernel.members)

    def image(self, subset: Iterable[int]) -> frozenset[int]:
        return frozenset(self.projection[x] for x in subset)

    def invariant_factors(self) -> list[int]:
        return list(self.structure)


def _member_set(H) -> frozenset[int]:
    if isinstance(H, Subgroup):
        return H.members
    if isinstance(H, FiniteAbelianGroup):
        return H.element_set
    return frozenset(H)


# --------------------------------------------------------------------------
# operations

def subgroup_generated(G: FiniteAbelianGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup of G containing ``gens`` (closure under addition)."""
    gens = tuple(dict.fromkeys(int(g) for g in gens))
    for g in gens:
        if g not in G:
            raise MembershipError(f"generator {g} is not an element of {G!r}")
    members = {0}
    for g in gens:
        if g in members:
            continue
        members = _join_cyclic(G, members, g)
    return Subgroup(G, gens, frozenset(members))


def _join_cyclic(G, members, g):
    """members + <g>, assuming members is already a subgroup."""
    out = set(members)
    step = g
    while step not in members:
        out.update(G.add(x, step) for x in members)
        step = G.add(step, g)
    return out


def as_subgroup(G: FiniteAbelianGroup, subset: Iterable[int], check=True) -> Subgroup:
    """Wrap a set already known (or checked) to be a subgroup of G."""
    members = frozenset(subset)
    if check:
        if 0 not in members or any(x not in G for x in members):
            raise NotASubgroup("subset does not lie in the group or lacks 0")
        if any(G.add(a, b) not in members for a in members for b in members):
            raise NotASubgroup("subset is not closed under addition")
    return Subgroup(G, tuple(sorted(members)), members)


def quotient(G: FiniteAbelianGroup, H: Subgroup | Iterable[int]) -> QuotientGroup:
    if not isinstance(H, Subgroup) or H.parent is not G:
        H = as_subgroup(G, _member_set(H))
    elif any(x not in G for x in H.members):
        raise NotASubgroup("kernel is not a subgroup of the given group")
    reps, projection = [], {}
    for x in G.elements():
        if x in projection:
            continue
        c = len(reps)
        reps.append(x)
        for k in H.members:
            projection[G.add(x, k)] = c
    if isinstance(G, AbelianGroup):
        rel = [[d if i == j else 0 for j in range(G.rank)] for i, d in enumerate(G.cyclic_orders)]
        rel += [list(G.coords(h)) for h in _generators_of(H)]
        structure = tuple(sorted(d for d in smith_diagonal(rel, G.rank) if d != 1))
        Q = QuotientGroup(G, H, tuple(reps), projection, structure)
    else:
        Q = QuotientGroup(G, H, tuple(reps), projection)
        object.__setattr__(Q, "structure", tuple(invariant_factors_from_orders(Q)))
    return Q


def _generators_of(H: Subgroup) -> tuple[int, ...]:
    gens = tuple(h for h in H.generators if h != 0)
    if subgroup_generated(H.parent, gens).members == H.members:
        return gens
    return generating_set(H)


def invariant_factors(G: FiniteAbelianGroup) -> list[int]:
    """Canonical d_1 | d_2 | ... | d_m with every d_i >= 2."""
    return list(G.invariant_factors())


def is_isomorphic(G: FiniteAbelianGroup, H: FiniteAbelianGroup) -> bool:
    return invariant_factors(G) == invariant_factors(H)


def is_cyclic(G: FiniteAbelianGroup) -> bool:
    return len(invariant_factors(G)) <= 1


def index(G: FiniteAbelianGroup, H) -> int:
    members = _member_set(H)
    if not members <= G.element_set or 0 not in members:
        raise NotASubgroup("index taken over a set that is not a subgroup of G")
    if G.order % len(members):
        raise NotASubgroup("subset order does not divide the group order")
    return G.order // len(members)


def generating_set(G: FiniteAbelianGroup) -> tuple[int, ...]:
    """Deterministic small generating set: greedily take the highest-order
    element outside the current span."""
    ords = G.element_orders
    ranked = sorted(G.elements(), key=lambda a: (-ords[a], a))
    span = {0}
    gens = []
    for a in ranked:
        if len(span) == G.order:
            break
        if a in span:
            continue
        gens.append(a)
        span = _join_cyclic(G, span, a)
    return tuple(gens)


@dataclass(frozen=True)
class Isomorphism:
    """An additive isomorphism given by generator images plus its full table."""

    generators: tuple[int, ...]
    images: tuple[int, ...]
    mapping: dict[int, int] = field(repr=False, compare=False)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def inverse_mapping(self) -> dict[int, int]:
        return {v: k for k, v in self.mapping.items()}


def isomorphisms(G: FiniteAbelianGroup, H: FiniteAbelianGroup,
                 cap: int | None = None) -> Iterator[Isomorphism]:
    """Every additive isomorphism G -> H, lexicographic in generator images.

    Images are restricted to elements of matching order before the partial
    map is extended and checked, so dead branches are cut at the first
    generator that breaks additivity or injectivity.
    """
    if G.order != H.order or invariant_factors(G) != invariant_factors(H):
        return
    gens = generating_set(G)
    gords = [G.element_order(g) for g in gens]
    hords = H.element_orders
    pools = [[h for h in sorted(H.elements()) if hords[h] == o] for o in gords]
    count = 0

    def extend(mapping, g, h, o):
        new = dict(mapping)
        layer = mapping
        for _ in range(1, o):
            nxt = {}
            for x, y in layer.items():
                key, val = G.add(x, g), H.add(y, h)
                known = new.get(key)
                if known is None:
                    new[key] = val
                elif known != val:
                    return None
                nxt[key] = val
            layer = nxt
        if len(set(new.values())) != len(new):
            return None
        return new

    def walk(i, mapping, chosen):
        nonlocal count
        if i == len(gens):
            count += 1
            if cap is not None and count > cap:
                raise SearchBudgetExceeded(f"more than {cap} isomorphisms")
            yield Isomorphism(gens, tuple(chosen), mapping)
            return
        for h in pools[i]:
            new = extend(mapping, gens[i], h, gords[i])
            if new is not None:
                yield from walk(i + 1, new, chosen + [h])

    yield from walk(0, {0: 0}, [])


def all_subgroups(G: FiniteAbelianGroup, cap: int = DEFAULT_CAP) -> Iterator[Subgroup]:
    """Every subgroup exactly once, ordered by (order, sorted elements)."""
    if G.order > cap:
        raise CapExceeded(f"group order {G.order} exceeds subgroup enumeration cap {cap}")
    seen = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        nxt = []
        for members in frontier:
            for g in G.elements():
                if g in members:
                    continue
                bigger = frozenset(_join_cyclic(G, members, g))
                if bigger not in seen:
                    seen.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    for members in sorted(seen, key=lambda s: (len(s), sorted(s))):
        yield Subgroup(G, generating_set_of(G, members), members)


def generating_set_of(G: FiniteAbelianGroup, members: frozenset[int]) -> tuple[int, ...]:
    span = {0}
    gens = []
    ords = G.element_orders
    for a in sorted(members, key=lambda a: (-ords[a], a)):
        if len(span) == len(members):
            break
        if a not in span:
            gens.append(a)
            span = _join_cyclic(G, span, a)
    return tuple(gens)
