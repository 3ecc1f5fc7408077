"""The builtin corpus used by verification sweeps.

``builtin<=N`` means: every builtin family member of order at most N, with
all subrings enumerated for rings of order at most ``subring_cap`` (and for
non-commutative rings up to ``noncommutative_cap``), and only {0}, Z(R) and R
for the rest. Large zero rings are what make full enumeration expensive.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .ring import (
    FiniteRing,
    Subring,
    center,
    direct_sum,
    enumerate_subrings,
    mat_full,
    mat_row,
    mat_upper_tri,
    zero_ring,
    zn,
)

DEFAULT_SUBRING_CAP = 32
DEFAULT_NONCOMMUTATIVE_CAP = 64


@dataclass
class CorpusEntry:
    ring: FiniteRing
    subrings: list[Subring]


def abelian_types(n: int) -> list[list[int]]:
    """Every invariant-factor list d_1 | d_2 | ... with product n."""
    if n == 1:
        return [[]]
    out = []

    def grow(prefix, remaining):
        if remaining == 1:
            out.append(prefix)
            return
        last = prefix[-1] if prefix else 1
        for d in range(2, remaining + 1):
            if remaining % d == 0 and d % last == 0:
                rest = remaining // d
                # every later factor is a multiple of d
                if rest == 1 or rest % d == 0:
                    grow(prefix + [d], rest)

    grow([], n)
    return sorted(out)


def _noncommutative_bases(max_order):
    bases = [mat_row(m) for m in range(2, max_order + 1) if m * m <= max_order]
    bases += [mat_upper_tri(m) for m in range(2, max_order + 1) if m ** 3 <= max_order]
    if 16 <= max_order:
        bases.append(mat_full(2, 2))
    return bases


def builtin_rings(max_order: int) -> list[FiniteRing]:
    """Builtin rings of order <= max_order, sorted by (order, name)."""
    rings = [zn(n) for n in range(1, max_order + 1)]
    for n in range(2, max_order + 1):
        rings += [zero_ring(t) for t in abelian_types(n)]
    bases = _noncommutative_bases(max_order)
    rings += bases
    partners = [zn(n) for n in range(2, max_order + 1)] + [zero_ring([2])]
    for B in bases:
        for C in partners:
            if B.order * C.order <= max_order:
                rings.append(direct_sum(B, C))
    small = [B for B in bases if B.order <= max_order]
    for i, A in enumerate(small):
        for B in small[i:]:
            if A.order * B.order <= max_order:
                rings.append(direct_sum(A, B))
    return sorted(rings, key=lambda R: (R.order, R.name))


def entry_for(R: FiniteRing, subring_cap: int = DEFAULT_SUBRING_CAP,
              noncommutative_cap: int = DEFAULT_NONCOMMUTATIVE_CAP) -> CorpusEntry:
    full = R.order <= subring_cap or (not R.is_commutative and R.order <= noncommutative_cap)
    if full:
        subs = list(enumerate_subrings(R, cap=R.order))
    else:
        pool = {S.members: S for S in (R.zero_subring(), center(R), R.whole())}
        subs = sorted(pool.values(), key=Subring.sort_key)
    return CorpusEntry(R, subs)


def builtin_corpus(max_order: int = 16, subring_cap: int = DEFAULT_SUBRING_CAP,
                   noncommutative_cap: int = DEFAULT_NONCOMMUTATIVE_CAP) -> Iterator[CorpusEntry]:
    for R in builtin_rings(max_order):
        yield entry_for(R, subring_cap, noncommutative_cap)


_SELECTOR = re.compile(r"^builtin\s*<=\s*(\d+)$")


def parse_corpus_selector(selector: str) -> int:
    m = _SELECTOR.match(selector.strip())
    if not m:
        raise ValueError(f"corpus selector must look like 'builtin<=N', got {selector!r}")
    return int(m.group(1))
