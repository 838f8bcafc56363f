"""Order ideals and the distributive lattice J_P they form.

Every poset P has a lattice of downward-closed subsets with join = union
and meet = intersection.  Ideals are enumerated as down-closures of the
antichains of maximal elements (a bijection, so the enumeration is linear
in the output and never touches all 2^n subsets), listed in a fixed order
(popcount, then numeric mask value) and cached per poset.

Two structural correspondences from this module power everything
downstream: the interval [I, L] in J_P is the ideal lattice of the convex
subposet L \\ I, and J_{P+Q} splits as J_P x J_Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import NotAnIdealError, PosetError
from .posets import Poset, bits, disjoint_union, induced_subposet


def is_order_ideal(p: Poset, mask: int) -> bool:
    """True iff the subset is downward closed in P."""
    if mask & ~p.full_mask:
        raise PosetError("subset references elements out of range")
    return all(not (p.downs[i] & ~mask) for i in bits(mask))


def smallest_ideal_containing(p: Poset, parts: Iterable[int]) -> int:
    """Down-closure of the union of the given subsets."""
    union = 0
    for part in parts:
        if part & ~p.full_mask:
            raise PosetError("subset references elements out of range")
        union |= part
    return p.down_closure(union)


@dataclass(frozen=True, eq=False)
class IdealLattice:
    """The distributive lattice J_P, fully enumerated.

    ``ideals`` is the complete tuple of ideal masks sorted by (popcount,
    mask value); ``index`` maps each mask back to its position.
    """

    base: Poset
    ideals: tuple[int, ...]
    index: dict[int, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.ideals)

    def __contains__(self, mask: int) -> bool:
        return mask in self.index

    def __iter__(self):
        return iter(self.ideals)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.base.full_mask

    def require_member(self, mask: int) -> None:
        if mask not in self.index:
            raise NotAnIdealError(f"{mask:#x} is not an order ideal of the base poset")

    def join(self, i1: int, i2: int) -> int:
        self.require_member(i1)
        self.require_member(i2)
        return i1 | i2

    def meet(self, i1: int, i2: int) -> int:
        self.require_member(i1)
        self.require_member(i2)
        return i1 & i2


# Keyed by poset value; population is idempotent, so a race can at worst
# recompute the same lattice.
_LATTICE_CACHE: dict[Poset, IdealLattice] = {}


def order_ideals(p: Poset) -> IdealLattice:
    """Enumerate J_P (cached per poset value).

    Each ideal is the down-closure of a unique antichain (its maximal
    elements), so a DFS over antichains yields every ideal exactly once.
    """
    hit = _LATTICE_CACHE.get(p)
    if hit is not None:
        return hit
    n = p.size
    incomp = [~(p.leq[i] | p.downs[i]) for i in range(n)]
    found: list[int] = []

    def grow(start: int, chosen: int, allowed: int) -> None:
        found.append(p.down_closure(chosen))
        for x in range(start, n):
            if (allowed >> x) & 1:
                grow(x + 1, chosen | (1 << x), allowed & incomp[x])

    grow(0, 0, p.full_mask)
    ideals = tuple(sorted(found, key=lambda m: (m.bit_count(), m)))
    lattice = IdealLattice(p, ideals, {m: k for k, m in enumerate(ideals)})
    _LATTICE_CACHE[p] = lattice
    return lattice


def lattice_ops(lattice: IdealLattice, i1: int, i2: int) -> tuple[int, int]:
    """(join, meet) = (union, intersection); both inputs must be members."""
    return lattice.join(i1, i2), lattice.meet(i1, i2)


@dataclass(frozen=True, eq=False)
class IntervalCorrespondence:
    """The interval [I, L] of J_P seen as the ideal lattice of L \\ I.

    ``to_quotient`` reindexes an ideal K with I <= K <= L into the convex
    subposet on L \\ I; ``from_quotient`` is its inverse.  Both directions
    preserve joins and meets.
    """

    base: Poset
    lower: int
    upper: int
    quotient: Poset
    elements: tuple[int, ...]

    def members(self) -> tuple[int, ...]:
        lat = order_ideals(self.base)
        return tuple(k for k in lat.ideals if k & self.lower == self.lower and k | self.upper == self.upper)

    def to_quotient(self, k: int) -> int:
        if k & self.lower != self.lower or k | self.upper != self.upper:
            raise NotAnIdealError("ideal is not inside the interval")
        order_ideals(self.base).require_member(k)
        pos = {e: idx for idx, e in enumerate(self.elements)}
        out = 0
        for e in bits(k & ~self.lower):
            out |= 1 << pos[e]
        return out

    def from_quotient(self, mask: int) -> int:
        if mask & ~self.quotient.full_mask:
            raise PosetError("subset references elements out of range")
        order_ideals(self.quotient).require_member(mask)
        out = self.lower
        for idx in bits(mask):
            out |= 1 << self.elements[idx]
        return out


def interval_to_quotient_lattice(p: Poset, lower: int, upper: int) -> IntervalCorrespondence:
    """Set up [I, L] ~ J_{L \\ I} for nested ideals I <= L of P."""
    lat = order_ideals(p)
    lat.require_member(lower)
    lat.require_member(upper)
    if lower & ~upper:
        raise NotAnIdealError("interval endpoints are not nested")
    quotient, elements = induced_subposet(p, upper & ~lower)
    return IntervalCorrespondence(p, lower, upper, quotient, elements)


@dataclass(frozen=True, eq=False)
class SumCorrespondence:
    """J_{P+Q} = J_P x J_Q, with the union poset and both embeddings."""

    left: Poset
    right: Poset
    union: Poset
    left_embedding: tuple[int, ...]
    right_embedding: tuple[int, ...]

    def split(self, mask: int) -> tuple[int, int]:
        order_ideals(self.union).require_member(mask)
        left_mask = 0
        for k, e in enumerate(self.left_embedding):
            if (mask >> e) & 1:
                left_mask |= 1 << k
        right_mask = 0
        for k, e in enumerate(self.right_embedding):
            if (mask >> e) & 1:
                right_mask |= 1 << k
        return left_mask, right_mask

    def combine(self, left_mask: int, right_mask: int) -> int:
        order_ideals(self.left).require_member(left_mask)
        order_ideals(self.right).require_member(right_mask)
        out = 0
        for k in bits(left_mask):
            out |= 1 << self.left_embedding[k]
        for k in bits(right_mask):
            out |= 1 << self.right_embedding[k]
        return out


def sum_decomposition(p: Poset, q: Poset) -> SumCorrespondence:
    """Every ideal of P+Q splits uniquely into (ideal of P, ideal of Q)."""
    union, emb_p, emb_q = disjoint_union(p, q)
    return SumCorrespondence(p, q, union, emb_p, emb_q)
