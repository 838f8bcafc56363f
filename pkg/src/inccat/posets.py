"""Finite labeled posets with optional element colors.

Elements of a poset of size n are the indices 0..n-1, and subsets of
elements are plain int bitmasks (bit i set means element i is present).
This keeps the whole library allocation-light: order ideals, convex
subsets and morphism data are all masks.  The order relation is stored
densely, one up-set mask per element: bit j of ``leq[i]`` says i <= j.
Posets are immutable and hashable, and every operation in this module is
a pure function of its inputs.

Two notions of isomorphism are supported (:class:`MapMode`): all order
isomorphisms, or only the color-preserving ones.  Canonical forms are
byte strings computed by a branch-and-bound search for the
lexicographically least serialized relation matrix over permutations
that respect an invariant-based pre-partition of the elements; the
result is deterministic across runs and platforms.

The size cap (default 32) keeps bitmask rows small and catches runaway
inputs early; override it with the INCCAT_MAX_POSET_SIZE environment
variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator

from .errors import CycleError, PosetError, SizeCapError

DEFAULT_SIZE_CAP = 32
SIZE_CAP_ENV = "INCCAT_MAX_POSET_SIZE"


def size_cap() -> int:
    """Maximum supported poset size (env override INCCAT_MAX_POSET_SIZE)."""
    raw = os.environ.get(SIZE_CAP_ENV)
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise SizeCapError(f"invalid {SIZE_CAP_ENV}={raw!r}") from exc
    if cap < 0:
        raise SizeCapError(f"invalid {SIZE_CAP_ENV}={raw!r}")
    return cap


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


class MapMode(Enum):
    """Which isomorphisms the ambient family admits between its posets."""

    ALL_POSET_ISOS = "all"
    COLOR_PRESERVING_ISOS = "color"


@dataclass(frozen=True)
class Poset:
    """An immutable finite poset on elements 0..size-1.

    ``leq[i]`` is the bitmask of elements j with i <= j (so bit i itself is
    always set).  ``labels`` are display names used by serialization only;
    ``colors`` is one small nonnegative integer per element (all zero when
    the poset is uncolored).  Reflexivity, antisymmetry and transitivity
    are checked at construction.
    """

    leq: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    colors: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.leq)
        cap = size_cap()
        if n > cap:
            raise SizeCapError(f"poset size {n} exceeds the cap {cap}")
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))
        if self.colors is None:
            object.__setattr__(self, "colors", (0,) * n)
        if len(self.labels) != n or len(self.colors) != n:
            raise PosetError("labels/colors length must equal the poset size")
        if len(set(self.labels)) != n:
            raise PosetError("element labels must be distinct")
        if any(c < 0 or c > 255 for c in self.colors):
            raise PosetError("colors must be small nonnegative integers (< 256)")
        full = (1 << n) - 1
        for i, row in enumerate(self.leq):
            if row & ~full:
                raise PosetError(f"relation row {i} references elements out of range")
            if not (row >> i) & 1:
                raise PosetError(f"relation is not reflexive at element {i}")
        for i in range(n):
            for j in bits(self.leq[i]):
                if j != i and (self.leq[j] >> i) & 1:
                    raise PosetError(f"relation is not antisymmetric on {i},{j}")
                if self.leq[j] & ~self.leq[i]:
                    raise PosetError(f"relation is not transitive through {i} <= {j}")

    @property
    def size(self) -> int:
        return len(self.leq)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.leq)) - 1

    def le(self, i: int, j: int) -> bool:
        return bool((self.leq[i] >> j) & 1)

    @cached_property
    def downs(self) -> tuple[int, ...]:
        """downs[j] = bitmask of {i : i <= j} (transpose of leq)."""
        n = self.size
        out = [0] * n
        for i in range(n):
            for j in bits(self.leq[i]):
                out[j] |= 1 << i
        return tuple(out)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse diagram as (lower, upper) pairs, derived on demand."""
        out = []
        for i in range(self.size):
            strict_up = self.leq[i] & ~(1 << i)
            for j in bits(strict_up):
                between = strict_up & self.downs[j] & ~(1 << j)
                if not between:
                    out.append((i, j))
        return tuple(out)

    def down_closure(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.downs[i]
        return out

    def up_closure(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.leq[i]
        return out

    def comparability_mask(self, i: int) -> int:
        return self.leq[i] | self.downs[i]

    def relabel(self, labels: Iterable[str]) -> "Poset":
        return Poset(self.leq, tuple(labels), self.colors)

    def dual(self) -> "Poset":
        """Order-reversed copy (x <= y in the dual iff y <= x here)."""
        return Poset(self.downs, self.labels, self.colors)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        rel = ",".join(f"{self.labels[i]}<{self.labels[j]}" for i, j in self.covers)
        return f"Poset({self.size}:{rel})"


EMPTY_POSET = Poset(())


def from_covers(
    element_labels: Iterable[str],
    covers: Iterable[tuple[str, str]],
    colors: dict[str, int] | None = None,
) -> Poset:
    """Build a poset from a Hasse-style cover list.

    The order is the reflexive-transitive closure of ``covers``; a cycle in
    the cover digraph or a cover mentioning an unknown label is rejected.
    """
    labels = tuple(element_labels)
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise PosetError("element labels must be distinct")
    n = len(labels)
    succ = [0] * n
    for lo, hi in covers:
        if lo not in index or hi not in index:
            missing = lo if lo not in index else hi
            raise PosetError(f"cover references unknown label {missing!r}")
        succ[index[lo]] |= 1 << index[hi]

    # Kahn-style elimination; a leftover strongly-cyclic core gives the cycle.
    pred_count = [0] * n
    for i in range(n):
        for j in bits(succ[i]):
            pred_count[j] += 1
    order = [i for i in range(n) if pred_count[i] == 0]
    seen = len(order)
    head = 0
    while head < len(order):
        for j in bits(succ[order[head]]):
            pred_count[j] -= 1
            if pred_count[j] == 0:
                order.append(j)
                seen += 1
        head += 1
    if seen != n:
        raise CycleError(_extract_cycle(succ, [i for i in range(n) if pred_count[i] > 0], labels))

    up = [1 << i for i in range(n)]
    for i in reversed(order):
        for j in bits(succ[i]):
            up[i] |= up[j]
    color_tuple = None
    if colors is not None:
        unknown = set(colors) - set(labels)
        if unknown:
            raise PosetError(f"colors reference unknown labels {sorted(unknown)}")
        color_tuple = tuple(colors.get(lab, 0) for lab in labels)
    return Poset(tuple(up), labels, color_tuple)


def _extract_cycle(succ: list[int], leftover: list[int], labels: tuple[str, ...]) -> list[str]:
    """Walk backwards inside the non-eliminated core until a node repeats.

    Every core node kept a positive predecessor count, so it has at least
    one predecessor in the core (successors may all lie outside it).
    """
    inside = set(leftover)
    pred = {i: [j for j in inside if (succ[j] >> i) & 1] for i in inside}
    path: list[int] = []
    pos: dict[int, int] = {}
    node = leftover[0]
    while node not in pos:
        pos[node] = len(path)
        path.append(node)
        node = pred[node][0]
    cycle = path[pos[node]:]
    cycle.reverse()
    return [labels[i] for i in cycle]


def disjoint_union(p: Poset, q: Poset) -> tuple[Poset, tuple[int, ...], tuple[int, ...]]:
    """P + Q with no relations across the summands.

    Returns the union together with the two element embeddings.  Labels are
    kept verbatim unless they collide, in which case the Q-side label gains
    primes until fresh.
    """
    n, m = p.size, q.size
    leq = list(p.leq) + [row << n for row in q.leq]
    taken = set(p.labels)
    labels = list(p.labels)
    for lab in q.labels:
        while lab in taken:
            lab = lab + "'"
        taken.add(lab)
        labels.append(lab)
    colors = p.colors + q.colors
    poset = Poset(tuple(leq), tuple(labels), colors)
    return poset, tuple(range(n)), tuple(range(n, n + m))


def cartesian_product(p: Poset, q: Poset) -> Poset:
    """P x Q with (x,y) <= (x',y') iff x <= x' and y <= y'."""
    n, m = p.size, q.size
    leq = []
    labels = []
    colors = []
    for i in range(n):
        for j in range(m):
            row = 0
            for a in bits(p.leq[i]):
                for b in bits(q.leq[j]):
                    row |= 1 << (a * m + b)
            leq.append(row)
            labels.append(f"({p.labels[i]},{q.labels[j]})")
            colors.append(0)
    return Poset(tuple(leq), tuple(labels), tuple(colors))


def induced_subposet(p: Poset, mask: int) -> tuple[Poset, tuple[int, ...]]:
    """Restriction of order and colors to ``mask``.

    Returns the subposet together with the element map: entry k is the
    original index of the new element k (new indices follow the ascending
    order of the original ones).
    """
    if mask & ~p.full_mask:
        raise PosetError("subset references elements out of range")
    elements = tuple(bits(mask))
    pos = {e: k for k, e in enumerate(elements)}
    leq = []
    for e in elements:
        row = 0
        for j in bits(p.leq[e] & mask):
            row |= 1 << pos[j]
        leq.append(row)
    labels = tuple(p.labels[e] for e in elements)
    colors = tuple(p.colors[e] for e in elements)
    return Poset(tuple(leq), labels, colors), elements


def is_convex(p: Poset, mask: int) -> bool:
    """True iff x <= z <= y with x,y in the set forces z in the set."""
    if mask & ~p.full_mask:
        raise PosetError("subset references elements out of range")
    for x in bits(mask):
        above = p.leq[x] & ~mask
        for z in bits(above):
            if p.leq[z] & mask:
                return False
    return True


def is_convex_via_ideals(p: Poset, mask: int) -> bool:
    """Alternate characterization: the set is L \\ I for nested order ideals.

    Taking L = down-closure of the set and I = L minus the set, S = L \\ I
    holds by construction and L is always an ideal, so convexity is
    equivalent to I being downward closed.  Kept as an independent
    cross-check of :func:`is_convex`.
    """
    low = p.down_closure(mask)
    ideal = low & ~mask
    return all(not (p.downs[i] & ~ideal) for i in bits(ideal))


def connected_components(p: Poset) -> list[int]:
    """Partition of the elements into comparability components (masks).

    Components are listed by their smallest element, ascending; the empty
    poset yields the empty list.
    """
    remaining = p.full_mask
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        while True:
            grown = comp
            for i in bits(comp):
                grown |= p.comparability_mask(i)
            if grown == comp:
                break
            comp = grown
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(p: Poset) -> bool:
    """Nonempty and a single comparability component (the empty poset is not)."""
    return len(connected_components(p)) == 1


@dataclass(frozen=True)
class Bijection:
    """A validated order isomorphism between two posets.

    ``mapping[i]`` is the target index of source element i.  Validation
    checks that the map is bijective, preserves and reflects the order, and
    preserves colors when ``mode`` demands it.
    """

    source: Poset
    target: Poset
    mapping: tuple[int, ...]
    mode: MapMode

    def __post_init__(self) -> None:
        src, tgt = self.source, self.target
        n = src.size
        if tgt.size != n or len(self.mapping) != n:
            raise PosetError("bijection endpoints must have equal size")
        if sorted(self.mapping) != list(range(n)):
            raise PosetError("mapping is not a bijection of element indices")
        for i in range(n):
            fi = self.mapping[i]
            for j in range(n):
                if src.le(i, j) != tgt.le(fi, self.mapping[j]):
                    raise PosetError(f"map does not respect the order on {i},{j}")
        if self.mode is MapMode.COLOR_PRESERVING_ISOS:
            for i in range(n):
                if src.colors[i] != tgt.colors[self.mapping[i]]:
                    raise PosetError(f"map does not preserve the color of {i}")

    def inverse(self) -> "Bijection":
        inv = [0] * len(self.mapping)
        for i, fi in enumerate(self.mapping):
            inv[fi] = i
        return Bijection(self.target, self.source, tuple(inv), self.mode)

    def apply_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= 1 << self.mapping[i]
        return out


def _color_keys(p: Poset, mode: MapMode) -> tuple[int, ...]:
    if mode is MapMode.COLOR_PRESERVING_ISOS:
        return p.colors
    return (0,) * p.size


def element_signatures(p: Poset, mode: MapMode, rounds: int = 2) -> tuple:
    """Isomorphism-invariant signature per element.

    Starts from (color, |down-set|, |up-set|, height) and refines a fixed
    number of times by the sorted multisets of the signatures strictly
    below and above.  Signatures of corresponding elements under any
    mode-admissible isomorphism coincide, so they pre-partition both
    canonicalization and isomorphism search.
    """
    n = p.size
    colors = _color_keys(p, mode)
    height = [0] * n
    for i in sorted(range(n), key=lambda x: p.downs[x].bit_count()):
        below = p.downs[i] & ~(1 << i)
        height[i] = max((height[j] + 1 for j in bits(below)), default=0)
    sig: list = [
        (colors[i], p.downs[i].bit_count(), p.leq[i].bit_count(), height[i])
        for i in range(n)
    ]
    for _ in range(rounds):
        sig = [
            (
                sig[i],
                tuple(sorted(sig[j] for j in bits(p.downs[i] & ~(1 << i)))),
                tuple(sorted(sig[j] for j in bits(p.leq[i] & ~(1 << i)))),
            )
            for i in range(n)
        ]
    return tuple(sig)


def _twin_classes(p: Poset, colors: tuple[int, ...]) -> list[int]:
    """Group elements whose transposition is an automorphism.

    Two incomparable, equally colored elements with identical relations to
    everything else can be swapped freely; during canonicalization only one
    representative per class needs exploring at any search node.
    """
    n = p.size
    cls = list(range(n))
    for i in range(n):
        for j in range(i + 1, n):
            if cls[j] != j or colors[i] != colors[j]:
                continue
            if p.le(i, j) or p.le(j, i):
                continue
            outside = ~((1 << i) | (1 << j))
            if (p.leq[i] & outside) == (p.leq[j] & outside) and (
                p.downs[i] & outside
            ) == (p.downs[j] & outside):
                cls[j] = cls[i]
    return cls


# Content-keyed memo table.  Population is idempotent (the key is a pure
# function of the poset value), so concurrent readers can at worst repeat
# a computation; results are identical with or without the cache.
_CANON_CACHE: dict[tuple, bytes] = {}


def canonical_form(p: Poset, mode: MapMode = MapMode.ALL_POSET_ISOS) -> bytes:
    """Canonical key: equal for two posets iff they are isomorphic in ``mode``.

    The key of the empty poset is the empty byte string.  Otherwise the key
    records the mode, the size, the canonically ordered color sequence
    (color-preserving mode only) and the lexicographically least serialized
    relation matrix over all pre-partition-respecting relabelings.  The
    matrix is serialized in "L-shaped" layer order (row p up to column p,
    then column p up to row p-1) so the branch-and-bound can compare
    prefixes as elements are placed.
    """
    if p.size == 0:
        return b""
    colors = _color_keys(p, mode)
    cache_key = (mode, p.leq, colors)
    hit = _CANON_CACHE.get(cache_key)
    if hit is not None:
        return hit

    n = p.size
    sigs = element_signatures(p, mode)
    order_of_sig = {s: r for r, s in enumerate(sorted(set(sigs)))}
    cells: dict[int, list[int]] = {}
    for i in range(n):
        cells.setdefault(order_of_sig[sigs[i]], []).append(i)
    pos_cell = [rank for rank in sorted(cells) for _ in cells[rank]]
    twin = _twin_classes(p, colors)
    up = p.leq

    placed: list[int] = []

    def dfs(used: int) -> tuple[int, ...]:
        depth = len(placed)
        if depth == n:
            return ()
        groups: dict[tuple[int, ...], list[int]] = {}
        seen_twins = set()
        for e in cells[pos_cell[depth]]:
            if (used >> e) & 1 or twin[e] in seen_twins:
                continue
            seen_twins.add(twin[e])
            block = tuple((up[e] >> q) & 1 for q in placed)
            block += (1,) + tuple((up[q] >> e) & 1 for q in placed)
            groups.setdefault(block, []).append(e)
        least = min(groups)
        best: tuple[int, ...] | None = None
        for e in groups[least]:
            placed.append(e)
            tail = dfs(used | (1 << e))
            placed.pop()
            if best is None or tail < best:
                best = tail
        return least + best  # type: ignore[operator]

    matrix_bits = dfs(0)
    packed = bytearray()
    acc, nbits = 0, 0
    for b in matrix_bits:
        acc = (acc << 1) | b
        nbits += 1
        if nbits == 8:
            packed.append(acc)
            acc, nbits = 0, 0
    if nbits:
        packed.append(acc << (8 - nbits))

    tag = 0 if mode is MapMode.ALL_POSET_ISOS else 1
    key = bytes([tag, n])
    if mode is MapMode.COLOR_PRESERVING_ISOS:
        cell_color = {rank: colors[cells[rank][0]] for rank in cells}
        key += bytes(cell_color[rank] for rank in pos_cell)
    key += bytes(packed)
    _CANON_CACHE[cache_key] = key
    return key


def find_isomorphisms(p: Poset, q: Poset, mode: MapMode = MapMode.ALL_POSET_ISOS) -> list[Bijection]:
    """The complete list of mode-admissible isomorphisms P -> Q.

    Empty when sizes differ or no isomorphism exists; for P = Q this is the
    automorphism group.  Results are ordered lexicographically by mapping
    tuple, so output is deterministic.
    """
    n = p.size
    if q.size != n:
        return []
    sp = element_signatures(p, mode)
    sq = element_signatures(q, mode)
    if sorted(sp) != sorted(sq):
        return []
    candidates = [[j for j in range(n) if sq[j] == sp[i]] for i in range(n)]

    out: list[Bijection] = []
    mapping = [-1] * n
    used = [False] * n

    def backtrack(i: int) -> None:
        if i == n:
            out.append(Bijection(p, q, tuple(mapping), mode))
            return
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for k in range(i):
                if p.le(i, k) != q.le(j, mapping[k]) or p.le(k, i) != q.le(mapping[k], j):
                    ok = False
                    break
            if ok:
                mapping[i] = j
                used[j] = True
                backtrack(i + 1)
                used[j] = False
        mapping[i] = -1

    backtrack(0)
    return out


def are_isomorphic(p: Poset, q: Poset, mode: MapMode = MapMode.ALL_POSET_ISOS) -> bool:
    return canonical_form(p, mode) == canonical_form(q, mode)


def automorphisms(p: Poset, mode: MapMode = MapMode.ALL_POSET_ISOS) -> list[Bijection]:
    """Aut_M(P): all mode-admissible automorphisms."""
    return find_isomorphisms(p, p, mode)
