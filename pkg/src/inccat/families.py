"""Size-truncated generators for the built-in poset families.

A family is a collection of posets closed under disjoint unions and
convex subposets, together with a map mode saying which isomorphisms its
incidence category admits.  Built-ins:

* ``fin``        all finite posets, all order isomorphisms;
* ``sets``       antichains (finite sets);
* ``csets:k``    k-colored antichains, color-preserving isomorphisms;
* ``forests``    posets whose Hasse diagram is a rooted forest, each
                 tree's root the unique minimal element of its component
                 (pass ``root_max=True`` for the dual convention);
* ``cforests:k`` the k-colored version of forests.

Contexts carry every iso-class representative of each size up to a
cutoff, generated by one-point extensions deduplicated by canonical
form, plus a membership predicate.  Classes are indexed by canonical
key, so classifying an arbitrary member poset is a dictionary lookup.

A :class:`FamilyContext` is plain data (name, map mode, class index,
membership predicate): a third-party family closed under disjoint
unions and convex subposets can be plugged into every algebra operation
by constructing one with its own generator and predicate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import FamilyError, TruncationError
from .category import CategoryObject
from .ideals import order_ideals
from .posets import (
    EMPTY_POSET,
    MapMode,
    Poset,
    bits,
    canonical_form,
    disjoint_union,
    induced_subposet,
    is_convex,
)


@dataclass(frozen=True, eq=False)
class IsoClass:
    """An isomorphism class of family members, identified by canonical key.

    ``size`` doubles as the degree in the order grading of the Hall
    algebra; ``color_vector`` counts elements of each color and carries
    the K0+ degree data for colored families.
    """

    key: bytes
    representative: Poset
    size: int
    color_vector: tuple[int, ...]
    mode: MapMode

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IsoClass):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def hex_key(self) -> str:
        return self.key.hex()

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        covers = ",".join(f"{i}<{j}" for i, j in self.representative.covers)
        return f"[{self.size}:{covers}]"


def _color_vector(p: Poset, num_colors: int) -> tuple[int, ...]:
    counts = [0] * num_colors
    for c in p.colors:
        if c >= num_colors:
            raise FamilyError(f"color {c} out of range for a {num_colors}-colored family")
        counts[c] += 1
    return tuple(counts)


@dataclass(frozen=True, eq=False)
class FamilyContext:
    """A family truncated at ``max_size``, with its full class index."""

    name: str
    mode: MapMode
    num_colors: int
    max_size: int
    classes_by_size: tuple[tuple[IsoClass, ...], ...]
    member: Callable[[Poset], bool] = field(repr=False)
    _by_key: dict[bytes, IsoClass] = field(repr=False)

    def classes(self, size: int) -> tuple[IsoClass, ...]:
        if size > self.max_size:
            raise TruncationError(
                f"family {self.name!r} is truncated at size {self.max_size}, needed {size}"
            )
        return self.classes_by_size[size]

    def all_classes(self) -> list[IsoClass]:
        return [cls for group in self.classes_by_size for cls in group]

    @property
    def empty_class(self) -> IsoClass:
        return self.classes_by_size[0][0]

    def contains(self, p: Poset) -> bool:
        return p.size <= self.max_size and self.member(p)

    def class_of(self, p: Poset) -> IsoClass:
        """Classify a member poset; raises for non-members or oversize input."""
        if p.size > self.max_size:
            raise TruncationError(
                f"family {self.name!r} is truncated at size {self.max_size}, "
                f"got a poset of size {p.size}"
            )
        if not self.member(p):
            raise FamilyError(f"poset is not a member of family {self.name!r}")
        key = canonical_form(p, self.mode)
        cls = self._by_key.get(key)
        if cls is None:
            raise FamilyError(
                f"internal error: member poset of size {p.size} missing from the "
                f"class index of {self.name!r}"
            )
        return cls

    def object_of(self, p: Poset) -> CategoryObject:
        if not self.contains(p):
            raise FamilyError(f"poset is not a member of family {self.name!r}")
        return CategoryObject(p)


def _add_maximal_element(p: Poset, below: int, color: int) -> Poset:
    """Extend by one new maximal element whose strict down-set is ``below``."""
    n = p.size
    leq = [row | (1 << n) if (below >> i) & 1 else row for i, row in enumerate(p.leq)]
    leq.append(1 << n)
    return Poset(tuple(leq), tuple(p.labels) + (str(n),), p.colors + (color,))


def _generate(
    max_size: int,
    mode: MapMode,
    num_colors: int,
    extensions: Callable[[Poset], list[int]],
) -> list[list[tuple[bytes, Poset]]]:
    """Breadth-first one-point extension with canonical deduplication.

    ``extensions(p)`` lists the allowed strict down-sets for a new maximal
    element.  Every poset on n+1 elements in a family arises from deleting
    a maximal element, so feeding back each size level generates all
    classes; colored families try every color for the new element.
    """
    levels: list[list[tuple[bytes, Poset]]] = [[(canonical_form(EMPTY_POSET, mode), EMPTY_POSET)]]
    for _ in range(max_size):
        seen: dict[bytes, Poset] = {}
        for _, p in levels[-1]:
            for below in extensions(p):
                for color in range(num_colors):
                    q = _add_maximal_element(p, below, color)
                    key = canonical_form(q, mode)
                    if key not in seen:
                        seen[key] = q
        levels.append(sorted(seen.items()))
    return levels


def _context(
    name: str,
    mode: MapMode,
    num_colors: int,
    max_size: int,
    levels: list[list[tuple[bytes, Poset]]],
    member: Callable[[Poset], bool],
) -> FamilyContext:
    classes_by_size = []
    by_key: dict[bytes, IsoClass] = {}
    for size, level in enumerate(levels):
        group = []
        for key, rep in level:
            cls = IsoClass(key, rep, size, _color_vector(rep, num_colors), mode)
            group.append(cls)
            by_key[key] = cls
        classes_by_size.append(tuple(group))
    return FamilyContext(name, mode, num_colors, max_size, tuple(classes_by_size), member, by_key)


def _is_antichain(p: Poset) -> bool:
    return all(row == 1 << i for i, row in enumerate(p.leq))


def _max_lower_covers(p: Poset) -> int:
    counts = [0] * p.size
    for _, hi in p.covers:
        counts[hi] += 1
    return max(counts, default=0)


def _is_forest(p: Poset) -> bool:
    """Each element covers at most one element: Hasse diagram a rooted
    forest with roots minimal (every principal down-set is then a chain,
    and each component has a unique minimal element)."""
    return _max_lower_covers(p) <= 1


def _is_forest_root_max(p: Poset) -> bool:
    return _max_lower_covers(p.dual()) <= 1


def _colors_below(p: Poset, k: int) -> bool:
    return all(c < k for c in p.colors)


def fin_up_to(n: int) -> FamilyContext:
    """All finite posets up to isomorphism, each size <= n."""
    levels = _generate(
        n,
        MapMode.ALL_POSET_ISOS,
        1,
        lambda p: list(order_ideals(p).ideals),
    )
    return _context("fin", MapMode.ALL_POSET_ISOS, 1, n, levels, lambda p: True)


def sets_up_to(n: int) -> FamilyContext:
    """Finite sets (antichains): exactly one class per size."""
    levels = _generate(n, MapMode.ALL_POSET_ISOS, 1, lambda p: [0])
    return _context("sets", MapMode.ALL_POSET_ISOS, 1, n, levels, _is_antichain)


def colored_sets_up_to(n: int, k: int) -> FamilyContext:
    """k-colored sets; classes are color-count vectors, maps preserve colors."""
    if k < 1:
        raise FamilyError("need at least one color")
    levels = _generate(n, MapMode.COLOR_PRESERVING_ISOS, k, lambda p: [0])
    return _context(
        f"csets:{k}",
        MapMode.COLOR_PRESERVING_ISOS,
        k,
        n,
        levels,
        lambda p: _is_antichain(p) and _colors_below(p, k),
    )


def _forest_extensions(p: Poset) -> list[int]:
    """New leaf above any single element, or a fresh isolated root."""
    return [0] + [p.downs[i] for i in range(p.size)]


def forests_up_to(n: int, root_max: bool = False) -> FamilyContext:
    """Posets of rooted forests (roots minimal; dualize with root_max)."""
    if not root_max:
        levels = _generate(n, MapMode.ALL_POSET_ISOS, 1, _forest_extensions)
        return _context("forests", MapMode.ALL_POSET_ISOS, 1, n, levels, _is_forest)
    dual_levels = _generate(n, MapMode.ALL_POSET_ISOS, 1, _forest_extensions)
    levels = [
        sorted((canonical_form(p.dual(), MapMode.ALL_POSET_ISOS), p.dual()) for _, p in level)
        for level in dual_levels
    ]
    return _context(
        "forests:root-max", MapMode.ALL_POSET_ISOS, 1, n, levels, _is_forest_root_max
    )


def colored_forests_up_to(n: int, k: int, root_max: bool = False) -> FamilyContext:
    """k-colored rooted forests with color-preserving isomorphisms."""
    if k < 1:
        raise FamilyError("need at least one color")
    mode = MapMode.COLOR_PRESERVING_ISOS
    if not root_max:
        levels = _generate(n, mode, k, _forest_extensions)
        return _context(
            f"cforests:{k}",
            mode,
            k,
            n,
            levels,
            lambda p: _is_forest(p) and _colors_below(p, k),
        )
    dual_levels = _generate(n, mode, k, _forest_extensions)
    levels = [
        sorted((canonical_form(p.dual(), mode), p.dual()) for _, p in level)
        for level in dual_levels
    ]
    return _context(
        f"cforests:{k}:root-max",
        mode,
        k,
        n,
        levels,
        lambda p: _is_forest_root_max(p) and _colors_below(p, k),
    )


def family_from_spec(spec: str, max_size: int, root_max: bool = False) -> FamilyContext:
    """Parse a CLI-style family spec: fin | sets | csets:k | forests | cforests:k."""
    base, _, arg = spec.partition(":")
    if base == "fin" and not arg:
        return fin_up_to(max_size)
    if base == "sets" and not arg:
        return sets_up_to(max_size)
    if base == "forests" and not arg:
        return forests_up_to(max_size, root_max=root_max)
    if base in ("csets", "cforests"):
        try:
            k = int(arg)
        except ValueError:
            raise FamilyError(f"bad color count in family spec {spec!r}") from None
        if base == "csets":
            if root_max:
                raise FamilyError("--root-max only applies to forest families")
            return colored_sets_up_to(max_size, k)
        return colored_forests_up_to(max_size, k, root_max=root_max)
    raise FamilyError(f"unknown family spec {spec!r}")


@dataclass(frozen=True)
class ClosureReport:
    """Outcome of checking the two family closure axioms on a context."""

    family: str
    convex_checked: int
    union_checked: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_closure(ctx: FamilyContext) -> ClosureReport:
    """Convex subposets and disjoint unions of members stay in the family.

    Exhaustive over the context's representatives: every convex subset of
    every representative is classified, and every union of two classes
    with total size within the cutoff is classified.
    """
    violations: list[str] = []
    convex_checked = 0
    union_checked = 0
    for cls in ctx.all_classes():
        p = cls.representative
        for mask in range(1 << p.size):
            if not is_convex(p, mask):
                continue
            convex_checked += 1
            sub, _ = induced_subposet(p, mask)
            try:
                ctx.class_of(sub)
            except FamilyError:
                violations.append(
                    f"convex subset {mask:#x} of class {cls.hex_key} leaves the family"
                )
    for a in ctx.all_classes():
        for b in ctx.all_classes():
            if a.size + b.size > ctx.max_size:
                continue
            union_checked += 1
            union, _, _ = disjoint_union(a.representative, b.representative)
            try:
                ctx.class_of(union)
            except FamilyError:
                violations.append(
                    f"disjoint union of {a.hex_key} and {b.hex_key} leaves the family"
                )
    return ClosureReport(ctx.name, convex_checked, union_checked, tuple(violations))
