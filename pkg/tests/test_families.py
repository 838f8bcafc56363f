from itertools import product as iproduct

import pytest

from inccat.errors import FamilyError, TruncationError
from inccat.families import (
    colored_forests_up_to,
    colored_sets_up_to,
    family_from_spec,
    fin_up_to,
    forests_up_to,
    sets_up_to,
    verify_closure,
)
from inccat.ideals import order_ideals
from inccat.posets import (
    Poset,
    canonical_form,
    from_covers,
    is_connected,
)


def brute_force_class_count(n):
    """Independent oracle: canonical classes among all labeled posets on n points."""
    keys = set()
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for combo in iproduct([0, 1], repeat=len(pairs)):
        rel = [1 << i for i in range(n)]
        for (i, j), bit in zip(pairs, combo):
            if bit:
                rel[i] |= 1 << j
        try:
            keys.add(canonical_form(Poset(tuple(rel))))
        except Exception:
            continue
    return len(keys)


def admissible_cut_count(tree):
    """Edge subsets met at most once by every root-to-leaf path."""
    covers = tree.covers
    children = {}
    for lo, hi in covers:
        children.setdefault(lo, []).append(hi)
    roots = [i for i in range(tree.size) if not any(hi == i for _, hi in covers)]
    paths = []

    def walk(node, acc):
        kids = children.get(node, [])
        if not kids:
            paths.append(acc)
            return
        for kid in kids:
            walk(kid, acc + [(node, kid)])

    for root in roots:
        walk(root, [])
    count = 0
    for pick in range(1 << len(covers)):
        cut = {covers[i] for i in range(len(covers)) if (pick >> i) & 1}
        if all(sum(1 for edge in path if edge in cut) <= 1 for path in paths):
            count += 1
    return count


class TestFin:
    def test_counts(self):
        fin = fin_up_to(5)
        assert [len(fin.classes(s)) for s in range(6)] == [1, 1, 2, 5, 16, 63]

    def test_counts_against_brute_force(self):
        fin = fin_up_to(4)
        for n in range(5):
            assert len(fin.classes(n)) == brute_force_class_count(n)

    def test_small_classes(self):
        fin = fin_up_to(2)
        assert len(fin.classes(1)) == 1
        reps = [cls.representative for cls in fin.classes(2)]
        assert sorted(len(r.covers) for r in reps) == [0, 1]

    def test_class_of_roundtrip(self, chain3):
        fin = fin_up_to(4)
        cls = fin.class_of(chain3)
        assert cls.size == 3
        assert fin.class_of(cls.representative) == cls

    def test_truncation_error(self, chain3):
        fin = fin_up_to(2)
        with pytest.raises(TruncationError):
            fin.class_of(chain3)

    def test_closure_trivial(self):
        assert verify_closure(fin_up_to(4)).ok


class TestSets:
    def test_one_class_per_size(self):
        sets = sets_up_to(8)
        assert all(len(sets.classes(s)) == 1 for s in range(9))

    def test_membership(self, chain2, antichain2):
        sets = sets_up_to(4)
        assert sets.contains(antichain2) and not sets.contains(chain2)
        with pytest.raises(FamilyError):
            sets.class_of(chain2)

    def test_closure(self):
        assert verify_closure(sets_up_to(5)).ok


class TestColoredSets:
    def test_class_counts(self):
        cs2 = colored_sets_up_to(4, 2)
        assert [len(cs2.classes(s)) for s in range(5)] == [1, 2, 3, 4, 5]

    def test_size_two_vectors(self):
        cs2 = colored_sets_up_to(2, 2)
        vectors = sorted(cls.color_vector for cls in cs2.classes(2))
        assert vectors == [(0, 2), (1, 1), (2, 0)]

    def test_k1_reduces_to_sets(self):
        cs1 = colored_sets_up_to(5, 1)
        sets = sets_up_to(5)
        assert [len(cs1.classes(s)) for s in range(6)] == [
            len(sets.classes(s)) for s in range(6)
        ]

    def test_color_out_of_range(self):
        cs2 = colored_sets_up_to(3, 2)
        bad = Poset((1, 2), colors=(0, 5))
        assert not cs2.contains(bad)

    def test_closure(self):
        assert verify_closure(colored_sets_up_to(4, 2)).ok


class TestForests:
    def test_tree_counts(self):
        forests = forests_up_to(5)
        trees = [
            sum(1 for cls in forests.classes(s) if is_connected(cls.representative))
            for s in range(6)
        ]
        assert trees == [0, 1, 1, 2, 4, 9]

    def test_forest_counts_from_tree_multisets(self):
        # oracle: forests of size n = multisets of trees with sizes summing to n
        forests = forests_up_to(6)
        trees_by_size = {
            s: sum(1 for cls in forests.classes(s) if is_connected(cls.representative))
            for s in range(7)
        }

        def multiset_count(total, max_tree_size):
            if total == 0:
                return 1
            if max_tree_size == 0:
                return 0
            count = 0
            copies = 0
            while copies * max_tree_size <= total:
                ways = 1
                available = trees_by_size[max_tree_size]
                # multisets of `copies` items from `available` kinds
                num, den = 1, 1
                for i in range(copies):
                    num *= available + i
                    den *= i + 1
                ways = num // den
                count += ways * multiset_count(
                    total - copies * max_tree_size, max_tree_size - 1
                )
                copies += 1
            return count

        for n in range(7):
            assert len(forests.classes(n)) == multiset_count(n, n if n else 1)

    def test_size_two(self):
        forests = forests_up_to(2)
        shapes = sorted(len(cls.representative.covers) for cls in forests.classes(2))
        assert shapes == [0, 1]  # two roots, or a single 2-chain tree

    def test_membership(self, vee, diamond):
        forests = forests_up_to(4)
        assert forests.contains(vee)
        assert not forests.contains(diamond)
        wedge = from_covers(["a", "b", "c"], [("a", "c"), ("b", "c")])
        assert not forests.contains(wedge)

    def test_closure_and_convexity(self):
        assert verify_closure(forests_up_to(5)).ok

    def test_root_max_dualization(self):
        fmin = forests_up_to(4)
        fmax = forests_up_to(4, root_max=True)
        assert [len(fmin.classes(s)) for s in range(5)] == [
            len(fmax.classes(s)) for s in range(5)
        ]
        wedge = from_covers(["a", "b", "c"], [("a", "c"), ("b", "c")])
        assert fmax.contains(wedge)
        vee = from_covers(["a", "b", "c"], [("a", "b"), ("a", "c")])
        assert not fmax.contains(vee)

    def test_ideals_are_admissible_cuts(self):
        # |J_t| = admissible edge cuts + 1 (the empty ideal has no cut)
        forests = forests_up_to(5)
        for size in range(1, 6):
            for cls in forests.classes(size):
                tree = cls.representative
                if not is_connected(tree):
                    continue
                assert len(order_ideals(tree)) == admissible_cut_count(tree) + 1


class TestColoredForests:
    def test_k1_matches_plain(self):
        cf1 = colored_forests_up_to(4, 1)
        plain = forests_up_to(4)
        assert [len(cf1.classes(s)) for s in range(5)] == [
            len(plain.classes(s)) for s in range(5)
        ]

    def test_size_counts_small(self):
        cf2 = colored_forests_up_to(2, 2)
        assert len(cf2.classes(1)) == 2  # two colors of a dot
        assert len(cf2.classes(2)) == 7  # 4 colored chains + 3 dot multisets

    def test_closure(self):
        assert verify_closure(colored_forests_up_to(4, 2)).ok


class TestFamilySpec:
    def test_parsing(self):
        assert family_from_spec("fin", 3).name == "fin"
        assert family_from_spec("sets", 3).name == "sets"
        assert family_from_spec("csets:2", 3).name == "csets:2"
        assert family_from_spec("forests", 3).name == "forests"
        assert family_from_spec("cforests:2", 3).name == "cforests:2"
        assert family_from_spec("forests", 3, root_max=True).name == "forests:root-max"

    def test_bad_specs(self):
        with pytest.raises(FamilyError):
            family_from_spec("rings", 3)
        with pytest.raises(FamilyError):
            family_from_spec("csets:x", 3)
        with pytest.raises(FamilyError):
            family_from_spec("csets:2", 3, root_max=True)

    def test_deterministic_class_order(self):
        first = [cls.hex_key for s in range(5) for cls in fin_up_to(4).classes(s)]
        second = [cls.hex_key for s in range(5) for cls in fin_up_to(4).classes(s)]
        assert first == second
