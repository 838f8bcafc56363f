from itertools import product as iproduct

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from conftest import posets, relabel
from inccat.errors import CycleError, PosetError, SizeCapError
from inccat.posets import (
    EMPTY_POSET,
    Bijection,
    MapMode,
    Poset,
    automorphisms,
    canonical_form,
    cartesian_product,
    connected_components,
    disjoint_union,
    find_isomorphisms,
    from_covers,
    induced_subposet,
    is_convex,
    is_convex_via_ideals,
)

ALL = MapMode.ALL_POSET_ISOS
COLOR = MapMode.COLOR_PRESERVING_ISOS


def all_labeled_posets(n):
    """Brute-force: every reflexive relation on n points that is a partial order."""
    out = []
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for combo in iproduct([0, 1], repeat=len(pairs)):
        rel = [1 << i for i in range(n)]
        for (i, j), bit in zip(pairs, combo):
            if bit:
                rel[i] |= 1 << j
        try:
            out.append(Poset(tuple(rel)))
        except PosetError:
            continue
    return out


class TestConstruction:
    def test_from_covers_chain(self, chain2):
        assert chain2.size == 2
        assert chain2.le(0, 1) and not chain2.le(1, 0)
        assert chain2.covers == ((0, 1),)

    def test_from_covers_transitive(self, chain3):
        assert chain3.le(0, 2)
        assert chain3.covers == ((0, 1), (1, 2))

    def test_antichain(self):
        p = from_covers(["a", "b", "c"], [])
        assert all(not p.le(i, j) for i in range(3) for j in range(3) if i != j)

    def test_cycle_rejected(self):
        with pytest.raises(CycleError) as err:
            from_covers(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
        assert set(err.value.cycle) == {"a", "b", "c"}

    def test_cycle_report_is_a_directed_cycle(self):
        cases = [
            (["c", "a", "b"], [("a", "b"), ("b", "a"), ("b", "c")]),
            (["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "b"), ("c", "d")]),
            (["x"], [("x", "x")]),
        ]
        for labels, covers in cases:
            with pytest.raises(CycleError) as err:
                from_covers(labels, covers)
            cycle = err.value.cycle
            closed = list(zip(cycle, cycle[1:] + [cycle[0]]))
            assert all(pair in covers for pair in closed)

    def test_unknown_label_rejected(self):
        with pytest.raises(PosetError):
            from_covers(["a"], [("a", "z")])

    def test_duplicate_labels_rejected(self):
        with pytest.raises(PosetError):
            from_covers(["a", "a"], [])

    def test_empty_poset(self):
        assert EMPTY_POSET.size == 0
        assert from_covers([], []).size == 0

    def test_size_cap(self, monkeypatch):
        monkeypatch.setenv("INCCAT_MAX_POSET_SIZE", "3")
        with pytest.raises(SizeCapError):
            Poset(tuple(1 << i for i in range(4)))

    def test_invalid_relations_rejected(self):
        with pytest.raises(PosetError):
            Poset((0, 2))  # not reflexive
        with pytest.raises(PosetError):
            Poset((3, 3))  # not antisymmetric


class TestConstructions:
    def test_union_of_dots_is_antichain(self, dot, antichain2):
        union, _, _ = disjoint_union(dot, dot)
        assert canonical_form(union) == canonical_form(antichain2)

    def test_union_with_empty(self, chain3):
        union, _, _ = disjoint_union(EMPTY_POSET, chain3)
        assert canonical_form(union) == canonical_form(chain3)
        union, _, _ = disjoint_union(chain3, EMPTY_POSET)
        assert canonical_form(union) == canonical_form(chain3)

    def test_union_of_chains(self, chain2):
        union, _, _ = disjoint_union(chain2, chain2)
        assert union.size == 4
        assert len(union.covers) == 2
        assert len(connected_components(union)) == 2

    def test_union_label_collision(self, chain2):
        union, _, _ = disjoint_union(chain2, chain2)
        assert len(set(union.labels)) == 4

    def test_product_of_chains_is_diamond(self, chain2, diamond):
        prod = cartesian_product(chain2, chain2)
        # oracle: all 16 pairwise comparisons straight from the definition
        for (x, y), (a, b) in iproduct(iproduct(range(2), repeat=2), repeat=2):
            expected = chain2.le(x, a) and chain2.le(y, b)
            assert prod.le(x * 2 + y, a * 2 + b) == expected
        assert canonical_form(prod) == canonical_form(diamond)

    def test_product_unit(self, dot, vee):
        assert canonical_form(cartesian_product(dot, vee)) == canonical_form(vee)

    def test_product_of_antichains(self, antichain2):
        prod = cartesian_product(antichain2, antichain2)
        assert len(prod.covers) == 0 and prod.size == 4

    def test_induced_subposet(self, chain2, diamond):
        sub, elems = induced_subposet(chain2, 0b01)
        assert sub.size == 1 and elems == (0,)
        sub, _ = induced_subposet(diamond, 0b1001)
        assert canonical_form(sub) == canonical_form(chain2)
        empty, _ = induced_subposet(diamond, 0)
        assert empty.size == 0

    def test_induced_out_of_range(self, chain2):
        with pytest.raises(PosetError):
            induced_subposet(chain2, 0b100)


class TestConvexity:
    def test_squeezed_chain(self, chain3):
        assert not is_convex(chain3, 0b101)
        assert is_convex(chain3, 0b010)

    def test_diamond_middles(self, diamond):
        assert is_convex(diamond, 0b0110)

    @settings(max_examples=150, deadline=None)
    @given(posets(max_size=7))
    def test_characterizations_agree(self, p):
        for mask in range(1 << p.size):
            assert is_convex(p, mask) == is_convex_via_ideals(p, mask)


class TestComponents:
    def test_antichain(self, antichain2):
        assert connected_components(antichain2) == [0b01, 0b10]

    def test_chain(self, chain2):
        assert connected_components(chain2) == [0b11]

    def test_mixed(self, chain2, dot):
        union, _, _ = disjoint_union(chain2, dot)
        sizes = sorted(c.bit_count() for c in connected_components(union))
        assert sizes == [1, 2]

    def test_empty(self):
        assert connected_components(EMPTY_POSET) == []


class TestIsomorphisms:
    def test_antichain_automorphisms(self, antichain2):
        assert len(find_isomorphisms(antichain2, antichain2, ALL)) == 2

    def test_chain_vs_antichain(self, chain2, antichain2):
        assert find_isomorphisms(chain2, antichain2, ALL) == []

    def test_colored_identity_only(self):
        p = Poset((1, 2), colors=(0, 1))
        assert len(find_isomorphisms(p, p, COLOR)) == 1
        assert len(find_isomorphisms(p, p, ALL)) == 2

    def test_bijection_validation(self, chain2, antichain2):
        with pytest.raises(PosetError):
            Bijection(chain2, antichain2, (0, 1), ALL)

    @settings(max_examples=60, deadline=None)
    @given(posets(max_size=5))
    def test_closure_identity_and_inverse(self, p):
        autos = automorphisms(p, ALL)
        mappings = {b.mapping for b in autos}
        assert tuple(range(p.size)) in mappings
        for b in autos[:6]:
            assert b.inverse().mapping in mappings

    @settings(max_examples=40, deadline=None)
    @given(posets(max_size=4), posets(max_size=4))
    def test_closure_composition_and_union(self, p, q):
        isos = find_isomorphisms(p, q, ALL)
        back = find_isomorphisms(q, p, ALL)
        auto_mappings = {b.mapping for b in find_isomorphisms(p, p, ALL)}
        for f in isos[:4]:
            for g in back[:4]:
                composed = tuple(g.mapping[f.mapping[i]] for i in range(p.size))
                assert composed in auto_mappings
        # disjoint-union compatibility: f u g is admissible on the sums
        union_p, emb_p1, emb_p2 = disjoint_union(p, q)
        union_q, emb_q1, emb_q2 = disjoint_union(q, p)
        for f in isos[:2]:
            for g in back[:2]:
                mapping = [0] * union_p.size
                for i, e in enumerate(emb_p1):
                    mapping[e] = emb_q1[f.mapping[i]]
                for j, e in enumerate(emb_p2):
                    mapping[e] = emb_q2[g.mapping[j]]
                Bijection(union_p, union_q, tuple(mapping), ALL)  # validates


class TestCanonicalForm:
    def test_empty_key(self):
        assert canonical_form(EMPTY_POSET) == b""
        assert canonical_form(EMPTY_POSET, COLOR) == b""

    def test_label_invariance(self, chain2):
        other = from_covers(["zz", "aa"], [("zz", "aa")])
        assert canonical_form(chain2) == canonical_form(other)

    def test_distinguishes(self, chain2, antichain2):
        assert canonical_form(chain2) != canonical_form(antichain2)

    def test_three_element_classes(self):
        labeled = all_labeled_posets(3)
        assert len(labeled) == 19  # labeled posets on 3 points
        assert len({canonical_form(p) for p in labeled}) == 5

    def test_four_element_classes(self):
        labeled = all_labeled_posets(4)
        assert len(labeled) == 219
        assert len({canonical_form(p) for p in labeled}) == 16

    def test_colored_keys(self):
        red_blue = Poset((1, 2), colors=(0, 1))
        blue_red = Poset((1, 2), colors=(1, 0))
        plain = Poset((1, 2), colors=(0, 0))
        assert canonical_form(red_blue, COLOR) == canonical_form(blue_red, COLOR)
        assert canonical_form(red_blue, COLOR) != canonical_form(plain, COLOR)
        assert canonical_form(red_blue, ALL) == canonical_form(plain, ALL)

    @settings(max_examples=120, deadline=None)
    @given(st.data())
    def test_relabel_invariance(self, data):
        p = data.draw(posets(max_size=6, num_colors=2))
        perm = data.draw(st.permutations(list(range(p.size))))
        q = relabel(p, list(perm))
        assert canonical_form(p, ALL) == canonical_form(q, ALL)
        assert canonical_form(p, COLOR) == canonical_form(q, COLOR)

    @settings(max_examples=60, deadline=None)
    @given(posets(max_size=5), posets(max_size=5))
    def test_matches_isomorphism_search(self, p, q):
        assert (canonical_form(p) == canonical_form(q)) == bool(
            find_isomorphisms(p, q, ALL)
        )

    @settings(max_examples=50, deadline=None)
    @given(posets(max_size=4), posets(max_size=4), posets(max_size=3))
    def test_union_product_laws_up_to_canonical(self, p, q, r):
        union_pq, _, _ = disjoint_union(p, q)
        union_qp, _, _ = disjoint_union(q, p)
        assert canonical_form(union_pq) == canonical_form(union_qp)
        left, _, _ = disjoint_union(union_pq, r)
        union_qr, _, _ = disjoint_union(q, r)
        right, _, _ = disjoint_union(p, union_qr)
        assert canonical_form(left) == canonical_form(right)
        assert canonical_form(cartesian_product(p, q)) == canonical_form(
            cartesian_product(q, p)
        )

    @settings(max_examples=25, deadline=None)
    @given(posets(min_size=1, max_size=3), posets(min_size=1, max_size=3), posets(min_size=1, max_size=3))
    def test_product_associative_up_to_canonical(self, p, q, r):
        left = cartesian_product(cartesian_product(p, q), r)
        right = cartesian_product(p, cartesian_product(q, r))
        assert canonical_form(left) == canonical_form(right)
