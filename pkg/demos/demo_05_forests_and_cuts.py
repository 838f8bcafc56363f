"""Rooted forests: ideals are admissible cuts, and the dual conventions.

A rooted tree is a poset whose Hasse diagram is the tree, root at the
bottom.  Order ideals are the "trunks" left by admissible cuts (every
root-to-leaf path severed at most once), which makes the Hall algebra of
forests the dual of the Connes-Kreimer Hopf algebra on rooted trees.
"""

from inccat import (
    delta,
    forests_up_to,
    from_covers,
    is_connected,
    order_ideals,
    product,
    verify_closure,
)

forests = forests_up_to(6)
trees = [
    [cls for cls in forests.classes(size) if is_connected(cls.representative)]
    for size in range(7)
]
print("rooted trees by size:  ", [len(t) for t in trees])
print("rooted forests by size:", [len(forests.classes(s)) for s in range(7)])

# the corolla: one root, three leaves; cutting any subset of its edges is
# admissible, so it has 2^3 cuts = 8, plus the empty ideal
corolla = from_covers(
    ["root", "u", "v", "w"], [("root", "u"), ("root", "v"), ("root", "w")]
)
print("corolla ideal count:", len(order_ideals(corolla)), "(= 8 admissible cuts + 1)")

# a ladder (chain) has one cut per height plus the empty cut
ladder = from_covers(["1", "2", "3", "4"], [("1", "2"), ("2", "3"), ("3", "4")])
print("4-ladder ideal count:", len(order_ideals(ladder)))

# grafting in the Hall algebra: multiplying two single points counts the
# ways a 2-element forest extends a chosen bottom ideal
dot = delta(forests.classes(1)[0])
print("point * point supports", len(product(dot, dot, forests).coeffs),
      "forest classes (the 2-chain and the 2-antichain)")

# convex subposets of forests are forests; disjoint unions too
report = verify_closure(forests_up_to(5))
print(
    f"closure verified: {report.convex_checked} convex pieces and "
    f"{report.union_checked} unions stayed inside the family"
)

# the dual convention (roots maximal) is one flag away and has the same counts
dual = forests_up_to(4, root_max=True)
print("root-max class counts match:",
      [len(dual.classes(s)) for s in range(5)]
      == [len(forests.classes(s)) for s in range(5)])
