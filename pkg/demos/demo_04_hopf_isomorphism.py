"""The Hall algebra is the incidence Hopf algebra of the ideal lattices.

The right-hand side convolves over lattice elements of J_P, classifying
each interval through the convex-quotient correspondence; the map phi
just relabels [X_P] to [J_P].  The demo computes both sides separately
and watches them agree, then checks the Hopf relation axioms.
"""

from fractions import Fraction

from inccat import (
    IncidenceElement,
    IntervalClass,
    antipode,
    delta,
    fin_up_to,
    phi,
    product,
    schmitt_antipode,
    schmitt_product,
    schmitt_product_element,
    verify_hopf_relation,
)

fin = fin_up_to(5)
dot_class = fin.classes(1)[0]
indicator = IncidenceElement({IntervalClass(dot_class): Fraction(1)})

# evaluate the interval convolution on the 2-antichain by hand: the two
# one-point lattice elements each contribute 1
ac2 = [c for c in fin.classes(2) if not c.representative.covers][0]
value = schmitt_product(indicator, indicator, ac2.representative, fin)
print("(point . point) evaluated on the 2-antichain lattice:", value)

# the same product as a full element, versus the Hall side through phi
hall = product(delta(dot_class), delta(dot_class), fin)
schmitt = schmitt_product_element(indicator, indicator, fin)
print("phi(hall product) == interval product:", phi(hall, fin) == schmitt)

# and the antipodes, computed by two independent recursions
for size in range(4):
    for cls in fin.classes(size):
        left = phi(antipode(delta(cls), fin), fin)
        right = schmitt_antipode(phi(delta(cls), fin), fin)
        assert left == right
print("antipodes agree through phi on every class of size <= 3")

# the equivalence J_P ~ J_Q (P, Q isomorphic) is a Hopf relation:
# compatible with lattice products and with one-element neutrality
report = verify_hopf_relation(fin, cutoff=4, seed=2024)
print(
    f"Hopf relation on fin up to size 4: ok={report.ok} "
    f"({report.product_checks} product, {report.order_checks} order checks, "
    f"seed {report.seed})"
)
