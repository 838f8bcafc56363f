"""The Ringel-Hall algebra: convolution, coproduct, antipode, primitives.

Delta functions on iso-classes multiply by counting ideals with
prescribed sub and quotient, and comultiply by splitting connected
components.  On the family of finite sets this collapses to binomial
coefficients; on all finite posets it is genuinely noncommutative.
"""

from inccat import (
    antipode,
    coproduct,
    delta,
    fin_up_to,
    is_primitive,
    k0_truncated,
    lie_bracket,
    primitive_basis,
    product,
    sets_up_to,
    structure_constant,
)


def show(ctx, element):
    if not element:
        return "0"
    parts = []
    for cls, value in sorted(element.items(), key=lambda kv: (kv[0].size, kv[0].key)):
        covers = ",".join(f"{i}<{j}" for i, j in cls.representative.covers)
        parts.append(f"{value}*[{cls.size}:{covers}]")
    return " + ".join(parts)


fin = fin_up_to(6)
dot = delta(fin.classes(1)[0])

print("point * point =", show(fin, product(dot, dot, fin)))
square = product(dot, dot, fin)
print("point^3       =", show(fin, product(square, dot, fin)))

# the same coefficients, counted one ideal at a time
ac2 = [c for c in fin.classes(2) if not c.representative.covers][0]
c2 = [c for c in fin.classes(2) if c.representative.covers][0]
print("N(point, point; antichain) =", structure_constant(fin.classes(1)[0], fin.classes(1)[0], ac2))
print("N(point, point; chain)     =", structure_constant(fin.classes(1)[0], fin.classes(1)[0], c2))

# sets: one class per size, products are binomial coefficients
sets = sets_up_to(8)
n3, n5 = delta(sets.classes(3)[0]), delta(sets.classes(5)[0])
print("[3] * [5] in sets =", show(sets, product(n3, n5, sets)), "(binomial 8 choose 3)")

# the coproduct splits connected components; connected classes are primitive
print("Delta(antichain2) pairs:",
      sorted((a.size, b.size) for (a, b) in coproduct(delta(ac2), fin).coeffs))
print("chain2 primitive:", is_primitive(delta(c2), fin),
      "| antichain2 primitive:", is_primitive(delta(ac2), fin))

# the bracket of primitives: the Lie algebra under Milnor-Moore
bracket = lie_bracket(dot, delta(c2), fin)
print("[point, chain2] =", show(fin, bracket))
print("bracket is primitive:", is_primitive(bracket, fin))
print("primitive space dimensions by degree:",
      [len(primitive_basis(fin, d)) for d in range(5)])

# the antipode, by the graded recursion
print("S(point)      =", show(fin, antipode(dot, fin)))
print("S(antichain2) =", show(fin, antipode(delta(ac2), fin)))

# the truncated Grothendieck group collapses everything to the point count
pres = k0_truncated(fin_up_to(4), 4)
print(f"K0 truncated at 4: free rank {pres.free_rank}, torsion {list(pres.torsion)}")
