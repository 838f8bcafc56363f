"""Executable verification suites for the category and Hopf axioms.

Each suite returns a list of :class:`CheckResult`; the CLI ``verify``
subcommand renders them and exits nonzero if anything failed, attaching a
minimal counterexample (posets/morphisms as JSON documents) when one
exists.  The suites are exhaustive over the stated size bounds, never
sampled, with one exception: the Hopf-relation checks draw seeded random
relabelings.

The associativity check is organized around composition tables.  All
morphisms into each object are interned once; for every morphism g the
row ``f -> g o f`` is tabulated by real ``compose`` calls; associativity
of a triple (f, g, h) then reads ``row_h[row_g[f]] == row_{h o g}[f]``,
so the exhaustive triple scan costs two table lookups per triple while
every composite in sight was produced (and validated) by the actual
composition routine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import jsonio
from .category import (
    CategoryObject,
    Morphism,
    cokernel,
    compose,
    hom_set,
    identity,
    is_epi,
    is_mono,
    kernel,
    short_exact_sequences,
)
from .families import FamilyContext, verify_closure
from .hall import (
    HallElement,
    TensorElement,
    antipode,
    coproduct,
    counit,
    delta,
    product,
    structure_constant,
    tensor_product,
    unit,
)
from .incidence import (
    IncidenceElement,
    IntervalClass,
    phi,
    schmitt_antipode,
    schmitt_coproduct,
    schmitt_product,
    schmitt_product_element,
    schmitt_product_ideal_form,
    verify_hopf_relation,
)
from .ideals import is_order_ideal, order_ideals
from .posets import (
    MapMode,
    automorphisms,
    canonical_form,
    find_isomorphisms,
    induced_subposet,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""
    counterexample: Any = None

    def line(self) -> str:
        status = "ok" if self.passed else "FAIL"
        suffix = f" ({self.details})" if self.details else ""
        return f"{status:4} {self.name}{suffix}"


def _result(name: str, failures: list, checked: int, detail: str = "") -> CheckResult:
    if failures:
        return CheckResult(name, False, f"{len(failures)} failure(s)", failures[0])
    info = f"{checked} checked" + (f", {detail}" if detail else "")
    return CheckResult(name, True, info)


# ---------------------------------------------------------------------------
# category suite


@dataclass
class _HomTables:
    """Interned morphisms into each object plus full composition rows."""

    objects: list[CategoryObject]
    mode: MapMode
    into: dict[CategoryObject, list[Morphism]] = field(default_factory=dict)
    intern: dict[CategoryObject, dict[Morphism, int]] = field(default_factory=dict)
    blocks: dict[CategoryObject, list[tuple[int, int]]] = field(default_factory=dict)
    rows: dict[Morphism, list[int]] = field(default_factory=dict)

    def build(self) -> None:
        for b in self.objects:
            incoming: list[Morphism] = []
            blocks = []
            for a in self.objects:
                start = len(incoming)
                incoming.extend(hom_set(a, b, self.mode))
                blocks.append((start, len(incoming)))
            self.into[b] = incoming
            self.blocks[b] = blocks
            self.intern[b] = {m: i for i, m in enumerate(incoming)}
        for b in self.objects:
            incoming = self.into[b]
            for c in self.objects:
                intern_c = self.intern[c]
                for g in hom_set(b, c, self.mode):
                    self.rows[g] = [intern_c[compose(g, f)] for f in incoming]


def _objects_of(ctx: FamilyContext, max_size: int) -> list[CategoryObject]:
    return [
        CategoryObject(cls.representative)
        for size in range(max_size + 1)
        for cls in ctx.classes(size)
    ]


def check_unit_laws(ctx: FamilyContext, max_size: int) -> CheckResult:
    """compose(id, m) = m = compose(m, id) over all hom-sets."""
    objects = _objects_of(ctx, max_size)
    failures: list[Any] = []
    checked = 0
    for a in objects:
        ida = identity(a, ctx.mode)
        for b in objects:
            idb = identity(b, ctx.mode)
            for m in hom_set(a, b, ctx.mode):
                checked += 1
                if compose(idb, m) != m or compose(m, ida) != m:
                    failures.append(jsonio.morphism_to_doc(m))
    return _result(f"category.unit-laws[n<={max_size}]", failures, checked)


def check_associativity(ctx: FamilyContext, max_size: int) -> CheckResult:
    """(h o g) o f = h o (g o f) over every composable triple."""
    tables = _HomTables(_objects_of(ctx, max_size), ctx.mode)
    tables.build()
    failures: list[Any] = []
    triples = 0
    for b in tables.objects:
        for c in tables.objects:
            intern_c = tables.intern[c]
            for g in hom_set(b, c, ctx.mode):
                row_g = tables.rows[g]
                g_id = intern_c[g]
                for d in tables.objects:
                    into_d = tables.into[d]
                    for h in hom_set(c, d, ctx.mode):
                        row_h = tables.rows[h]
                        hg = into_d[row_h[g_id]]
                        via_g = list(map(row_h.__getitem__, row_g))
                        triples += len(via_g)
                        if via_g != tables.rows[hg]:
                            bad = next(
                                i for i, (x, y) in enumerate(zip(via_g, tables.rows[hg])) if x != y
                            )
                            failures.append(
                                {
                                    "f": jsonio.morphism_to_doc(tables.into[b][bad]),
                                    "g": jsonio.morphism_to_doc(g),
                                    "h": jsonio.morphism_to_doc(h),
                                }
                            )
    return _result(f"category.associativity[n<={max_size}]", failures, triples, "triples")


def check_kernel_universal(ctx: FamilyContext, max_size: int) -> CheckResult:
    """Every u with m o u = 0 factors uniquely through ker(m)."""
    objects = _objects_of(ctx, max_size)
    failures: list[Any] = []
    checked = 0
    for a in objects:
        for b in objects:
            for m in hom_set(a, b, ctx.mode):
                ker = kernel(m)
                for t in objects:
                    hom_t_ker = hom_set(t, ker.source, ctx.mode)
                    for u in hom_set(t, a, ctx.mode):
                        checked += 1
                        vanishes = compose(m, u).is_zero
                        factored = [v for v in hom_t_ker if compose(ker, v) == u]
                        if len(factored) != (1 if vanishes else 0):
                            failures.append(
                                {
                                    "m": jsonio.morphism_to_doc(m),
                                    "u": jsonio.morphism_to_doc(u),
                                    "factorizations": len(factored),
                                }
                            )
    return _result(f"category.kernel-universal[n<={max_size}]", failures, checked)


def check_cokernel_universal(ctx: FamilyContext, max_size: int) -> CheckResult:
    """Every u with u o m = 0 factors uniquely through coker(m)."""
    objects = _objects_of(ctx, max_size)
    failures: list[Any] = []
    checked = 0
    for a in objects:
        for b in objects:
            for m in hom_set(a, b, ctx.mode):
                cok = cokernel(m)
                for t in objects:
                    hom_cok_t = hom_set(cok.target, t, ctx.mode)
                    for u in hom_set(b, t, ctx.mode):
                        checked += 1
                        vanishes = compose(u, m).is_zero
                        factored = [v for v in hom_cok_t if compose(v, cok) == u]
                        if len(factored) != (1 if vanishes else 0):
                            failures.append(
                                {
                                    "m": jsonio.morphism_to_doc(m),
                                    "u": jsonio.morphism_to_doc(u),
                                    "factorizations": len(factored),
                                }
                            )
    return _result(f"category.cokernel-universal[n<={max_size}]", failures, checked)


def check_mono_epi_cancellation(ctx: FamilyContext, max_size: int) -> CheckResult:
    """is_mono/is_epi agree with left/right cancellability."""
    tables = _HomTables(_objects_of(ctx, max_size), ctx.mode)
    tables.build()
    failures: list[Any] = []
    checked = 0
    for b in tables.objects:
        blocks_b = tables.blocks[b]
        for c in tables.objects:
            for m in hom_set(b, c, ctx.mode):
                checked += 1
                row = tables.rows[m]
                left_cancellable = all(
                    len(set(row[lo:hi])) == hi - lo for lo, hi in blocks_b
                )
                if left_cancellable != is_mono(m):
                    failures.append({"m": jsonio.morphism_to_doc(m), "side": "mono"})
                # right cancellability: u o m determines u among Hom(c, t)
                right_cancellable = True
                for t in tables.objects:
                    seen: dict[int, Morphism] = {}
                    for u in hom_set(c, t, ctx.mode):
                        val = tables.rows[u][tables.intern[c][m]]
                        if val in seen and seen[val] != u:
                            right_cancellable = False
                            break
                        seen[val] = u
                    if not right_cancellable:
                        break
                if right_cancellable != is_epi(m):
                    failures.append({"m": jsonio.morphism_to_doc(m), "side": "epi"})
    return _result(f"category.mono-epi-cancellation[n<={max_size}]", failures, checked)


def check_torsor(ctx: FamilyContext, max_size: int) -> CheckResult:
    """Monos with fixed image, and epis with fixed kernel, are Aut-torsors.

    Monos X_Q -> X_P with image X_I number |Aut(I)| when Q is isomorphic
    to X_I (else 0); dually, epis X_P -> X_Q with kernel ideal I number
    |Aut(P \\ I)| when Q is isomorphic to the complement.
    """
    objects = _objects_of(ctx, max_size)
    failures: list[Any] = []
    checked = 0
    for p_obj in objects:
        lattice = order_ideals(p_obj.poset)
        for q_obj in objects:
            q_key = canonical_form(q_obj.poset, ctx.mode)
            into = hom_set(q_obj, p_obj, ctx.mode)
            out_of = hom_set(p_obj, q_obj, ctx.mode)
            for ideal in lattice.ideals:
                checked += 1
                mono_count = sum(1 for m in into if is_mono(m) and m.i2 == ideal)
                sub, _ = induced_subposet(p_obj.poset, ideal)
                mono_expected = (
                    len(automorphisms(sub, ctx.mode))
                    if canonical_form(sub, ctx.mode) == q_key
                    else 0
                )
                epi_count = sum(1 for m in out_of if is_epi(m) and m.i1 == ideal)
                rest, _ = induced_subposet(
                    p_obj.poset, p_obj.poset.full_mask & ~ideal
                )
                epi_expected = (
                    len(automorphisms(rest, ctx.mode))
                    if canonical_form(rest, ctx.mode) == q_key
                    else 0
                )
                if mono_count != mono_expected or epi_count != epi_expected:
                    failures.append(
                        {
                            "P": jsonio.poset_to_doc(p_obj.poset),
                            "Q": jsonio.poset_to_doc(q_obj.poset),
                            "ideal": ideal,
                            "monos": [mono_count, mono_expected],
                            "epis": [epi_count, epi_expected],
                        }
                    )
    return _result(f"category.torsors[n<={max_size}]", failures, checked)


def check_ses_classification(ctx: FamilyContext, max_size: int) -> CheckResult:
    """Every exact mono/epi pair matches a canonical SES up to end isos."""
    objects = _objects_of(ctx, max_size)
    failures: list[Any] = []
    checked = 0
    for b in objects:
        for a in objects:
            monos = [m for m in hom_set(a, b, ctx.mode) if is_mono(m)]
            for c in objects:
                epis = [e for e in hom_set(b, c, ctx.mode) if is_epi(e)]
                for f in monos:
                    for g in epis:
                        if f.i2 != g.i1:
                            continue
                        checked += 1
                        sub, _ = induced_subposet(b.poset, f.i2)
                        rest, _ = induced_subposet(b.poset, b.poset.full_mask & ~f.i2)
                        ok = canonical_form(a.poset, ctx.mode) == canonical_form(
                            sub, ctx.mode
                        ) and canonical_form(c.poset, ctx.mode) == canonical_form(rest, ctx.mode)
                        if not ok:
                            failures.append(
                                {
                                    "f": jsonio.morphism_to_doc(f),
                                    "g": jsonio.morphism_to_doc(g),
                                }
                            )
    # and the canonical list itself is exact and one-per-ideal
    for b in objects:
        sequences = short_exact_sequences(b, ctx.mode)
        checked += len(sequences)
        if len(sequences) != len(order_ideals(b.poset)):
            failures.append({"middle": jsonio.poset_to_doc(b.poset)})
    return _result(f"category.ses-classification[n<={max_size}]", failures, checked)


def category_suite(ctx: FamilyContext, assoc_max: int, universal_max: int) -> list[CheckResult]:
    return [
        check_unit_laws(ctx, assoc_max),
        check_associativity(ctx, assoc_max),
        check_kernel_universal(ctx, universal_max),
        check_cokernel_universal(ctx, universal_max),
        check_mono_epi_cancellation(ctx, universal_max),
        check_torsor(ctx, universal_max),
        check_ses_classification(ctx, min(assoc_max + 1, ctx.max_size)),
    ]


# ---------------------------------------------------------------------------
# Hopf suite


def _delta_triples(ctx: FamilyContext, total: int):
    for sa in range(total + 1):
        for a in ctx.classes(sa):
            for sb in range(total - sa + 1):
                for b in ctx.classes(sb):
                    for sc in range(total - sa - sb + 1):
                        for c in ctx.classes(sc):
                            yield a, b, c


def _delta_pairs(ctx: FamilyContext, total: int):
    for sa in range(total + 1):
        for a in ctx.classes(sa):
            for sb in range(total - sa + 1):
                for b in ctx.classes(sb):
                    yield a, b


def check_product_associativity(ctx: FamilyContext, total: int) -> CheckResult:
    failures: list[Any] = []
    checked = 0
    for a, b, c in _delta_triples(ctx, total):
        checked += 1
        left = product(product(delta(a), delta(b), ctx), delta(c), ctx)
        right = product(delta(a), product(delta(b), delta(c), ctx), ctx)
        if left != right:
            failures.append({"a": a.hex_key, "b": b.hex_key, "c": c.hex_key})
    return _result(f"hall.product-associativity[total<={total}]", failures, checked)


def check_coproduct_axioms(ctx: FamilyContext, max_size: int) -> CheckResult:
    """Coassociativity and cocommutativity on every class."""
    failures: list[Any] = []
    checked = 0
    for size in range(max_size + 1):
        for cls in ctx.classes(size):
            checked += 1
            cp = coproduct(delta(cls), ctx)
            if cp.flip() != cp:
                failures.append({"class": cls.hex_key, "axiom": "cocommutativity"})
                continue
            left: dict = {}
            right: dict = {}
            for (a, b), v in cp.items():
                for (a1, a2), w in coproduct(delta(a), ctx).items():
                    key = (a1, a2, b)
                    left[key] = left.get(key, Fraction(0)) + v * w
                for (b1, b2), w in coproduct(delta(b), ctx).items():
                    key = (a, b1, b2)
                    right[key] = right.get(key, Fraction(0)) + v * w
            left = {k: v for k, v in left.items() if v}
            right = {k: v for k, v in right.items() if v}
            if left != right:
                failures.append({"class": cls.hex_key, "axiom": "coassociativity"})
    return _result(f"hall.coproduct-axioms[n<={max_size}]", failures, checked)


def check_bialgebra(ctx: FamilyContext, total: int) -> CheckResult:
    """Delta(f * g) = Delta(f) Delta(g) on delta pairs."""
    failures: list[Any] = []
    checked = 0
    for a, b in _delta_pairs(ctx, total):
        checked += 1
        lhs = coproduct(product(delta(a), delta(b), ctx), ctx)
        rhs = tensor_product(coproduct(delta(a), ctx), coproduct(delta(b), ctx), ctx)
        if lhs != rhs:
            failures.append({"a": a.hex_key, "b": b.hex_key})
    return _result(f"hall.bialgebra-compatibility[total<={total}]", failures, checked)


def check_counit(ctx: FamilyContext, max_size: int) -> CheckResult:
    """(eps (x) id) o Delta = id = (id (x) eps) o Delta."""
    failures: list[Any] = []
    checked = 0
    for size in range(max_size + 1):
        for cls in ctx.classes(size):
            checked += 1
            cp = coproduct(delta(cls), ctx)
            left = HallElement.zero()
            right = HallElement.zero()
            for (a, b), v in cp.items():
                left = left + v * counit(delta(a)) * delta(b)
                right = right + v * counit(delta(b)) * delta(a)
            if left != delta(cls) or right != delta(cls):
                failures.append({"class": cls.hex_key})
    return _result(f"hall.counit-axiom[n<={max_size}]", failures, checked)


def check_antipode(ctx: FamilyContext, max_size: int) -> CheckResult:
    """m o (S (x) id) o Delta = eta o eps = m o (id (x) S) o Delta."""
    failures: list[Any] = []
    checked = 0
    for size in range(max_size + 1):
        for cls in ctx.classes(size):
            checked += 1
            x = delta(cls)
            cp = coproduct(x, ctx)
            left = HallElement.zero()
            right = HallElement.zero()
            for (a, b), v in cp.items():
                left = left + v * product(antipode(delta(a), ctx), delta(b), ctx)
                right = right + v * product(delta(a), antipode(delta(b), ctx), ctx)
            expected = counit(x) * unit(ctx)
            if left != expected or right != expected:
                failures.append({"class": cls.hex_key})
    return _result(f"hall.antipode-axiom[n<={max_size}]", failures, checked)


def check_grading(ctx: FamilyContext, total: int) -> CheckResult:
    """Products and coproducts respect the order grading."""
    failures: list[Any] = []
    checked = 0
    for a, b in _delta_pairs(ctx, total):
        checked += 1
        prod = product(delta(a), delta(b), ctx)
        if any(cls.size != a.size + b.size for cls in prod.coeffs):
            failures.append({"a": a.hex_key, "b": b.hex_key, "axiom": "product-grading"})
    for size in range(total + 1):
        for cls in ctx.classes(size):
            checked += 1
            cp = coproduct(delta(cls), ctx)
            if any(x.size + y.size != size for x, y in cp.coeffs):
                failures.append({"class": cls.hex_key, "axiom": "coproduct-grading"})
    return _result(f"hall.grading[total<={total}]", failures, checked)


def check_structure_constants(ctx: FamilyContext, total: int) -> CheckResult:
    """Convolution coefficients equal the independent N(P,Q;R) counts."""
    failures: list[Any] = []
    checked = 0
    for a, b in _delta_pairs(ctx, total):
        prod = product(delta(a), delta(b), ctx)
        for r_cls in ctx.classes(a.size + b.size):
            checked += 1
            direct = structure_constant(a, b, r_cls)
            if prod.coeff(r_cls) != direct:
                failures.append(
                    {"P": a.hex_key, "Q": b.hex_key, "R": r_cls.hex_key, "N": direct}
                )
    return _result(f"hall.structure-constants[total<={total}]", failures, checked)


def check_primitives(ctx: FamilyContext, max_size: int) -> CheckResult:
    """delta_P primitive iff P connected; bracket of primitives primitive."""
    from .posets import is_connected
    from .hall import is_primitive, lie_bracket, primitive_basis

    failures: list[Any] = []
    checked = 0
    for size in range(max_size + 1):
        for cls in ctx.classes(size):
            checked += 1
            expected = is_connected(cls.representative)
            if is_primitive(delta(cls), ctx) != expected:
                failures.append({"class": cls.hex_key})
    for degree in range(min(max_size, ctx.max_size // 2) + 1):
        basis = primitive_basis(ctx, degree)
        checked += 1
        for f in basis[:3]:
            for g in basis[:3]:
                if f.top_degree() + g.top_degree() <= ctx.max_size:
                    checked += 1
                    if not (
                        not lie_bracket(f, g, ctx)
                        or is_primitive(lie_bracket(f, g, ctx), ctx)
                    ):
                        failures.append({"axiom": "bracket-primitivity", "degree": degree})
    return _result(f"hall.primitives[n<={max_size}]", failures, checked)


def hopf_suite(ctx: FamilyContext, total: int) -> list[CheckResult]:
    return [
        check_product_associativity(ctx, total),
        check_coproduct_axioms(ctx, total),
        check_bialgebra(ctx, total),
        check_counit(ctx, total),
        check_antipode(ctx, total),
        check_grading(ctx, total),
        check_structure_constants(ctx, total),
        check_primitives(ctx, min(total, ctx.max_size)),
    ]


# ---------------------------------------------------------------------------
# Schmitt / phi suite


def check_interval_ideal_dictionary(ctx: FamilyContext, total: int) -> CheckResult:
    """Interval convolution equals the specialized ideal form everywhere."""
    failures: list[Any] = []
    checked = 0
    for a, b in _delta_pairs(ctx, total):
        fa = phi(delta(a), ctx)
        fb = phi(delta(b), ctx)
        for size in range(total + 1):
            for cls in ctx.classes(size):
                checked += 1
                p = cls.representative
                if schmitt_product(fa, fb, p, ctx) != schmitt_product_ideal_form(fa, fb, p, ctx):
                    failures.append(
                        {"f": a.hex_key, "g": b.hex_key, "P": jsonio.poset_to_doc(p)}
                    )
    return _result(f"schmitt.interval-vs-ideal[total<={total}]", failures, checked)


def check_schmitt_associativity(ctx: FamilyContext, total: int) -> CheckResult:
    failures: list[Any] = []
    checked = 0
    for a, b, c in _delta_triples(ctx, total):
        checked += 1
        fa, fb, fc = (phi(delta(x), ctx) for x in (a, b, c))
        left = schmitt_product_element(schmitt_product_element(fa, fb, ctx), fc, ctx)
        right = schmitt_product_element(fa, schmitt_product_element(fb, fc, ctx), ctx)
        if left != right:
            failures.append({"a": a.hex_key, "b": b.hex_key, "c": c.hex_key})
    return _result(f"schmitt.product-associativity[total<={total}]", failures, checked)


def check_phi_intertwines(ctx: FamilyContext, total: int) -> CheckResult:
    """phi intertwines products, coproducts, units, counits and antipodes."""
    from .incidence import schmitt_counit, schmitt_unit

    failures: list[Any] = []
    checked = 0
    if phi(unit(ctx), ctx) != schmitt_unit(ctx):
        failures.append({"axiom": "unit"})
    for a, b in _delta_pairs(ctx, total):
        checked += 1
        hall_side = phi(product(delta(a), delta(b), ctx), ctx)
        schmitt_side = schmitt_product_element(phi(delta(a), ctx), phi(delta(b), ctx), ctx)
        if hall_side != schmitt_side:
            failures.append({"axiom": "product", "a": a.hex_key, "b": b.hex_key})
    for size in range(total + 1):
        for cls in ctx.classes(size):
            checked += 1
            hall_cp = coproduct(delta(cls), ctx)
            schmitt_cp = schmitt_coproduct(phi(delta(cls), ctx), ctx)
            lifted = TensorElement({(a.iso, b.iso): v for (a, b), v in schmitt_cp.items()})
            if lifted != hall_cp:
                failures.append({"axiom": "coproduct", "class": cls.hex_key})
            if schmitt_counit(phi(delta(cls), ctx)) != counit(delta(cls)):
                failures.append({"axiom": "counit", "class": cls.hex_key})
            if phi(antipode(delta(cls), ctx), ctx) != schmitt_antipode(phi(delta(cls), ctx), ctx):
                failures.append({"axiom": "antipode", "class": cls.hex_key})
    return _result(f"schmitt.phi-intertwines[total<={total}]", failures, checked)


def check_hopf_relation(ctx: FamilyContext, cutoff: int, seed: int) -> CheckResult:
    report = verify_hopf_relation(ctx, cutoff, seed)
    checked = report.product_checks + report.neutrality_checks + report.order_checks
    failures = list(report.violations)
    return _result(f"schmitt.hopf-relation[n<={cutoff},seed={seed}]", failures, checked)


def schmitt_suite(ctx: FamilyContext, total: int, seed: int = 0) -> list[CheckResult]:
    return [
        check_interval_ideal_dictionary(ctx, total),
        check_schmitt_associativity(ctx, min(total, 4)),
        check_phi_intertwines(ctx, total),
        check_hopf_relation(ctx, min(total, ctx.max_size), seed),
    ]


# ---------------------------------------------------------------------------
# oracle and family suites


def check_ideal_filter_oracle(ctx: FamilyContext, max_size: int) -> CheckResult:
    """Ideal enumeration equals the filter over all 2^n subsets."""
    failures: list[Any] = []
    checked = 0
    for size in range(min(max_size, ctx.max_size) + 1):
        for cls in ctx.classes(size):
            checked += 1
            p = cls.representative
            brute = sorted(
                (m for m in range(1 << p.size) if is_order_ideal(p, m)),
                key=lambda m: (m.bit_count(), m),
            )
            if list(order_ideals(p).ideals) != brute:
                failures.append({"P": jsonio.poset_to_doc(p)})
    return _result(f"oracle.ideals-vs-filter[n<={max_size}]", failures, checked)


def check_canonical_vs_isomorphism(ctx: FamilyContext, max_size: int, seed: int) -> CheckResult:
    """Equal canonical keys exactly when an isomorphism search succeeds."""
    import random

    from .incidence import _relabel_by

    rng = random.Random(seed)
    failures: list[Any] = []
    checked = 0
    reps = [cls.representative for s in range(max_size + 1) for cls in ctx.classes(s)]
    for p in reps:
        for q in reps:
            checked += 1
            same_key = canonical_form(p, ctx.mode) == canonical_form(q, ctx.mode)
            found = bool(find_isomorphisms(p, q, ctx.mode))
            if same_key != found:
                failures.append(
                    {"P": jsonio.poset_to_doc(p), "Q": jsonio.poset_to_doc(q)}
                )
    for p in reps:
        perm = list(range(p.size))
        rng.shuffle(perm)
        q = _relabel_by(p, perm)
        checked += 1
        if canonical_form(p, ctx.mode) != canonical_form(q, ctx.mode):
            failures.append({"P": jsonio.poset_to_doc(p), "perm": perm})
    return _result(f"oracle.canonical-vs-iso[n<={max_size},seed={seed}]", failures, checked)


def check_family_closure(ctx: FamilyContext) -> CheckResult:
    report = verify_closure(ctx)
    return _result(
        f"family.closure[{ctx.name}]",
        list(report.violations),
        report.convex_checked + report.union_checked,
    )


def oracle_suite(ctx: FamilyContext, max_size: int, seed: int = 0) -> list[CheckResult]:
    return [
        check_ideal_filter_oracle(ctx, max_size),
        check_canonical_vs_isomorphism(ctx, min(max_size, 5), seed),
        check_family_closure(ctx),
    ]


# ---------------------------------------------------------------------------
# top-level driver


def run_verification(
    ctx: FamilyContext,
    assoc_max: int,
    universal_max: int,
    hopf_total: int,
    schmitt_total: int,
    oracle_max: int,
    seed: int = 0,
) -> list[CheckResult]:
    results: list[CheckResult] = []
    results.extend(category_suite(ctx, assoc_max, universal_max))
    results.extend(hopf_suite(ctx, hopf_total))
    results.extend(schmitt_suite(ctx, schmitt_total, seed))
    results.extend(oracle_suite(ctx, oracle_max, seed))
    return results
