"""Acceptance criteria, one test per criterion.

Each test prints one ``ACCEPTANCE <n> <PASS|FAIL>`` line (visible with
``pytest -s``) and asserts the criterion at its stated tolerance; all
algebraic checks are exact, never approximate.  Run with::

    pytest -v -s tests/test_acceptance.py
"""

import math
import time
from fractions import Fraction

import pytest

from inccat.families import (
    colored_forests_up_to,
    colored_sets_up_to,
    fin_up_to,
    forests_up_to,
    sets_up_to,
)
from inccat.hall import (
    HallElement,
    coproduct,
    delta,
    is_primitive,
    k0_truncated,
    primitive_basis,
    product,
    structure_constant,
)
from inccat.ideals import is_order_ideal, order_ideals
from inccat.incidence import phi, schmitt_coproduct, schmitt_product_element
from inccat.hall import TensorElement
from inccat.posets import canonical_form, find_isomorphisms, is_connected
from inccat.verification import (
    check_associativity,
    check_cokernel_universal,
    check_kernel_universal,
    check_mono_epi_cancellation,
    check_ses_classification,
    check_torsor,
    check_unit_laws,
    hopf_suite,
)

from test_families import admissible_cut_count


def report(number: int, description: str, ok: bool) -> None:
    print(f"ACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {description}")
    assert ok, f"criterion {number} failed: {description}"


@pytest.fixture(scope="module")
def fin5():
    return fin_up_to(5)


@pytest.fixture(scope="module")
def forests5():
    return forests_up_to(5)


def test_criterion_01_binomial_law():
    started = time.perf_counter()
    sets = sets_up_to(8)
    ok = True
    for n in range(9):
        for m in range(9 - n):
            result = product(delta(sets.classes(n)[0]), delta(sets.classes(m)[0]), sets)
            expected = HallElement({sets.classes(n + m)[0]: Fraction(math.comb(n + m, n))})
            ok = ok and result == expected
    elapsed = time.perf_counter() - started
    report(1, f"binomial law on sets, n+m <= 8, exact ({elapsed:.1f}s)", ok and elapsed < 10)


def test_criterion_02_colored_law():
    started = time.perf_counter()
    ok = True
    for k in (2, 3):
        ctx = colored_sets_up_to(6, k)
        classes_by_vector = {
            cls.color_vector: cls for size in range(7) for cls in ctx.classes(size)
        }
        for left_vec, left_cls in classes_by_vector.items():
            for right_vec, right_cls in classes_by_vector.items():
                if sum(left_vec) + sum(right_vec) > 6:
                    continue
                result = product(delta(left_cls), delta(right_cls), ctx)
                total = tuple(a + b for a, b in zip(left_vec, right_vec))
                coeff = 1
                for a, b in zip(left_vec, right_vec):
                    coeff *= math.comb(a + b, a)
                expected = HallElement({classes_by_vector[total]: Fraction(coeff)})
                ok = ok and result == expected
    elapsed = time.perf_counter() - started
    report(
        2,
        f"colored product-of-binomials law, k=2,3, total <= 6, exact ({elapsed:.1f}s)",
        ok and elapsed < 30,
    )


def test_criterion_03_associativity(fin5, forests5):
    started = time.perf_counter()
    fin_result = check_associativity(fin5, 3)
    forest_result = check_associativity(forests5, 4)
    elapsed = time.perf_counter() - started
    ok = fin_result.passed and forest_result.passed and elapsed < 120
    report(
        3,
        "composition associativity, exhaustive: Fin size <= 3, forests size <= 4 "
        f"({fin_result.details}; {forest_result.details}; {elapsed:.1f}s)",
        ok,
    )


def test_criterion_04_category_exactness_suite(fin5):
    results = [
        check_unit_laws(fin5, 3),
        check_kernel_universal(fin5, 3),
        check_cokernel_universal(fin5, 3),
        check_mono_epi_cancellation(fin5, 3),
        check_torsor(fin5, 3),
        check_ses_classification(fin5, 4),
    ]
    ok = all(r.passed for r in results)
    report(
        4,
        "kernel/cokernel universal properties, mono/epi cancellability, torsor "
        "counts (size <= 3) and SES completeness (size <= 4), zero failures",
        ok,
    )


def test_criterion_05_hopf_suite(fin5, forests5):
    started = time.perf_counter()
    ok = True
    for ctx in (fin5, sets_up_to(5), colored_sets_up_to(5, 2), forests5):
        for result in hopf_suite(ctx, 5):
            ok = ok and result.passed
    elapsed = time.perf_counter() - started
    report(
        5,
        "Hopf axiom suite (assoc, coassoc, cocomm, bialgebra, counit, antipode), "
        f"exact, total size <= 5, in Fin, Sets, ColoredSets(2), Forests ({elapsed:.1f}s)",
        ok and elapsed < 300,
    )


def test_criterion_06_phi_isomorphism(fin5, forests5):
    ok = True
    for ctx in (fin5, sets_up_to(5), colored_sets_up_to(5, 2), forests5):
        for size_a in range(6):
            for a in ctx.classes(size_a):
                # coproduct side
                lifted = TensorElement(
                    {
                        (x.iso, y.iso): v
                        for (x, y), v in schmitt_coproduct(phi(delta(a), ctx), ctx).items()
                    }
                )
                ok = ok and lifted == coproduct(delta(a), ctx)
                for size_b in range(6 - size_a):
                    for b in ctx.classes(size_b):
                        hall_side = phi(product(delta(a), delta(b), ctx), ctx)
                        schmitt_side = schmitt_product_element(
                            phi(delta(a), ctx), phi(delta(b), ctx), ctx
                        )
                        ok = ok and hall_side == schmitt_side
    report(
        6,
        "phi intertwines the Hall convolution with the independent interval "
        "convolution, and the coproducts, total size <= 5, exact",
        ok,
    )


def test_criterion_07_primitives():
    ok = True
    families = [
        fin_up_to(5),
        sets_up_to(5),
        colored_sets_up_to(5, 2),
        colored_sets_up_to(5, 3),
        forests_up_to(5),
        colored_forests_up_to(5, 2),
    ]
    for ctx in families:
        for size in range(6):
            for cls in ctx.classes(size):
                ok = ok and is_primitive(delta(cls), ctx) == is_connected(cls.representative)
        for degree in range(5):
            basis = primitive_basis(ctx, degree)  # raises if the kernel is bigger
            connected = [
                cls for cls in ctx.classes(degree) if is_connected(cls.representative)
            ]
            ok = ok and len(basis) == len(connected)
    report(
        7,
        "delta_P primitive iff P connected (size <= 5) and the reduced-coproduct "
        "kernel is spanned by connected deltas (degree <= 4, exact rank), in "
        "every built-in family",
        ok,
    )


def test_criterion_08_truncated_k0():
    ok = True
    for ctx in (fin_up_to(4), forests_up_to(4)):
        pres = k0_truncated(ctx, 4)
        ok = ok and pres.free_rank == 1 and pres.torsion == ()
        dot = ctx.classes(1)[0]
        for cls in pres.generators:
            vec = pres.class_vector(cls)
            dot_vec = pres.class_vector(dot)
            relation = [a - cls.size * b for a, b in zip(vec, dot_vec)]
            ok = ok and pres.relations_contain(relation)
    for k in (2, 3):
        pres = k0_truncated(colored_sets_up_to(4, k), 4)
        ok = ok and pres.free_rank == k and pres.torsion == ()
    report(
        8,
        "truncated K0 at cutoff 4: free rank 1 for Fin and Forests with "
        "k(X_P) = |P| k(X_point), free rank k for ColoredSets(k<=3), exact",
        ok,
    )


def test_criterion_09_admissible_cuts(forests5):
    ok = True
    trees = 0
    for size in range(1, 6):
        for cls in forests5.classes(size):
            tree = cls.representative
            if not is_connected(tree):
                continue
            trees += 1
            ok = ok and len(order_ideals(tree)) == admissible_cut_count(tree) + 1
    report(
        9,
        f"order ideals of every rooted tree with <= 5 vertices match the "
        f"independent admissible-cut count ({trees} trees), exact",
        ok and trees == 17,
    )


def test_criterion_10_oracle_crosschecks(fin5, forests5):
    ok = True
    # ideals versus the 2^n filter, every class representative up to size 7
    fin7 = fin_up_to(7)
    for size in range(8):
        for cls in fin7.classes(size):
            p = cls.representative
            brute = sorted(
                (m for m in range(1 << p.size) if is_order_ideal(p, m)),
                key=lambda m: (m.bit_count(), m),
            )
            ok = ok and list(order_ideals(p).ideals) == brute
    # product coefficients versus direct structure-constant counts
    for ctx in (fin5, forests5):
        for size_a in range(5):
            for a in ctx.classes(size_a):
                for size_b in range(5 - size_a):
                    for b in ctx.classes(size_b):
                        result = product(delta(a), delta(b), ctx)
                        for r in ctx.classes(size_a + size_b):
                            ok = ok and result.coeff(r) == structure_constant(a, b, r)
    # canonical form versus pairwise isomorphism search, all posets size <= 5
    reps = [cls.representative for s in range(6) for cls in fin5.classes(s)]
    for p in reps:
        for q in reps:
            same = canonical_form(p) == canonical_form(q)
            ok = ok and same == bool(find_isomorphisms(p, q))
    report(
        10,
        "oracle cross-checks: ideal enumeration vs 2^n filter (n <= 7), product "
        "coefficients vs N(P,Q;R) counts, canonical keys vs isomorphism search "
        "(n <= 5), exact",
        ok,
    )
