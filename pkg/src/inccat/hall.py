"""The Ringel-Hall algebra of an incidence category.

Elements are finitely supported rational-valued functions on iso-classes,
spanned by the delta functions delta_[X_P].  The product is convolution
over subobjects, which the ideal calculus turns into

    (f * g)([X_P]) = sum over ideals I of J_P of f([X_I]) g([X_{P \\ I}]),

and the coproduct is dual to the monoidal sum:

    Delta(f)([M], [N]) = f([M (+) N]).

Everything is exact: coefficients are ``fractions.Fraction``.  The
algebra is graded by poset size and connected in degree zero, so the
counit is evaluation at the empty class and the antipode is the standard
graded recursion over the reduced coproduct.  A family context supplies
the candidate classes a product can land on; computations that would
need classes beyond the context's cutoff raise ``TruncationError``.
"""

from __future__ import annotations

from fractions import Fraction
from weakref import WeakKeyDictionary

from . import linalg
from .category import CategoryObject, short_exact_sequences
from .errors import IncCatError, TruncationError
from .families import FamilyContext, IsoClass
from .ideals import order_ideals
from .posets import connected_components, find_isomorphisms, induced_subposet, is_connected

Scalar = int | Fraction


class Combination:
    """A finitely supported map from keys to exact rationals.

    Base class for Hall elements, incidence-side elements and tensors;
    zero coefficients are never stored, and arithmetic returns new values
    of the same concrete type.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        clean = {}
        for key, value in (coeffs or {}).items():
            value = Fraction(value)
            if value:
                clean[key] = value
        self.coeffs: dict = clean

    @classmethod
    def zero(cls):
        return cls()

    def coeff(self, key) -> Fraction:
        return self.coeffs.get(key, Fraction(0))

    def support(self) -> set:
        return set(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Combination):
            return NotImplemented
        return type(self) is type(other) and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.coeffs)
        for key, value in other.coeffs.items():
            out[key] = out.get(key, Fraction(0)) + value
        return type(self)(out)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.coeffs)
        for key, value in other.coeffs.items():
            out[key] = out.get(key, Fraction(0)) - value
        return type(self)(out)

    def __neg__(self):
        return type(self)({key: -value for key, value in self.coeffs.items()})

    def __mul__(self, scalar: Scalar):
        return type(self)({key: value * Fraction(scalar) for key, value in self.coeffs.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*{k!r}" for k, v in self.coeffs.items())


class HallElement(Combination):
    """An element of the Hall algebra: IsoClass -> Q, finite support."""

    def degrees(self) -> set[int]:
        return {cls.size for cls in self.coeffs}

    def top_degree(self) -> int:
        return max(self.degrees(), default=0)


class TensorElement(Combination):
    """An element of the two-fold tensor square, keyed by class pairs."""

    def flip(self) -> "TensorElement":
        return TensorElement({(b, a): v for (a, b), v in self.coeffs.items()})


def delta(cls: IsoClass) -> HallElement:
    """The indicator of one isomorphism class, with coefficient 1."""
    return HallElement({cls: Fraction(1)})


def unit(ctx: FamilyContext) -> HallElement:
    return delta(ctx.empty_class)


_SPLIT_CACHE: "WeakKeyDictionary[FamilyContext, dict[bytes, tuple]]" = WeakKeyDictionary()


def _ideal_splits(ctx: FamilyContext, r_cls: IsoClass) -> tuple:
    """(class of X_I, class of X_{R\\I}) for every ideal I of R's representative.

    Depends only on the class, so it is computed once per family context;
    every convolution against R then reduces to dictionary lookups.
    """
    cache = _SPLIT_CACHE.setdefault(ctx, {})
    hit = cache.get(r_cls.key)
    if hit is not None:
        return hit
    rep = r_cls.representative
    splits = []
    for ideal in order_ideals(rep).ideals:
        sub, _ = induced_subposet(rep, ideal)
        rest, _ = induced_subposet(rep, rep.full_mask & ~ideal)
        splits.append((ctx.class_of(sub), ctx.class_of(rest)))
    result = tuple(splits)
    cache[r_cls.key] = result
    return result


def product(f: HallElement, g: HallElement, ctx: FamilyContext) -> HallElement:
    """Convolution product, evaluated class by class.

    For every candidate class R whose size is a sum of a degree of f and a
    degree of g, the coefficient of delta_R is the sum over ideals I of
    R's representative of f([X_I]) g([X_{R \\ I}]).
    """
    out: dict[IsoClass, Fraction] = {}
    sums = sorted({a + b for a in (c.size for c in f.coeffs) for b in (c.size for c in g.coeffs)})
    for total in sums:
        if total > ctx.max_size:
            raise TruncationError(
                f"product needs classes of size {total}, family {ctx.name!r} "
                f"is truncated at {ctx.max_size}"
            )
        for r_cls in ctx.classes(total):
            acc = Fraction(0)
            for sub_cls, quot_cls in _ideal_splits(ctx, r_cls):
                c1 = f.coeff(sub_cls)
                if not c1:
                    continue
                c2 = g.coeff(quot_cls)
                if c2:
                    acc += c1 * c2
            if acc:
                out[r_cls] = acc
    return HallElement(out)


def structure_constant(p_cls: IsoClass, q_cls: IsoClass, r_cls: IsoClass) -> int:
    """N(P,Q;R): ideals I of R with I isomorphic to P and R \\ I to Q.

    Deliberately routed through explicit isomorphism search on the
    representatives rather than canonical keys, so it cross-checks the
    convolution product through an independent mechanism.
    """
    if p_cls.mode is not q_cls.mode or p_cls.mode is not r_cls.mode:
        raise IncCatError("structure constants need classes from one map mode")
    if p_cls.size + q_cls.size != r_cls.size:
        return 0
    mode = r_cls.mode
    rep = r_cls.representative
    count = 0
    for ideal in order_ideals(rep).ideals:
        if ideal.bit_count() != p_cls.size:
            continue
        sub, _ = induced_subposet(rep, ideal)
        if not find_isomorphisms(sub, p_cls.representative, mode):
            continue
        rest, _ = induced_subposet(rep, rep.full_mask & ~ideal)
        if find_isomorphisms(rest, q_cls.representative, mode):
            count += 1
    return count


def coproduct(f: HallElement, ctx: FamilyContext) -> TensorElement:
    """Delta(f)([M],[N]) = f([M (+) N]).

    Per support class, the pairs with a nonzero coefficient are exactly
    the ordered splittings of the connected components into two groups;
    each distinct pair of classes receives the value of f on the support
    class (not a multiplicity count -- the coefficient is an evaluation).
    """
    out: dict[tuple[IsoClass, IsoClass], Fraction] = {}
    for cls, value in f.items():
        rep = cls.representative
        comps = connected_components(rep)
        m = len(comps)
        seen: set[tuple[IsoClass, IsoClass]] = set()
        for pick in range(1 << m):
            left_mask = 0
            for i in range(m):
                if (pick >> i) & 1:
                    left_mask |= comps[i]
            right_mask = rep.full_mask & ~left_mask
            left, _ = induced_subposet(rep, left_mask)
            right, _ = induced_subposet(rep, right_mask)
            pair = (ctx.class_of(left), ctx.class_of(right))
            if pair not in seen:
                seen.add(pair)
                # a pair of classes determines the reassembled union up to
                # isomorphism, so this never collides across support classes
                out[pair] = value
    return TensorElement(out)


def reduced_coproduct(f: HallElement, ctx: FamilyContext) -> TensorElement:
    """Coproduct minus the two primitive terms f (x) 1 and 1 (x) f."""
    full = coproduct(f, ctx)
    trimmed = {
        pair: value
        for pair, value in full.items()
        if pair[0].size > 0 and pair[1].size > 0
    }
    return TensorElement(trimmed)


def counit(f: HallElement) -> Fraction:
    """Evaluation at the empty class (degree-zero component)."""
    return sum((v for cls, v in f.items() if cls.size == 0), Fraction(0))


def lie_bracket(f: HallElement, g: HallElement, ctx: FamilyContext) -> HallElement:
    return product(f, g, ctx) - product(g, f, ctx)


def is_primitive(f: HallElement, ctx: FamilyContext) -> bool:
    """Delta(f) = f (x) 1 + 1 (x) f."""
    e = ctx.empty_class
    expected = TensorElement(
        {(cls, e): v for cls, v in f.items()}
    ) + TensorElement({(e, cls): v for cls, v in f.items()})
    return coproduct(f, ctx) == expected


_ANTIPODE_CACHE: "WeakKeyDictionary[FamilyContext, dict[bytes, HallElement]]" = WeakKeyDictionary()


def antipode(f: HallElement, ctx: FamilyContext) -> HallElement:
    """The antipode, by the graded-connected recursion.

    S fixes the empty class; on a positive-degree class, with reduced
    coproduct sum of x' (x) x'',

        S(x) = -x - sum S(x') * x''.

    Extended linearly; memoized per family context and class.
    """
    out = HallElement.zero()
    for cls, value in f.items():
        out = out + value * _antipode_class(ctx, cls)
    return out


def _antipode_class(ctx: FamilyContext, cls: IsoClass) -> HallElement:
    if cls.size == 0:
        return delta(cls)
    cache = _ANTIPODE_CACHE.setdefault(ctx, {})
    hit = cache.get(cls.key)
    if hit is not None:
        return hit
    result = -delta(cls)
    for (left, right), value in reduced_coproduct(delta(cls), ctx).items():
        result = result - value * product(_antipode_class(ctx, left), delta(right), ctx)
    cache[cls.key] = result
    return result


def tensor_product(t1: TensorElement, t2: TensorElement, ctx: FamilyContext) -> TensorElement:
    """Componentwise product on the tensor square.

    (a (x) b)(c (x) d) = (a*c) (x) (b*d), extended bilinearly; used by the
    bialgebra compatibility check Delta(f*g) = Delta(f) Delta(g).
    """
    out = TensorElement.zero()
    for (a, b), x in t1.items():
        for (c, d), y in t2.items():
            left = product(delta(a), delta(c), ctx)
            right = product(delta(b), delta(d), ctx)
            for lc, lv in left.items():
                for rc, rv in right.items():
                    out = out + TensorElement({(lc, rc): x * y * lv * rv})
    return out


def primitive_basis(ctx: FamilyContext, degree: int) -> list[HallElement]:
    """A basis of the degree-d primitives: the connected-class deltas.

    Verified rather than assumed: each connected delta is checked
    primitive, and exact linear algebra on the reduced coproduct matrix
    confirms the kernel has no room for anything else.
    """
    if degree == 0:
        return []
    classes = list(ctx.classes(degree))
    pair_index: dict[tuple[IsoClass, IsoClass], int] = {}
    columns = []
    for cls in classes:
        col: dict[int, int] = {}
        for pair, value in reduced_coproduct(delta(cls), ctx).items():
            row = pair_index.setdefault(pair, len(pair_index))
            col[row] = int(value)
        columns.append(col)
    matrix = [[col.get(row, 0) for col in columns] for row in range(len(pair_index))]
    kernel_dim = len(classes) - linalg.rank_over_q(matrix)

    connected = [cls for cls in classes if is_connected(cls.representative)]
    for cls in connected:
        if not is_primitive(delta(cls), ctx):
            raise IncCatError(f"connected class {cls.hex_key} is unexpectedly not primitive")
    if kernel_dim != len(connected):
        raise IncCatError(
            f"primitive space in degree {degree} has dimension {kernel_dim}, "
            f"but there are {len(connected)} connected classes"
        )
    return [delta(cls) for cls in connected]


class K0Presentation:
    """A truncated presentation of the Grothendieck group.

    Generators are all iso-classes up to the cutoff; one relation
    [X_I] + [X_{P \\ I}] - [X_P] per canonical short exact sequence of
    each representative (including the degenerate ones, which pin the
    empty class to zero).  The Smith normal form of the relation matrix
    gives the group: free of rank (#generators - #nonzero invariant
    factors) times the cyclic torsion factors > 1.
    """

    def __init__(self, ctx: FamilyContext, cutoff: int):
        if cutoff > ctx.max_size:
            raise TruncationError(
                f"family {ctx.name!r} is truncated at {ctx.max_size}, cutoff {cutoff} requested"
            )
        self.family = ctx.name
        self.cutoff = cutoff
        self.generators: tuple[IsoClass, ...] = tuple(
            cls for size in range(cutoff + 1) for cls in ctx.classes(size)
        )
        index = {cls.key: i for i, cls in enumerate(self.generators)}
        rows: list[list[int]] = []
        for cls in self.generators:
            x = CategoryObject(cls.representative)
            for ses in short_exact_sequences(x, ctx.mode):
                row = [0] * len(self.generators)
                row[index[ctx.class_of(ses.sub.poset).key]] += 1
                row[index[ctx.class_of(ses.quotient.poset).key]] += 1
                row[index[cls.key]] -= 1
                rows.append(row)
        self.relations: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rows)
        self.smith_diagonal: tuple[int, ...] = linalg.smith_diagonal(rows)
        self._index = index

    @property
    def free_rank(self) -> int:
        return len(self.generators) - len(self.smith_diagonal)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.smith_diagonal if d > 1)

    def class_vector(self, cls: IsoClass) -> list[int]:
        vec = [0] * len(self.generators)
        vec[self._index[cls.key]] = 1
        return vec

    def relations_contain(self, vector: list[int]) -> bool:
        """Does the vector vanish in the truncated K0?"""
        return linalg.in_row_lattice([list(r) for r in self.relations], vector)


def k0_truncated(ctx: FamilyContext, cutoff: int) -> K0Presentation:
    """Generators, SES relations and Smith normal form at the cutoff."""
    return K0Presentation(ctx, cutoff)
