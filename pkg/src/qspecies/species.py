"""Species: size-indexed families of graded groupoids.

A species assigns to every size vector (one entry per sort, 1 or 2 sorts) a
graded groupoid, uniformly in the labels, so only sizes matter.  Values are
memoized per species.  The combinators below mirror the calculus of
exponential generating series coefficientwise: sum is pointwise union,
product splits the labels with binomial multiplicities, composition sums over
set partitions with block colorings, and the alternating geometric inverse
inverts 1 + F under product.

Default evaluation never touches individual labels: it counts how many
labeled configurations share each isomorphism type and replicates components
by that count.  The *_labeled functions enumerate an explicit labeled set
instead; they are the small-size oracles the fast paths are tested against.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from .numeric import DomainError, EnumerationLimitError, enumerate_set_partitions, multinomial
from .groupoid import (
    GRADED_EMPTY,
    GRADED_UNIT,
    FiniteGroupoid,
    GradedGroupoid,
    increasing_factorial,
)
from .egf import TruncatedEGF, size_keys

__all__ = [
    "Species",
    "SizeVector",
    "PRODUCT_CAP",
    "GEOM_INVERSE_CAP",
    "COMPOSE_CAP",
    "constant_species",
    "zero_species",
    "one_species",
    "promote",
    "substitute_xy",
    "geom_inverse",
    "scaled_reciprocal",
    "binomial_power",
    "egf_of",
    "product_labeled",
    "compose_labeled",
    "geom_inverse_labeled",
]

PRODUCT_CAP = 30
GEOM_INVERSE_CAP = 25
COMPOSE_CAP = 8

SizeVector = tuple[int, ...]


class Species:
    """A rule from size vectors to graded groupoids, memoized.

    Memoization is semantically invisible: rules must be pure, and repeated
    evaluation returns the same structure.
    """

    __slots__ = ("sorts", "name", "_rule", "_memo")

    def __init__(self, sorts: int, rule: Callable[[SizeVector], GradedGroupoid], name: str = "species"):
        if sorts not in (1, 2):
            raise DomainError("species support 1 or 2 sorts")
        self.sorts = sorts
        self.name = name
        self._rule = rule
        self._memo: dict[SizeVector, GradedGroupoid] = {}

    def value(self, sizes) -> GradedGroupoid:
        key = (sizes,) if isinstance(sizes, int) else tuple(sizes)
        got = self._memo.get(key)
        if got is None:
            if len(key) != self.sorts:
                raise DomainError(
                    "%s expects %d size(s), got %r" % (self.name, self.sorts, key)
                )
            if any(not isinstance(n, int) or n < 0 for n in key):
                raise DomainError("sizes must be nonnegative integers, got %r" % (key,))
            got = self._rule(key)
            self._memo[key] = got
        return got

    def cardinality_at(self, sizes) -> Fraction:
        return self.value(sizes).cardinality()

    def egf(self, order: int) -> TruncatedEGF:
        return egf_of(self, order)

    # -- combinators ------------------------------------------------------

    def __add__(self, other: "Species") -> "Species":
        _check_sorts(self, other, "sum")
        return Species(
            self.sorts,
            lambda sizes: self.value(sizes) + other.value(sizes),
            "sum(%s,%s)" % (self.name, other.name),
        )

    def __mul__(self, other: "Species") -> "Species":
        _check_sorts(self, other, "prod")
        return Species(
            self.sorts,
            lambda sizes: _product_value(self, other, sizes),
            "prod(%s,%s)" % (self.name, other.name),
        )

    def hadamard(self, other: "Species") -> "Species":
        _check_sorts(self, other, "had")
        return Species(
            self.sorts,
            lambda sizes: self.value(sizes) * other.value(sizes),
            "had(%s,%s)" % (self.name, other.name),
        )

    def derivative(self, sort_index: int = 1) -> "Species":
        if not 1 <= sort_index <= self.sorts:
            raise DomainError("derivative: sort index %d out of range" % sort_index)
        i = sort_index - 1

        def rule(sizes: SizeVector) -> GradedGroupoid:
            bumped = sizes[:i] + (sizes[i] + 1,) + sizes[i + 1 :]
            return self.value(bumped)

        return Species(self.sorts, rule, "d/dx%d(%s)" % (sort_index, self.name))

    def positive_part(self) -> "Species":
        zero = (0,) * self.sorts

        def rule(sizes: SizeVector) -> GradedGroupoid:
            return GRADED_EMPTY if sizes == zero else self.value(sizes)

        return Species(self.sorts, rule, "pospart(%s)" % self.name)

    def replicate(self, m: int) -> "Species":
        """Pointwise disjoint union of m copies."""
        if m < 0:
            raise DomainError("replicate needs m >= 0")
        return Species(
            self.sorts,
            lambda sizes: self.value(sizes).replicate(m),
            "replicate(%d,%s)" % (m, self.name),
        )

    def negate(self) -> "Species":
        return Species(self.sorts, lambda sizes: -self.value(sizes), "negate(%s)" % self.name)

    __neg__ = negate

    def compose(self, *inner: "Species") -> "Species":
        """Plug one inner species per sort of self; see _compose_value."""
        if len(inner) != self.sorts:
            raise DomainError(
                "compose: expected %d inner species, got %d" % (self.sorts, len(inner))
            )
        t = inner[0].sorts
        for g in inner:
            if g.sorts != t:
                raise DomainError("compose: inner species must share a sort count")
            _require_positive_part(g, "compose")
        inner_names = ",".join(g.name for g in inner)
        return Species(
            t,
            lambda sizes: _compose_value(self, inner, sizes),
            "compose(%s,%s)" % (self.name, inner_names),
        )

    __call__ = compose

    def __repr__(self) -> str:
        return "Species(%s, sorts=%d)" % (self.name, self.sorts)


def _check_sorts(f: Species, g: Species, op: str) -> None:
    if f.sorts != g.sorts:
        raise DomainError("%s: sort counts differ (%d vs %d)" % (op, f.sorts, g.sorts))


def _require_positive_part(f: Species, op: str) -> None:
    if not f.value((0,) * f.sorts).is_empty:
        raise DomainError("%s: species must be empty at size zero" % op)


def _subvectors(sizes: SizeVector) -> Iterator[SizeVector]:
    return itertools.product(*[range(n + 1) for n in sizes])


def _vec_sub(a: SizeVector, b: SizeVector) -> SizeVector:
    return tuple(x - y for x, y in zip(a, b))


def _binoms(sizes: SizeVector, sub: SizeVector) -> int:
    out = 1
    for n, k in zip(sizes, sub):
        out *= math.comb(n, k)
    return out


def _product_value(f: Species, g: Species, sizes: SizeVector) -> GradedGroupoid:
    total = sum(sizes)
    if total > PRODUCT_CAP:
        raise EnumerationLimitError("prod: total size %d exceeds cap %d" % (total, PRODUCT_CAP))
    terms = []
    for left in _subvectors(sizes):
        fv = f.value(left)
        if fv.is_empty:
            continue
        gv = g.value(_vec_sub(sizes, left))
        if gv.is_empty:
            continue
        terms.append((fv * gv).replicate(_binoms(sizes, left)))
    return GradedGroupoid.union_all(terms)


def _weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def _block_type_multisets(
    sizes: SizeVector,
) -> Iterator[tuple[tuple[SizeVector, int], ...]]:
    """Multisets of nonzero block-size vectors summing to sizes.

    Yielded as ((vector, multiplicity), ...) with vectors strictly decreasing
    lexicographically, so each multiset appears exactly once.
    """
    nonzero = sorted((v for v in _subvectors(sizes) if any(v)), reverse=True)

    def rec(remaining: SizeVector, start: int):
        if not any(remaining):
            yield ()
            return
        for idx in range(start, len(nonzero)):
            v = nonzero[idx]
            if all(x <= r for x, r in zip(v, remaining)):
                for tail in rec(_vec_sub(remaining, v), idx):
                    if tail and tail[0][0] == v:
                        yield ((v, tail[0][1] + 1),) + tail[1:]
                    else:
                        yield ((v, 1),) + tail

    return rec(tuple(sizes), 0)


def _compose_value(f: Species, inner: Sequence[Species], sizes: SizeVector) -> GradedGroupoid:
    """Sum over set partitions of the sizes-labeled set and block colorings.

    Partitions are grouped by block-size type: a type with distinct vectors
    v_j of multiplicity m_j accounts for

        prod(n_s!) / (prod_j (prod_s v_js!)^m_j * m_j!)

    partitions, and each way of coloring its blocks by the inner species
    splits the m_j further with multinomial weight.  Every partition/coloring
    pair contributes f at the color counts times the product of inner values
    at the block vectors.
    """
    total = sum(sizes)
    if total > COMPOSE_CAP:
        raise EnumerationLimitError("compose: total size %d exceeds cap %d" % (total, COMPOSE_CAP))
    s = f.sorts
    base = 1
    for n in sizes:
        base *= math.factorial(n)
    terms = []
    for groups in _block_type_multisets(sizes):
        denom = 1
        for vec, m in groups:
            vfact = 1
            for x in vec:
                vfact *= math.factorial(x)
            denom *= vfact ** m * math.factorial(m)
        partitions = base // denom
        for splits in itertools.product(
            *[_weak_compositions(m, s) for _, m in groups]
        ):
            weight = partitions
            colors = [0] * s
            for (vec, m), split in zip(groups, splits):
                weight *= multinomial(m, split)
                for c, mc in enumerate(split):
                    colors[c] += mc
            val = f.value(tuple(colors))
            for (vec, m), split in zip(groups, splits):
                if val.is_empty:
                    break
                for c, mc in enumerate(split):
                    if mc == 0:
                        continue
                    gv = inner[c].value(vec)
                    if gv.is_empty:
                        val = GRADED_EMPTY
                        break
                    for _ in range(mc):
                        val = val * gv
            if not val.is_empty:
                terms.append(val.replicate(weight))
    return GradedGroupoid.union_all(terms)


def constant_species(value: "FiniteGroupoid | GradedGroupoid", sorts: int = 1) -> Species:
    """The given groupoid at size zero, empty elsewhere."""
    fixed = GradedGroupoid.positive(value)
    zero = (0,) * sorts
    return Species(
        sorts,
        lambda sizes: fixed if sizes == zero else GRADED_EMPTY,
        "const",
    )


def zero_species(sorts: int = 1) -> Species:
    return Species(sorts, lambda sizes: GRADED_EMPTY, "zero")


def one_species(sorts: int = 1) -> Species:
    """Unit groupoid at size zero, empty elsewhere: the product unit."""
    return constant_species(GRADED_UNIT, sorts)


def promote(f: Species, sort_index: int) -> Species:
    """View a single-sort species as a two-sort one in the given coordinate."""
    if f.sorts != 1:
        raise DomainError("promote needs a single-sort species")
    if sort_index not in (1, 2):
        raise DomainError("promote: sort index must be 1 or 2")
    i = sort_index - 1

    def rule(sizes: SizeVector) -> GradedGroupoid:
        if sizes[1 - i] != 0:
            return GRADED_EMPTY
        return f.value((sizes[i],))

    return Species(2, rule, "promote%d(%s)" % (sort_index, f.name))


def substitute_xy(f: Species) -> Species:
    """The two-sort species f(x*y): f's value paired with all bijections
    between the sorts, so it lives on the diagonal only.

    Structurally equal to composing f with the two-sort product species.
    """
    if f.sorts != 1:
        raise DomainError("substitute_xy needs a single-sort species")

    def rule(sizes: SizeVector) -> GradedGroupoid:
        a, b = sizes
        if a != b:
            return GRADED_EMPTY
        bijections = FiniteGroupoid.from_counts({(1, 1): math.factorial(a)})
        return f.value((a,)) * GradedGroupoid.positive(bijections)

    return Species(2, rule, "xy(%s)" % f.name)


def geom_inverse(f: Species) -> Species:
    """Alternating inverse of 1 + f under product: the signed union over
    ordered decompositions of the labels into nonempty f-blocks.

    Evaluated by the first-block recurrence R(0) = unit and

        R(n) = union over nonzero a <= n of binom(n, a) copies of
               negate(f(a) x R(n - a)),

    which unfolds to exactly the ordered-composition union with multinomial
    multiplicities.  Requires f to be empty at size zero, which makes the
    recursion well-founded.
    """
    _require_positive_part(f, "geominv")
    out = Species(f.sorts, lambda sizes: GRADED_EMPTY, "geominv(%s)" % f.name)
    zero = (0,) * f.sorts

    def rule(sizes: SizeVector) -> GradedGroupoid:
        if sizes == zero:
            return GRADED_UNIT
        total = sum(sizes)
        if total > GEOM_INVERSE_CAP:
            raise EnumerationLimitError(
                "geominv: total size %d exceeds cap %d" % (total, GEOM_INVERSE_CAP)
            )
        terms = []
        for first in _subvectors(sizes):
            if not any(first):
                continue
            fv = f.value(first)
            if fv.is_empty:
                continue
            tail = out.value(_vec_sub(sizes, first))
            if tail.is_empty:
                continue
            terms.append((-(fv * tail)).replicate(_binoms(sizes, first)))
        return GradedGroupoid.union_all(terms)

    out._rule = rule
    return out


def scaled_reciprocal(a: int, b: int, f: Species) -> Species:
    """b copies of the one-object groupoid with a automorphisms, divided by
    1 plus that same constant times f.  The constant has cardinality b/a, so
    the whole thing decategorifies to (b/a) / (1 + (b/a)|f|) = 1/(a/b + |f|).
    """
    if a < 1 or b < 1:
        raise DomainError("scaled reciprocal needs positive a and b")
    _require_positive_part(f, "scaledrecip")
    scale = FiniteGroupoid.from_counts({(1, a): b})
    const = constant_species(scale, f.sorts)
    out = const * geom_inverse(const * f)
    out.name = "scaledrecip(%d,%d,%s)" % (a, b, f.name)
    return out


def binomial_power(a: int, b: int) -> Species:
    """Signed rising-factorial species decategorifying (1 + x)^(-a/b).

    At size n the value is the increasing factorial of a copies of the
    one-object groupoid with b automorphisms, graded by the parity of n.
    """
    if a < 1 or b < 1:
        raise DomainError("binomial power needs positive a and b")
    base = FiniteGroupoid.from_counts({(1, b): a})

    def rule(sizes: SizeVector) -> GradedGroupoid:
        (n,) = sizes
        g = increasing_factorial(base, n)
        return GradedGroupoid(pos=g) if n % 2 == 0 else GradedGroupoid(neg=g)

    return Species(1, rule, "binpow(%d,%d)" % (a, b))


def egf_of(f: Species, order: int) -> TruncatedEGF:
    """Cardinality table of f up to total size `order`."""
    if order < 0:
        raise DomainError("series order must be >= 0")
    coeffs = {key: f.cardinality_at(key) for key in size_keys(f.sorts, order)}
    return TruncatedEGF(f.sorts, order, coeffs)


# -- labeled oracles ------------------------------------------------------


def _tags(sizes: SizeVector) -> list[int]:
    out: list[int] = []
    for sort, n in enumerate(sizes):
        out.extend([sort] * n)
    return out


def _vec_of(block: Iterable[int], tags: Sequence[int], sorts: int) -> SizeVector:
    counts = [0] * sorts
    for idx in block:
        counts[tags[idx - 1]] += 1
    return tuple(counts)


def product_labeled(f: Species, g: Species, sizes) -> GradedGroupoid:
    """Product by explicit enumeration of all label subsets (oracle)."""
    sizes = (sizes,) if isinstance(sizes, int) else tuple(sizes)
    terms = []
    for masks in itertools.product(*[range(1 << n) for n in sizes]):
        left = tuple(bin(m).count("1") for m in masks)
        fv = f.value(left)
        if fv.is_empty:
            continue
        gv = g.value(_vec_sub(sizes, left))
        if gv.is_empty:
            continue
        terms.append(fv * gv)
    return GradedGroupoid.union_all(terms)


def compose_labeled(f: Species, inner: Sequence[Species], sizes) -> GradedGroupoid:
    """Composition by explicit partitions and block colorings (oracle)."""
    sizes = (sizes,) if isinstance(sizes, int) else tuple(sizes)
    total = sum(sizes)
    if total > COMPOSE_CAP:
        raise EnumerationLimitError("compose: total size %d exceeds cap %d" % (total, COMPOSE_CAP))
    s = f.sorts
    t = len(sizes)
    tags = _tags(sizes)
    terms = []
    for partition in enumerate_set_partitions(total):
        vecs = [_vec_of(block, tags, t) for block in partition]
        for colors in itertools.product(range(s), repeat=len(partition)):
            counts = [0] * s
            for c in colors:
                counts[c] += 1
            val = f.value(tuple(counts))
            for vec, c in zip(vecs, colors):
                if val.is_empty:
                    break
                val = val * inner[c].value(vec)
            if not val.is_empty:
                terms.append(val)
    return GradedGroupoid.union_all(terms)


def _ordered_set_compositions(
    indices: tuple[int, ...]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not indices:
        yield ()
        return
    m = len(indices)
    for mask in range(1, 1 << m):
        block = tuple(indices[i] for i in range(m) if mask >> i & 1)
        rest = tuple(indices[i] for i in range(m) if not mask >> i & 1)
        for tail in _ordered_set_compositions(rest):
            yield (block,) + tail


def geom_inverse_labeled(f: Species, sizes) -> GradedGroupoid:
    """Geometric inverse by explicit ordered set compositions (oracle)."""
    sizes = (sizes,) if isinstance(sizes, int) else tuple(sizes)
    total = sum(sizes)
    if total > COMPOSE_CAP:
        raise EnumerationLimitError(
            "geominv oracle: total size %d exceeds cap %d" % (total, COMPOSE_CAP)
        )
    t = len(sizes)
    tags = _tags(sizes)
    terms = []
    for blocks in _ordered_set_compositions(tuple(range(1, total + 1))):
        val = GRADED_UNIT
        for block in blocks:
            if val.is_empty:
                break
            val = val * f.value(_vec_of(block, tags, t))
        if val.is_empty:
            continue
        terms.append(val if len(blocks) % 2 == 0 else -val)
    return GradedGroupoid.union_all(terms)
