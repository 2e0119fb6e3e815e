"""Skeletal finite groupoids, signed (graded) pairs, and group actions.

A finite groupoid is kept in skeletal form: a multiset of connected
components, each reduced to (object count, automorphism-group order).  That
data is exactly what cardinality and every construction here depend on.
Component multiplicities are bignums, never expanded lists, because replicated
unions grow multinomially fast.  All values are immutable and hashable.

Cardinality assigns each component 1/aut_order (one isomorphism class per
component) and adds up; a graded pair (pos, neg) has cardinality
|pos| - |neg|, which is how negative rationals arise.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .numeric import DomainError, EnumerationLimitError

__all__ = [
    "Component",
    "FiniteGroupoid",
    "GradedGroupoid",
    "GroupAction",
    "EMPTY",
    "UNIT",
    "GRADED_EMPTY",
    "GRADED_UNIT",
    "POWER_QUOTIENT_CAP",
    "CLOSURE_CAP",
    "cardinality",
    "discrete",
    "cyclic",
    "group_of_order",
    "symmetric_power",
    "named_groupoid",
    "quotient",
    "power_quotient",
    "increasing_factorial",
    "finite_from_json",
    "groupoid_from_json",
    "action_from_json",
]

POWER_QUOTIENT_CAP = 100_000
CLOSURE_CAP = 10_000


class Component(NamedTuple):
    """One connected component: object count and automorphism order."""

    object_count: int
    aut_order: int


def _normalize(pairs: Iterable[tuple[Sequence[int], int]]) -> tuple[tuple[Component, int], ...]:
    acc: dict[Component, int] = {}
    for comp, count in pairs:
        k, a = comp
        if k < 1 or a < 1:
            raise DomainError("component (%r, %r) must have positive entries" % (k, a))
        if count < 0:
            raise DomainError("negative component multiplicity")
        if count:
            key = Component(int(k), int(a))
            acc[key] = acc.get(key, 0) + int(count)
    return tuple(sorted(acc.items()))


class FiniteGroupoid:
    """Multiset of components; the empty multiset is the empty groupoid."""

    __slots__ = ("_parts", "_card")

    def __init__(self, components: Iterable[Sequence[int]] = ()):
        self._parts = _normalize((c, 1) for c in components)
        self._card: Fraction | None = None

    @classmethod
    def from_counts(
        cls, pairs: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]]
    ) -> "FiniteGroupoid":
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        g = cls.__new__(cls)
        g._parts = _normalize(items)
        g._card = None
        return g

    @property
    def parts(self) -> tuple[tuple[Component, int], ...]:
        """Sorted ((object_count, aut_order), multiplicity) pairs."""
        return self._parts

    @property
    def is_empty(self) -> bool:
        return not self._parts

    def cardinality(self) -> Fraction:
        if self._card is None:
            total = Fraction(0)
            for comp, count in self._parts:
                total += Fraction(count, comp.aut_order)
            self._card = total
        return self._card

    def disjoint_union(self, other: "FiniteGroupoid") -> "FiniteGroupoid":
        if not self._parts:
            return other
        if not other._parts:
            return self
        acc = dict(self._parts)
        for comp, count in other._parts:
            acc[comp] = acc.get(comp, 0) + count
        return FiniteGroupoid.from_counts(acc)

    __add__ = disjoint_union

    @staticmethod
    def union_all(items: Iterable["FiniteGroupoid"]) -> "FiniteGroupoid":
        acc: dict[Component, int] = {}
        for g in items:
            for comp, count in g._parts:
                acc[comp] = acc.get(comp, 0) + count
        return FiniteGroupoid.from_counts(acc)

    def product(self, other: "FiniteGroupoid") -> "FiniteGroupoid":
        acc: dict[Component, int] = {}
        for (c1, n1) in self._parts:
            for (c2, n2) in other._parts:
                comp = Component(c1.object_count * c2.object_count, c1.aut_order * c2.aut_order)
                acc[comp] = acc.get(comp, 0) + n1 * n2
        return FiniteGroupoid.from_counts(acc)

    __mul__ = product

    def replicate(self, m: int) -> "FiniteGroupoid":
        """Disjoint union of m copies."""
        if m < 0:
            raise DomainError("replicate needs m >= 0")
        if m == 0 or not self._parts:
            return EMPTY
        if m == 1:
            return self
        return FiniteGroupoid.from_counts((comp, count * m) for comp, count in self._parts)

    def inertia(self) -> "FiniteGroupoid":
        """Split every component (k, a) into k copies of (1, a)."""
        acc: dict[Component, int] = {}
        for comp, count in self._parts:
            key = Component(1, comp.aut_order)
            acc[key] = acc.get(key, 0) + count * comp.object_count
        return FiniteGroupoid.from_counts(acc)

    def to_json(self) -> dict:
        """Expanded {"components": [[k, a], ...]} listing."""
        out = []
        for comp, count in self._parts:
            out.extend([comp.object_count, comp.aut_order] for _ in range(count))
        return {"components": out}

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroupoid) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        if not self._parts:
            return "FiniteGroupoid()"
        bits = ", ".join(
            "(%d,%d)x%d" % (c.object_count, c.aut_order, n) for c, n in self._parts
        )
        return "FiniteGroupoid<%s>" % bits


EMPTY = FiniteGroupoid()
UNIT = FiniteGroupoid([(1, 1)])


class GradedGroupoid:
    """Pair (pos, neg) of finite groupoids; cardinality |pos| - |neg|.

    No cancellation is ever applied: (pos, neg) is a formal difference and
    equality is structural on both halves.
    """

    __slots__ = ("pos", "neg")

    def __init__(self, pos: FiniteGroupoid = EMPTY, neg: FiniteGroupoid = EMPTY):
        if not isinstance(pos, FiniteGroupoid) or not isinstance(neg, FiniteGroupoid):
            raise DomainError("graded groupoid halves must be finite groupoids")
        self.pos = pos
        self.neg = neg

    @classmethod
    def positive(cls, g: "FiniteGroupoid | GradedGroupoid") -> "GradedGroupoid":
        if isinstance(g, GradedGroupoid):
            return g
        return cls(pos=g)

    @property
    def is_empty(self) -> bool:
        return self.pos.is_empty and self.neg.is_empty

    def cardinality(self) -> Fraction:
        return self.pos.cardinality() - self.neg.cardinality()

    def disjoint_union(self, other: "GradedGroupoid") -> "GradedGroupoid":
        return GradedGroupoid(self.pos + other.pos, self.neg + other.neg)

    __add__ = disjoint_union

    @staticmethod
    def union_all(items: Iterable["GradedGroupoid"]) -> "GradedGroupoid":
        items = list(items)
        return GradedGroupoid(
            FiniteGroupoid.union_all(g.pos for g in items),
            FiniteGroupoid.union_all(g.neg for g in items),
        )

    def product(self, other: "GradedGroupoid") -> "GradedGroupoid":
        # sign rule: like parts multiply into pos, unlike parts into neg
        return GradedGroupoid(
            self.pos * other.pos + self.neg * other.neg,
            self.pos * other.neg + self.neg * other.pos,
        )

    __mul__ = product

    def negate(self) -> "GradedGroupoid":
        return GradedGroupoid(self.neg, self.pos)

    __neg__ = negate

    def replicate(self, m: int) -> "GradedGroupoid":
        return GradedGroupoid(self.pos.replicate(m), self.neg.replicate(m))

    def to_json(self) -> dict:
        return {"pos": self.pos.to_json(), "neg": self.neg.to_json()}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedGroupoid)
            and self.pos == other.pos
            and self.neg == other.neg
        )

    def __hash__(self) -> int:
        return hash((self.pos, self.neg))

    def __repr__(self) -> str:
        return "GradedGroupoid(pos=%r, neg=%r)" % (self.pos, self.neg)


GRADED_EMPTY = GradedGroupoid()
GRADED_UNIT = GradedGroupoid(pos=UNIT)


def cardinality(g: "FiniteGroupoid | GradedGroupoid") -> Fraction:
    """Cardinality of a finite or graded groupoid."""
    if isinstance(g, (FiniteGroupoid, GradedGroupoid)):
        return g.cardinality()
    raise DomainError("cardinality expects a groupoid, got %r" % type(g).__name__)


def discrete(m: int) -> FiniteGroupoid:
    """m isolated objects with trivial automorphisms; cardinality m."""
    if m < 0:
        raise DomainError("discrete groupoid needs m >= 0")
    return FiniteGroupoid.from_counts({(1, 1): m} if m else {})


def cyclic(n: int) -> FiniteGroupoid:
    """One object whose automorphism group is cyclic of order n."""
    if n < 1:
        raise DomainError("cyclic groupoid needs n >= 1")
    return FiniteGroupoid([(1, n)])


def group_of_order(a: int) -> FiniteGroupoid:
    """One object with a automorphisms; cardinality 1/a."""
    if a < 1:
        raise DomainError("group order must be positive")
    return FiniteGroupoid([(1, a)])


def symmetric_power(n: int, power: int) -> FiniteGroupoid:
    """One object with automorphism group of order (n!)**power."""
    if n < 0 or power < 0:
        raise DomainError("symmetric power needs nonnegative parameters")
    return FiniteGroupoid([(1, math.factorial(n) ** power)])


def named_groupoid(name: str, *params: int) -> FiniteGroupoid:
    """Construct a groupoid by name: discrete, cyclic, group, symmetric_power."""
    table = {
        "discrete": (1, discrete),
        "cyclic": (1, cyclic),
        "group": (1, group_of_order),
        "symmetric_power": (2, symmetric_power),
    }
    if name not in table:
        raise DomainError("unknown groupoid name %r" % name)
    arity, builder = table[name]
    if len(params) != arity:
        raise DomainError("%s expects %d parameter(s), got %d" % (name, arity, len(params)))
    return builder(*params)


def _identity(degree: int) -> tuple[int, ...]:
    return tuple(range(1, degree + 1))


def _compose_perm(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply q first, then p
    return tuple(p[q[i] - 1] for i in range(len(p)))


class GroupAction:
    """A permutation group acting on {1..degree}.

    Elements are 1-based image tuples.  Construction validates that the set
    contains the identity and is closed under composition and inverses, so it
    really is a group; the order must divide degree!.
    """

    __slots__ = ("degree", "elements")

    def __init__(self, degree: int, elements: Iterable[Sequence[int]]):
        if degree < 1:
            raise DomainError("group action needs degree >= 1")
        elems = sorted({tuple(int(v) for v in p) for p in elements})
        base = list(range(1, degree + 1))
        for p in elems:
            if sorted(p) != base:
                raise DomainError("element %r is not a permutation of 1..%d" % (p, degree))
        if not elems:
            raise DomainError("group action needs at least the identity")
        eset = set(elems)
        if _identity(degree) not in eset:
            raise DomainError("element list lacks the identity permutation")
        for p in elems:
            inv = [0] * degree
            for i, v in enumerate(p):
                inv[v - 1] = i + 1
            if tuple(inv) not in eset:
                raise DomainError("element list is not closed under inverse")
            for q in elems:
                if _compose_perm(p, q) not in eset:
                    raise DomainError("element list is not closed under composition")
        if math.factorial(degree) % len(elems):
            raise DomainError("group order %d does not divide %d!" % (len(elems), degree))
        self.degree = degree
        self.elements = tuple(elems)

    @classmethod
    def from_generators(
        cls, degree: int, generators: Iterable[Sequence[int]], cap: int = CLOSURE_CAP
    ) -> "GroupAction":
        """Close a generator list under composition (breadth-first)."""
        gens = [tuple(int(v) for v in p) for p in generators]
        seen = {_identity(degree)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = _compose_perm(g, p)
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
                        if len(seen) > cap:
                            raise EnumerationLimitError(
                                "group closure exceeds cap %d" % cap
                            )
            frontier = nxt
        return cls(degree, seen)

    @classmethod
    def symmetric(cls, degree: int) -> "GroupAction":
        if degree < 1:
            raise DomainError("symmetric group needs degree >= 1")
        if math.factorial(degree) > CLOSURE_CAP:
            raise EnumerationLimitError("symmetric group of degree %d is too large" % degree)
        return cls(degree, itertools.permutations(range(1, degree + 1)))

    @classmethod
    def cyclic(cls, degree: int) -> "GroupAction":
        if degree < 1:
            raise DomainError("cyclic group needs degree >= 1")
        base = list(range(1, degree + 1))
        elems = [tuple(base[k:] + base[:k]) for k in range(degree)]
        return cls(degree, elems)

    @classmethod
    def trivial(cls, degree: int) -> "GroupAction":
        return cls(degree, [_identity(degree)])

    def __len__(self) -> int:
        return len(self.elements)

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbits on {1..degree}, each ascending, ordered by least point."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            orbit = {p[start - 1] for p in self.elements}
            seen |= orbit
            out.append(tuple(sorted(orbit)))
        return out

    def __repr__(self) -> str:
        return "GroupAction(degree=%d, order=%d)" % (self.degree, len(self.elements))


def quotient(action: GroupAction) -> FiniteGroupoid:
    """Quotient groupoid of {1..m} by a permutation group.

    Objects are the points; morphisms a -> b are the group elements sending a
    to b.  One component per orbit with automorphism order |G|/|orbit| (the
    stabilizer order), so the cardinality is degree/|G|.
    """
    order = len(action)
    acc: dict[tuple[int, int], int] = {}
    for orbit in action.orbits():
        size = len(orbit)
        stab, rem = divmod(order, size)
        if rem:
            raise DomainError("orbit size %d does not divide group order %d" % (size, order))
        acc[(size, stab)] = acc.get((size, stab), 0) + 1
    return FiniteGroupoid.from_counts(acc)


def power_quotient(
    n: int, k: int, action: GroupAction, cap: int = POWER_QUOTIENT_CAP
) -> FiniteGroupoid:
    """Quotient of the tuple space {1..n}^k by a group permuting coordinates."""
    if n < 1 or k < 1:
        raise DomainError("power quotient needs n >= 1 and k >= 1")
    if action.degree != k:
        raise DomainError("action degree %d does not match k=%d" % (action.degree, k))
    if n ** k > cap:
        raise EnumerationLimitError("power quotient: %d^%d exceeds cap %d" % (n, k, cap))
    elems = action.elements
    order = len(elems)
    seen: set[tuple[int, ...]] = set()
    acc: dict[tuple[int, int], int] = {}
    for t in itertools.product(range(n), repeat=k):
        if t in seen:
            continue
        orbit = {tuple(t[p[i] - 1] for i in range(k)) for p in elems}
        seen |= orbit
        size = len(orbit)
        comp = (size, order // size)
        acc[comp] = acc.get(comp, 0) + 1
    return FiniteGroupoid.from_counts(acc)


def increasing_factorial(g: FiniteGroupoid, n: int) -> FiniteGroupoid:
    """g x (g + [1]) x ... x (g + [n-1]); the empty product (unit) for n=0.

    Cardinality is the rising factorial |g| (|g|+1) ... (|g|+n-1).
    """
    if n < 0:
        raise DomainError("increasing factorial needs n >= 0")
    out = UNIT
    for i in range(n):
        out = out * (g + discrete(i))
    return out


def finite_from_json(obj) -> FiniteGroupoid:
    if not isinstance(obj, dict) or "components" not in obj:
        raise DomainError("groupoid JSON needs a \"components\" list")
    comps = obj["components"]
    if not isinstance(comps, list):
        raise DomainError("\"components\" must be a list of [k, a] pairs")
    parsed = []
    for entry in comps:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise DomainError("component %r is not a [k, a] pair" % (entry,))
        parsed.append((entry[0], entry[1]))
    return FiniteGroupoid(parsed)


def groupoid_from_json(obj) -> "FiniteGroupoid | GradedGroupoid":
    """Parse either a plain {"components": ...} or a {"pos":, "neg":} pair."""
    if isinstance(obj, dict) and "pos" in obj and "neg" in obj:
        return GradedGroupoid(finite_from_json(obj["pos"]), finite_from_json(obj["neg"]))
    return finite_from_json(obj)


def action_from_json(obj) -> GroupAction:
    """Parse {"degree": m, "elements": [...]} or {"degree": m, "generators": [...]}."""
    if not isinstance(obj, dict) or "degree" not in obj:
        raise DomainError("action JSON needs a \"degree\" field")
    degree = obj["degree"]
    if not isinstance(degree, int):
        raise DomainError("\"degree\" must be an integer")
    if "elements" in obj:
        return GroupAction(degree, obj["elements"])
    if "generators" in obj:
        return GroupAction.from_generators(degree, obj["generators"])
    raise DomainError("action JSON needs \"elements\" or \"generators\"")
