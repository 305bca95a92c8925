"""Finite commutative monoids given by Cayley tables.

Elements are dense ids ``0..size-1``; subsets are int bitmasks throughout
(the 2^|M| enumerations need O(1) membership).  A monoid may carry an
explicit annihilating element ("zero"); it is declared by the caller and
verified, never auto-detected.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from . import kernels
from .bits import iter_bits, mask_of
from .config import check_enum_cap
from .errors import (
    BadIdentity,
    BadZero,
    CarrierMismatch,
    IndexOutOfRange,
    NoZeroElement,
    NonAssociative,
    NonCommutative,
    NotAFilter,
    ShapeError,
    SizeOverflow,
)

TABLE_CAP = 512  # largest carrier for which tables are materialized


class UndeclaredZeroWarning(UserWarning):
    """An annihilator exists but the input did not declare it."""


@dataclass(frozen=True)
class FiniteMonoid:
    """Validated commutative monoid.  Immutable; safe to share."""

    size: int
    table: tuple[int, ...]  # flat, row-major: table[x*size + y] = x*y
    one: int
    zero: int | None = None
    name: str = ""

    def mul(self, x: int, y: int) -> int:
        return self.table[x * self.size + y]

    def pow(self, f: int, n: int) -> int:
        acc = self.one
        for _ in range(n):
            acc = self.mul(acc, f)
        return acc

    def elements(self) -> range:
        return range(self.size)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @cached_property
    def divisor_masks(self) -> tuple[int, ...]:
        return tuple(kernels.divisor_masks(self.size, list(self.table)))

    def divides(self, g: int, f: int) -> bool:
        """True iff some a satisfies g*a == f."""
        if not (0 <= g < self.size and 0 <= f < self.size):
            raise IndexOutOfRange(f"element out of range: {g}, {f}", g=g, f=f, size=self.size)
        return bool(self.divisor_masks[f] >> g & 1)

    @cached_property
    def units(self) -> int:
        """Bitmask of invertible elements; always a filter."""
        return self.divisor_masks[self.one]

    @cached_property
    def idempotents(self) -> int:
        return mask_of(x for x in self.elements() if self.mul(x, x) == x)

    def nonzerodivisors(self) -> int:
        """Bitmask of f with f*g == 0 only for g == 0.  Needs a zero."""
        if self.zero is None:
            raise NoZeroElement("monoid has no declared zero", name=self.name)
        z = self.zero
        out = 0
        for f in self.elements():
            row = f * self.size
            if all(self.table[row + g] != z or g == z for g in self.elements()):
                out |= 1 << f
        return out

    def is_nilpotent(self, f: int) -> bool:
        if self.zero is None:
            return False
        acc = f
        for _ in range(self.size):
            if acc == self.zero:
                return True
            acc = self.mul(acc, f)
        return acc == self.zero

    def is_reduced(self) -> bool:
        """No nilpotents besides the zero itself."""
        if self.zero is None:
            return True
        return all(not self.is_nilpotent(f) for f in self.elements() if f != self.zero)

    def __repr__(self) -> str:
        label = self.name or f"{self.size} elements"
        return f"FiniteMonoid({label})"


def validate_monoid(
    raw_table: Sequence[Sequence[int]],
    one: int,
    zero: int | None = None,
    name: str = "",
    warn_undeclared_zero: bool = True,
) -> FiniteMonoid:
    """Check the monoid laws and return the validated structure.

    Raises a structured error naming the first violated law; an existing
    annihilator without a declared zero is only warned about.
    """
    size = len(raw_table)
    if size == 0:
        raise ShapeError("empty table")
    flat: list[int] = []
    for x, row in enumerate(raw_table):
        if len(row) != size:
            raise ShapeError(f"row {x} has length {len(row)}, expected {size}", row=x)
        for y, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < size:
                raise ShapeError(f"entry ({x},{y}) = {v!r} out of range", x=x, y=y, value=v)
            flat.append(v)
    if not 0 <= one < size:
        raise BadIdentity(f"identity id {one} out of range", one=one)

    for x in range(size):
        if flat[one * size + x] != x:
            raise BadIdentity(f"{one}*{x} != {x}", one=one, x=x)
    for x in range(size):
        for y in range(x + 1, size):
            if flat[x * size + y] != flat[y * size + x]:
                raise NonCommutative(f"{x}*{y} != {y}*{x}", x=x, y=y)
    for x in range(size):
        for y in range(size):
            xy = flat[x * size + y]
            for z in range(size):
                if flat[xy * size + z] != flat[x * size + flat[y * size + z]]:
                    raise NonAssociative(f"({x}*{y})*{z} != {x}*({y}*{z})", x=x, y=y, z=z)

    annihilators = [z for z in range(size) if all(flat[z * size + x] == z for x in range(size))]
    if zero is not None:
        if not 0 <= zero < size:
            raise BadZero(f"zero id {zero} out of range", zero=zero)
        if annihilators != [zero]:
            raise BadZero(f"declared zero {zero} is not the annihilator", zero=zero, annihilators=annihilators)
    elif annihilators and warn_undeclared_zero:
        warnings.warn(
            f"monoid {name or size} has annihilator {annihilators[0]} but no declared zero",
            UndeclaredZeroWarning,
            stacklevel=2,
        )

    return FiniteMonoid(size=size, table=tuple(flat), one=one, zero=zero, name=name)


@dataclass(frozen=True)
class MonoidHom:
    """Validated morphism; ``mapping[x]`` is the image of x."""

    source: FiniteMonoid
    target: FiniteMonoid
    mapping: tuple[int, ...]
    name: str = ""
    preserves_zero: bool = field(default=False, compare=False)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image_mask(self, mask: int) -> int:
        return mask_of(self.mapping[x] for x in iter_bits(mask))

    def preimage_mask(self, mask: int) -> int:
        return mask_of(x for x in self.source.elements() if mask >> self.mapping[x] & 1)

    def compose(self, inner: "MonoidHom") -> "MonoidHom":
        """self ∘ inner (apply inner first)."""
        if inner.target is not self.source and inner.target != self.source:
            raise CarrierMismatch("composition carriers do not match")
        return monoid_hom(inner.source, self.target, [self.mapping[inner.mapping[x]] for x in inner.source.elements()])


def monoid_hom(source: FiniteMonoid, target: FiniteMonoid, mapping: Sequence[int], name: str = "") -> MonoidHom:
    if len(mapping) != source.size:
        raise ShapeError(f"map has length {len(mapping)}, expected {source.size}")
    for x, v in enumerate(mapping):
        if not 0 <= v < target.size:
            raise IndexOutOfRange(f"map[{x}] = {v} out of range", x=x, value=v)
    if mapping[source.one] != target.one:
        raise BadIdentity("map does not send identity to identity")
    for x in source.elements():
        for y in range(x, source.size):
            if mapping[source.mul(x, y)] != target.mul(mapping[x], mapping[y]):
                raise ShapeError(f"map({x}*{y}) != map({x})*map({y})", x=x, y=y)
    preserves = (
        source.zero is not None
        and target.zero is not None
        and mapping[source.zero] == target.zero
    )
    return MonoidHom(source, target, tuple(mapping), name=name, preserves_zero=preserves)


def identity_hom(monoid: FiniteMonoid) -> MonoidHom:
    return monoid_hom(monoid, monoid, list(monoid.elements()), name="id")


def product_monoid(m1: FiniteMonoid, m2: FiniteMonoid) -> tuple[FiniteMonoid, MonoidHom, MonoidHom]:
    """Componentwise product; pair (i1, i2) gets id i1*|M2| + i2.

    Returns the product together with the two projections.
    """
    size = m1.size * m2.size
    if size > TABLE_CAP:
        raise SizeOverflow(f"product size {size} exceeds {TABLE_CAP}", size=size)
    n2 = m2.size
    table = [0] * (size * size)
    for a1 in m1.elements():
        for a2 in m2.elements():
            a = a1 * n2 + a2
            for b1 in m1.elements():
                row1 = m1.table[a1 * m1.size + b1] * n2
                arow = a * size + b1 * n2
                a2row = a2 * n2
                for b2 in m2.elements():
                    table[arow + b2] = row1 + m2.table[a2row + b2]
    zero = None
    if m1.zero is not None and m2.zero is not None:
        zero = m1.zero * n2 + m2.zero
    name = f"{m1.name}x{m2.name}" if m1.name and m2.name else ""
    product = FiniteMonoid(size=size, table=tuple(table), one=m1.one * n2 + m2.one, zero=zero, name=name)
    p1 = monoid_hom(product, m1, [i // n2 for i in range(size)], name="pr1")
    p2 = monoid_hom(product, m2, [i % n2 for i in range(size)], name="pr2")
    return product, p1, p2


def _filter_mask(monoid: FiniteMonoid, members) -> int:
    """Accept a Filter-like object or a raw mask; verify the axioms."""
    mask = getattr(members, "members", members)
    if not isinstance(mask, int):
        raise NotAFilter(f"expected a filter or bitmask, got {type(members).__name__}")
    if not kernels.is_filter_mask(monoid.size, list(monoid.table), monoid.one, list(monoid.divisor_masks), mask):
        raise NotAFilter("subset violates the filter axioms", members=mask)
    return mask


def fraction_monoid(monoid: FiniteMonoid, filt) -> tuple[FiniteMonoid, MonoidHom]:
    """Localization at a filter: pairs (a, f) with f in the filter, where
    (a, f) ~ (b, g) iff a*g*h == b*f*h for some h in the filter.

    The canonical representative of a class is its lexicographically
    smallest pair.  The map a -> [a, 1] makes every filter element a unit.
    """
    fmask = _filter_mask(monoid, filt)
    denominators = list(iter_bits(fmask))
    pairs = [(a, f) for a in monoid.elements() for f in denominators]
    index = {p: i for i, p in enumerate(pairs)}

    def equivalent(p: tuple[int, int], q: tuple[int, int]) -> bool:
        a, f = p
        b, g = q
        left = monoid.mul(a, g)
        right = monoid.mul(b, f)
        return any(monoid.mul(left, h) == monoid.mul(right, h) for h in denominators)

    parent = list(range(len(pairs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, p in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            ri, rj = find(i), find(j)
            if ri != rj and equivalent(p, pairs[j]):
                parent[max(ri, rj)] = min(ri, rj)

    roots = sorted({find(i) for i in range(len(pairs))})
    class_of = {i: roots.index(find(i)) for i in range(len(pairs))}
    size = len(roots)
    table = [0] * (size * size)
    for ci, root_i in enumerate(roots):
        a, f = pairs[root_i]
        for cj, root_j in enumerate(roots):
            b, g = pairs[root_j]
            table[ci * size + cj] = class_of[index[(monoid.mul(a, b), monoid.mul(f, g))]]
    one = class_of[index[(monoid.one, monoid.one)]]
    zero = None
    if monoid.zero is not None:
        zero = class_of[index[(monoid.zero, monoid.one)]]
        if zero == one:
            # inverting the zero collapses everything; 0 = 1 is allowed
            pass
    result = validate_monoid(
        [[table[i * size + j] for j in range(size)] for i in range(size)],
        one=one,
        zero=zero,
        name=f"{monoid.name}_loc" if monoid.name else "",
        warn_undeclared_zero=False,  # zero status is inherited, not user input
    )
    hom = monoid_hom(monoid, result, [class_of[index[(a, monoid.one)]] for a in monoid.elements()], name="loc")
    for f in denominators:
        if not result.units >> hom(f) & 1:
            raise AssertionError("localized filter element is not a unit")  # unreachable
    return result, hom


def principal_filter_mask(monoid: FiniteMonoid, f: int) -> int:
    """Smallest filter containing f (all divisors of powers of f)."""
    return kernels.close_filter(
        monoid.size, list(monoid.table), monoid.one, list(monoid.divisor_masks), 1 << f
    )


def principal_quotient(monoid: FiniteMonoid) -> tuple[FiniteMonoid, MonoidHom]:
    """Quotient identifying elements with the same principal filter.

    The induced table is verified to be well defined before the quotient
    is returned; the projection is surjective by construction.
    """
    check_enum_cap(monoid.size, "principal_quotient")
    principal = [principal_filter_mask(monoid, f) for f in monoid.elements()]
    reps: list[int] = []
    class_ids: list[int] = []
    seen: dict[int, int] = {}
    for f in monoid.elements():
        key = principal[f]
        if key not in seen:
            seen[key] = len(reps)
            reps.append(f)
        class_ids.append(seen[key])

    size = len(reps)
    table = [[class_ids[monoid.mul(a, b)] for b in reps] for a in reps]
    for f in monoid.elements():
        for g in monoid.elements():
            if class_ids[monoid.mul(f, g)] != table[class_ids[f]][class_ids[g]]:
                raise AssertionError("principal-filter quotient table not well defined")
    zero = class_ids[monoid.zero] if monoid.zero is not None else None
    quotient = validate_monoid(table, one=class_ids[monoid.one], zero=zero,
                               name=f"{monoid.name}~" if monoid.name else "",
                               warn_undeclared_zero=False)
    return quotient, monoid_hom(monoid, quotient, class_ids, name="principal-quotient")


def submonoid(monoid: FiniteMonoid, mask: int, name: str = "") -> tuple[FiniteMonoid, MonoidHom]:
    """The submonoid on a product-closed subset containing the identity,
    together with its inclusion."""
    members = list(iter_bits(mask))
    if monoid.one not in members:
        raise BadIdentity("submonoid must contain the identity")
    pos = {f: i for i, f in enumerate(members)}
    table = []
    for f in members:
        row = []
        for g in members:
            p = monoid.mul(f, g)
            if p not in pos:
                raise ShapeError(f"subset not closed: {f}*{g} = {p}", f=f, g=g)
            row.append(pos[p])
        table.append(row)
    zero = pos.get(monoid.zero) if monoid.zero is not None and monoid.zero in pos else None
    sub = validate_monoid(table, one=pos[monoid.one], zero=zero, name=name)
    return sub, monoid_hom(sub, monoid, members, name="incl")


def _signature(monoid: FiniteMonoid, f: int) -> tuple:
    powers = []
    acc = f
    seen = {}
    while acc not in seen:
        seen[acc] = len(powers)
        powers.append(acc)
        acc = monoid.mul(acc, f)
    row = sorted(monoid.table[f * monoid.size + g] == f for g in monoid.elements())
    return (
        len(powers),
        seen[acc],
        monoid.mul(f, f) == f,
        bool(monoid.units >> f & 1),
        f == monoid.zero,
        tuple(row),
    )


def find_isomorphism(m1: FiniteMonoid, m2: FiniteMonoid) -> list[int] | None:
    """Backtracking search for a table bijection; None if not isomorphic."""
    if m1.size != m2.size:
        return None
    sig1 = [_signature(m1, f) for f in m1.elements()]
    sig2 = [_signature(m2, f) for f in m2.elements()]
    if sorted(sig1) != sorted(sig2):
        return None
    candidates = [[g for g in m2.elements() if sig2[g] == sig1[f]] for f in m1.elements()]
    assign: list[int] = [-1] * m1.size
    used = [False] * m2.size

    order = sorted(m1.elements(), key=lambda f: len(candidates[f]))

    def consistent(f: int) -> bool:
        # checked after assign[f] is tentatively set, so f*f is covered
        g = assign[f]
        for x in m1.elements():
            gx = assign[x]
            if gx < 0:
                continue
            p = m1.mul(f, x)
            q = m2.mul(g, gx)
            if assign[p] >= 0:
                if assign[p] != q:
                    return False
            elif used[q]:
                return False
        return True

    def complete() -> bool:
        return all(
            assign[m1.mul(x, y)] == m2.mul(assign[x], assign[y])
            for x in m1.elements()
            for y in range(x, m1.size)
        )

    def backtrack(k: int) -> bool:
        if k == len(order):
            return complete()
        f = order[k]
        for g in candidates[f]:
            if used[g]:
                continue
            assign[f] = g
            used[g] = True
            if consistent(f) and backtrack(k + 1):
                return True
            assign[f] = -1
            used[g] = False
        return False

    if backtrack(0):
        return list(assign)
    return None
