"""Finite commutative rings viewed through their multiplicative monoids.

Prime ideals and filters determine each other by complements; the module
provides both directions together with the ultrafilter/minimal-prime and
boolean-ring correspondences, and fixness of filters modulo an ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from .bits import bits_list, is_subset, iter_bits, mask_of
from .errors import (
    BadIdentity,
    NotAFilter,
    NotAnIdeal,
    NotBoolean,
    ShapeError,
    ZeroRing,
)
from .filters import Filter, FilterFamily, all_filters, generate, ultrafilters
from .monoid import FiniteMonoid, MonoidHom, monoid_hom, validate_monoid


@dataclass(frozen=True)
class FiniteRing:
    size: int
    add: tuple[int, ...]
    mul: tuple[int, ...]
    zero: int
    one: int
    name: str = ""

    def plus(self, x: int, y: int) -> int:
        return self.add[x * self.size + y]

    def times(self, x: int, y: int) -> int:
        return self.mul[x * self.size + y]

    @cached_property
    def neg(self) -> tuple[int, ...]:
        out = [0] * self.size
        for x in range(self.size):
            for y in range(self.size):
                if self.plus(x, y) == self.zero:
                    out[x] = y
                    break
        return tuple(out)

    def minus(self, x: int, y: int) -> int:
        return self.plus(x, self.neg[y])

    def is_boolean(self) -> bool:
        return all(self.times(x, x) == x for x in range(self.size))

    def nilradical(self) -> int:
        out = 0
        for x in range(self.size):
            acc = x
            for _ in range(self.size):
                if acc == self.zero:
                    out |= 1 << x
                    break
                acc = self.times(acc, x)
        return out

    def __repr__(self) -> str:
        return f"FiniteRing({self.name or self.size})"


def validate_ring(add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]], name: str = "") -> FiniteRing:
    """Abelian group under +, commutative unital monoid under *, and
    distributivity; zero and one are derived from the tables."""
    size = len(add)
    if size == 0 or len(mul) != size:
        raise ShapeError("tables must be square and equally sized")
    flat_add: list[int] = []
    flat_mul: list[int] = []
    for table, flat in ((add, flat_add), (mul, flat_mul)):
        for x, row in enumerate(table):
            if len(row) != size:
                raise ShapeError(f"row {x} has length {len(row)}, expected {size}", row=x)
            for v in row:
                if not isinstance(v, int) or not 0 <= v < size:
                    raise ShapeError(f"entry {v!r} out of range", value=v)
                flat.append(v)

    zeros = [z for z in range(size) if all(flat_add[z * size + x] == x for x in range(size))]
    if len(zeros) != 1:
        raise BadIdentity("additive identity missing or ambiguous", candidates=zeros)
    zero = zeros[0]
    ones = [o for o in range(size) if all(flat_mul[o * size + x] == x for x in range(size))]
    if len(ones) != 1:
        raise BadIdentity("multiplicative identity missing or ambiguous", candidates=ones)
    one = ones[0]

    for x in range(size):
        if not any(flat_add[x * size + y] == zero for y in range(size)):
            raise ShapeError(f"element {x} has no additive inverse", x=x)
    for x in range(size):
        for y in range(x, size):
            if flat_add[x * size + y] != flat_add[y * size + x]:
                raise ShapeError(f"addition not commutative at ({x},{y})", x=x, y=y)
            if flat_mul[x * size + y] != flat_mul[y * size + x]:
                raise ShapeError(f"multiplication not commutative at ({x},{y})", x=x, y=y)
    for x in range(size):
        for y in range(size):
            xy_a = flat_add[x * size + y]
            xy_m = flat_mul[x * size + y]
            for z in range(size):
                if flat_add[xy_a * size + z] != flat_add[x * size + flat_add[y * size + z]]:
                    raise ShapeError(f"addition not associative at ({x},{y},{z})")
                if flat_mul[xy_m * size + z] != flat_mul[x * size + flat_mul[y * size + z]]:
                    raise ShapeError(f"multiplication not associative at ({x},{y},{z})")
                if flat_mul[x * size + flat_add[y * size + z]] != flat_add[xy_m * size + flat_mul[x * size + z]]:
                    raise ShapeError(f"distributivity fails at ({x},{y},{z})", x=x, y=y, z=z)

    return FiniteRing(size, tuple(flat_add), tuple(flat_mul), zero, one, name)


def zmod_ring(n: int) -> FiniteRing:
    return validate_ring(
        [[(a + b) % n for b in range(n)] for a in range(n)],
        [[(a * b) % n for b in range(n)] for a in range(n)],
        name=f"Z/{n}",
    )


def product_ring(r1: FiniteRing, r2: FiniteRing) -> FiniteRing:
    """Componentwise operations; pair (i, j) gets id i*|R2| + j."""
    n2 = r2.size
    size = r1.size * n2

    def paired(table1, table2):
        out = []
        for a1 in range(r1.size):
            for a2 in range(n2):
                row = []
                for b1 in range(r1.size):
                    v1 = table1[a1 * r1.size + b1] * n2
                    for b2 in range(n2):
                        row.append(v1 + table2[a2 * n2 + b2])
                out.append(row)
        return out

    name = f"{r1.name}x{r2.name}" if r1.name and r2.name else ""
    return validate_ring(paired(r1.add, r2.add), paired(r1.mul, r2.mul), name=name)


def boolean_ring(k: int) -> FiniteRing:
    ring = zmod_ring(2)
    for _ in range(k - 1):
        ring = product_ring(ring, zmod_ring(2))
    return validate_ring(
        [[ring.add[x * ring.size + y] for y in range(ring.size)] for x in range(ring.size)],
        [[ring.mul[x * ring.size + y] for y in range(ring.size)] for x in range(ring.size)],
        name=f"(Z/2)^{k}",
    )


@lru_cache(maxsize=None)
def mult_monoid(ring: FiniteRing) -> FiniteMonoid:
    """Forget addition; the declared zero is the ring zero."""
    table = [[ring.times(x, y) for y in range(ring.size)] for x in range(ring.size)]
    return validate_monoid(table, one=ring.one, zero=ring.zero, name=ring.name or "ring")


# -- ideals -------------------------------------------------------------------


def is_ideal(ring: FiniteRing, mask: int) -> bool:
    if not mask >> ring.zero & 1:
        return False
    members = bits_list(mask)
    for x in members:
        for y in members:
            if not mask >> ring.plus(x, y) & 1:
                return False
        for m in range(ring.size):
            if not mask >> ring.times(x, m) & 1:
                return False
    return True


def ideal_closure(ring: FiniteRing, seed: int) -> int:
    mask = seed | 1 << ring.zero
    changed = True
    while changed:
        changed = False
        members = bits_list(mask)
        for x in members:
            for y in members:
                s = ring.plus(x, y)
                if not mask >> s & 1:
                    mask |= 1 << s
                    changed = True
            for m in range(ring.size):
                p = ring.times(x, m)
                if not mask >> p & 1:
                    mask |= 1 << p
                    changed = True
    return mask


def all_ideals(ring: FiniteRing, oracle: bool = False) -> list[int]:
    """Closure enumeration (default) or the 2^|R| subset oracle."""
    if oracle:
        return [m for m in range(1 << ring.size) if is_ideal(ring, m)]
    bottom = 1 << ring.zero
    family = {bottom}
    queue = [bottom]
    while queue:
        current = queue.pop()
        for x in range(ring.size):
            if current >> x & 1:
                continue
            grown = ideal_closure(ring, current | 1 << x)
            if grown not in family:
                family.add(grown)
                queue.append(grown)
    return sorted(family)


def prime_ideals(ring: FiniteRing) -> list[int]:
    """Proper ideals with multiplicatively closed complement."""
    primes = []
    for ideal in all_ideals(ring):
        if ideal >> ring.one & 1:
            continue
        outside = bits_list(((1 << ring.size) - 1) & ~ideal)
        if all(not ideal >> ring.times(x, y) & 1 for x in outside for y in outside):
            primes.append(ideal)
    return primes


def minimal_primes_over(ring: FiniteRing, ideal_mask: int) -> list[int]:
    over = [p for p in prime_ideals(ring) if is_subset(ideal_mask, p)]
    return [p for p in over if not any(q != p and is_subset(q, p) for q in over)]


def filter_complement_decomposition(ring: FiniteRing, filt: Filter) -> list[int]:
    """Primes whose union is the filter complement (the canonical choice:
    every prime avoiding the filter)."""
    monoid = mult_monoid(ring)
    if filt.carrier != monoid:
        raise NotAFilter("filter does not live on the multiplicative monoid")
    complement = monoid.full_mask & ~filt.members
    chosen = [p for p in prime_ideals(ring) if not p & filt.members]
    union = 0
    for p in chosen:
        union |= p
    if union != complement:
        raise AssertionError("complement is not a union of primes")  # unreachable
    return chosen


def union_complement_is_filter(ring: FiniteRing, primes: Sequence[int]) -> Filter:
    """The complement of a union of primes, as a (checked) filter."""
    from .filters import is_filter

    union = 0
    for p in primes:
        union |= p
    monoid = mult_monoid(ring)
    mask = monoid.full_mask & ~union
    check = is_filter(monoid, mask)
    if not check:
        raise NotAFilter("complement of the prime union fails the axioms", axiom=check.axiom)
    return Filter(monoid, mask)


def minimal_prime_ultrafilter_duality(ring: FiniteRing) -> list[tuple[int, int]]:
    """Pairs (ultrafilter mask, minimal prime mask) under complement."""
    if ring.size == 1:
        raise ZeroRing("the zero ring has no ultrafilters")
    monoid = mult_monoid(ring)
    ultra = ultrafilters(monoid)
    minimal = minimal_primes_over(ring, 1 << ring.zero)
    full = monoid.full_mask
    pairs = []
    for m in ultra.masks:
        complement = full & ~m
        if complement not in minimal:
            raise AssertionError("ultrafilter complement is not a minimal prime")
        pairs.append((m, complement))
    if len(pairs) != len(minimal):
        raise AssertionError("duality is not onto the minimal primes")
    return pairs


# -- boolean rings ------------------------------------------------------------


def inner_complement(ring: FiniteRing, mask: int) -> int:
    """e ↦ 1 - e applied elementwise."""
    return mask_of(ring.minus(ring.one, e) for e in iter_bits(mask))


def boolean_ideal_filter_correspondence(ring: FiniteRing) -> list[tuple[int, int]]:
    """Mutually inverse bijection ideals ↔ filters via e ↦ 1-e."""
    if not ring.is_boolean():
        raise NotBoolean("ring is not boolean")
    monoid = mult_monoid(ring)
    filters = set(all_filters(monoid).masks)
    ideals = all_ideals(ring)
    pairs = []
    for a in ideals:
        f = inner_complement(ring, a)
        if f not in filters:
            raise AssertionError("image of an ideal is not a filter")
        if inner_complement(ring, f) != a:
            raise AssertionError("inner complement does not invert")
        pairs.append((a, f))
    if len(ideals) != len(filters):
        raise AssertionError("ideal and filter counts differ")
    return pairs


def boolean_ultrafilter_criterion(ring: FiniteRing, filt: Filter) -> bool:
    """Exactly one of e, 1-e belongs, for every element."""
    return all(
        (e in filt) != (ring.minus(ring.one, e) in filt)
        for e in range(ring.size)
    )


# -- fixness modulo an ideal --------------------------------------------------


def require_ideal(ring: FiniteRing, mask: int) -> None:
    if not is_ideal(ring, mask):
        raise NotAnIdeal("subset is not an ideal", members=mask)


def fix_modulo_ideal(ring: FiniteRing, ideal_mask: int, filt: Filter) -> bool:
    """Invariance under translation by the ideal: f + a stays inside."""
    require_ideal(ring, ideal_mask)
    monoid = mult_monoid(ring)
    if filt.carrier != monoid:
        raise NotAFilter("filter does not live on the multiplicative monoid")
    return all(
        filt.members >> ring.plus(f, a) & 1
        for f in filt.member_ids()
        for a in iter_bits(ideal_mask)
    )


def quotient_ring(ring: FiniteRing, ideal_mask: int) -> tuple[FiniteRing, MonoidHom]:
    """Residue ring and the induced morphism of multiplicative monoids."""
    require_ideal(ring, ideal_mask)
    cosets: list[int] = []
    class_of = [-1] * ring.size
    for x in range(ring.size):
        if class_of[x] >= 0:
            continue
        coset = mask_of(ring.plus(x, a) for a in iter_bits(ideal_mask))
        idx = len(cosets)
        cosets.append(coset)
        for y in iter_bits(coset):
            class_of[y] = idx
    reps = [min(bits_list(c)) for c in cosets]
    order = sorted(range(len(cosets)), key=lambda i: reps[i])
    renumber = {old: new for new, old in enumerate(order)}
    class_ids = [renumber[c] for c in class_of]
    reps = [reps[i] for i in order]
    add = [[class_ids[ring.plus(a, b)] for b in reps] for a in reps]
    mul = [[class_ids[ring.times(a, b)] for b in reps] for a in reps]
    quotient = validate_ring(add, mul, name=f"{ring.name}/a" if ring.name else "")
    hom = monoid_hom(mult_monoid(ring), mult_monoid(quotient), class_ids, name="residue")
    return quotient, hom


def smallest_fix_filter(ring: FiniteRing, ideal_mask: int) -> Filter:
    """Generated by 1 + the ideal; the least filter fixed modulo it."""
    require_ideal(ring, ideal_mask)
    seed = mask_of(ring.plus(ring.one, a) for a in iter_bits(ideal_mask))
    return generate(mult_monoid(ring), seed)


def ring_filters(ring: FiniteRing) -> FilterFamily:
    return all_filters(mult_monoid(ring))
