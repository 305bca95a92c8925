"""Filters of finite commutative monoids.

A filter contains the identity, is closed under products, and contains
every divisor of each of its members; equivalently it is a saturated
multiplicative system.  Families are always sorted ascending by member
bitmask so that every enumeration is reproducible.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import kernels
from .bits import bits_list, is_subset, iter_bits, mask_of
from .config import check_enum_cap, check_scan_cap
from .errors import (
    CapExceeded,
    IndexOutOfRange,
    NoZeroElement,
    NotDisjoint,
    NotMultiplicativelyClosed,
    NotPseudoideal,
    ZeroEqualsOne,
)
from .monoid import FiniteMonoid


@dataclass(frozen=True)
class Filter:
    carrier: FiniteMonoid
    members: int

    def __contains__(self, f: int) -> bool:
        return bool(self.members >> f & 1)

    def member_ids(self) -> list[int]:
        return bits_list(self.members)

    @property
    def is_consistent(self) -> bool:
        """True when the zero element (if any) is absent.

        Monoids without a declared zero have only consistent filters.
        """
        zero = self.carrier.zero
        return zero is None or not self.members >> zero & 1

    def is_subset_of(self, other: "Filter") -> bool:
        return is_subset(self.members, other.members)

    def __repr__(self) -> str:
        return f"Filter({{{', '.join(map(str, self.member_ids()))}}})"


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of an axiom check; falsy iff some axiom failed.

    ``axiom`` is 1 (identity), 2 (products) or 3 (divisors); the witness
    names the offending elements.
    """

    ok: bool
    axiom: int | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class FilterFamily:
    carrier: FiniteMonoid
    masks: tuple[int, ...]  # strictly increasing

    def __iter__(self) -> Iterator[Filter]:
        return (Filter(self.carrier, m) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, item) -> bool:
        mask = item.members if isinstance(item, Filter) else item
        return mask in set(self.masks)

    def filters(self) -> list[Filter]:
        return list(self)


def _tables(monoid: FiniteMonoid) -> tuple[int, list[int], int, list[int]]:
    return monoid.size, list(monoid.table), monoid.one, list(monoid.divisor_masks)


def is_filter(monoid: FiniteMonoid, members: int) -> AxiomCheck:
    """Check the three axioms, reporting the first violation."""
    if members & ~monoid.full_mask:
        raise IndexOutOfRange("subset mentions ids outside the carrier", members=members)
    if not members >> monoid.one & 1:
        return AxiomCheck(False, 1, (monoid.one,))
    ids = bits_list(members)
    for f in ids:
        for g in ids:
            if not members >> monoid.mul(f, g) & 1:
                return AxiomCheck(False, 2, (f, g))
    for f in ids:
        missing = monoid.divisor_masks[f] & ~members
        if missing:
            return AxiomCheck(False, 3, (f, next(iter_bits(missing))))
    return AxiomCheck(True)


def generate(monoid: FiniteMonoid, seed: int | Iterable[int]) -> Filter:
    """Smallest filter containing the seed: divisors of products of seed
    elements, the empty product counting as the identity."""
    mask = seed if isinstance(seed, int) else mask_of(seed)
    if mask & ~monoid.full_mask:
        raise IndexOutOfRange("seed mentions ids outside the carrier", seed=mask)
    size, table, one, divs = _tables(monoid)
    return Filter(monoid, kernels.close_filter(size, table, one, divs, mask))


def principal_filter(monoid: FiniteMonoid, f: int) -> Filter:
    if not 0 <= f < monoid.size:
        raise IndexOutOfRange(f"element {f} out of range", f=f)
    return generate(monoid, 1 << f)


def units_filter(monoid: FiniteMonoid) -> Filter:
    return Filter(monoid, monoid.units)


def all_filters(
    monoid: FiniteMonoid,
    method: str = "closure",
    jobs: int = 1,
    cap: int | None = None,
) -> FilterFamily:
    """Complete filter family, sorted by mask.

    ``closure`` grows filters generator by generator; ``scan`` is the
    2^|M| subset oracle used to accept the closure algorithm.  Both give
    identical families.  ``cap`` overrides the configured size cap.
    """
    size, table, one, divs = _tables(monoid)
    if method == "closure":
        if cap is None:
            check_enum_cap(size, "all_filters")
        elif size > cap:
            raise CapExceeded(f"all_filters: size {size} exceeds cap {cap}", size=size, cap=cap)
        masks = kernels.enumerate_filters_closure(size, table, one, divs)
    elif method == "scan":
        check_scan_cap(size, "all_filters oracle")
        total = 1 << size
        if jobs <= 1:
            masks = kernels.enumerate_filters_scan(size, table, one, divs)
        else:
            bounds = [total * k // jobs for k in range(jobs + 1)]
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                chunks = pool.map(
                    lambda se: kernels.enumerate_filters_scan(size, table, one, divs, se[0], se[1]),
                    zip(bounds, bounds[1:]),
                )
                masks = [m for chunk in chunks for m in chunk]
    else:
        raise ValueError(f"unknown method {method!r}")
    return FilterFamily(monoid, tuple(masks))


def is_consistent(filt: Filter) -> bool:
    return filt.is_consistent


def satisfies_ultrafilter_criterion(filt: Filter) -> bool:
    """For every g outside the filter some power of g is annihilated by a
    member: g^n * f == 0."""
    monoid = filt.carrier
    if monoid.zero is None:
        raise NoZeroElement("criterion needs a zero element")
    return _satisfies_max_criterion(filt, 1 << monoid.zero)


def _satisfies_max_criterion(filt: Filter, avoid_mask: int) -> bool:
    monoid = filt.carrier
    members = filt.member_ids()
    for g in monoid.elements():
        if g in filt:
            continue
        power = g
        hit = False
        for _ in range(monoid.size):
            row = power * monoid.size
            if any(avoid_mask >> monoid.table[row + f] & 1 for f in members):
                hit = True
                break
            power = monoid.mul(power, g)
        if not hit:
            return False
    return True


def ultrafilters(monoid: FiniteMonoid, family: FilterFamily | None = None) -> FilterFamily:
    """Maximal consistent filters, re-verified against the annihilation
    criterion."""
    if monoid.zero is None:
        raise NoZeroElement("ultrafilters need a zero element")
    if monoid.zero == monoid.one:
        raise ZeroEqualsOne("no consistent filters when 0 = 1")
    if family is None:
        family = all_filters(monoid)
    consistent = [m for m in family.masks if not m >> monoid.zero & 1]
    maximal = [
        m for m in consistent
        if not any(other != m and is_subset(m, other) for other in consistent)
    ]
    for m in consistent:
        by_criterion = satisfies_ultrafilter_criterion(Filter(monoid, m))
        if by_criterion != (m in maximal):
            raise AssertionError("ultrafilter criterion disagrees with maximality")  # unreachable
    return FilterFamily(monoid, tuple(sorted(maximal)))


def maximal_filters_avoiding(monoid: FiniteMonoid, closed_set: int, avoid: int) -> FilterFamily:
    """Filters maximal among those containing ``closed_set`` and disjoint
    from the pseudoideal ``avoid``.

    Each result is re-verified against the criterion: for every g outside
    the filter some g^n * f lands in ``avoid``.
    """
    for x in iter_bits(closed_set):
        for y in iter_bits(closed_set):
            if not closed_set >> monoid.mul(x, y) & 1:
                raise NotMultiplicativelyClosed(f"{x}*{y} leaves the set", x=x, y=y)
    for x in iter_bits(avoid):
        row = x * monoid.size
        for m in monoid.elements():
            if not avoid >> monoid.table[row + m] & 1:
                raise NotPseudoideal(f"{x}*{m} leaves the pseudoideal", x=x, m=m)
    if closed_set & avoid:
        raise NotDisjoint("set and pseudoideal intersect", common=closed_set & avoid)

    admissible = [
        m for m in all_filters(monoid).masks
        if is_subset(closed_set, m) and not m & avoid
    ]
    maximal = [
        m for m in admissible
        if not any(other != m and is_subset(m, other) for other in admissible)
    ]
    for m in admissible:
        by_criterion = _satisfies_max_criterion(Filter(monoid, m), avoid)
        if by_criterion != (m in maximal):
            raise AssertionError("maximality criterion disagrees with the family")  # unreachable
    return FilterFamily(monoid, tuple(sorted(maximal)))
