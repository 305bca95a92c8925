"""The space of all filters of a finite monoid.

Points are the filters, ordered by inclusion; the sets
D(f) = {F : f ∈ F} form the basis of the topology.  Opens are materialized
only on demand (there can be exponentially many); ``is_open`` is the primary
interface, relying on the fact that opens are exactly the upward-closed
point sets in which every member contains a principal filter that is itself
a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .bits import bits_list, is_subset, iter_bits, mask_of
from .config import DEFAULT_SPACE_CAP
from .errors import CapExceeded, CarrierMismatch, IndexOutOfRange
from .filters import Filter, FilterFamily, all_filters, generate
from .monoid import FiniteMonoid, MonoidHom, product_monoid
from .spaces import FiniteSpace, product_space, verify_homeomorphism


@dataclass(frozen=True)
class Filtrum:
    monoid: FiniteMonoid
    family: FilterFamily

    @property
    def n_points(self) -> int:
        return len(self.family.masks)

    @cached_property
    def _index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.family.masks)}

    def point_filter(self, i: int) -> Filter:
        return Filter(self.monoid, self.family.masks[i])

    def point_index(self, filt: Filter | int) -> int:
        mask = filt.members if isinstance(filt, Filter) else filt
        return self._index[mask]

    @cached_property
    def upsets(self) -> tuple[int, ...]:
        """For each point, the mask of points whose filters contain it."""
        masks = self.family.masks
        out = []
        for m in masks:
            out.append(mask_of(j for j, other in enumerate(masks) if is_subset(m, other)))
        return tuple(out)

    @cached_property
    def principal_points(self) -> tuple[int, ...]:
        """Point index of the principal filter of each monoid element."""
        return tuple(
            self._index[generate(self.monoid, 1 << f).members]
            for f in self.monoid.elements()
        )

    def basis_set(self, f: int) -> int:
        """D(f) as a point mask: the upward closure of the principal
        filter of f."""
        if not 0 <= f < self.monoid.size:
            raise IndexOutOfRange(f"element {f} out of range", f=f)
        return self.upsets[self.principal_points[f]]

    def basis_union(self, elements: int) -> int:
        """D(N) for a subset N of the monoid (rarely needed convenience)."""
        out = 0
        for f in iter_bits(elements):
            out |= self.basis_set(f)
        return out

    @cached_property
    def basis_sets(self) -> tuple[int, ...]:
        return tuple(sorted({self.basis_set(f) for f in self.monoid.elements()}))

    def is_open(self, point_mask: int) -> bool:
        """Upward closed, and every member sees a principal member below
        it: some f in F with F(f) in the set."""
        for i in iter_bits(point_mask):
            if not is_subset(self.upsets[i], point_mask):
                return False
            fmask = self.family.masks[i]
            if not any(point_mask >> self.principal_points[f] & 1 for f in iter_bits(fmask)):
                return False
        return True

    def closed_points(self) -> list[int]:
        full = (1 << self.n_points) - 1
        return [i for i in range(self.n_points) if self.is_open(full & ~(1 << i))]

    def consistent_points(self) -> int:
        """Mask of points avoiding the zero; everything when there is none."""
        zero = self.monoid.zero
        if zero is None:
            return (1 << self.n_points) - 1
        return mask_of(i for i, m in enumerate(self.family.masks) if not m >> zero & 1)

    def ultrafilter_points(self) -> int:
        from .filters import ultrafilters

        ultra = ultrafilters(self.monoid, self.family)
        return mask_of(self._index[m] for m in ultra.masks)

    def units_point(self) -> int:
        return self._index[self.monoid.units]

    def open_family(self, cap: int = DEFAULT_SPACE_CAP) -> tuple[int, ...]:
        """All opens: unions of basis sets, plus the empty union."""
        family = {0}
        frontier = [0]
        while frontier:
            u = frontier.pop()
            for b in self.basis_sets:
                w = u | b
                if w not in family:
                    family.add(w)
                    frontier.append(w)
                    if len(family) > cap:
                        raise CapExceeded(f"filtrum opens exceed {cap}", cap=cap)
        return tuple(sorted(family))

    def point_names(self) -> tuple[str, ...]:
        return tuple("{" + ",".join(map(str, bits_list(m))) + "}" for m in self.family.masks)

    def space(self, cap: int = DEFAULT_SPACE_CAP) -> FiniteSpace:
        return FiniteSpace(self.point_names(), self.open_family(cap))

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Covering pairs of the inclusion order (lower, upper)."""
        masks = self.family.masks
        edges = []
        for i, small in enumerate(masks):
            for j, big in enumerate(masks):
                if small == big or not is_subset(small, big):
                    continue
                if not any(
                    k != i and k != j and is_subset(small, masks[k]) and is_subset(masks[k], big)
                    for k in range(len(masks))
                ):
                    edges.append((i, j))
        return edges


@lru_cache(maxsize=None)
def filtrum(monoid: FiniteMonoid, cap: int | None = None) -> Filtrum:
    return Filtrum(monoid, all_filters(monoid, cap=cap))


def filtrum_space(monoid: FiniteMonoid, cap: int = DEFAULT_SPACE_CAP) -> FiniteSpace:
    return filtrum(monoid).space(cap)


def pullback(hom: MonoidHom, filt: Filter) -> Filter:
    """Preimage filter; continuous on filtrum spaces since the preimage of
    D(f) is D(hom(f))."""
    if filt.carrier != hom.target:
        raise CarrierMismatch("filter does not live on the hom target")
    return Filter(hom.source, hom.preimage_mask(filt.members))


def pushforward(hom: MonoidHom, filt: Filter) -> Filter:
    """Filter generated by the image."""
    if filt.carrier != hom.source:
        raise CarrierMismatch("filter does not live on the hom source")
    return generate(hom.target, hom.image_mask(filt.members))


def fixfilters(hom: MonoidHom) -> tuple[FilterFamily, FilterFamily]:
    """Filters invariant under the pushforward/pullback round trip, on
    both sides; the two families correspond bijectively."""
    src = [
        m for m in all_filters(hom.source).masks
        if pullback(hom, pushforward(hom, Filter(hom.source, m))).members == m
    ]
    dst = [
        m for m in all_filters(hom.target).masks
        if pushforward(hom, pullback(hom, Filter(hom.target, m))).members == m
    ]
    return FilterFamily(hom.source, tuple(src)), FilterFamily(hom.target, tuple(dst))


@dataclass(frozen=True)
class ProductCertificate:
    """Machine-checked homeomorphism Filt(M1 × M2) ≅ Filt M1 × Filt M2."""

    product: FiniteMonoid
    projections: tuple[MonoidHom, MonoidHom]
    point_map: tuple[int, ...]  # filtrum point -> index in the product space
    verified: bool


def product_homeomorphism(m1: FiniteMonoid, m2: FiniteMonoid,
                          cap: int = DEFAULT_SPACE_CAP) -> ProductCertificate:
    """F ↦ (p1(F), p2(F)) with an explicit open-set correspondence check."""
    prod, p1, p2 = product_monoid(m1, m2)
    phi = filtrum(prod)
    f1 = filtrum(m1)
    f2 = filtrum(m2)

    pairs = []
    for i in range(phi.n_points):
        filt = phi.point_filter(i)
        j1 = f1.point_index(pushforward(p1, filt))
        j2 = f2.point_index(pushforward(p2, filt))
        pairs.append(j1 * f2.n_points + j2)

    bijective = sorted(pairs) == list(range(f1.n_points * f2.n_points))
    ok = bijective
    if ok:
        # the inverse must be the componentwise product of the two filters
        for i, pair in enumerate(pairs):
            mask1 = f1.family.masks[pair // f2.n_points]
            mask2 = f2.family.masks[pair % f2.n_points]
            combined = 0
            for a in iter_bits(mask1):
                for b in iter_bits(mask2):
                    combined |= 1 << (a * m2.size + b)
            if combined != phi.family.masks[i]:
                ok = False
                break
    if ok:
        left = phi.space(cap)
        right = product_space(f1.space(cap), f2.space(cap))
        ok = verify_homeomorphism(left, right, pairs)
    return ProductCertificate(prod, (p1, p2), tuple(pairs), ok)
