"""Finite topological spaces and their filters.

A space is a named point set plus the explicit family of open sets,
stored as point bitmasks sorted ascending.  The open sets form a
commutative monoid under intersection (identity: the whole space, zero:
the empty set); its filters are the topological filters, for which
divisibility coincides with the superset relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .bits import bits_list, is_subset, iter_bits, mask_of
from .config import DEFAULT_SPACE_CAP
from .errors import (
    CapExceeded,
    NotClosedUnderOps,
    NotContinuous,
    ShapeError,
    TypeMismatch,
)
from .filters import Filter, FilterFamily, all_filters, generate
from .monoid import FiniteMonoid, MonoidHom, monoid_hom, validate_monoid


@dataclass(frozen=True)
class FiniteSpace:
    names: tuple[str, ...]
    opens: tuple[int, ...]  # sorted ascending; contains 0 and the full mask

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def open_index(self, mask: int) -> int:
        return self.opens.index(mask)

    def is_open(self, mask: int) -> bool:
        return mask in self._open_set()

    def _open_set(self) -> frozenset[int]:
        return _open_lookup(self.opens)

    def min_nbhd(self, x: int) -> int:
        """Smallest open set containing x."""
        return _min_nbhds(self.opens, self.n)[x]

    def leq(self, x: int, y: int) -> bool:
        """Specialization: every open neighbourhood of x contains y."""
        return bool(self.min_nbhd(x) >> y & 1)

    def closed_sets(self) -> list[int]:
        full = self.full_mask
        return sorted(full & ~u for u in self.opens)

    def closure(self, mask: int) -> int:
        out = mask
        for x in iter_bits(mask):
            for y in range(self.n):
                if self.leq(y, x):
                    out |= 1 << y
        return out

    def is_t0(self) -> bool:
        nbhds = [self.min_nbhd(x) for x in range(self.n)]
        return len(set(nbhds)) == self.n

    def is_quasicompact(self) -> bool:
        # every open cover is finite here, hence its own finite subcover
        return True

    def is_connected(self) -> bool:
        lookup = self._open_set()
        full = self.full_mask
        return all(u in (0, full) or (full & ~u) not in lookup for u in self.opens)

    def is_hausdorff(self) -> bool:
        for x in range(self.n):
            for y in range(x + 1, self.n):
                if not any(
                    u >> x & 1 and not u & v and v >> y & 1
                    for u in self.opens
                    for v in self.opens
                ):
                    return False
        return True

    def components(self) -> list[int]:
        """Connected components (as point masks); in a finite space these
        are the components of the specialization comparability graph."""
        seen = 0
        out = []
        for x in range(self.n):
            if seen >> x & 1:
                continue
            comp = 1 << x
            frontier = [x]
            while frontier:
                p = frontier.pop()
                for q in range(self.n):
                    if comp >> q & 1:
                        continue
                    if self.leq(p, q) or self.leq(q, p):
                        comp |= 1 << q
                        frontier.append(q)
            seen |= comp
            out.append(comp)
        return sorted(out)

    def is_totally_disconnected(self) -> bool:
        return all(comp.bit_count() == 1 for comp in self.components())

    def is_irreducible_closed(self, mask: int) -> bool:
        if mask == 0:
            return False
        closed = self.closed_sets()
        if mask not in closed:
            return False
        for a in closed:
            for b in closed:
                if is_subset(mask, a | b) and not is_subset(mask, a) and not is_subset(mask, b):
                    return False
        return True

    def irreducible_closed_sets(self) -> list[int]:
        return [a for a in self.closed_sets() if self.is_irreducible_closed(a)]

    def is_sober(self) -> bool:
        """Every irreducible closed set is the closure of exactly one point."""
        for a in self.irreducible_closed_sets():
            generic = [x for x in iter_bits(a) if self.closure(1 << x) == a]
            if len(generic) != 1:
                return False
        return True

    def subspace(self, point_mask: int) -> tuple["FiniteSpace", dict[int, int]]:
        points = bits_list(point_mask)
        renumber = {p: i for i, p in enumerate(points)}
        induced = sorted({_restrict(u, points) for u in self.opens})
        sub = FiniteSpace(tuple(self.names[p] for p in points), tuple(induced))
        return sub, renumber

    def __repr__(self) -> str:
        return f"FiniteSpace({list(self.names)}, {len(self.opens)} opens)"


@lru_cache(maxsize=None)
def _open_lookup(opens: tuple[int, ...]) -> frozenset[int]:
    return frozenset(opens)


@lru_cache(maxsize=None)
def _min_nbhds(opens: tuple[int, ...], n: int) -> tuple[int, ...]:
    full = (1 << n) - 1
    out = []
    for x in range(n):
        acc = full
        for u in opens:
            if u >> x & 1:
                acc &= u
        out.append(acc)
    return tuple(out)


def _restrict(mask: int, points: list[int]) -> int:
    out = 0
    for i, p in enumerate(points):
        if mask >> p & 1:
            out |= 1 << i
    return out


def finite_space(names: Sequence[str], opens: Iterable[Iterable[int] | int], name_prefix: str = "") -> FiniteSpace:
    """Validate a space: ∅ and X present, family closed under ∪ and ∩."""
    names = tuple(names)
    n = len(names)
    if n == 0:
        raise ShapeError("a space needs at least one point")
    masks: set[int] = set()
    for u in opens:
        mask = u if isinstance(u, int) else mask_of(u)
        if mask & ~((1 << n) - 1):
            raise ShapeError(f"open {mask:#x} mentions unknown points", mask=mask)
        masks.add(mask)
    full = (1 << n) - 1
    if 0 not in masks or full not in masks:
        raise NotClosedUnderOps("family must contain the empty set and the whole space")
    ordered = sorted(masks)
    for i, u in enumerate(ordered):
        for v in ordered[i + 1:]:
            if u | v not in masks:
                raise NotClosedUnderOps(f"union of opens {u:#x}, {v:#x} missing", u=u, v=v, op="union")
            if u & v not in masks:
                raise NotClosedUnderOps(f"intersection of opens {u:#x}, {v:#x} missing", u=u, v=v, op="intersection")
    return FiniteSpace(names, tuple(ordered))


def space_from_up_sets(n: int, leq: Sequence[Sequence[bool]], names: Sequence[str] | None = None) -> FiniteSpace:
    """Space whose opens are the up-sets of a preorder (x ⪯ y: leq[x][y])."""
    opens = []
    for mask in range(1 << n):
        if all(
            mask >> y & 1
            for x in range(n)
            if mask >> x & 1
            for y in range(n)
            if leq[x][y]
        ):
            opens.append(mask)
    return FiniteSpace(tuple(names or (f"p{i}" for i in range(n))), tuple(sorted(opens)))


def product_space(x: FiniteSpace, y: FiniteSpace) -> FiniteSpace:
    """Product topology; point (i, j) gets id i*|Y| + j."""
    ny = y.n
    rectangles = set()
    for u in x.opens:
        for v in y.opens:
            rect = 0
            for i in iter_bits(u):
                rect |= v << (i * ny)
            rectangles.add(rect)
    opens = _union_closure(rectangles)
    names = tuple(f"{a},{b}" for a in x.names for b in y.names)
    return FiniteSpace(names, tuple(sorted(opens)))


def _union_closure(seeds: set[int], cap: int = DEFAULT_SPACE_CAP) -> set[int]:
    family = set(seeds)
    family.add(0)
    frontier = list(family)
    while frontier:
        u = frontier.pop()
        fresh = []
        for v in seeds:
            w = u | v
            if w not in family:
                family.add(w)
                fresh.append(w)
        if len(family) > cap:
            raise CapExceeded(f"open-set family exceeds {cap}", cap=cap)
        frontier.extend(fresh)
    return family


@dataclass(frozen=True)
class ContinuousMap:
    source: FiniteSpace
    target: FiniteSpace
    mapping: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image_mask(self, mask: int) -> int:
        return mask_of(self.mapping[x] for x in iter_bits(mask))

    def preimage_mask(self, mask: int) -> int:
        return mask_of(x for x in range(self.source.n) if mask >> self.mapping[x] & 1)


def continuous_map(source: FiniteSpace, target: FiniteSpace, mapping: Sequence[int]) -> ContinuousMap:
    if len(mapping) != source.n:
        raise ShapeError(f"map has length {len(mapping)}, expected {source.n}")
    for x, v in enumerate(mapping):
        if not 0 <= v < target.n:
            raise ShapeError(f"map[{x}] = {v} out of range", x=x, value=v)
    cm = ContinuousMap(source, target, tuple(mapping))
    for v in target.opens:
        pre = cm.preimage_mask(v)
        if not source.is_open(pre):
            raise NotContinuous(f"preimage of open {v:#x} is not open", open=v, preimage=pre)
    return cm


def verify_homeomorphism(x: FiniteSpace, y: FiniteSpace, point_map: Sequence[int]) -> bool:
    """Explicit certificate: bijective on points, opens map onto opens in
    both directions."""
    if x.n != y.n or sorted(point_map) != list(range(y.n)):
        return False
    forward = {}
    for u in x.opens:
        image = mask_of(point_map[p] for p in iter_bits(u))
        if not y.is_open(image):
            return False
        forward[u] = image
    if len(set(forward.values())) != len(y.opens):
        return False
    return set(forward.values()) == set(y.opens)


# -- the monoid of open sets and its filters ---------------------------------


@lru_cache(maxsize=None)
def top_monoid(space: FiniteSpace) -> FiniteMonoid:
    """Open sets under intersection; identity X, zero ∅.

    Element i is ``space.opens[i]``; the ascending order makes ids stable.
    """
    opens = space.opens
    index = {u: i for i, u in enumerate(opens)}
    table = [[index[u & v] for v in opens] for u in opens]
    return validate_monoid(table, one=index[space.full_mask], zero=index[0],
                           name="top", warn_undeclared_zero=False)


def open_monoid_hom(phi: ContinuousMap) -> MonoidHom:
    """The morphism Top(Y) → Top(X), V ↦ φ⁻¹(V), of a continuous map."""
    src = top_monoid(phi.target)
    dst = top_monoid(phi.source)
    mapping = [phi.source.opens.index(phi.preimage_mask(v)) for v in phi.target.opens]
    return monoid_hom(src, dst, mapping, name="preimage")


def neighborhood_filter(space: FiniteSpace, point_mask: int) -> Filter:
    """U(T): all opens containing T; for T = ∅ the inconsistent filter."""
    monoid = top_monoid(space)
    members = mask_of(i for i, u in enumerate(space.opens) if is_subset(point_mask, u))
    return Filter(monoid, members)


def filter_open_masks(space: FiniteSpace, filt: Filter) -> list[int]:
    return [space.opens[i] for i in filt.member_ids()]


def topological_filters(space: FiniteSpace) -> FilterFamily:
    # filters of an intersection monoid of opens are principal, so the
    # family is never larger than the monoid itself; the size cap is moot
    return all_filters(top_monoid(space), cap=len(space.opens))


def is_quasicompact_filter(space: FiniteSpace, filt: Filter) -> bool:
    """Membership of a binary union forces membership of a part."""
    opens = space.opens
    index = {u: i for i, u in enumerate(opens)}
    for i, u in enumerate(opens):
        for j in range(i, len(opens)):
            k = index[u | opens[j]]
            if k in filt and i not in filt and j not in filt:
                return False
    return True


def is_irreducible_filter(space: FiniteSpace, filt: Filter) -> bool:
    """Membership of any union forces membership of a member; the empty
    union (= ∅) makes irreducible filters consistent."""
    opens = space.opens
    for w_idx in filt.member_ids():
        w = opens[w_idx]
        covered = 0
        for i, u in enumerate(opens):
            if i not in filt and is_subset(u, w):
                covered |= u
        if covered == w:
            return False
    return True


def convergence_points(space: FiniteSpace, filt: Filter) -> int:
    """X minus the union of the non-member opens; equals the points whose
    neighbourhood filter lies inside."""
    missing = 0
    for i, u in enumerate(space.opens):
        if i not in filt:
            missing |= u
    return space.full_mask & ~missing


def converges(space: FiniteSpace, filt: Filter) -> bool:
    return convergence_points(space, filt) != 0


def irreducible_filter_for_closed(space: FiniteSpace, closed_mask: int) -> Filter:
    monoid = top_monoid(space)
    members = mask_of(i for i, u in enumerate(space.opens) if u & closed_mask)
    return Filter(monoid, members)


def closed_set_for_filter(space: FiniteSpace, filt: Filter) -> int:
    return convergence_points(space, filt)


def irreducible_filter_closed_set_bijection(space: FiniteSpace) -> list[tuple[int, Filter]]:
    """Pairs (closed set, filter) under the mutually inverse maps; raises
    if the two directions fail to invert each other."""
    irr_closed = [a for a in space.irreducible_closed_sets()]
    irr_filters = [
        Filter(top_monoid(space), m)
        for m in topological_filters(space).masks
        if is_irreducible_filter(space, Filter(top_monoid(space), m))
    ]
    pairs = []
    for a in irr_closed:
        f = irreducible_filter_for_closed(space, a)
        if not is_irreducible_filter(space, f):
            raise AssertionError("closed-set filter not irreducible")
        if closed_set_for_filter(space, f) != a:
            raise AssertionError("closed set does not round-trip")
        pairs.append((a, f))
    if len(irr_filters) != len(irr_closed):
        raise AssertionError("irreducible filters and closed sets differ in number")
    for f in irr_filters:
        a = closed_set_for_filter(space, f)
        if irreducible_filter_for_closed(space, a).members != f.members:
            raise AssertionError("filter does not round-trip")
    return pairs


def pushforward_filter(phi: ContinuousMap, filt: Filter) -> Filter:
    """Image filter: opens of the target whose preimage belongs."""
    if filt.carrier != top_monoid(phi.source):
        raise TypeMismatch("filter does not live on the source space")
    src_lookup = {u: i for i, u in enumerate(phi.source.opens)}
    members = mask_of(
        j for j, v in enumerate(phi.target.opens)
        if src_lookup[phi.preimage_mask(v)] in filt
    )
    return Filter(top_monoid(phi.target), members)


def pullback_filter(phi: ContinuousMap, filt: Filter) -> Filter:
    """Filter generated by the preimages of the members."""
    if filt.carrier != top_monoid(phi.target):
        raise TypeMismatch("filter does not live on the target space")
    src = top_monoid(phi.source)
    src_lookup = {u: i for i, u in enumerate(phi.source.opens)}
    seed = mask_of(src_lookup[phi.preimage_mask(phi.target.opens[j])] for j in filt.member_ids())
    return generate(src, seed)


def initial_topology(phi: ContinuousMap) -> bool:
    """Every open of the source is a union of preimages of target opens."""
    preimages = {phi.preimage_mask(v) for v in phi.target.opens}
    for u in phi.source.opens:
        covered = 0
        for p in preimages:
            if is_subset(p, u):
                covered |= p
        if covered != u:
            return False
    return True


def all_filters_fix(phi: ContinuousMap) -> bool:
    """All topological filters on the source space are fixed by the round
    trip through the target."""
    from .filtrum import pullback, pushforward

    hom = open_monoid_hom(phi)  # Top(Y) -> Top(X); filters on X sit on the target side
    for filt in topological_filters(phi.source):
        if pushforward(hom, pullback(hom, filt)).members != filt.members:
            return False
    return True


def neighborhood_filters_fix(phi: ContinuousMap) -> bool:
    from .filtrum import pullback, pushforward

    hom = open_monoid_hom(phi)
    for x in range(phi.source.n):
        filt = neighborhood_filter(phi.source, 1 << x)
        if pushforward(hom, pullback(hom, filt)).members != filt.members:
            return False
    return True


def is_closed_map(phi: ContinuousMap) -> bool:
    target_closed = set(phi.target.closed_sets())
    return all(phi.image_mask(a) in target_closed for a in phi.source.closed_sets())


def closed_map_sides(phi: ContinuousMap) -> tuple[bool, bool]:
    """Direct closedness vs. the fibre criterion
    pullback(U(y)) == U(φ⁻¹(y)), computed independently."""
    direct = is_closed_map(phi)
    criterion = True
    for y in range(phi.target.n):
        lhs = pullback_filter(phi, neighborhood_filter(phi.target, 1 << y))
        rhs = neighborhood_filter(phi.source, phi.preimage_mask(1 << y))
        if lhs.members != rhs.members:
            criterion = False
            break
    return direct, criterion


def closed_map_criterion(phi: ContinuousMap) -> bool:
    direct, criterion = closed_map_sides(phi)
    if direct != criterion:
        raise AssertionError("closed-map criterion disagrees with direct check")
    return direct


def is_filterhaft(phi: ContinuousMap) -> bool:
    """For every point y and open W ∋ y there is an open V with
    y ∈ V ⊆ W such that φ⁻¹(V') ⊆ φ⁻¹(V) forces V' ⊆ W."""
    target, _ = phi.target, phi.source
    pre = {v: phi.preimage_mask(v) for v in target.opens}
    for y in range(target.n):
        for w in target.opens:
            if not w >> y & 1:
                continue
            good = False
            for v in target.opens:
                if not v >> y & 1 or not is_subset(v, w):
                    continue
                if all(is_subset(v2, w) for v2 in target.opens if is_subset(pre[v2], pre[v])):
                    good = True
                    break
            if not good:
                return False
    return True


# -- the space among its filters ----------------------------------------------


def embed(space: FiniteSpace):
    """x ↦ U(x) into the filtrum of the open-set monoid.

    Returns the filtrum and the point map; injective exactly when the
    space is T0, and the image is dense among the consistent filters.
    """
    from .filtrum import filtrum as build_filtrum

    phi = build_filtrum(top_monoid(space), cap=len(space.opens))
    point_map = tuple(
        phi.point_index(neighborhood_filter(space, 1 << x)) for x in range(space.n)
    )
    return phi, point_map


def filtrum_extension_map(phi: ContinuousMap):
    """ψ: Y → Filt(source): y ↦ the filter generated by the preimages of
    the neighbourhoods of y."""
    from .filtrum import filtrum as build_filtrum

    filt_space = build_filtrum(top_monoid(phi.source), cap=len(phi.source.opens))
    return filt_space, tuple(
        filt_space.point_index(pullback_filter(phi, neighborhood_filter(phi.target, 1 << y)))
        for y in range(phi.target.n)
    )


@dataclass(frozen=True)
class Sobrification:
    space: FiniteSpace                 # the sober reflection
    point_map: tuple[int, ...]         # x ↦ index of U(x)
    open_map: tuple[tuple[int, int], ...]  # (open of X, corresponding open)
    lattice_iso: bool


def sobrify(space: FiniteSpace) -> Sobrification:
    """Points: irreducible filters; opens: images D(U) of the opens.

    U ↦ D(U) is checked to be a bijection preserving unions and
    intersections, so the open-set lattices agree.
    """
    monoid = top_monoid(space)
    irr = [
        m for m in topological_filters(space).masks
        if is_irreducible_filter(space, Filter(monoid, m))
    ]
    irr.sort()
    index = {m: i for i, m in enumerate(irr)}

    def d_of(u_idx: int) -> int:
        return mask_of(i for i, m in enumerate(irr) if m >> u_idx & 1)

    open_map = [(u, d_of(i)) for i, u in enumerate(space.opens)]
    images = [img for _, img in open_map]
    lattice_iso = len(set(images)) == len(images)
    lookup = {u: img for u, img in open_map}
    for u in space.opens:
        for v in space.opens:
            if lookup[u | v] != lookup[u] | lookup[v] or lookup[u & v] != lookup[u] & lookup[v]:
                lattice_iso = False
    names = tuple(f"s{i}" for i in range(len(irr)))
    sober_space = finite_space(names, images)
    point_map = tuple(
        index[neighborhood_filter(space, 1 << x).members] for x in range(space.n)
    )
    return Sobrification(sober_space, point_map, tuple(open_map), lattice_iso)


@dataclass(frozen=True)
class CharacterizeSuccess:
    basis: tuple[int, ...]        # the local opens, as point masks
    monoid: FiniteMonoid          # the local opens under intersection
    point_map: tuple[int, ...]    # x ↦ point of the reconstructed filtrum
    verified: bool


@dataclass(frozen=True)
class CharacterizeFailure:
    condition: int
    witness: tuple


def local_opens(space: FiniteSpace) -> list[int]:
    """Opens possessing a neighbourhood-poorest point; these are exactly
    the minimal neighbourhoods N(x)."""
    return sorted({space.min_nbhd(x) for x in range(space.n)})


def characterize_filtrum_space(space: FiniteSpace):
    """Decide whether the space is the filtrum of some monoid.

    Checks the six conditions on the family of local opens in order and
    reports the first failure; on success returns the reconstructed
    monoid with a verified homeomorphism certificate.
    """
    from .filtrum import filtrum as build_filtrum

    basis = local_opens(space)
    basis_set = set(basis)

    # (1) distinct points are distinguishable
    for x in range(space.n):
        for y in range(x + 1, space.n):
            if space.min_nbhd(x) == space.min_nbhd(y):
                return CharacterizeFailure(1, (x, y))
    # (2) the whole space is a local open
    if space.full_mask not in basis_set:
        return CharacterizeFailure(2, (space.full_mask,))
    # (3) closed under intersection
    for i, d1 in enumerate(basis):
        for d2 in basis[i + 1:]:
            if d1 & d2 not in basis_set:
                return CharacterizeFailure(3, (d1, d2))
    # (4) a basis of the topology
    for u in space.opens:
        covered = 0
        for d in basis:
            if is_subset(d, u):
                covered |= d
        if covered != u:
            return CharacterizeFailure(4, (u,))
    # (5) arbitrary intersections have a neighbourhood-poorest element
    if len(basis) <= 16:
        intersections = set()
        for sub in range(1 << len(basis)):
            t = space.full_mask
            for i in iter_bits(sub):
                t &= basis[i]
            intersections.add(t)
    else:
        intersections = set(basis) | {space.full_mask}
        frontier = list(intersections)
        while frontier:
            t = frontier.pop()
            for d in basis:
                w = t & d
                if w not in intersections:
                    intersections.add(w)
                    frontier.append(w)
    for t in sorted(intersections):
        least = [x for x in iter_bits(t) if all(space.leq(x, y) for y in iter_bits(t))]
        if not least:
            return CharacterizeFailure(5, (t,))
    # (6) finite refinement: whenever an intersection lands inside a local
    # open, some finite subfamily already does.  The canonical realizer of
    # an intersection value is finite on a finite carrier, so it serves as
    # its own refinement; evaluated literally all the same.
    for t in sorted(intersections):
        realizer = [d for d in basis if is_subset(t, d)]
        refined = space.full_mask
        for d in realizer:
            refined &= d
        for d in basis:
            if is_subset(t, d) and not is_subset(refined, d):
                return CharacterizeFailure(6, (t, d))

    index = {d: i for i, d in enumerate(basis)}
    table = [[index[d1 & d2] for d2 in basis] for d1 in basis]
    bottom = space.full_mask
    for d in basis:
        bottom &= d
    monoid = validate_monoid(table, one=index[space.full_mask], zero=index[bottom],
                             name="local-opens", warn_undeclared_zero=False)
    phi = build_filtrum(monoid)
    point_map = []
    for x in range(space.n):
        member_mask = mask_of(i for i, d in enumerate(basis) if d >> x & 1)
        point_map.append(phi.point_index(member_mask))
    verified = verify_homeomorphism(space, phi.space(), point_map)
    return CharacterizeSuccess(tuple(basis), monoid, tuple(point_map), verified)
