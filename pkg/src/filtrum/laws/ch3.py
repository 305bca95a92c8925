"""Laws about topological filters, convergence, irreducibility,
continuous maps and sobrification."""

from __future__ import annotations

from ..bits import bits_list, is_subset, iter_bits, mask_of
from ..corpus import corpus_maps, corpus_spaces, small_monoids
from ..filters import Filter, ultrafilters
from ..filtrum import filtrum
from ..spaces import (
    FiniteSpace,
    closed_map_sides,
    continuous_map,
    convergence_points,
    embed,
    filter_open_masks,
    filtrum_extension_map,
    initial_topology,
    irreducible_filter_closed_set_bijection,
    is_filterhaft,
    is_irreducible_filter,
    is_quasicompact_filter,
    all_filters_fix,
    neighborhood_filter,
    neighborhood_filters_fix,
    pushforward_filter,
    sobrify,
    top_monoid,
    topological_filters,
    verify_homeomorphism,
)
from . import law


def _space_id(i: int, space: FiniteSpace) -> str:
    return f"space{i}[{space.n}p{len(space.opens)}o]"


@law("top-monoid-divisibility", "ch3",
     "in the open-set monoid divisibility is the superset relation, the unit "
     "group is the whole space, and non-zerodivisors are the dense opens")
def _top_divisibility():
    for i, sp in enumerate(corpus_spaces()):
        m = top_monoid(sp)
        bad = None
        for a, u in enumerate(sp.opens):
            for b, v in enumerate(sp.opens):
                if m.divides(a, b) != is_subset(v, u):
                    bad = {"u": bits_list(u), "v": bits_list(v)}
        if m.units != 1 << m.one:
            bad = {"reason": "units"}
        dense = mask_of(
            a for a, u in enumerate(sp.opens)
            if all(u & v for v in sp.opens if v)
        )
        if m.nonzerodivisors() != dense:
            bad = {"reason": "dense opens"}
        yield _space_id(i, sp), bad is None, bad


@law("neighborhood-intersection", "ch3", "U(T) is the intersection of the U(x), x in T")
def _neighborhood_intersection():
    for i, sp in enumerate(corpus_spaces()):
        if sp.n > 5:
            continue
        m = top_monoid(sp)
        bad = None
        for t in range(1 << sp.n):
            meet = (1 << m.size) - 1
            for x in iter_bits(t):
                meet &= neighborhood_filter(sp, 1 << x).members
            if neighborhood_filter(sp, t).members != meet:
                bad = {"T": bits_list(t)}
        yield _space_id(i, sp), bad is None, bad


@law("neighborhood-irreducible", "ch3",
     "point neighbourhood filters are irreducible, ultrafilters are quasicompact")
def _neighborhood_irreducible():
    for i, sp in enumerate(corpus_spaces()):
        m = top_monoid(sp)
        bad = None
        for x in range(sp.n):
            filt = neighborhood_filter(sp, 1 << x)
            if not is_irreducible_filter(sp, filt) or not is_quasicompact_filter(sp, filt):
                bad = {"x": x}
        if m.zero != m.one:
            for umask in ultrafilters(m, topological_filters(sp)).masks:
                if not is_quasicompact_filter(sp, Filter(m, umask)):
                    bad = {"ultrafilter": bits_list(umask)}
        yield _space_id(i, sp), bad is None, bad


@law("quasicompact-converges", "ch3", "every quasicompact filter converges")
def _quasicompact_converges():
    for i, sp in enumerate(corpus_spaces()):
        bad = None
        for filt in topological_filters(sp):
            if is_quasicompact_filter(sp, filt) and convergence_points(sp, filt) == 0:
                bad = {"filter": bits_list(filt.members)}
        yield _space_id(i, sp), bad is None, bad


@law("irreducible-is-consistent-quasicompact", "ch3",
     "irreducible = consistent and quasicompact on finite spaces")
def _irr_eq_cqc():
    for i, sp in enumerate(corpus_spaces()):
        bad = None
        for filt in topological_filters(sp):
            irr = is_irreducible_filter(sp, filt)
            cqc = filt.is_consistent and is_quasicompact_filter(sp, filt)
            if irr != cqc:
                bad = {"filter": bits_list(filt.members)}
        yield _space_id(i, sp), bad is None, bad


@law("quasicompact-intersection", "ch3",
     "every topological filter is the intersection of the quasicompact filters above it")
def _qc_intersection():
    for i, sp in enumerate(corpus_spaces()):
        m = top_monoid(sp)
        family = topological_filters(sp)
        qc = [f.members for f in family if is_quasicompact_filter(sp, Filter(m, f.members))]
        bad = None
        for filt in family:
            meet = (1 << m.size) - 1
            for q in qc:
                if is_subset(filt.members, q):
                    meet &= q
            if meet != filt.members:
                bad = {"filter": bits_list(filt.members)}
        yield _space_id(i, sp), bad is None, bad


@law("sober-neighborhood-filters", "ch3",
     "on sober spaces every filter is the neighbourhood filter of its convergence set")
def _sober_neighborhood():
    for i, sp in enumerate(corpus_spaces()):
        if not sp.is_sober():
            continue
        bad = None
        for filt in topological_filters(sp):
            t = mask_of(
                x for x in range(sp.n)
                if is_subset(filt.members, neighborhood_filter(sp, 1 << x).members)
            )
            if neighborhood_filter(sp, t).members != filt.members:
                bad = {"filter": bits_list(filt.members), "T": bits_list(t)}
        yield _space_id(i, sp), bad is None, bad


@law("irreducible-closed-bijection", "ch3",
     "irreducible filters and nonempty irreducible closed sets are in bijection")
def _irr_bijection():
    for i, sp in enumerate(corpus_spaces()):
        try:
            irreducible_filter_closed_set_bijection(sp)
            yield _space_id(i, sp), True, None
        except AssertionError as exc:
            yield _space_id(i, sp), False, {"reason": str(exc)}


@law("pushforward-preserves", "ch3",
     "image filters send U(T) to U(φ(T)) and preserve quasicompactness and irreducibility")
def _pushforward_preserves():
    for name, cm in corpus_maps():
        bad = None
        for t in range(1 << cm.source.n):
            lhs = pushforward_filter(cm, neighborhood_filter(cm.source, t)).members
            rhs = neighborhood_filter(cm.target, cm.image_mask(t)).members
            if lhs != rhs:
                bad = {"T": bits_list(t)}
        for filt in topological_filters(cm.source):
            image = pushforward_filter(cm, filt)
            if is_quasicompact_filter(cm.source, filt) and not is_quasicompact_filter(cm.target, image):
                bad = {"filter": bits_list(filt.members), "reason": "quasicompact lost"}
            if is_irreducible_filter(cm.source, filt) and not is_irreducible_filter(cm.target, image):
                bad = {"filter": bits_list(filt.members), "reason": "irreducible lost"}
        yield name, bad is None, bad


@law("embedding-dense-initial", "ch3",
     "x ↦ U(x) is continuous with initial topology, injective iff T0, dense "
     "among consistent filters")
def _embedding():
    for i, sp in enumerate(corpus_spaces()):
        phi, point_map = embed(sp)
        m = phi.monoid
        bad = None
        image = mask_of(point_map)
        for u_idx, u in enumerate(sp.opens):
            trace = mask_of(x for x in range(sp.n) if phi.basis_set(u_idx) >> point_map[x] & 1)
            if trace != u:
                bad = {"open": bits_list(u), "reason": "preimage of basis set"}
        injective = len(set(point_map)) == sp.n
        if injective != sp.is_t0():
            bad = {"reason": "injectivity vs T0"}
        consistent = phi.consistent_points()
        for u_idx in range(m.size):
            if phi.basis_set(u_idx) & consistent and not phi.basis_set(u_idx) & image:
                bad = {"open_id": u_idx, "reason": "not dense"}
        yield _space_id(i, sp), bad is None, bad


@law("initial-iff-all-fix", "ch3",
     "the source carries the initial topology iff all its filters are fixed "
     "iff all neighbourhood filters are fixed")
def _initial_fix():
    for name, cm in corpus_maps():
        a = initial_topology(cm)
        b = all_filters_fix(cm)
        c = neighborhood_filters_fix(cm)
        ok = a == b == c
        yield name, ok, None if ok else {"initial": a, "all_fix": b, "nbhd_fix": c}


@law("closed-map-criterion", "ch3",
     "a map is closed iff preimages of point neighbourhood filters are "
     "neighbourhood filters of the fibres")
def _closed_criterion():
    for name, cm in corpus_maps():
        direct, criterion = closed_map_sides(cm)
        ok = direct == criterion
        yield name, ok, None if ok else {"direct": direct, "criterion": criterion}


@law("surjective-filterhaft", "ch3", "surjective continuous maps are filterhaft")
def _surjective_filterhaft():
    for name, cm in corpus_maps():
        if set(cm.mapping) != set(range(cm.target.n)):
            continue
        ok = is_filterhaft(cm)
        yield name, ok, None


@law("embedding-filterhaft", "ch3",
     "the canonical map into the consistent filters is a dense filterhaft embedding")
def _embedding_filterhaft():
    for i, sp in enumerate(corpus_spaces()):
        if not sp.is_t0() or len(sp.opens) > 16:
            continue
        phi, point_map = embed(sp)
        filt_space = phi.space(cap=8192)
        consistent = phi.consistent_points()
        sub, renumber = filt_space.subspace(consistent)
        cm = continuous_map(sp, sub, [renumber[p] for p in point_map])
        ok = is_filterhaft(cm)
        bad = None if ok else {"reason": "not filterhaft"}
        image = mask_of(renumber[p] for p in point_map)
        for v in sub.opens:
            if v and not v & image:
                ok = False
                bad = {"reason": "not dense"}
        if not initial_topology(cm) or len(set(point_map)) != sp.n:
            ok = False
            bad = {"reason": "not an embedding"}
        yield _space_id(i, sp), ok, bad


@law("filterhaft-extension-embedding", "ch3",
     "a filterhaft map into a T0 space induces an embedding of the target "
     "into the filtrum of the source")
def _filterhaft_embedding():
    for name, cm in corpus_maps():
        if not cm.target.is_t0() or not is_filterhaft(cm):
            continue
        phi, psi = filtrum_extension_map(cm)
        bad = None
        if len(set(psi)) != cm.target.n:
            bad = {"reason": "not injective"}
        # continuity: preimages of basis sets are open
        for u_idx in range(phi.monoid.size):
            trace = mask_of(y for y in range(cm.target.n) if phi.basis_set(u_idx) >> psi[y] & 1)
            if not cm.target.is_open(trace):
                bad = {"open_id": u_idx, "reason": "not continuous"}
        # embedding: target opens are induced by basis opens
        for w in cm.target.opens:
            covered = 0
            for u_idx in range(phi.monoid.size):
                trace = mask_of(y for y in range(cm.target.n) if phi.basis_set(u_idx) >> psi[y] & 1)
                if is_subset(trace, w):
                    covered |= trace
            if covered != w:
                bad = {"open": bits_list(w), "reason": "not an embedding"}
        yield name, bad is None, bad


@law("sobrification", "ch3",
     "the irreducible filters give a sober space with the same open lattice; "
     "sobrification is idempotent")
def _sobrification():
    for i, sp in enumerate(corpus_spaces()):
        result = sobrify(sp)
        ok = result.lattice_iso and result.space.is_sober()
        bad = None if ok else {"reason": "lattice or soberness"}
        if ok:
            again = sobrify(result.space)
            ok = len(again.space.names) == len(result.space.names) and verify_homeomorphism(
                result.space, again.space, again.point_map
            )
            bad = None if ok else {"reason": "not idempotent"}
        if ok and sp.is_t0() and sp.is_sober():
            ok = verify_homeomorphism(sp, result.space, result.point_map)
            bad = None if ok else {"reason": "sober space changed"}
        yield _space_id(i, sp), ok, bad
