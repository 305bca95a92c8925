"""Laws about the filtrum: its topology, functoriality, fixfilters and
the characterization of filtrum spaces."""

from __future__ import annotations

from functools import lru_cache

from ..bits import bits_list, is_subset, iter_bits, mask_of
from ..corpus import (
    boolean_monoid,
    chain_semilattice,
    corpus_homs,
    corpus_rings,
    discrete_space,
    product_pairs,
    small_monoids,
    zmod_mult,
)
from ..filters import Filter, all_filters, generate, is_filter, ultrafilters
from ..filtrum import Filtrum, filtrum, fixfilters, product_homeomorphism, pullback, pushforward
from ..monoid import FiniteMonoid, MonoidHom, fraction_monoid, principal_quotient
from ..rings import (
    all_ideals,
    fix_modulo_ideal,
    mult_monoid,
    prime_ideals,
    quotient_ring,
    ring_filters,
    smallest_fix_filter,
)
from ..spaces import (
    CharacterizeFailure,
    CharacterizeSuccess,
    FiniteSpace,
    characterize_filtrum_space,
    finite_space,
    local_opens,
    verify_homeomorphism,
)
from . import law


@lru_cache(maxsize=None)
def _space(monoid: FiniteMonoid) -> FiniteSpace:
    return filtrum(monoid).space()


def _zero_monoids():
    return [m for m in small_monoids() if m.zero is not None]


@law("basis-multiplicative", "ch2", "D(f·g) = D(f) ∩ D(g)")
def _basis_multiplicative():
    for m in small_monoids():
        phi = filtrum(m)
        bad = None
        for f in m.elements():
            for g in m.elements():
                if phi.basis_set(m.mul(f, g)) != phi.basis_set(f) & phi.basis_set(g):
                    bad = {"f": f, "g": g}
        yield m.name, bad is None, bad


@law("basis-full-iff-unit", "ch2", "D(f) is everything exactly for units")
def _basis_full():
    for m in small_monoids():
        phi = filtrum(m)
        full = (1 << phi.n_points) - 1
        bad = None
        for f in m.elements():
            if (phi.basis_set(f) == full) != bool(m.units >> f & 1):
                bad = {"f": f}
        yield m.name, bad is None, bad


@law("opens-upward-closed", "ch2",
     "open point sets are upward closed and the open predicate matches the materialized family")
def _opens_upward():
    for m in small_monoids():
        phi = filtrum(m)
        opens = set(phi.open_family())
        bad = None
        for u in opens:
            for i in iter_bits(u):
                if not is_subset(phi.upsets[i], u):
                    bad = {"open": bits_list(u)}
        if phi.n_points <= 12:
            for candidate in range(1 << phi.n_points):
                if phi.is_open(candidate) != (candidate in opens):
                    bad = {"candidate": bits_list(candidate)}
                    break
        yield m.name, bad is None, bad


@law("principal-point-membership", "ch2", "F(f) lies in an open iff D(f) is contained in it")
def _principal_point():
    for m in small_monoids():
        phi = filtrum(m)
        bad = None
        for u in phi.open_family():
            for f in m.elements():
                lhs = bool(u >> phi.principal_points[f] & 1)
                rhs = is_subset(phi.basis_set(f), u)
                if lhs != rhs:
                    bad = {"f": f, "open": bits_list(u)}
        yield m.name, bad is None, bad


@law("basis-antitone", "ch2", "D(f) ⊆ D(g) iff F(g) ⊆ F(f)")
def _basis_antitone():
    for m in small_monoids():
        phi = filtrum(m)
        principal = [generate(m, 1 << f).members for f in m.elements()]
        bad = None
        for f in m.elements():
            for g in m.elements():
                if is_subset(phi.basis_set(f), phi.basis_set(g)) != is_subset(principal[g], principal[f]):
                    bad = {"f": f, "g": g}
        yield m.name, bad is None, bad


@law("basis-single-subcover", "ch2", "a cover of a basis set contains a covering member")
def _basis_subcover():
    for m in small_monoids():
        phi = filtrum(m)
        opens = phi.open_family()
        bad = None
        for f in m.elements():
            d = phi.basis_set(f)
            for u in opens:
                for v in opens:
                    if is_subset(d, u | v) and not is_subset(d, u) and not is_subset(d, v):
                        bad = {"f": f, "u": bits_list(u), "v": bits_list(v)}
        yield m.name, bad is None, bad


@law("basis-least-point", "ch2", "an open is a basis set iff it has a least point")
def _basis_least():
    for m in small_monoids():
        phi = filtrum(m)
        basis = set(phi.basis_sets)
        masks = phi.family.masks
        bad = None
        for u in phi.open_family():
            points = bits_list(u)
            has_least = any(
                all(is_subset(masks[i], masks[j]) for j in points) for i in points
            )
            if (u in basis) != has_least:
                bad = {"open": points}
        yield m.name, bad is None, bad


@law("filtrum-t0-closed-point", "ch2", "the filtrum is T0 with the unit group as only closed point")
def _t0_closed():
    for m in small_monoids():
        phi = filtrum(m)
        ok = _space(m).is_t0() and phi.closed_points() == [phi.units_point()]
        yield m.name, ok, None


@law("filtrum-quasicompact-connected", "ch2", "the filtrum is quasicompact and connected")
def _qc_connected():
    for m in small_monoids():
        sp = _space(m)
        ok = sp.is_quasicompact() and sp.is_connected()
        yield m.name, ok, None


@law("consistent-subspace-closed", "ch2",
     "the consistent filters form a closed subspace where D(f) empties exactly for nilpotents")
def _consistent_closed():
    for m in _zero_monoids():
        phi = filtrum(m)
        full = (1 << phi.n_points) - 1
        consistent = phi.consistent_points()
        ok = phi.is_open(full & ~consistent)
        bad = None if ok else {"complement": bits_list(full & ~consistent)}
        for f in m.elements():
            empty = phi.basis_set(f) & consistent == 0
            if empty != m.is_nilpotent(f):
                bad = {"f": f}
                ok = False
        yield m.name, ok, bad


@law("ultrafilter-subspace", "ch2",
     "the ultrafilters form a Hausdorff subspace with clopen basis, dense among consistent filters")
def _ultra_subspace():
    for m in _zero_monoids():
        if m.zero == m.one:
            continue
        phi = filtrum(m)
        sp = _space(m)
        ultra = phi.ultrafilter_points()
        sub, renumber = sp.subspace(ultra)
        ok = sub.is_hausdorff()
        bad = None if ok else {"reason": "not hausdorff"}
        # induced basis sets are clopen in the subspace
        for f in m.elements():
            trace = _restrict_mask(phi.basis_set(f) & ultra, ultra)
            if not sub.is_open(trace) or not sub.is_open(sub.full_mask & ~trace):
                ok = False
                bad = {"f": f, "reason": "basis trace not clopen"}
        # dense in the consistent subspace
        consistent = phi.consistent_points()
        for f in m.elements():
            if phi.basis_set(f) & consistent and not phi.basis_set(f) & ultra:
                ok = False
                bad = {"f": f, "reason": "not dense"}
        yield m.name, ok, bad


def _restrict_mask(mask: int, within: int) -> int:
    out = 0
    pos = 0
    for i in iter_bits(within):
        if mask >> i & 1:
            out |= 1 << pos
        pos += 1
    return out


@law("minimal-prime-subspace", "ch2",
     "minimal primes give a dense, Hausdorff, totally disconnected part of the prime subspace")
def _spek_minimal():
    for ring in corpus_rings():
        if not 1 < ring.size <= 12:
            continue
        m = mult_monoid(ring)
        phi = filtrum(m)
        sp = _space(m)
        full = m.full_mask
        primes = prime_ideals(ring)
        prime_points = mask_of(phi.point_index(full & ~p) for p in primes)
        minimal = [p for p in primes if not any(q != p and is_subset(q, p) for q in primes)]
        min_points = mask_of(phi.point_index(full & ~p) for p in minimal)
        sub, _ = sp.subspace(min_points)
        ok = sub.is_hausdorff() and sub.is_totally_disconnected()
        bad = None if ok else {"reason": "subspace structure"}
        for f in m.elements():
            if phi.basis_set(f) & prime_points and not phi.basis_set(f) & min_points:
                ok = False
                bad = {"f": f, "reason": "not dense in primes"}
        yield ring.name, ok, bad


@law("pullback-continuous", "ch2",
     "preimages of filters are filters and pull basis sets back to basis sets")
def _pullback_continuous():
    for idx, hom in enumerate(corpus_homs()):
        bad = None
        src_phi = filtrum(hom.source)
        dst_phi = filtrum(hom.target)
        for gmask in dst_phi.family.masks:
            pulled = pullback(hom, Filter(hom.target, gmask))
            if not is_filter(hom.source, pulled.members):
                bad = {"target_filter": bits_list(gmask)}
        for f in hom.source.elements():
            preimage = mask_of(
                j for j, gmask in enumerate(dst_phi.family.masks)
                if pullback(hom, Filter(hom.target, gmask)).members >> f & 1
            )
            if preimage != dst_phi.basis_set(hom(f)):
                bad = {"f": f}
        yield f"{idx}:{hom.name}", bad is None, bad


@law("pushforward-continuous", "ch2",
     "image filters are filters and the map is continuous on the filtrum spaces")
def _pushforward_continuous():
    for idx, hom in enumerate(corpus_homs()):
        bad = None
        src_phi = filtrum(hom.source)
        for fmask in src_phi.family.masks:
            pushed = pushforward(hom, Filter(hom.source, fmask))
            if not is_filter(hom.target, pushed.members):
                bad = {"source_filter": bits_list(fmask)}
        for g in hom.target.elements():
            preimage = mask_of(
                i for i, fmask in enumerate(src_phi.family.masks)
                if pushforward(hom, Filter(hom.source, fmask)).members >> g & 1
            )
            if not src_phi.is_open(preimage):
                bad = {"g": g}
        yield f"{idx}:{hom.name}", bad is None, bad


@law("pushforward-functorial", "ch2", "pushing forward along a composite is the composite push")
def _pushforward_functorial():
    chains = [
        ("res12->6+res6->3", zmod_mult(12), "res12->6", "res6->3"),
        ("res12->4+res4->2", zmod_mult(12), "res12->4", "res4->2"),
    ]
    homs = {h.name: h for h in corpus_homs()}
    for name, source, first, second in chains:
        inner = homs[first]
        outer = homs[second]
        composite = outer.compose(inner)
        bad = None
        for fmask in all_filters(source).masks:
            filt = Filter(source, fmask)
            direct = pushforward(composite, filt).members
            stepwise = pushforward(outer, pushforward(inner, filt)).members
            if direct != stepwise:
                bad = {"filter": bits_list(fmask)}
        yield name, bad is None, bad


@law("roundtrip-monotone", "ch2",
     "pull∘push grows source filters; push∘pull shrinks target filters")
def _roundtrip_monotone():
    for idx, hom in enumerate(corpus_homs()):
        bad = None
        for fmask in all_filters(hom.source).masks:
            filt = Filter(hom.source, fmask)
            if not is_subset(fmask, pullback(hom, pushforward(hom, filt)).members):
                bad = {"source_filter": bits_list(fmask)}
        for gmask in all_filters(hom.target).masks:
            filt = Filter(hom.target, gmask)
            if not is_subset(pushforward(hom, pullback(hom, filt)).members, gmask):
                bad = {"target_filter": bits_list(gmask)}
        yield f"{idx}:{hom.name}", bad is None, bad


@law("fixfilter-homeomorphism", "ch2",
     "pushforward restricts to a homeomorphism between the fixfilter subspaces")
def _fixfilter_homeo():
    for idx, hom in enumerate(corpus_homs()):
        src_fix, dst_fix = fixfilters(hom)
        src_phi, dst_phi = filtrum(hom.source), filtrum(hom.target)
        mapped = [pushforward(hom, f).members for f in src_fix]
        ok = sorted(mapped) == list(dst_fix.masks)
        bad = None if ok else {"reason": "not a bijection"}
        if ok:
            for fmask in src_fix.masks:
                back = pullback(hom, pushforward(hom, Filter(hom.source, fmask))).members
                if back != fmask:
                    ok = False
                    bad = {"source_filter": bits_list(fmask)}
        if ok:
            src_points = mask_of(src_phi.point_index(m) for m in src_fix.masks)
            dst_points = mask_of(dst_phi.point_index(m) for m in dst_fix.masks)
            src_sub, src_renumber = _space(hom.source).subspace(src_points)
            dst_sub, dst_renumber = _space(hom.target).subspace(dst_points)
            point_map = [
                dst_renumber[dst_phi.point_index(mapped[k])]
                for k in range(len(src_fix.masks))
            ]
            # source subspace is indexed in mask order, matching src_fix
            ok = verify_homeomorphism(src_sub, dst_sub, point_map)
            bad = None if ok else {"reason": "not a homeomorphism"}
        yield f"{idx}:{hom.name}", ok, bad


@law("surjective-all-fix", "ch2", "along a surjection every target filter is fixed")
def _surjective_fix():
    for idx, hom in enumerate(corpus_homs()):
        if set(hom.mapping) != set(hom.target.elements()):
            continue
        _, dst_fix = fixfilters(hom)
        ok = list(dst_fix.masks) == list(all_filters(hom.target).masks)
        yield f"{idx}:{hom.name}", ok, None


@law("fix-modulo-ideal", "ch2",
     "translation invariance along an ideal agrees with fixness under the residue morphism")
def _fix_modulo():
    for ring in corpus_rings():
        if ring.size > 8:
            continue
        m = mult_monoid(ring)
        bad = None
        for a in all_ideals(ring):
            _, hom = quotient_ring(ring, a)
            for filt in ring_filters(ring):
                direct = fix_modulo_ideal(ring, a, filt)
                functorial = pullback(hom, pushforward(hom, filt)).members == filt.members
                if direct != functorial:
                    bad = {"ideal": bits_list(a), "filter": bits_list(filt.members)}
        yield ring.name, bad is None, bad


@law("fix-modulo-structure", "ch2",
     "F(1+a) is the least fixed filter, the nilradical fixes everything, and a "
     "prime complement is fixed iff it contains the ideal")
def _fix_modulo_structure():
    for ring in corpus_rings():
        if ring.size > 8:
            continue
        m = mult_monoid(ring)
        bad = None
        nil = ring.nilradical()
        for filt in ring_filters(ring):
            if not fix_modulo_ideal(ring, nil, filt):
                bad = {"ideal": "nilradical", "filter": bits_list(filt.members)}
        for a in all_ideals(ring):
            least = smallest_fix_filter(ring, a)
            fixed = [f.members for f in ring_filters(ring) if fix_modulo_ideal(ring, a, f)]
            if least.members not in fixed or any(not is_subset(least.members, f) for f in fixed):
                bad = {"ideal": bits_list(a), "reason": "least fixed filter"}
            for p in prime_ideals(ring):
                complement = Filter(m, m.full_mask & ~p)
                if fix_modulo_ideal(ring, a, complement) != is_subset(a, p):
                    bad = {"ideal": bits_list(a), "prime": bits_list(p)}
        yield ring.name, bad is None, bad


@law("localization-fixfilters", "ch2",
     "after localizing at a filter everything above it is fixed, and every "
     "filter of the localization is fixed")
def _localization_fix():
    for m in (zmod_mult(6), zmod_mult(4), boolean_monoid(2), chain_semilattice(3)):
        family = all_filters(m).masks
        bad = None
        for fmask in family:
            local, hom = fraction_monoid(m, Filter(m, fmask))
            src_fix, dst_fix = fixfilters(hom)
            expected = sorted(g for g in family if is_subset(fmask, g))
            if list(src_fix.masks) != expected:
                bad = {"filter": bits_list(fmask), "reason": "source fixfilters"}
            if list(dst_fix.masks) != list(all_filters(local).masks):
                bad = {"filter": bits_list(fmask), "reason": "target fixfilters"}
        yield m.name, bad is None, bad


@law("principal-fix-iff-all-fix", "ch2",
     "all filters are fixed exactly when all principal filters are")
def _principal_fix():
    for idx, hom in enumerate(corpus_homs()):
        all_fix = all(
            pullback(hom, pushforward(hom, Filter(hom.source, fmask))).members == fmask
            for fmask in all_filters(hom.source).masks
        )
        principal_fix = all(
            pullback(hom, pushforward(hom, generate(hom.source, 1 << f))).members
            == generate(hom.source, 1 << f).members
            for f in hom.source.elements()
        )
        ok = all_fix == principal_fix
        yield f"{idx}:{hom.name}", ok, None


@law("principal-quotient-homeomorphism", "ch2",
     "a monoid and its principal-filter quotient have homeomorphic filtrums")
def _quotient_homeo():
    for m in small_monoids():
        quotient, hom = principal_quotient(m)
        src_phi, dst_phi = filtrum(m), filtrum(quotient)
        point_map = [
            dst_phi.point_index(pushforward(hom, src_phi.point_filter(i)))
            for i in range(src_phi.n_points)
        ]
        ok = verify_homeomorphism(_space(m), _space(quotient), point_map)
        yield m.name, ok, None


@law("product-homeomorphism", "ch2",
     "the filtrum of a product is the product of the filtrums")
def _product_homeo():
    for m1, m2 in product_pairs():
        cert = product_homeomorphism(m1, m2)
        yield f"{m1.name}x{m2.name}", cert.verified, None


@law("filtrum-local-opens", "ch2",
     "on a filtrum, specialization is inclusion and the local opens are the basis sets")
def _filtrum_local():
    for m in small_monoids():
        phi = filtrum(m)
        sp = _space(m)
        bad = None
        for i in range(phi.n_points):
            for j in range(phi.n_points):
                if sp.leq(i, j) != is_subset(phi.family.masks[i], phi.family.masks[j]):
                    bad = {"i": i, "j": j}
        if sorted(local_opens(sp)) != list(phi.basis_sets):
            bad = {"reason": "local opens differ from basis sets"}
        yield m.name, bad is None, bad


@law("characterize-roundtrip", "ch2",
     "every corpus filtrum is recognized with a verified homeomorphism; the "
     "discrete pair is rejected for lacking a global point")
def _characterize():
    for m in small_monoids():
        phi = filtrum(m)
        if phi.n_points > 12:
            continue
        result = characterize_filtrum_space(_space(m))
        ok = isinstance(result, CharacterizeSuccess) and result.verified
        yield m.name, ok, None if ok else {"result": repr(result)}
    result = characterize_filtrum_space(discrete_space(2))
    ok = isinstance(result, CharacterizeFailure) and result.condition == 2
    yield "discrete2", ok, None if ok else {"result": repr(result)}
