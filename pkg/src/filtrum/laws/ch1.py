"""Laws about filters, divisibility, rings, the factorial model and the
quadratic certificates."""

from __future__ import annotations

import random
from itertools import combinations

from ..bits import bits_list, is_subset, iter_bits, mask_of
from ..corpus import (
    boolean_corpus_rings,
    corpus_rings,
    enum_monoids,
    product_pairs,
    small_monoids,
    zmod_mult,
)
from ..factorial import (
    coprime,
    intersect_filters,
    member_of_principal,
    minimal_elements,
    minimal_elements_naive,
    principal_filter as support_filter,
    truncated_monoid,
    truncated_vectors,
)
from ..filters import (
    Filter,
    all_filters,
    generate,
    is_filter,
    maximal_filters_avoiding,
    satisfies_ultrafilter_criterion,
    ultrafilters,
)
from ..monoid import find_isomorphism, fraction_monoid, principal_quotient, product_monoid
from ..quadratic import QuadInt, Member, divides, member_bounded, norm_refutes
from ..rings import (
    all_ideals,
    boolean_ideal_filter_correspondence,
    boolean_ultrafilter_criterion,
    filter_complement_decomposition,
    minimal_prime_ultrafilter_duality,
    minimal_primes_over,
    mult_monoid,
    prime_ideals,
    ring_filters,
    union_complement_is_filter,
)
from . import law


def _zero_monoids():
    return [m for m in small_monoids() if m.zero is not None]


def _subset_sample(size: int, limit: int = 150) -> list[int]:
    if size <= 7:
        return list(range(1 << size))
    rng = random.Random(0)
    return sorted({rng.randrange(1 << size) for _ in range(limit)})


@law("units-filter", "ch1", "the unit group is a filter and lies in every filter")
def _units_filter():
    for m in small_monoids():
        ok = bool(is_filter(m, m.units))
        ok = ok and all(is_subset(m.units, f) for f in all_filters(m).masks)
        yield m.name, ok, None if ok else {"units": bits_list(m.units)}


@law("divides-preorder", "ch1", "divisibility is reflexive and transitive")
def _divides_preorder():
    for m in small_monoids():
        bad = None
        for f in m.elements():
            if not m.divides(f, f):
                bad = {"reflexive": f}
        for g in m.elements():
            for f in m.elements():
                if not m.divides(g, f):
                    continue
                for h in m.elements():
                    if m.divides(h, g) and not m.divides(h, f):
                        bad = {"h": h, "g": g, "f": f}
        yield m.name, bad is None, bad


@law("nonzerodivisors-filter", "ch1", "the non-zerodivisors of a monoid with zero form a filter")
def _nonzerodivisors_filter():
    for m in _zero_monoids():
        check = is_filter(m, m.nonzerodivisors())
        yield m.name, bool(check), None if check else {"axiom": check.axiom}


@law("generate-least", "ch1", "the generated filter is the intersection of all filters containing the seed")
def _generate_least():
    for m in small_monoids():
        family = all_filters(m).masks
        bad = None
        for seed in _subset_sample(m.size):
            expected = m.full_mask
            for f in family:
                if is_subset(seed, f):
                    expected &= f
            if generate(m, seed).members != expected:
                bad = {"seed": bits_list(seed)}
                break
        yield m.name, bad is None, bad


@law("intersection-closed", "ch1", "the intersection of two filters is a filter")
def _intersection_closed():
    for m in small_monoids():
        masks = all_filters(m).masks
        bad = None
        for a in masks:
            for b in masks:
                if not is_filter(m, a & b):
                    bad = {"a": bits_list(a), "b": bits_list(b)}
        yield m.name, bad is None, bad


@law("closure-scan-agree", "ch1", "closure enumeration equals the subset-scan oracle")
def _closure_scan_agree():
    for m in enum_monoids():
        closure = all_filters(m).masks
        scan = all_filters(m, method="scan").masks
        ok = closure == scan
        yield m.name, ok, None if ok else {"closure": len(closure), "scan": len(scan)}


@law("consistent-below-ultrafilter", "ch1", "every consistent filter lies in an ultrafilter")
def _consistent_below_ultrafilter():
    for m in _zero_monoids():
        if m.zero == m.one:
            continue
        ultra = ultrafilters(m).masks
        bad = None
        for f in all_filters(m).masks:
            if f >> m.zero & 1:
                continue
            if not any(is_subset(f, u) for u in ultra):
                bad = {"filter": bits_list(f)}
        yield m.name, bad is None, bad


@law("ultrafilter-criterion", "ch1",
     "a consistent filter is maximal iff every outside element has a power annihilated by a member")
def _ultrafilter_criterion():
    for m in _zero_monoids():
        if m.zero == m.one:
            continue
        ultra = set(ultrafilters(m).masks)
        bad = None
        for f in all_filters(m).masks:
            if f >> m.zero & 1:
                continue
            if satisfies_ultrafilter_criterion(Filter(m, f)) != (f in ultra):
                bad = {"filter": bits_list(f)}
        yield m.name, bad is None, bad


@law("reduced-ultrafilter-intersection", "ch1",
     "without nilpotents the non-zerodivisors are the intersection of all ultrafilters")
def _reduced_intersection():
    for m in _zero_monoids():
        if m.zero == m.one or not m.is_reduced():
            continue
        meet = m.full_mask
        for u in ultrafilters(m).masks:
            meet &= u
        ok = meet == m.nonzerodivisors()
        yield m.name, ok, None if ok else {"intersection": bits_list(meet)}


@law("maximal-avoiding", "ch1",
     "the maximal filters containing a multiplicative set and avoiding a pseudoideal "
     "are exactly the maximal admissible ones")
def _maximal_avoiding():
    for ring in corpus_rings():
        if ring.size > 8:
            continue
        m = mult_monoid(ring)
        family = all_filters(m).masks
        for a in all_ideals(ring):
            if a & m.units:
                continue
            result = set(maximal_filters_avoiding(m, m.units, a).masks)
            admissible = [f for f in family if is_subset(m.units, f) and not f & a]
            expected = {
                f for f in admissible
                if not any(g != f and is_subset(f, g) for g in admissible)
            }
            ok = result == expected
            yield f"{ring.name}/a={bits_list(a)}", ok, None if ok else {
                "got": sorted(map(bits_list, result)),
                "expected": sorted(map(bits_list, expected)),
            }


@law("prime-union-complement", "ch1", "the complement of any union of primes is a filter")
def _prime_union_complement():
    for ring in corpus_rings():
        primes = prime_ideals(ring)
        bad = None
        for k in range(len(primes) + 1):
            for chosen in combinations(primes, k):
                try:
                    union_complement_is_filter(ring, chosen)
                except Exception:
                    bad = {"primes": [bits_list(p) for p in chosen]}
        yield ring.name, bad is None, bad


@law("filter-complement-decomposition", "ch1",
     "every filter complement is a union of prime ideals")
def _filter_complement_decomposition():
    for ring in corpus_rings():
        bad = None
        for filt in ring_filters(ring):
            try:
                filter_complement_decomposition(ring, filt)
            except AssertionError:
                bad = {"filter": bits_list(filt.members)}
        yield ring.name, bad is None, bad


@law("relative-maximal-minimal-primes", "ch1",
     "complements of the filters maximal among those avoiding an ideal are the minimal primes over it")
def _relative_maximal():
    for ring in corpus_rings():
        if ring.size > 12:
            continue
        m = mult_monoid(ring)
        for a in all_ideals(ring):
            if a & m.units:
                continue
            family = maximal_filters_avoiding(m, m.units, a)
            complements = sorted(m.full_mask & ~f for f in family.masks)
            expected = sorted(minimal_primes_over(ring, a))
            ok = complements == expected
            yield f"{ring.name}/a={bits_list(a)}", ok, None if ok else {
                "complements": [bits_list(c) for c in complements],
                "minimal_primes": [bits_list(p) for p in expected],
            }


@law("ultrafilter-minimal-prime-duality", "ch1",
     "complement is a bijection between ultrafilters and minimal primes")
def _duality():
    for ring in corpus_rings():
        if ring.size == 1:
            continue
        try:
            minimal_prime_ultrafilter_duality(ring)
            yield ring.name, True, None
        except AssertionError as exc:
            yield ring.name, False, {"reason": str(exc)}


@law("boolean-correspondence", "ch1",
     "in boolean rings e ↦ 1-e swaps ideals and filters bijectively")
def _boolean_correspondence():
    for ring in boolean_corpus_rings():
        try:
            pairs = boolean_ideal_filter_correspondence(ring)
            yield ring.name, True, None
        except AssertionError as exc:
            yield ring.name, False, {"reason": str(exc)}


@law("boolean-ultrafilter-parity", "ch1",
     "a boolean filter is an ultrafilter iff it contains exactly one of e, 1-e for every e")
def _boolean_parity():
    for ring in boolean_corpus_rings():
        m = mult_monoid(ring)
        ultra = set(ultrafilters(m).masks)
        bad = None
        for filt in ring_filters(ring):
            if boolean_ultrafilter_criterion(ring, filt) != (filt.members in ultra):
                bad = {"filter": bits_list(filt.members)}
        yield ring.name, bad is None, bad


@law("boolean-ultrafilter-intersection", "ch1",
     "every boolean filter is an intersection of ultrafilters")
def _boolean_intersection():
    for ring in boolean_corpus_rings():
        m = mult_monoid(ring)
        ultra = ultrafilters(m).masks
        bad = None
        for filt in ring_filters(ring):
            meet = m.full_mask
            for u in ultra:
                if is_subset(filt.members, u):
                    meet &= u
            if meet != filt.members:
                bad = {"filter": bits_list(filt.members), "intersection": bits_list(meet)}
        yield ring.name, bad is None, bad


@law("fraction-units-identity", "ch1", "localizing at the unit group changes nothing")
def _fraction_units():
    for m in small_monoids():
        local, _ = fraction_monoid(m, Filter(m, m.units))
        ok = find_isomorphism(local, m) is not None
        yield m.name, ok, None if ok else {"local_size": local.size}


@law("fraction-filter-count", "ch1",
     "the localization at a filter has as many filters as lie above it")
def _fraction_count():
    for m in small_monoids():
        family = all_filters(m).masks
        bad = None
        for fmask in family:
            local, _ = fraction_monoid(m, Filter(m, fmask))
            above = sum(1 for g in family if is_subset(fmask, g))
            if len(all_filters(local)) != above:
                bad = {"filter": bits_list(fmask), "local": len(all_filters(local)), "above": above}
        yield m.name, bad is None, bad


@law("principal-quotient-count", "ch1",
     "identifying elements with equal principal filters preserves the filter count")
def _quotient_count():
    for m in small_monoids():
        quotient, _ = principal_quotient(m)
        ok = len(all_filters(m)) == len(all_filters(quotient))
        yield m.name, ok, None if ok else {"quotient_size": quotient.size}


@law("product-filter-count", "ch1", "filters of a product are pairs of filters")
def _product_count():
    for m1, m2 in product_pairs():
        prod, p1, p2 = product_monoid(m1, m2)
        ok = len(all_filters(prod)) == len(all_filters(m1)) * len(all_filters(m2))
        yield f"{m1.name}x{m2.name}", ok, None


@law("principal-membership", "ch1",
     "g divides a power of f iff g lies in the filter of f iff the filters nest")
def _principal_membership():
    for m in small_monoids():
        principal = [generate(m, 1 << f).members for f in m.elements()]
        bad = None
        for f in m.elements():
            for g in m.elements():
                power = m.one
                divides_some = False
                for _ in range(m.size + 1):
                    if m.divides(g, power):
                        divides_some = True
                        break
                    power = m.mul(power, f)
                member = bool(principal[f] >> g & 1)
                nested = is_subset(principal[g], principal[f])
                if not (divides_some == member == nested):
                    bad = {"f": f, "g": g}
        yield m.name, bad is None, bad


@law("principal-edges", "ch1", "F(1) is the unit group; F(0) is everything")
def _principal_edges():
    for m in small_monoids():
        ok = generate(m, 1 << m.one).members == m.units
        if m.zero is not None:
            ok = ok and generate(m, 1 << m.zero).members == m.full_mask
        yield m.name, ok, None


@law("principal-product", "ch1", "F(F(f) ∪ F(g)) = F(f, g) = F(f·g)")
def _principal_product():
    for m in small_monoids():
        bad = None
        for f in m.elements():
            for g in m.elements():
                a = generate(m, generate(m, 1 << f).members | generate(m, 1 << g).members).members
                b = generate(m, (1 << f) | (1 << g)).members
                c = generate(m, 1 << m.mul(f, g)).members
                if not a == b == c:
                    bad = {"f": f, "g": g}
        yield m.name, bad is None, bad


# -- factorial model ----------------------------------------------------------


@law("factorial-prime-subsets", "ch1",
     "filters of the truncated free monoid are exactly the prime subsets")
def _factorial_bijection():
    for k in range(1, 5):
        m = truncated_monoid(k)
        vectors = truncated_vectors(k)
        family = set(all_filters(m, cap=m.size).masks)
        expected = set()
        for bitsel in range(1 << k):
            chosen = {i for i in range(k) if bitsel >> i & 1}
            expected.add(mask_of(
                i for i, v in enumerate(vectors) if support_filter(v) <= chosen
            ))
        ok = family == expected
        yield f"P{k}", ok, None if ok else {"filters": len(family), "expected": len(expected)}


@law("factorial-regenerate", "ch1",
     "a filter is regenerated by the single-prime elements it contains")
def _factorial_regenerate():
    for k in range(1, 4):
        m = truncated_monoid(k)
        vectors = truncated_vectors(k)
        singles = {
            i for i, v in enumerate(vectors)
            if sum(v) == 1
        }
        bad = None
        for fmask in all_filters(m, cap=m.size).masks:
            seed = mask_of(i for i in bits_list(fmask) if i in singles)
            if generate(m, seed).members != fmask:
                bad = {"filter": bits_list(fmask)}
        yield f"P{k}", bad is None, bad


@law("factorial-membership-supports", "ch1",
     "membership in an intersection of principal filters reads off the supports")
def _factorial_membership():
    rng = random.Random(1)
    bad = None
    for trial in range(200):
        n = rng.randint(1, 5)
        g = tuple(rng.randint(0, 6) for _ in range(n))
        fs = [tuple(rng.randint(0, 6) for _ in range(n)) for _ in range(rng.randint(1, 3))]
        direct = all(member_of_principal(g, f, bound=12) for f in fs)
        via_support = support_filter(g) <= intersect_filters([support_filter(f) for f in fs])
        if direct != via_support:
            bad = {"g": list(g), "fs": [list(f) for f in fs]}
            break
    yield "random200", bad is None, bad


@law("principal-radical-intersection", "ch1",
     "intersections of principal filters are principal, generated by any "
     "element supported on the intersection")
def _radical_intersection():
    for k in range(1, 4):
        m = truncated_monoid(k)
        vectors = truncated_vectors(k)
        index = {v: i for i, v in enumerate(vectors)}
        bad = None
        for f in vectors:
            for g in vectors:
                meet = generate(m, 1 << index[f]).members & generate(m, 1 << index[g]).members
                common = support_filter(f) & support_filter(g)
                witness = tuple(1 if i in common else 0 for i in range(k))
                if generate(m, 1 << index[witness]).members != meet:
                    bad = {"f": list(f), "g": list(g)}
        yield f"P{k}", bad is None, bad


@law("coprime-unit-intersection", "ch1",
     "coprime elements have filters meeting only in the units")
def _coprime_units():
    for k in range(1, 4):
        m = truncated_monoid(k)
        vectors = truncated_vectors(k)
        index = {v: i for i, v in enumerate(vectors)}
        bad = None
        for f in vectors:
            for g in vectors:
                meet = generate(m, 1 << index[f]).members & generate(m, 1 << index[g]).members
                if coprime(f, g) != (meet == m.units):
                    bad = {"f": list(f), "g": list(g)}
        yield f"P{k}", bad is None, bad


@law("dickson-minimal", "ch1",
     "the recursive minimal-element scheme matches the pairwise oracle")
def _dickson():
    rng = random.Random(2024)
    bad = None
    for trial in range(500):
        n = rng.randint(1, 5)
        count = rng.randint(1, 30)
        vecs = [tuple(rng.randint(0, 10) for _ in range(n)) for _ in range(count)]
        if minimal_elements(vecs) != minimal_elements_naive(vecs):
            bad = {"trial": trial, "vectors": [list(v) for v in vecs]}
            break
    yield "random500", bad is None, bad


# -- quadratic certificates ---------------------------------------------------


@law("quadratic-identities", "ch1", "the Z[√-5] product identities hold bit-exactly")
def _quad_identities():
    root = QuadInt(1, 1)
    checks = {
        "square": root * root == QuadInt(-4, 2),
        "nine": QuadInt(2, -1) * QuadInt(2, 1) == QuadInt(9, 0),
        "minus-two": root * root == QuadInt(-2, 0) * QuadInt(2, -1),
    }
    for name, ok in checks.items():
        yield name, ok, None


@law("quadratic-membership", "ch1",
     "the bounded membership search certifies the three divisibilities at exponent 2")
def _quad_membership():
    cases = [
        ("2-in-F(1+r)", QuadInt(2, 0), QuadInt(1, 1), QuadInt(-2, 1)),
        ("2-r-in-F(3)", QuadInt(2, -1), QuadInt(3, 0), QuadInt(2, 1)),
        ("2-r-in-F(1+r)", QuadInt(2, -1), QuadInt(1, 1), QuadInt(-2, 0)),
    ]
    for name, g, f, witness in cases:
        result = member_bounded(g, f, 4)
        ok = isinstance(result, Member) and result.exponent == 2 and result.witness == witness
        yield name, ok, None if ok else {"result": repr(result)}


@law("quadratic-norm-refutation", "ch1",
     "the norm oracle refutes 1+√-5 dividing any power of two up to 20")
def _quad_refutation():
    root = QuadInt(1, 1)
    ok = all(norm_refutes(root, QuadInt(2, 0) ** n) for n in range(1, 21))
    ok = ok and not any(divides(root, QuadInt(2, 0) ** n) for n in range(1, 21))
    yield "powers-of-two", ok, None


@law("quadratic-norm-multiplicative", "ch1", "norms multiply")
def _quad_norm_mult():
    rng = random.Random(3)
    bad = None
    for _ in range(1000):
        x = QuadInt(rng.randint(-100, 100), rng.randint(-100, 100))
        y = QuadInt(rng.randint(-100, 100), rng.randint(-100, 100))
        if (x * y).norm() != x.norm() * y.norm():
            bad = {"x": repr(x), "y": repr(y)}
            break
    yield "random1000", bad is None, bad


@law("quadratic-divides-norm", "ch1", "divisibility forces norm divisibility")
def _quad_divides_norm():
    rng = random.Random(4)
    bad = None
    for _ in range(500):
        g = QuadInt(rng.randint(-20, 20), rng.randint(-20, 20))
        q = QuadInt(rng.randint(-20, 20), rng.randint(-20, 20))
        if g.is_zero():
            continue
        f = g * q
        if not divides(g, f) or f.norm() % g.norm():
            bad = {"g": repr(g), "f": repr(f)}
            break
    yield "random500", bad is None, bad
