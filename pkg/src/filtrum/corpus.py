"""The validation corpus: the fixed zoo of monoids, rings, spaces, maps
and morphisms that the law suite quantifies over.

Everything is constructed deterministically; instance ids double as
report keys, so names matter.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NotContinuous
from .factorial import truncated_monoid
from .filters import all_filters
from .monoid import (
    FiniteMonoid,
    MonoidHom,
    fraction_monoid,
    identity_hom,
    monoid_hom,
    principal_quotient,
    product_monoid,
    submonoid,
    validate_monoid,
)
from .rings import FiniteRing, boolean_ring, mult_monoid, product_ring, zmod_ring
from .spaces import ContinuousMap, FiniteSpace, continuous_map, finite_space, space_from_up_sets


# -- monoids ------------------------------------------------------------------


@lru_cache(maxsize=None)
def trivial_monoid(with_zero: bool = False) -> FiniteMonoid:
    return validate_monoid([[0]], one=0, zero=0 if with_zero else None,
                           name="trivial0" if with_zero else "trivial",
                           warn_undeclared_zero=False)


@lru_cache(maxsize=None)
def zmod_mult(n: int) -> FiniteMonoid:
    return mult_monoid(zmod_ring(n))


@lru_cache(maxsize=None)
def boolean_monoid(k: int) -> FiniteMonoid:
    return mult_monoid(boolean_ring(k))


@lru_cache(maxsize=None)
def chain_semilattice(n: int) -> FiniteMonoid:
    """Meet semilattice 0 < 1 < ... < n-1 under min; idempotent."""
    table = [[min(a, b) for b in range(n)] for a in range(n)]
    return validate_monoid(table, one=n - 1, zero=0, name=f"chain{n}")


@lru_cache(maxsize=None)
def nil_monoid(n: int) -> FiniteMonoid:
    """Powers of a single nilpotent: 1, x, ..., x^n = 0."""
    table = [[min(a + b, n) for b in range(n + 1)] for a in range(n + 1)]
    return validate_monoid(table, one=0, zero=n, name=f"nil{n}")


def small_monoids() -> list[FiniteMonoid]:
    """Structure corpus (|M| <= 8) for the quantified laws."""
    out = [
        trivial_monoid(),
        trivial_monoid(with_zero=True),
        chain_semilattice(2),
        chain_semilattice(3),
        chain_semilattice(4),
        nil_monoid(2),
        nil_monoid(3),
        truncated_monoid(1),
    ]
    out.extend(zmod_mult(n) for n in range(2, 9))
    out.extend(boolean_monoid(k) for k in (1, 2, 3))
    return out


def enum_monoids() -> list[FiniteMonoid]:
    """Oracle corpus (|M| <= 16) for closure-vs-scan equivalence."""
    out = list(small_monoids())
    out.extend(zmod_mult(n) for n in range(9, 13))
    out.append(truncated_monoid(2))
    for a, b in ((2, 6), (3, 4), (4, 4), (2, 8)):
        prod, _, _ = product_monoid(zmod_mult(a), zmod_mult(b))
        out.append(prod)
    return [m for m in out if m.size <= 16]


def product_pairs() -> list[tuple[FiniteMonoid, FiniteMonoid]]:
    return [
        (trivial_monoid(), zmod_mult(6)),
        (zmod_mult(2), zmod_mult(2)),
        (zmod_mult(2), zmod_mult(3)),
        (zmod_mult(4), zmod_mult(6)),
        (boolean_monoid(2), zmod_mult(3)),
        (chain_semilattice(2), zmod_mult(4)),
    ]


# -- monoid homs --------------------------------------------------------------


def corpus_homs() -> list[MonoidHom]:
    """Morphism corpus: identities, residue maps, localizations,
    projections, inclusions, quotients and one section."""
    homs: list[MonoidHom] = [
        identity_hom(zmod_mult(6)),
        identity_hom(boolean_monoid(2)),
    ]
    # residue maps Z/n -> Z/d on the multiplicative monoids
    for n, d in ((6, 3), (6, 2), (4, 2), (12, 4), (12, 6)):
        homs.append(monoid_hom(zmod_mult(n), zmod_mult(d), [x % d for x in range(n)],
                               name=f"res{n}->{d}"))
    # localizations at every filter of a few small monoids
    for m in (zmod_mult(6), zmod_mult(4), boolean_monoid(2), chain_semilattice(3)):
        for filt in all_filters(m):
            _, hom = fraction_monoid(m, filt)
            homs.append(hom)
    # product projections
    for m1, m2 in ((zmod_mult(2), zmod_mult(3)), (zmod_mult(4), zmod_mult(6))):
        _, p1, p2 = product_monoid(m1, m2)
        homs.extend((p1, p2))
    # inclusion of the unit group
    units_sub, incl = submonoid(zmod_mult(6), zmod_mult(6).units, name="units6")
    homs.append(incl)
    # collapse to the trivial monoid
    homs.append(monoid_hom(zmod_mult(6), trivial_monoid(), [0] * 6, name="collapse"))
    # principal-filter quotients
    for m in (zmod_mult(6), zmod_mult(12), nil_monoid(3), chain_semilattice(4)):
        _, hom = principal_quotient(m)
        homs.append(hom)
    # a section of Z/3 into Z/6 (the idempotent-complement component)
    homs.append(monoid_hom(zmod_mult(3), zmod_mult(6), [3, 1, 5], name="sect3->6"))
    return homs


# -- rings --------------------------------------------------------------------


def corpus_rings() -> list[FiniteRing]:
    out = [zmod_ring(n) for n in range(1, 13)]
    out.extend(boolean_ring(k) for k in (1, 2, 3))
    out.append(product_ring(zmod_ring(2), zmod_ring(4)))
    out.append(product_ring(zmod_ring(3), zmod_ring(4)))
    out.append(product_ring(zmod_ring(4), zmod_ring(6)))
    out.append(product_ring(zmod_ring(2), zmod_ring(12)))
    return out


def boolean_corpus_rings() -> list[FiniteRing]:
    return [boolean_ring(k) for k in (1, 2, 3)]


# -- spaces -------------------------------------------------------------------


@lru_cache(maxsize=None)
def sierpinski() -> FiniteSpace:
    return finite_space(["a", "b"], [[], [0], [0, 1]])


@lru_cache(maxsize=None)
def discrete_space(n: int) -> FiniteSpace:
    return finite_space([f"p{i}" for i in range(n)], list(range(1 << n)))


@lru_cache(maxsize=None)
def indiscrete_space(n: int) -> FiniteSpace:
    return finite_space([f"p{i}" for i in range(n)], [0, (1 << n) - 1])


@lru_cache(maxsize=None)
def chain_space(n: int) -> FiniteSpace:
    """Opens totally ordered: ∅ ⊂ {0} ⊂ {0,1} ⊂ ... ⊂ X."""
    return finite_space([f"p{i}" for i in range(n)], [(1 << k) - 1 for k in range(n + 1)])


@lru_cache(maxsize=None)
def glued_pair_space() -> FiniteSpace:
    """Three points where two are topologically indistinguishable."""
    return finite_space(["a", "b", "c"], [[], [0], [0, 1, 2]])


def all_t0_spaces(max_points: int = 4) -> list[FiniteSpace]:
    """Every labeled partial order on up to ``max_points`` points, with
    opens the up-sets."""
    spaces = []
    for n in range(1, max_points + 1):
        off_diag = [(x, y) for x in range(n) for y in range(n) if x != y]
        for bitsel in range(1 << len(off_diag)):
            leq = [[x == y for y in range(n)] for x in range(n)]
            for k, (x, y) in enumerate(off_diag):
                if bitsel >> k & 1:
                    leq[x][y] = True
            if any(leq[x][y] and leq[y][x] for x, y in off_diag):
                continue
            if any(
                leq[x][y] and leq[y][z] and not leq[x][z]
                for x in range(n) for y in range(n) for z in range(n)
            ):
                continue
            spaces.append(space_from_up_sets(n, leq))
    return spaces


def corpus_spaces() -> list[FiniteSpace]:
    out = all_t0_spaces(4)
    out.extend(discrete_space(n) for n in (2, 3, 5))
    out.extend(indiscrete_space(n) for n in (2, 3))
    out.append(chain_space(5))
    out.append(glued_pair_space())
    out.append(sierpinski())
    return out


def small_space_pairs() -> list[tuple[FiniteSpace, FiniteSpace]]:
    pool = [
        sierpinski(),
        discrete_space(2),
        chain_space(3),
        indiscrete_space(2),
        discrete_space(1),
        glued_pair_space(),
    ]
    return [(x, y) for x in pool for y in pool]


def corpus_maps() -> list[tuple[str, ContinuousMap]]:
    """All continuous maps between the small space pool, tagged."""
    out = []
    for i, (src, dst) in enumerate(small_space_pairs()):
        count = 0
        for code in range(dst.n ** src.n):
            mapping = []
            c = code
            for _ in range(src.n):
                mapping.append(c % dst.n)
                c //= dst.n
            try:
                cm = continuous_map(src, dst, mapping)
            except NotContinuous:
                continue
            out.append((f"pair{i}map{count}", cm))
            count += 1
    return out
