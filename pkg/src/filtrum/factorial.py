"""The factorial model: the free commutative monoid over a finite prime
set, where a filter is determined by the primes it contains.

Elements are exponent vectors (plain tuples); the filter generated by an
element is identified with its support, since g divides a power of f
exactly when the support of g lies in the support of f.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ArityMismatch, EmptyList
from .monoid import FiniteMonoid, validate_monoid

Vec = tuple[int, ...]


def support(vec: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(vec) if e)


def principal_filter(vec: Sequence[int]) -> frozenset[int]:
    """Prime-subset form of the filter generated by the element."""
    return support(vec)


def intersect_filters(filters: Sequence[frozenset[int]]) -> frozenset[int]:
    """Intersection of prime-subset filters; any element supported exactly
    here generates the intersection."""
    if not filters:
        raise EmptyList("need at least one filter")
    out = filters[0]
    for f in filters[1:]:
        out = out & f
    return out


def coprime(f: Sequence[int], g: Sequence[int]) -> bool:
    return not (support(f) & support(g))


def member_of_principal(g: Sequence[int], f: Sequence[int], bound: int | None = None) -> bool:
    """Oracle: does g divide some power f^n?  With a bound, search n
    directly; without, use the support criterion."""
    if len(g) != len(f):
        raise ArityMismatch(f"arities differ: {len(g)} vs {len(f)}")
    if bound is None:
        return support(g) <= support(f)
    return any(
        all(gi <= n * fi for gi, fi in zip(g, f))
        for n in range(bound + 1)
    )


def minimal_elements_naive(vectors: Iterable[Sequence[int]]) -> list[Vec]:
    """Pairwise-domination oracle."""
    vecs = sorted({tuple(v) for v in vectors})
    _check_arity(vecs)
    out = []
    for v in vecs:
        if not any(w != v and _dominates(v, w) for w in vecs):
            out.append(v)
    return out


def minimal_elements(vectors: Iterable[Sequence[int]]) -> list[Vec]:
    """Minimal elements under the componentwise order.

    Recursive scheme: a minimal element either stays minimal after
    dropping some coordinate, or each of its coordinates is bounded by
    the values occurring on the coordinate-wise minimal projections.
    Candidates from the two cases are then filtered pairwise.
    """
    vecs = sorted({tuple(v) for v in vectors})
    _check_arity(vecs)
    return _minimal_rec(vecs)


def _check_arity(vecs: list[Vec]) -> None:
    if vecs and any(len(v) != len(vecs[0]) for v in vecs):
        raise ArityMismatch("vectors have mixed arities")


def _dominates(v: Vec, w: Vec) -> bool:
    """w <= v componentwise."""
    return all(wi <= vi for wi, vi in zip(w, v))


def _minimal_rec(vecs: list[Vec]) -> list[Vec]:
    if len(vecs) <= 1:
        return list(vecs)
    n = len(vecs[0])
    if n <= 1:
        return [min(vecs)]

    candidates: set[Vec] = set()
    bounds = []
    for i in range(n):
        projected = sorted({v[:i] + v[i + 1:] for v in vecs})
        proj_min = set(_minimal_rec(projected))
        coord_values = []
        for v in vecs:
            if v[:i] + v[i + 1:] in proj_min:
                candidates.add(v)
                coord_values.append(v[i])
        bounds.append(max(coord_values))
    for v in vecs:
        if all(v[i] < bounds[i] for i in range(n)):
            candidates.add(v)

    ordered = sorted(candidates)
    return [v for v in ordered if not any(w != v and _dominates(v, w) for w in ordered)]


def truncated_monoid(num_primes: int, cap: int = 2) -> FiniteMonoid:
    """Free commutative monoid on the primes with exponents clamped at
    the cap; elements ordered lexicographically by vector.

    The clamp creates an absorbing element (all exponents at the cap),
    which is deliberately not declared as a zero: the free monoid being
    modelled has none, and every prime-subset filter counts as consistent.
    """
    vectors = [()]
    for _ in range(num_primes):
        vectors = [v + (e,) for v in vectors for e in range(cap + 1)]
    vectors.sort()
    index = {v: i for i, v in enumerate(vectors)}
    table = [
        [index[tuple(min(cap, a + b) for a, b in zip(v, w))] for w in vectors]
        for v in vectors
    ]
    monoid = validate_monoid(table, one=index[(0,) * num_primes],
                             warn_undeclared_zero=False,
                             name=f"free{num_primes}cap{cap}")
    return monoid


def truncated_vectors(num_primes: int, cap: int = 2) -> list[Vec]:
    vectors = [()]
    for _ in range(num_primes):
        vectors = [v + (e,) for v in vectors for e in range(cap + 1)]
    return sorted(vectors)
