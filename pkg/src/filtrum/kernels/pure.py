"""Pure-Python enumeration kernels.

Same contract as the compiled twin in ``_core``: monoids arrive as a flat
``size*size`` multiplication table of element ids, subsets travel as int
bitmasks, and every function is deterministic (families come back sorted
ascending by mask).
"""

from __future__ import annotations

BACKEND = "pure"


def divisor_masks(size: int, mul: list[int]) -> list[int]:
    """For each element f, the bitmask of all g dividing f (g*a == f)."""
    masks = [0] * size
    for g in range(size):
        row = g * size
        bit = 1 << g
        for a in range(size):
            masks[mul[row + a]] |= bit
    return masks


def close_filter(size: int, mul: list[int], one: int, div_masks: list[int], seed: int) -> int:
    """Smallest filter containing the seed set.

    Multiplicative closure of seed ∪ {one}, then one divisor-closure pass;
    the result is already divisor-stable and product-closed.
    """
    closed = seed | (1 << one)
    frontier = closed
    while frontier:
        fresh = 0
        members = closed
        f_bits = frontier
        while f_bits:
            low = f_bits & -f_bits
            f = low.bit_length() - 1
            f_bits ^= low
            row = f * size
            g_bits = members
            while g_bits:
                glow = g_bits & -g_bits
                g = glow.bit_length() - 1
                g_bits ^= glow
                p = 1 << mul[row + g]
                if not closed & p:
                    fresh |= p
        closed |= fresh
        frontier = fresh

    out = 0
    bits = closed
    while bits:
        low = bits & -bits
        out |= div_masks[low.bit_length() - 1]
        bits ^= low
    return out


def is_filter_mask(size: int, mul: list[int], one: int, div_masks: list[int], mask: int) -> bool:
    if not mask >> one & 1:
        return False
    members = []
    bits = mask
    while bits:
        low = bits & -bits
        f = low.bit_length() - 1
        if div_masks[f] & ~mask:
            return False
        members.append(f)
        bits ^= low
    for i, f in enumerate(members):
        row = f * size
        for g in members[i:]:
            if not mask >> mul[row + g] & 1:
                return False
    return True


def enumerate_filters_scan(
    size: int,
    mul: list[int],
    one: int,
    div_masks: list[int],
    start: int = 0,
    stop: int | None = None,
) -> list[int]:
    """Oracle enumeration: test every subset mask in [start, stop)."""
    if stop is None:
        stop = 1 << size
    one_bit = 1 << one
    found = []
    for mask in range(start, stop):
        if not mask & one_bit:
            continue
        bits = mask
        members = []
        ok = True
        while bits:
            low = bits & -bits
            f = low.bit_length() - 1
            if div_masks[f] & ~mask:
                ok = False
                break
            members.append(f)
            bits ^= low
        if not ok:
            continue
        for i, f in enumerate(members):
            row = f * size
            for g in members[i:]:
                if not mask >> mul[row + g] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(mask)
    return found


def enumerate_filters_closure(size: int, mul: list[int], one: int, div_masks: list[int]) -> list[int]:
    """Closure enumeration: grow filters one generator at a time.

    Every filter is reachable from the unit-group filter by repeatedly
    adjoining a single element and re-closing, so the walk is complete.
    """
    bottom = close_filter(size, mul, one, div_masks, 0)
    family = {bottom}
    queue = [bottom]
    while queue:
        current = queue.pop()
        for x in range(size):
            if current >> x & 1:
                continue
            grown = close_filter(size, mul, one, div_masks, current | (1 << x))
            if grown not in family:
                family.add(grown)
                queue.append(grown)
    return sorted(family)
