# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; contract mirrors ``kernels.pure``."""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef inline int _lowest_bit(unsigned long long v) nogil:
    cdef int i = 0
    while not (v & 1):
        v >>= 1
        i += 1
    return i


def divisor_masks(int size, mul):
    cdef int g, a
    cdef unsigned long long bit
    cdef int* table = <int*> malloc(size * size * sizeof(int))
    cdef unsigned long long* masks = <unsigned long long*> malloc(size * sizeof(unsigned long long))
    if table == NULL or masks == NULL:
        free(table)
        free(masks)
        raise MemoryError()
    try:
        for g in range(size * size):
            table[g] = mul[g]
        for g in range(size):
            masks[g] = 0
        for g in range(size):
            bit = 1ULL << g
            for a in range(size):
                masks[table[g * size + a]] |= bit
        return [masks[g] for g in range(size)]
    finally:
        free(table)
        free(masks)


cdef unsigned long long _close(int size, int* mul, int one,
                               unsigned long long* divs,
                               unsigned long long seed) nogil:
    cdef unsigned long long closed = seed | (1ULL << one)
    cdef unsigned long long frontier = closed
    cdef unsigned long long fresh, fbits, gbits, p, out, low
    cdef int f, g
    while frontier:
        fresh = 0
        fbits = frontier
        while fbits:
            f = _lowest_bit(fbits)
            fbits &= fbits - 1
            gbits = closed
            while gbits:
                g = _lowest_bit(gbits)
                gbits &= gbits - 1
                p = 1ULL << mul[f * size + g]
                if not (closed & p):
                    fresh |= p
        closed |= fresh
        frontier = fresh
    out = 0
    fbits = closed
    while fbits:
        f = _lowest_bit(fbits)
        fbits &= fbits - 1
        out |= divs[f]
    return out


cdef int _check(int size, int* mul, int one, unsigned long long* divs,
                unsigned long long mask, int* members) nogil:
    cdef unsigned long long bits = mask
    cdef int count = 0
    cdef int i, j, f
    if not (mask >> one) & 1:
        return 0
    while bits:
        f = _lowest_bit(bits)
        bits &= bits - 1
        if divs[f] & ~mask:
            return 0
        members[count] = f
        count += 1
    for i in range(count):
        f = members[i] * size
        for j in range(i, count):
            if not (mask >> mul[f + members[j]]) & 1:
                return 0
    return 1


cdef class _Tables:
    cdef int size
    cdef int one
    cdef int* mul
    cdef unsigned long long* divs
    cdef int* scratch

    def __cinit__(self, int size, mul, int one, div_masks):
        cdef int i
        self.size = size
        self.one = one
        self.mul = <int*> malloc(size * size * sizeof(int))
        self.divs = <unsigned long long*> malloc(size * sizeof(unsigned long long))
        self.scratch = <int*> malloc(size * sizeof(int))
        if self.mul == NULL or self.divs == NULL or self.scratch == NULL:
            raise MemoryError()
        for i in range(size * size):
            self.mul[i] = mul[i]
        for i in range(size):
            self.divs[i] = div_masks[i]

    def __dealloc__(self):
        free(self.mul)
        free(self.divs)
        free(self.scratch)


def close_filter(int size, mul, int one, div_masks, seed):
    cdef _Tables t = _Tables(size, mul, one, div_masks)
    return _close(size, t.mul, one, t.divs, <unsigned long long> seed)


def is_filter_mask(int size, mul, int one, div_masks, mask):
    cdef _Tables t = _Tables(size, mul, one, div_masks)
    return bool(_check(size, t.mul, one, t.divs, <unsigned long long> mask, t.scratch))


def enumerate_filters_scan(int size, mul, int one, div_masks, start=0, stop=None):
    cdef _Tables t = _Tables(size, mul, one, div_masks)
    cdef unsigned long long mask
    cdef unsigned long long lo = <unsigned long long> start
    cdef unsigned long long hi
    if stop is None:
        hi = 1ULL << size
    else:
        hi = <unsigned long long> stop
    found = []
    for mask in range(lo, hi):
        if _check(size, t.mul, one, t.divs, mask, t.scratch):
            found.append(mask)
    return found


def enumerate_filters_closure(int size, mul, int one, div_masks):
    cdef _Tables t = _Tables(size, mul, one, div_masks)
    cdef unsigned long long bottom = _close(size, t.mul, one, t.divs, 0)
    cdef unsigned long long current, grown
    cdef int x
    family = {bottom}
    queue = [bottom]
    while queue:
        current = queue.pop()
        for x in range(size):
            if (current >> x) & 1:
                continue
            grown = _close(size, t.mul, one, t.divs, current | (1ULL << x))
            if grown not in family:
                family.add(grown)
                queue.append(grown)
    return sorted(family)
