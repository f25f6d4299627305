# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: float harmonic sum and fixed-point harmonic sum.

Must return exactly what ``_pykernels`` returns for the same arguments.
"""
from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free

cdef extern from *:
    """
    #include <stdint.h>
    static inline uint64_t hc_div128(uint64_t hi, uint64_t lo, uint64_t d,
                                     uint64_t *rem) {
    #if defined(__x86_64__) && defined(__GNUC__)
        uint64_t q, r;
        __asm__("divq %4" : "=a"(q), "=d"(r) : "a"(lo), "d"(hi), "rm"(d));
        *rem = r;
        return q;
    #else
        unsigned __int128 num = ((unsigned __int128)hi << 64) | lo;
        *rem = (uint64_t)(num % d);
        return (uint64_t)(num / d);
    #endif
    }
    """
    uint64_t hc_div128(uint64_t hi, uint64_t lo, uint64_t d, uint64_t *rem) nogil

LIMB_BITS = 64


def naive_float_sum(Py_ssize_t n):
    """Left-to-right double precision sum of 1/r for r = 1..n."""
    cdef double s = 0.0
    cdef Py_ssize_t r
    with nogil:
        for r in range(1, n + 1):
            s += 1.0 / <double>r
    return s


def harmonic_fixed_point(n, int limbs):
    """Return ``sum(floor(2**P / r) for r in 1..n)`` with ``P = 64 * limbs``."""
    if n < 0 or limbs < 1:
        raise ValueError("n must be >= 0 and limbs >= 1")
    cdef uint64_t count = n
    # acc[0..limbs-1] fractional limbs (little endian), acc[limbs] integer part
    cdef uint64_t *acc = <uint64_t *> calloc(limbs + 1, sizeof(uint64_t))
    cdef uint64_t *quo = <uint64_t *> calloc(limbs, sizeof(uint64_t))
    cdef uint64_t r, rem, carry, before, c1
    cdef int i
    if acc == NULL or quo == NULL:
        free(acc)
        free(quo)
        raise MemoryError()
    try:
        with nogil:
            if count >= 1:
                acc[limbs] += 1
            r = 2
            while r <= count:
                rem = 1
                i = limbs - 1
                while i >= 0:
                    quo[i] = hc_div128(rem, 0, r, &rem)
                    i -= 1
                carry = 0
                for i in range(limbs):
                    before = acc[i] + quo[i]
                    c1 = before < quo[i]
                    acc[i] = before + carry
                    carry = c1 | (acc[i] < before)
                acc[limbs] += carry
                r += 1
        total = 0
        for i in range(limbs, -1, -1):
            total = (total << 64) | acc[i]
        return total
    finally:
        free(acc)
        free(quo)
