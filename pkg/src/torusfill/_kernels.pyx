# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled case dispatch over a grid of slopes (64-bit; callers guard overflow)."""
from cpython cimport array
import array


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    while b:
        a, b = b, a % b
    return a


def classify_grid(long long p, long long q, long long r_max, long long s_max):
    """Case codes 1..7 for every reduced ``r/s`` with ``|r| <= r_max``, ``0 <= s <= s_max``.

    Returns three ``array.array`` objects ``(rs, ss, codes)`` ordered by ``s`` then ``r``.
    """
    cdef Py_ssize_t cap = (2 * r_max + 1) * s_max + 1
    cdef array.array rs = array.array("q", [0]) * cap
    cdef array.array ss = array.array("q", [0]) * cap
    cdef array.array codes = array.array("b", [0]) * cap
    cdef long long[:] rv = rs
    cdef long long[:] sv = ss
    cdef signed char[:] cv = codes
    cdef long long pq = p * q
    cdef long long s, r, a, A, m
    cdef bint horizontal, two_vertical
    cdef signed char code
    cdef Py_ssize_t n = 0

    rv[0] = 1
    sv[0] = 0
    cv[0] = 1
    n = 1
    with nogil:
        for s in range(1, s_max + 1):
            for r in range(-r_max, r_max + 1):
                if _gcd(r, s) != 1:
                    continue
                a = pq * s - r
                A = a if a >= 0 else -a
                if A == 0:
                    code = 3
                elif A == 1:
                    code = 1 if (r == 1 or r == -1) else 2
                else:
                    horizontal = (r == 1 or r == -1) and A > pq
                    m = s % A
                    two_vertical = m == 1 or m == A - 1
                    if horizontal:
                        code = 7 if two_vertical else 5
                    else:
                        code = 6 if two_vertical else 4
                rv[n] = r
                sv[n] = s
                cv[n] = code
                n += 1
    array.resize(rs, n)
    array.resize(ss, n)
    array.resize(codes, n)
    return rs, ss, codes
