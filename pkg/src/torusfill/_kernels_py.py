"""Pure-Python case dispatch over a grid of slopes.

Mirrors ``_kernels.pyx`` line for line; used whenever the compiled module
is missing or the grid would overflow 64-bit arithmetic.
"""
from math import gcd


def classify_grid(p, q, r_max, s_max):
    """Case codes 1..7 for every reduced ``r/s`` with ``|r| <= r_max``, ``0 <= s <= s_max``.

    Returns three lists ``(rs, ss, codes)`` ordered by ``s`` then ``r``.
    """
    pq = p * q
    rs, ss, codes = [1], [0], [1]
    for s in range(1, s_max + 1):
        pqs = pq * s
        for r in range(-r_max, r_max + 1):
            if gcd(r, s) != 1:
                continue
            a = pqs - r
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
            rs.append(r)
            ss.append(s)
            codes.append(code)
    return rs, ss, codes
