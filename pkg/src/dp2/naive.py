"""Reference solver used as an independent oracle.

Everything here works on plain coefficient lists with schoolbook arithmetic
and enumerates full degree boxes with no admissibility filters.  It shares
no code with the packed representation or the table pipeline on purpose, so
the two can check each other.
"""

from __future__ import annotations


def list_add(a, b):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return [(x + y) % 3 for x, y in zip(a, b)]


def list_sub(a, b):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return [(x - y) % 3 for x, y in zip(a, b)]


def list_mul(a, b):
    if not any(a) or not any(b):
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] = (r[i + j] + x * y) % 3
    return r


def _trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def index_to_list(n: int, ncoef: int):
    return [(n // 3**k) % 3 for k in range(ncoef)]


def lhs_list(x, w):
    x2 = list_mul(x, x)
    return _trim(list_add(list_mul(x2, x2), list_mul(w, w)))


def rhs_list(y, z):
    z3 = list_mul(list_mul(z, z), z)
    y3 = list_mul(list_mul(y, y), y)
    return _trim(list_sub(list_mul(y, z3), list_mul(y3, z)))


def naive_solutions(d: int) -> set:
    """All (ix, iy, iz, iw) index quadruples with x^4 + w^2 = y z^3 - y^3 z.

    Enumerates the complete box deg x,y,z <= d, deg w <= 2d with no filters;
    quadratic in table sizes, intended for d <= 2.
    """
    n = 3 ** (d + 1)
    nw = 3 ** (2 * d + 1)
    left = [lhs_list(index_to_list(ix, d + 1), index_to_list(iw, 2 * d + 1))
            for ix in range(n) for iw in range(nw)]
    right = [rhs_list(index_to_list(iy, d + 1), index_to_list(iz, d + 1))
             for iy in range(n) for iz in range(n)]
    sols = set()
    for ix in range(n):
        for iw in range(nw):
            v = left[ix * nw + iw]
            for iy in range(n):
                for iz in range(n):
                    if right[iy * n + iz] == v:
                        sols.add((ix, iy, iz, iw))
    return sols
