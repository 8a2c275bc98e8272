"""Bit-packed univariate polynomials over GF(3).

A polynomial is a plain int: coefficient i occupies bits 2i..2i+1 with the
encoding 0 -> 00, 1 -> 01, 2 -> 10 (11 never appears).  Capacity is fixed at
33 coefficients (degree <= 32), enough for every intermediate product the
degree-8 search needs; operations that would exceed it raise CapacityError.

Coefficient-wise sums are computed carry-free on the whole word: with the
low/high bit planes (al, ah), (bl, bh) of the operands and
t = (al|bh) ^ (ah|bl), the sum planes are (ah|bh)^t and (al|bl)^t.
"""

from __future__ import annotations

CAPACITY = 33          # coefficient slots
MAX_DEGREE = CAPACITY - 1
_LO = sum(1 << (2 * i) for i in range(CAPACITY))


class CapacityError(ValueError):
    """Result would need more than CAPACITY coefficients."""


def from_coeffs(coeffs) -> int:
    cs = list(coeffs)
    if len(cs) > CAPACITY:
        raise CapacityError(f"{len(cs)} coefficients exceed capacity {CAPACITY}")
    p = 0
    for i, c in enumerate(cs):
        p |= (c % 3) << (2 * i)
    return p


def to_coeffs(p: int, length: int | None = None) -> list:
    """Coefficients ascending; trimmed at the degree unless length is given.

    The zero polynomial gives [] when length is None.
    """
    if length is None:
        d = degree(p)
        length = 0 if d is None else d + 1
    return [(p >> (2 * i)) & 3 for i in range(length)]


def degree(p: int) -> int | None:
    """Highest index with a nonzero coefficient, or None for the zero polynomial."""
    if p == 0:
        return None
    return (p.bit_length() - 1) // 2


def from_index(n: int) -> int:
    """Polynomial whose coefficient sequence is the base-3 expansion of n."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    p = 0
    i = 0
    while n:
        if i >= CAPACITY:
            raise CapacityError(f"index needs more than {CAPACITY} coefficients")
        n, r = divmod(n, 3)
        p |= r << (2 * i)
        i += 1
    return p


def to_index(p: int) -> int:
    n = 0
    i = p.bit_length() // 2
    while i >= 0:
        n = 3 * n + ((p >> (2 * i)) & 3)
        i -= 1
    return n


def add(p: int, q: int) -> int:
    al, ah = p & _LO, (p >> 1) & _LO
    bl, bh = q & _LO, (q >> 1) & _LO
    t = (al | bh) ^ (ah | bl)
    return ((ah | bh) ^ t) | (((al | bl) ^ t) << 1)


def neg(p: int) -> int:
    return ((p & _LO) << 1) | ((p >> 1) & _LO)


def sub(p: int, q: int) -> int:
    return add(p, neg(q))


def scalar_mul(c: int, p: int) -> int:
    c %= 3
    if c == 0:
        return 0
    return p if c == 1 else neg(p)


def shift(p: int, k: int) -> int:
    """Multiply by t^k."""
    if p == 0:
        return 0
    d = degree(p)
    if d + k > MAX_DEGREE:
        raise CapacityError(f"shift to degree {d + k} exceeds {MAX_DEGREE}")
    return p << (2 * k)


def mul(p: int, q: int) -> int:
    """Product, coefficient-wise convolution mod 3."""
    if p == 0 or q == 0:
        return 0
    dp, dq = degree(p), degree(q)
    if dp + dq > MAX_DEGREE:
        raise CapacityError(f"product degree {dp + dq} exceeds {MAX_DEGREE}")
    acc = 0
    for i in range(dp + 1):
        c = (p >> (2 * i)) & 3
        if c == 1:
            acc = add(acc, q << (2 * i))
        elif c == 2:
            acc = add(acc, neg(q) << (2 * i))
    return acc


def cube(p: int) -> int:
    """p(t)^3: coefficient i moves to 3i unchanged, since a^3 = a in GF(3)."""
    if p == 0:
        return 0
    d = degree(p)
    if 3 * d > MAX_DEGREE:
        raise CapacityError(f"cube degree {3 * d} exceeds {MAX_DEGREE}")
    acc = 0
    for i in range(d + 1):
        acc |= ((p >> (2 * i)) & 3) << (6 * i)
    return acc


def lhs(x: int, w: int) -> int:
    """Left side x^4 + w^2 of the search equation, with x^4 = cube(x)*x."""
    dx, dw = degree(x), degree(w)
    if dx is not None and 4 * dx > MAX_DEGREE:
        raise CapacityError(f"x^4 degree {4 * dx} exceeds {MAX_DEGREE}")
    if dw is not None and 2 * dw > MAX_DEGREE:
        raise CapacityError(f"w^2 degree {2 * dw} exceeds {MAX_DEGREE}")
    return add(mul(cube(x), x), mul(w, w))


def rhs(y: int, z: int) -> int:
    """Right side y*z^3 - y^3*z of the search equation."""
    dy, dz = degree(y), degree(z)
    if dy is not None and dz is not None:
        if dy + 3 * dz > MAX_DEGREE or 3 * dy + dz > MAX_DEGREE:
            raise CapacityError("y*z^3 or y^3*z exceeds capacity")
    return sub(mul(y, cube(z)), mul(cube(y), z))


def verify_param(x: int, y: int, z: int, w: int) -> bool:
    """Does the quadruple satisfy x^4 + w^2 = y z^3 - y^3 z?"""
    return lhs(x, w) == rhs(y, z)


def derivative(p: int) -> int:
    acc = 0
    d = degree(p)
    if d is None:
        return 0
    for i in range(1, d + 1):
        c = (i * ((p >> (2 * i)) & 3)) % 3
        acc |= c << (2 * (i - 1))
    return acc


def eval_f3(p: int, c: int) -> int:
    """Evaluate at c in GF(3)."""
    c %= 3
    acc = 0
    d = degree(p)
    if d is None:
        return 0
    for i in range(d, -1, -1):
        acc = (acc * c + ((p >> (2 * i)) & 3)) % 3
    return acc


def coeff(p: int, i: int) -> int:
    return (p >> (2 * i)) & 3


def format_poly(p: int) -> str:
    """Canonical text form: ascending coefficient digits, e.g. [0,1,0,2]."""
    cs = to_coeffs(p)
    if not cs:
        cs = [0]
    return "[" + ",".join(str(c) for c in cs) + "]"


def parse_poly(text: str) -> int:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"bad polynomial literal: {text!r}")
    body = t[1:-1].strip()
    if not body:
        return 0
    cs = []
    for tok in body.split(","):
        tok = tok.strip()
        if tok not in ("0", "1", "2"):
            raise ValueError(f"bad coefficient {tok!r} in {text!r}")
        cs.append(int(tok))
    return from_coeffs(cs)


def pack_bytes(p: int) -> bytes:
    """Binary form: packed word(s), little-endian, fixed 16 bytes."""
    return p.to_bytes(16, "little")


def unpack_bytes(b: bytes) -> int:
    return int.from_bytes(b, "little")
