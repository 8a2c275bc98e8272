"""Arithmetic in GF(3) and its degree-4 extension GF(81) = GF(3)(zeta).

zeta is a root of z^4 + z^2 + 2, so reduction uses zeta^4 = 2*zeta^2 + 1.
An element is stored as an index 0..80 whose base-3 digits are the
coefficients of (1, zeta, zeta^2, zeta^3).  Addition and multiplication are
table driven; the tables are built once at import and are also exposed as
numpy arrays for vectorised callers.
"""

from __future__ import annotations

import numpy as np

ORDER = 81
_DIGITS = [[(n // 3**k) % 3 for k in range(4)] for n in range(ORDER)]


def _undigits(ds):
    return sum((d % 3) * 3**k for k, d in enumerate(ds))


def _mul_raw(a: int, b: int) -> int:
    da, db = _DIGITS[a], _DIGITS[b]
    c = [0] * 7
    for i in range(4):
        if da[i]:
            for j in range(4):
                c[i + j] = (c[i + j] + da[i] * db[j]) % 3
    # fold degrees 6..4 down with zeta^4 = 2 zeta^2 + 1
    for k in range(6, 3, -1):
        if c[k]:
            c[k - 2] = (c[k - 2] + 2 * c[k]) % 3
            c[k - 4] = (c[k - 4] + c[k]) % 3
            c[k] = 0
    return _undigits(c[:4])


ADD_TABLE = np.array(
    [[_undigits([(x + y) % 3 for x, y in zip(_DIGITS[a], _DIGITS[b])])
      for b in range(ORDER)] for a in range(ORDER)],
    dtype=np.uint8,
)
MUL_TABLE = np.array(
    [[_mul_raw(a, b) for b in range(ORDER)] for a in range(ORDER)], dtype=np.uint8
)
NEG_TABLE = np.array(
    [_undigits([(-x) % 3 for x in _DIGITS[a]]) for a in range(ORDER)], dtype=np.uint8
)
FROB_TABLE = np.array(
    [_mul_raw(_mul_raw(a, a), a) for a in range(ORDER)], dtype=np.uint8
)
INV_TABLE = np.zeros(ORDER, dtype=np.uint8)
for _a in range(1, ORDER):
    for _b in range(1, ORDER):
        if _mul_raw(_a, _b) == 1:
            INV_TABLE[_a] = _b
            break


class Gf81:
    """Immutable element of GF(81).

    The order defined by ``<`` is the index order; it has no algebraic
    meaning and exists only to make sorted output deterministic.
    """

    __slots__ = ("n",)

    def __init__(self, n: int):
        if not 0 <= n < ORDER:
            raise ValueError(f"index out of range: {n}")
        object.__setattr__(self, "n", n)

    def __setattr__(self, *a):
        raise AttributeError("Gf81 is immutable")

    @classmethod
    def from_coeffs(cls, coeffs) -> "Gf81":
        """Element c0 + c1*zeta + c2*zeta^2 + c3*zeta^3 from up to 4 coefficients."""
        cs = list(coeffs)
        if len(cs) > 4:
            raise ValueError("at most 4 coefficients")
        cs += [0] * (4 - len(cs))
        return cls(_undigits(cs))

    @property
    def coeffs(self) -> tuple:
        return tuple(_DIGITS[self.n])

    def __add__(self, other):
        return Gf81(int(ADD_TABLE[self.n, other.n]))

    def __neg__(self):
        return Gf81(int(NEG_TABLE[self.n]))

    def __sub__(self, other):
        return Gf81(int(ADD_TABLE[self.n, NEG_TABLE[other.n]]))

    def __mul__(self, other):
        return Gf81(int(MUL_TABLE[self.n, other.n]))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        r, b = ONE, self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def inverse(self) -> "Gf81":
        if self.n == 0:
            raise ZeroDivisionError("inverse of 0")
        return Gf81(int(INV_TABLE[self.n]))

    def frobenius(self) -> "Gf81":
        return Gf81(int(FROB_TABLE[self.n]))

    def __eq__(self, other):
        return isinstance(other, Gf81) and self.n == other.n

    def __hash__(self):
        return hash(("Gf81", self.n))

    def __lt__(self, other):
        return self.n < other.n

    def __bool__(self):
        return self.n != 0

    def __repr__(self):
        return f"Gf81({self.n})"

    def __str__(self):
        terms = []
        names = ["", "z", "z^2", "z^3"]
        for k in range(3, -1, -1):
            c = _DIGITS[self.n][k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(names[k])
            else:
                terms.append(f"{c}*{names[k]}")
        return "+".join(terms) if terms else "0"


ZERO = Gf81(0)
ONE = Gf81(1)
TWO = Gf81(2)
ZETA = Gf81.from_coeffs([0, 1])
SQRT_M1 = Gf81.from_coeffs([2, 0, 1])  # zeta^2 + 2, squares to -1

F3_ELEMENTS = (ZERO, ONE, TWO)
ALL_ELEMENTS = tuple(Gf81(n) for n in range(ORDER))
F9_ELEMENTS = tuple(a for a in ALL_ELEMENTS if a.frobenius().frobenius() == a)


def gf81_add(a: Gf81, b: Gf81) -> Gf81:
    return a + b


def gf81_mul(a: Gf81, b: Gf81) -> Gf81:
    return a * b


def frobenius(a: Gf81) -> Gf81:
    """Field automorphism a -> a^3; order 4, fixes exactly GF(3)."""
    return a.frobenius()


def eval_f3_poly(coeffs, a: Gf81) -> Gf81:
    """Evaluate a polynomial with GF(3) coefficients (ascending) at a."""
    acc = ZERO
    for c in reversed(list(coeffs)):
        acc = acc * a + Gf81(c % 3)
    return acc


def roots_in_gf81(coeffs) -> set:
    """All roots in GF(81) of a nonzero polynomial over GF(3), by full scan."""
    cs = [c % 3 for c in coeffs]
    if not any(cs):
        raise ValueError("zero polynomial has no well-defined root set")
    return {a for a in ALL_ELEMENTS if eval_f3_poly(cs, a) == ZERO}
