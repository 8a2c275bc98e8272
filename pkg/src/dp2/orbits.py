"""Deduplication of parametrizations under reparametrizations of the line.

Precomposing a solution with an automorphism of P^1 over GF(3) (the group
PGL(2,3), 24 elements, isomorphic to S4) gives another parametrization of
the same curve.  This module realizes that action on Param quadruples and
partitions solution sets into orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import poly
from .search import Param


class OrbitError(Exception):
    pass


def _canon_mat(mat: tuple) -> tuple:
    for v in mat:
        if v % 3 == 1:
            return tuple(x % 3 for x in mat)
        if v % 3 == 2:
            return tuple((2 * x) % 3 for x in mat)
    raise ValueError("zero matrix")


@dataclass(frozen=True)
class Moebius:
    """Fractional-linear map t -> (a t + b) / (c t + e) over GF(3).

    Stored as (a, b, c, e) modulo scalars, canonicalized so the first
    nonzero entry is 1.  Composition is left to right: (g * h) applies g
    first, then h, which makes act(g * h, p) == act(g, act(h, p)).
    """

    mat: tuple

    def __post_init__(self):
        a, b, c, e = (v % 3 for v in self.mat)
        if (a * e - b * c) % 3 == 0:
            raise ValueError(f"singular matrix {self.mat}")
        object.__setattr__(self, "mat", _canon_mat((a, b, c, e)))

    @classmethod
    def identity(cls) -> "Moebius":
        return cls((1, 0, 0, 1))

    def __mul__(self, other: "Moebius") -> "Moebius":
        # matrix product other . self: phi_{g*h} = phi_h o phi_g
        a1, b1, c1, e1 = other.mat
        a2, b2, c2, e2 = self.mat
        return Moebius((a1 * a2 + b1 * c2, a1 * b2 + b1 * e2,
                        c1 * a2 + e1 * c2, c1 * b2 + e1 * e2))

    def inverse(self) -> "Moebius":
        a, b, c, e = self.mat
        return Moebius((e, -b % 3, -c % 3, a))

    def order(self) -> int:
        g, k = self, 1
        while g != Moebius.identity():
            g = g * self
            k += 1
        return k


def all_moebius() -> tuple:
    out = set()
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for e in range(3):
                    if (a * e - b * c) % 3:
                        out.add(Moebius((a, b, c, e)))
    return tuple(sorted(out, key=lambda g: g.mat))


MOEBIUS_ALL = all_moebius()


def scalar_normalize(p: Param) -> Param:
    """Canonical representative under (x, y, z, w) ~ (2x, 2y, 2z, w)."""
    return p.scalar_normalized()


@lru_cache(maxsize=256)
def _binomial_powers(a: int, b: int, top: int) -> tuple:
    """(a t + b)^i for i = 0..top, as packed polynomials."""
    base = poly.from_coeffs([b, a])
    out = [poly.from_coeffs([1])]
    for _ in range(top):
        out.append(poly.mul(out[-1], base))
    return tuple(out)


def act(g: Moebius, p: Param) -> Param:
    """Reparametrize p by t -> (a t + b)/(c t + e), clearing denominators.

    Each coordinate f of homogeneity bound D becomes
    sum_i f_i (a t + b)^i (c t + e)^(D - i); x, y, z use D = d and w uses
    D = 2d.  The result is scalar-normalized, making act a group action:
    act(g * h, p) == act(g, act(h, p)).
    """
    a, b, c, e = g.mat
    d = p.d
    top = 2 * d
    num = _binomial_powers(a, b, top)
    den = _binomial_powers(c, e, top)

    def subst(f: int, bound: int) -> int:
        acc = 0
        for i, cf in enumerate(poly.to_coeffs(f, bound + 1)):
            if cf:
                acc = poly.add(acc, poly.scalar_mul(cf, poly.mul(num[i], den[bound - i])))
        return acc

    q = Param(subst(p.x, d), subst(p.y, d), subst(p.z, d), subst(p.w, 2 * d), d)
    return q.scalar_normalized()


def orbit_of(p: Param) -> tuple:
    """Distinct normalized images of p under all 24 Moebius maps, sorted."""
    return tuple(sorted({act(g, p) for g in MOEBIUS_ALL}, key=Param.sort_key))


@dataclass(frozen=True)
class CurveOrbit:
    representative: Param   # lexicographically least member
    members: tuple
    size: int

    def text(self) -> str:
        return f"{self.representative.text()}; orbit_size={self.size}"


def orbit_partition(params) -> list:
    """Partition a solution set into Moebius orbits.

    Input members must be scalar-normalized; an orbit that leaves the input
    set signals an incomplete search output and raises OrbitError.
    """
    pool = {p: False for p in params}
    orbits = []
    for p in pool:
        if pool[p]:
            continue
        members = orbit_of(p)
        for q in members:
            if q not in pool:
                raise OrbitError(
                    f"orbit of {p.text()} leaves the input set at {q.text()}; "
                    "input is not closed under reparametrization")
            pool[q] = True
        orbits.append(CurveOrbit(representative=members[0], members=members,
                                 size=len(members)))
    orbits.sort(key=lambda o: o.representative.sort_key())
    return orbits


def orbit_size_histogram(orbits) -> dict:
    hist: dict = {}
    for o in orbits:
        hist[o.size] = hist.get(o.size, 0) + 1
    return dict(sorted(hist.items()))


def write_curves(path: str, orbits) -> None:
    hist = orbit_size_histogram(orbits)
    with open(path, "w") as f:
        f.write("# dp2 curve orbits v1\n")
        f.write(f"# orbits={len(orbits)} "
                f"sizes={','.join(f'{k}:{v}' for k, v in hist.items())}\n")
        for o in orbits:
            f.write(o.text() + "\n")
