"""Weyl-group orbits of weights and co-points.

Orbits are closed breadth-first under the simple reflections; group
elements are never built as matrices.  Weight orbits are cached on the
root system, so repeated evaluation of the same orbit function is cheap.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import NamedTuple, Sequence

from .rootdata import CoPoint, RootSystem, Weight, as_copoint

__all__ = [
    "OrbitElement",
    "DominantRep",
    "is_dominant",
    "is_strictly_dominant",
    "reflect_simple",
    "reflect_copoint",
    "orbit",
    "orbit_even",
    "orbit_size",
    "stabilizer_size",
    "dominant_representative",
    "even_representative",
    "torus_reduce",
    "copoint_orbit",
]


class OrbitElement(NamedTuple):
    weight: Weight
    parity: int


class DominantRep(NamedTuple):
    weight: Weight
    parity: int
    # True when the stabilizer of ``weight`` contains a reflection, in which
    # case ``parity`` depends on the word chosen.
    on_wall: bool


def is_dominant(lam: Sequence[int]) -> bool:
    return all(v >= 0 for v in lam)


def is_strictly_dominant(lam: Sequence[int]) -> bool:
    return all(v >= 1 for v in lam)


def _check_index(rs: RootSystem, i: int):
    if not 0 <= i < rs.rank:
        raise IndexError(f"simple reflection index {i} out of range for {rs} (0..{rs.rank - 1})")


def reflect_simple(rs: RootSystem, i: int, mu: Sequence[int]) -> Weight:
    """``r_i mu = mu - <mu, alpha_i^vee> alpha_i`` in fundamental-weight coordinates."""
    _check_index(rs, i)
    mi = mu[i]
    if mi == 0:
        return tuple(mu)
    return tuple(m - mi * c for m, c in zip(mu, rs.cartan[i]))


def reflect_copoint(rs: RootSystem, i: int, x: Sequence) -> CoPoint:
    """``r_i x = x - <alpha_i, x> alpha_i^vee``; acts through the transposed Cartan matrix."""
    _check_index(rs, i)
    x = as_copoint(x)
    xi = x[i]
    if xi == 0:
        return x
    return tuple(v - xi * rs.cartan[j][i] for j, v in enumerate(x))


def orbit(rs: RootSystem, lam: Sequence[int]) -> tuple[OrbitElement, ...]:
    """All elements of ``W lam`` for dominant ``lam``, sorted lexicographically.

    Each element carries ``(-1)**l`` where ``l`` is the minimal number of
    simple reflections taking ``lam`` to it (its BFS depth).
    """
    lam = tuple(int(v) for v in lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight has {len(lam)} coordinates, {rs} needs {rs.rank}")
    if not is_dominant(lam):
        raise ValueError(f"orbit() needs a dominant weight, got {lam}; use dominant_representative first")
    key = ("orbit", lam)
    cached = rs._cache.get(key)
    if cached is not None:
        return cached

    parity = {lam: 1}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        p = parity[mu]
        for i in range(rs.rank):
            if mu[i] == 0:
                continue
            nu = reflect_simple(rs, i, mu)
            seen = parity.get(nu)
            if seen is None:
                parity[nu] = -p
                queue.append(nu)
            elif seen == p:
                raise AssertionError(f"inconsistent parity in orbit of {lam} at {nu}")
    result = tuple(OrbitElement(mu, parity[mu]) for mu in sorted(parity))
    rs._cache[key] = result
    return result


def orbit_size(rs: RootSystem, lam: Sequence[int]) -> int:
    return len(orbit(rs, lam))


def stabilizer_size(rs: RootSystem, lam: Sequence[int]) -> int:
    return rs.weyl_order // orbit_size(rs, lam)


def dominant_representative(rs: RootSystem, mu: Sequence[int]) -> DominantRep:
    """Fold ``mu`` into the dominant chamber, tracking the determinant of the word used."""
    mu = tuple(int(v) for v in mu)
    parity = 1
    while True:
        neg = next((i for i, v in enumerate(mu) if v < 0), None)
        if neg is None:
            break
        mu = reflect_simple(rs, neg, mu)
        parity = -parity
    return DominantRep(mu, parity, any(v == 0 for v in mu))


def orbit_even(rs: RootSystem, lam: Sequence[int]) -> tuple[Weight, ...]:
    """Orbit of any weight under the even subgroup ``W^e = {w : det w = 1}``.

    BFS runs over (weight, determinant) states, so a weight reached by
    words of both parities lands in the even orbit automatically.
    """
    lam = tuple(int(v) for v in lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight has {len(lam)} coordinates, {rs} needs {rs.rank}")
    key = ("orbit_even", lam)
    cached = rs._cache.get(key)
    if cached is not None:
        return cached
    start = (lam, 1)
    seen = {start}
    queue = deque([start])
    while queue:
        mu, p = queue.popleft()
        for i in range(rs.rank):
            state = (reflect_simple(rs, i, mu), -p)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    result = tuple(sorted(mu for mu, p in seen if p == 1))
    rs._cache[key] = result
    return result


def even_representative(rs: RootSystem, mu: Sequence[int]) -> Weight:
    """Canonical member of ``W^e mu`` inside ``P^+ union r_1 P^+``.

    The dominant weight of the orbit when it lies in ``W^e mu``;
    otherwise its image under the first simple reflection.
    """
    lam, parity, on_wall = dominant_representative(rs, mu)
    if parity == 1 or on_wall:
        return lam
    return reflect_simple(rs, 0, lam)


def torus_reduce(rs: RootSystem, x: Sequence) -> CoPoint:
    """Representative of ``x`` modulo the coroot lattice with coroot coordinates in [0, 1)."""
    x = as_copoint(x)
    n = rs.rank
    inv = rs.cartan_inverse
    # x = sum_i y_i alpha_i^vee has y = C^{-1} x
    y = [sum((inv[i][j] * x[j] for j in range(n)), Fraction(0)) for i in range(n)]
    y = [v - (v.numerator // v.denominator) for v in y]
    c = rs.cartan
    return tuple(sum((c[j][i] * y[i] for i in range(n)), Fraction(0)) for j in range(n))


def copoint_orbit(rs: RootSystem, x: Sequence, even: bool = False) -> tuple[CoPoint, ...]:
    """Orbit of ``x`` on the torus (modulo coroots) under ``W`` or ``W^e``.

    Brute-force BFS; intended for small groups and as a cross-check of
    the stabilizer formula used by the grid weights.
    """
    start = (torus_reduce(rs, x), 1)
    seen = {start}
    queue = deque([start])
    while queue:
        y, p = queue.popleft()
        for i in range(rs.rank):
            state = (torus_reduce(rs, reflect_copoint(rs, i, y)), -p)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    points = {y for y, p in seen if p == 1 or not even}
    return tuple(sorted(points))
