"""Evaluation of C-, S- and E-orbit functions.

``C_lam(x) = sum_{mu in W lam} exp(2 pi i <mu, x>)``; ``S`` weights each term
by the parity of the orbit element, ``E`` sums over the even-subgroup orbit.
No normalization is applied.

Three evaluation paths share the same cached orbit data:

* :func:`eval_C` / :func:`eval_S` / :func:`eval_E` at one exact co-point;
* :func:`evaluate_lattice` on points ``u / M`` with integer ``u`` (phases are
  reduced exactly modulo 1 before the exponential);
* :func:`evaluate` on float co-points, for meshes.
"""

from __future__ import annotations

import cmath
import math
from enum import Enum
from typing import Sequence

import numpy as np

from .rootdata import RootSystem, as_copoint, pairing
from .weyl import even_representative, is_dominant, is_strictly_dominant, orbit, orbit_even

__all__ = [
    "Kind",
    "orbit_terms",
    "eval_C",
    "eval_S",
    "eval_E",
    "eval_orbit_function",
    "evaluate_lattice",
    "evaluate",
]


class Kind(str, Enum):
    C = "C"
    S = "S"
    E = "E"

    def __str__(self):
        return self.value


def _check_weight(rs: RootSystem, kind: Kind, lam) -> tuple[int, ...]:
    lam = tuple(int(v) for v in lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight has {len(lam)} coordinates, {rs} needs {rs.rank}")
    if kind is Kind.C and not is_dominant(lam):
        raise ValueError(f"C-functions are labelled by dominant weights, got {lam}")
    if kind is Kind.S and not is_strictly_dominant(lam):
        raise ValueError(f"S-functions need a strictly dominant weight (all coordinates >= 1), got {lam}")
    return lam


def orbit_terms(rs: RootSystem, kind, lam) -> tuple[np.ndarray, np.ndarray]:
    """Exponents (k x n integer array) and signs (length k) of an orbit sum."""
    kind = Kind(kind)
    lam = _check_weight(rs, kind, lam)
    if kind is Kind.E:
        lam = even_representative(rs, lam)
    key = ("terms", kind, lam)
    cached = rs._cache.get(key)
    if cached is not None:
        return cached
    if kind is Kind.E:
        weights = orbit_even(rs, lam)
        signs = [1] * len(weights)
    else:
        elems = orbit(rs, lam)
        weights = [e.weight for e in elems]
        signs = [e.parity if kind is Kind.S else 1 for e in elems]
    terms = (np.array(weights, dtype=np.int64).reshape(len(weights), rs.rank), np.array(signs, dtype=np.int64))
    for arr in terms:
        arr.setflags(write=False)
    rs._cache[key] = terms
    return terms


def eval_orbit_function(rs: RootSystem, kind, lam, x: Sequence) -> complex:
    """Value at one exact co-point; phases are reduced modulo 1 in rational arithmetic."""
    weights, signs = orbit_terms(rs, kind, lam)
    x = as_copoint(x)
    total = 0j
    for mu, sign in zip(weights.tolist(), signs.tolist()):
        ph = pairing(rs, mu, x)
        ph -= math.floor(ph)
        total += sign * cmath.exp(2j * math.pi * float(ph))
    return total


def eval_C(rs: RootSystem, lam, x) -> complex:
    return eval_orbit_function(rs, Kind.C, lam, x)


def eval_S(rs: RootSystem, lam, x) -> complex:
    return eval_orbit_function(rs, Kind.S, lam, x)


def eval_E(rs: RootSystem, lam, x) -> complex:
    return eval_orbit_function(rs, Kind.E, lam, x)


def _unit_roots(n: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(n) / n)


def evaluate_lattice(rs: RootSystem, kind, lam, u: np.ndarray, level: int) -> np.ndarray:
    """Values at the co-points ``u / level`` for an ``(N, n)`` integer array ``u``."""
    weights, signs = orbit_terms(rs, kind, lam)
    u = np.asarray(u, dtype=np.int64).reshape(-1, rs.rank)
    period = rs.inverse_denominator * level
    # <mu, u/level> = mu^T (d C^{-1}) u / (d level)
    numer = (weights @ rs.inverse_numerators) @ u.T
    table = _unit_roots(period)
    return signs.astype(float) @ table[np.mod(numer, period)]


def evaluate(rs: RootSystem, kind, lam, x: np.ndarray) -> np.ndarray:
    """Values at float co-points given as an ``(N, n)`` array of coordinates."""
    weights, signs = orbit_terms(rs, kind, lam)
    x = np.asarray(x, dtype=float).reshape(-1, rs.rank)
    ph = (weights @ rs.cartan_inverse_array) @ x.T
    ph -= np.floor(ph)
    return signs.astype(float) @ np.exp(2j * np.pi * ph)
