"""Discretization grids ``F_M``, their even extension, and spectrum sets ``S_M``.

Grid points are the co-points ``x = sum_k (s_k / M) omega_k^vee`` with
non-negative integers satisfying ``s_0 + sum_m q_m s_m = M`` (``q`` = marks).
Spectrum sets mirror this on the weight side with the dual marks ``q^``:
``lam_0 + sum_k q^_k lam_k = M``.

Each sampled point is identified in files and mappings by its ``s`` tuple.
For the even grid, a point of ``r F`` keeps the same convention with its own
coordinates ``u`` (``s_0 = M - sum q_m u_m``); some ``u_m`` are then negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

import numpy as np

from .orbitfunc import Kind, evaluate_lattice
from .rootdata import CoPoint, RootSystem, Weight, as_copoint, in_fundamental_region, weyl_group_order
from .weyl import reflect_copoint, reflect_simple

__all__ = [
    "R_INDEX",
    "GridPoint",
    "EvenGridPoint",
    "SpectrumSet",
    "SpectrumError",
    "enumerate_grid",
    "enumerate_grid_even",
    "grid_weight",
    "stabilizer_order",
    "sample_points",
    "sample_weights",
    "enumerate_spectrum",
    "greedy_spectrum",
    "weight_level",
    "in_even_region",
]

#: Index of the simple reflection gluing ``F`` to ``r F`` (Bourbaki node 1).
R_INDEX = 0


class SpectrumError(RuntimeError):
    """A spectrum set failed its orthogonality check on the grid."""


@dataclass(frozen=True, order=True)
class GridPoint:
    s: tuple[int, ...]
    level: int

    @property
    def u(self) -> tuple[int, ...]:
        """Integer numerators of the co-point (``x = u / M``)."""
        return self.s[1:]

    @property
    def coords(self) -> CoPoint:
        return tuple(Fraction(v, self.level) for v in self.s[1:])

    @property
    def interior(self) -> bool:
        return all(v > 0 for v in self.s)


@dataclass(frozen=True)
class EvenGridPoint:
    """A ``W^e``-class of ``A_M`` meeting ``F^e = F union r F``.

    ``s`` holds ``(s_0, u_1, ..., u_n)`` of the represented point itself,
    so for ``reflected`` points it is the reflected position.
    """

    base: GridPoint
    reflected: bool
    even_weight: int
    s: tuple[int, ...]

    @property
    def level(self) -> int:
        return self.base.level

    @property
    def u(self) -> tuple[int, ...]:
        return self.s[1:]

    @property
    def coords(self) -> CoPoint:
        return tuple(Fraction(v, self.level) for v in self.s[1:])


SamplePoint = Union[GridPoint, EvenGridPoint]


def _bounded_vectors(marks: Sequence[int], bound: int) -> Iterator[tuple[int, ...]]:
    """Non-negative integer vectors ``v`` with ``sum marks * v <= bound``."""
    if not marks:
        yield ()
        return
    q, rest = marks[0], marks[1:]
    for v in range(bound // q + 1):
        for tail in _bounded_vectors(rest, bound - q * v):
            yield (v,) + tail


def _check_level(M):
    if isinstance(M, bool) or not isinstance(M, (int, np.integer)) or M < 1:
        raise ValueError(f"level M must be a positive integer, got {M!r}")
    return int(M)


def enumerate_grid(rs: RootSystem, M: int) -> tuple[GridPoint, ...]:
    """The points of ``F_M`` in lexicographic order of ``(s_0, ..., s_n)``."""
    M = _check_level(M)
    key = ("grid", M)
    if key not in rs._cache:
        pts = []
        for v in _bounded_vectors(rs.marks, M):
            s0 = M - sum(q * s for q, s in zip(rs.marks, v))
            pts.append(GridPoint((s0,) + v, M))
        rs._cache[key] = tuple(sorted(pts))
    return rs._cache[key]


def stabilizer_order(rs: RootSystem, s: Sequence[int]) -> int:
    """Order of the affine stabilizer of the grid point ``s``.

    It is the parabolic subgroup generated by the affine simple
    reflections whose walls contain the point, i.e. the nodes ``k`` of
    the extended diagram with ``s_k = 0``.
    """
    ext = rs.extended_cartan
    nodes = [k for k, v in enumerate(s) if v == 0]
    return weyl_group_order([[ext[i][j] for j in nodes] for i in nodes])


def grid_weight(rs: RootSystem, p: GridPoint) -> int:
    """``|W x|`` on the torus: the size of the Weyl orbit of ``x`` modulo coroots."""
    return rs.weyl_order // stabilizer_order(rs, p.s)


def enumerate_grid_even(rs: RootSystem, M: int) -> tuple[EvenGridPoint, ...]:
    """Representatives of the ``W^e``-classes of ``A_M`` in ``F^e``.

    Every point of ``F_M`` contributes itself; interior points (trivial
    stabilizer, so no odd element fixes them) also contribute ``r x``.
    """
    M = _check_level(M)
    key = ("grid_even", M)
    if key in rs._cache:
        return rs._cache[key]
    out = []
    for p in enumerate_grid(rs, M):
        stab = stabilizer_order(rs, p.s)
        if stab == 1:
            out.append(EvenGridPoint(p, False, rs.weyl_order // 2, p.s))
            u = tuple(int(v) for v in reflect_copoint(rs, R_INDEX, p.u))
            s0 = M - sum(q * v for q, v in zip(rs.marks, u))
            out.append(EvenGridPoint(p, True, rs.weyl_order // 2, (s0,) + u))
        else:
            # W^e x = W x whenever the stabilizer contains a reflection
            out.append(EvenGridPoint(p, False, rs.weyl_order // stab, p.s))
    rs._cache[key] = tuple(out)
    return rs._cache[key]


def in_even_region(rs: RootSystem, x: Sequence) -> bool:
    x = as_copoint(x)
    return in_fundamental_region(rs, x) or in_fundamental_region(rs, reflect_copoint(rs, R_INDEX, x))


def sample_points(rs: RootSystem, kind, M: int) -> tuple[SamplePoint, ...]:
    """Points carrying data for a transform of the given kind.

    C uses all of ``F_M``, S only its interior (S vanishes on the
    boundary), E the even grid.
    """
    kind = Kind(kind)
    if kind is Kind.C:
        return enumerate_grid(rs, M)
    if kind is Kind.S:
        return tuple(p for p in enumerate_grid(rs, M) if p.interior)
    return enumerate_grid_even(rs, M)


def sample_weights(rs: RootSystem, kind, M: int) -> np.ndarray:
    """Quadrature weights of :func:`sample_points`: ``|W x|``, 1, or ``|W^e x|``."""
    kind = Kind(kind)
    pts = sample_points(rs, kind, M)
    if kind is Kind.C:
        return np.array([grid_weight(rs, p) for p in pts], dtype=float)
    if kind is Kind.S:
        return np.ones(len(pts))
    return np.array([p.even_weight for p in pts], dtype=float)


@dataclass(frozen=True)
class SpectrumSet:
    kind: Kind
    level: int
    weights: tuple[Weight, ...]

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __contains__(self, lam):
        return tuple(lam) in self.weights


def weight_level(rs: RootSystem, lam: Sequence[int]) -> int:
    """``sum_k q^_k lam_k``; a dominant weight belongs to the C-spectrum at every ``M`` >= its level."""
    return sum(q * v for q, v in zip(rs.dual_marks, lam))


def _closed_form(rs: RootSystem, kind: Kind, M: int) -> list[Weight]:
    dominant = sorted(_bounded_vectors(rs.dual_marks, M), key=lambda v: (weight_level(rs, v), v))
    if kind is Kind.C:
        return dominant
    interior = [v for v in dominant if all(c >= 1 for c in v) and weight_level(rs, v) < M]
    if kind is Kind.S:
        return interior
    out = []
    inner = set(interior)
    for lam in dominant:
        out.append(lam)
        if lam in inner:
            out.append(reflect_simple(rs, R_INDEX, lam))
    return out


def _gram(rs: RootSystem, kind: Kind, weights: Sequence[Weight], M: int) -> np.ndarray:
    pts = sample_points(rs, kind, M)
    u = np.array([p.u for p in pts], dtype=np.int64).reshape(len(pts), rs.rank)
    w = sample_weights(rs, kind, M)
    phi = np.array([evaluate_lattice(rs, kind, lam, u, M) for lam in weights]).reshape(len(weights), len(pts))
    return (phi * w) @ phi.conj().T


def _is_orthogonal(gram: np.ndarray, tol: float = 1e-9) -> bool:
    if gram.size == 0:
        return True
    diag = np.abs(np.diag(gram))
    off = np.abs(gram - np.diag(np.diag(gram)))
    return bool(diag.min() > tol * diag.max() and off.max() <= tol * diag.max())


def enumerate_spectrum(rs: RootSystem, kind, M: int, verify: bool = False) -> SpectrumSet:
    """The lowest spectrum set ``S_M`` for a C-, S- or E-transform.

    C: dominant weights of level <= M.  S: strictly dominant weights of
    level < M.  E: the C weights plus ``r_1 lam`` for every ``lam`` of the
    S kind.  Weights are ordered by level, then lexicographically (E
    places ``r_1 lam`` right after ``lam``).

    With ``verify`` the Gram matrix on the grid is checked for
    orthogonality and the size against the grid; failure raises
    :class:`SpectrumError`.
    """
    kind = Kind(kind)
    M = _check_level(M)
    key = ("spectrum", kind, M)
    if key not in rs._cache:
        rs._cache[key] = SpectrumSet(kind, M, tuple(_closed_form(rs, kind, M)))
    spec = rs._cache[key]
    if verify:
        npts = len(sample_points(rs, kind, M))
        if len(spec) != npts:
            raise SpectrumError(f"{rs} {kind} M={M}: {len(spec)} weights for {npts} grid points")
        if not _is_orthogonal(_gram(rs, kind, spec.weights, M)):
            raise SpectrumError(f"{rs} {kind} M={M}: spectrum functions are not orthogonal on the grid")
    return spec


def _candidates(rs: RootSystem, kind: Kind, max_level: int) -> Iterator[Weight]:
    for level in range(max_level + 1):
        for lam in sorted(v for v in _bounded_vectors(rs.dual_marks, level) if weight_level(rs, v) == level):
            if kind is Kind.S and not all(c >= 1 for c in lam):
                continue
            yield lam
            if kind is Kind.E:
                r = reflect_simple(rs, R_INDEX, lam)
                if r != lam:
                    yield r


def greedy_spectrum(rs: RootSystem, kind, M: int, max_level: int | None = None) -> SpectrumSet:
    """Spectrum built by scanning candidates in graded order.

    A candidate is kept when its function has non-zero norm on the grid
    and is orthogonal to every function kept so far.  Independent of the
    closed form in :func:`enumerate_spectrum`, which it certifies.
    """
    kind = Kind(kind)
    M = _check_level(M)
    target = len(sample_points(rs, kind, M))
    max_level = 2 * M if max_level is None else max_level
    pts = sample_points(rs, kind, M)
    u = np.array([p.u for p in pts], dtype=np.int64).reshape(len(pts), rs.rank)
    w = sample_weights(rs, kind, M)
    kept: list[Weight] = []
    rows: list[np.ndarray] = []
    norms: list[float] = []
    if target == 0:
        return SpectrumSet(kind, M, ())
    for lam in _candidates(rs, kind, max_level):
        phi = evaluate_lattice(rs, kind, lam, u, M)
        norm = float(np.real(np.sum(w * np.abs(phi) ** 2)))
        scale = max([norm] + norms)
        if norm <= 1e-9 * scale:
            continue
        if rows:
            overlaps = np.abs(np.array(rows).conj() @ (w * phi))
            if overlaps.max() > 1e-9 * scale:
                continue
        kept.append(lam)
        rows.append(phi)
        norms.append(norm)
        if len(kept) == target:
            return SpectrumSet(kind, M, tuple(kept))
    raise SpectrumError(f"{rs} {kind} M={M}: greedy scan up to level {max_level} found {len(kept)} of {target}")
