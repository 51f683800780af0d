"""Discrete C-, S- and E-transforms, interpolation, and the product algebra.

For a field ``f`` sampled on the grid of a kind, the forward transform is

    f_lam = (1 / N_lam) * sum_k w_k f(x_k) conj(Phi_lam(x_k))

with ``w_k`` the quadrature weights of :func:`lattice.sample_weights` and
``N_lam`` the Gram diagonal, and the inverse is ``f(x_k) = sum f_lam Phi_lam(x_k)``.
Evaluating the same sum at arbitrary ``x`` interpolates the data.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .lattice import (
    SamplePoint,
    SpectrumError,
    enumerate_grid,
    enumerate_grid_even,
    enumerate_spectrum,
    grid_weight,
    in_even_region,
    sample_points,
    sample_weights,
)
from .orbitfunc import Kind, eval_orbit_function, evaluate, evaluate_lattice
from .rootdata import RootSystem, Weight, as_copoint, in_fundamental_region
from .weyl import dominant_representative, is_dominant, is_strictly_dominant, orbit, orbit_size

__all__ = [
    "Spectrum",
    "SampleField",
    "TransformBasis",
    "transform_basis",
    "forward",
    "inverse",
    "synthesize",
    "synthesize_many",
    "gram_matrix",
    "norm_table",
    "quad_orthogonality",
    "Decomposition",
    "decompose_product",
    "make_field",
    "sample_function",
    "basis_field",
    "make_spectrum",
    "unit_spectrum",
    "region_volume",
]


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Coefficients ``f_lam`` keyed by the weights of a spectrum set, in its order."""

    kind: Kind
    level: int
    weights: tuple[Weight, ...]
    coeffs: np.ndarray

    def __getitem__(self, lam) -> complex:
        return complex(self.coeffs[self.weights.index(tuple(lam))])

    def as_dict(self) -> dict[Weight, complex]:
        return {lam: complex(c) for lam, c in zip(self.weights, self.coeffs)}


@dataclass(frozen=True, eq=False)
class SampleField:
    """Values ``f(x_k)`` on the sample points of a kind, in grid order."""

    kind: Kind
    level: int
    points: tuple[SamplePoint, ...]
    values: np.ndarray

    def __getitem__(self, s) -> complex:
        s = tuple(getattr(s, "s", s))
        for p, v in zip(self.points, self.values):
            if p.s == s:
                return complex(v)
        raise KeyError(s)

    def as_dict(self) -> dict[tuple[int, ...], complex]:
        return {p.s: complex(v) for p, v in zip(self.points, self.values)}


@dataclass(frozen=True, eq=False)
class TransformBasis:
    """Everything a transform of one (kind, M) needs, computed once per root system."""

    kind: Kind
    level: int
    weights: tuple[Weight, ...]
    points: tuple[SamplePoint, ...]
    quad_weights: np.ndarray
    phi: np.ndarray  # (len(weights), len(points))
    norms: np.ndarray

    @property
    def keys(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p.s for p in self.points)


def _lattice_u(rs: RootSystem, points: Sequence[SamplePoint]) -> np.ndarray:
    return np.array([p.u for p in points], dtype=np.int64).reshape(len(points), rs.rank)


def _basis_matrix(rs, kind, weights, points, M) -> np.ndarray:
    u = _lattice_u(rs, points)
    if not weights:
        return np.zeros((0, len(points)), dtype=complex)
    return np.array([evaluate_lattice(rs, kind, lam, u, M) for lam in weights])


def transform_basis(rs: RootSystem, kind, M: int, tol: float = 1e-9) -> TransformBasis:
    """Basis functions sampled on the grid, with norms from the Gram diagonal.

    Raises :class:`SpectrumError` if the spectrum and grid sizes differ or
    the Gram matrix is not diagonal to ``tol`` (relative).
    """
    kind = Kind(kind)
    key = ("basis", kind, M)
    cached = rs._cache.get(key)
    if cached is not None:
        return cached
    weights = enumerate_spectrum(rs, kind, M).weights
    points = sample_points(rs, kind, M)
    if len(weights) != len(points):
        raise SpectrumError(f"{rs} {kind} M={M}: {len(weights)} weights for {len(points)} points")
    w = sample_weights(rs, kind, M)
    phi = _basis_matrix(rs, kind, weights, points, M)
    gram = (phi * w) @ phi.conj().T
    norms = np.real(np.diag(gram)).copy()
    if len(norms):
        off = np.abs(gram - np.diag(np.diag(gram))).max()
        if norms.min() <= tol * norms.max() or off > tol * norms.max():
            raise SpectrumError(f"{rs} {kind} M={M}: Gram matrix is not diagonal (off-diagonal {off:.3g})")
    for arr in (w, phi, norms):
        arr.setflags(write=False)
    basis = TransformBasis(kind, M, weights, points, w, phi, norms)
    rs._cache[key] = basis
    return basis


def gram_matrix(rs: RootSystem, kind, M: int) -> np.ndarray:
    """``G[lam, mu] = sum_k w_k Phi_lam(x_k) conj(Phi_mu(x_k))`` over the spectrum set.

    Computed afresh (not from the cached basis) so it can be used to
    check that basis.
    """
    kind = Kind(kind)
    weights = enumerate_spectrum(rs, kind, M).weights
    points = sample_points(rs, kind, M)
    phi = _basis_matrix(rs, kind, weights, points, M)
    return (phi * sample_weights(rs, kind, M)) @ phi.conj().T


def norm_table(rs: RootSystem, kind, M: int) -> dict[Weight, float]:
    b = transform_basis(rs, kind, M)
    return {lam: float(n) for lam, n in zip(b.weights, b.norms)}


def _check_kind(kind, obj):
    kind = Kind(kind)
    if Kind(obj.kind) is not kind:
        raise ValueError(f"{type(obj).__name__} is of kind {obj.kind}, transform requested for {kind}")
    return kind


def _ordered_values(expected: Sequence[tuple], given: Mapping, what: str) -> np.ndarray:
    given = {tuple(getattr(k, "s", k)): v for k, v in given.items()}
    missing = [k for k in expected if k not in given]
    extra = [k for k in given if k not in set(expected)]
    if missing or extra:
        parts = []
        if missing:
            parts.append(f"missing {len(missing)}: {missing[:5]}")
        if extra:
            parts.append(f"unexpected {len(extra)}: {extra[:5]}")
        raise ValueError(f"{what} keys do not match: " + "; ".join(parts))
    return np.array([given[k] for k in expected], dtype=complex)


def make_field(rs: RootSystem, kind, M: int, values) -> SampleField:
    """Build a field from an array in grid order or a mapping keyed by ``s`` tuples/points."""
    kind = Kind(kind)
    points = sample_points(rs, kind, M)
    if isinstance(values, Mapping):
        arr = _ordered_values([p.s for p in points], values, "sample field")
    else:
        arr = np.asarray(values, dtype=complex).reshape(-1)
        if arr.shape != (len(points),):
            raise ValueError(f"expected {len(points)} sample values, got {arr.size}")
    return SampleField(kind, M, points, arr)


def sample_function(rs: RootSystem, kind, M: int, func) -> SampleField:
    """Sample ``func(coords)`` (exact Fraction coordinates) on the grid of a kind."""
    points = sample_points(rs, kind, M)
    return make_field(rs, kind, M, [func(p.coords) for p in points])


def basis_field(rs: RootSystem, kind, M: int, lam) -> SampleField:
    """Samples of ``Phi_lam`` itself."""
    points = sample_points(rs, kind, M)
    return make_field(rs, kind, M, evaluate_lattice(rs, kind, lam, _lattice_u(rs, points), M))


def make_spectrum(rs: RootSystem, kind, M: int, coeffs) -> Spectrum:
    kind = Kind(kind)
    weights = enumerate_spectrum(rs, kind, M).weights
    if isinstance(coeffs, Mapping):
        arr = _ordered_values(weights, {tuple(k): v for k, v in coeffs.items()}, "spectrum")
    else:
        arr = np.asarray(coeffs, dtype=complex).reshape(-1)
        if arr.shape != (len(weights),):
            raise ValueError(f"expected {len(weights)} coefficients, got {arr.size}")
    return Spectrum(kind, M, weights, arr)


def unit_spectrum(rs: RootSystem, kind, M: int, lam) -> Spectrum:
    kind = Kind(kind)
    weights = enumerate_spectrum(rs, kind, M).weights
    lam = tuple(lam)
    if lam not in weights:
        raise ValueError(f"{lam} is not in the {kind}-spectrum of {rs} at M={M}")
    return make_spectrum(rs, kind, M, {w: float(w == lam) for w in weights})


def forward(rs: RootSystem, kind, field: SampleField | Mapping, level: int | None = None) -> Spectrum:
    """Discrete transform of sampled data; a mapping input needs ``level``."""
    if isinstance(field, SampleField):
        kind = _check_kind(kind, field)
        level = field.level
        given = field.as_dict()
    else:
        kind = Kind(kind)
        if level is None:
            raise ValueError("level is required when the field is given as a mapping")
        given = field
    b = transform_basis(rs, kind, level)
    f = _ordered_values(b.keys, given, "sample field")
    coeffs = (b.phi.conj() @ (b.quad_weights * f)) / b.norms if len(b.weights) else np.zeros(0, complex)
    return Spectrum(kind, level, b.weights, coeffs)


def inverse(rs: RootSystem, kind, spec: Spectrum) -> SampleField:
    kind = _check_kind(kind, spec)
    b = transform_basis(rs, kind, spec.level)
    c = _ordered_values(b.weights, dict(zip(spec.weights, spec.coeffs)), "spectrum")
    values = c @ b.phi if len(b.weights) else np.zeros(len(b.points), complex)
    return SampleField(kind, spec.level, b.points, values)


def _in_region(rs: RootSystem, kind: Kind, x) -> bool:
    return in_even_region(rs, x) if kind is Kind.E else in_fundamental_region(rs, x)


def synthesize(rs: RootSystem, kind, spec: Spectrum, x) -> complex:
    """Continuous extension ``sum_lam f_lam Phi_lam(x)`` at an exact co-point.

    ``x`` must lie in ``F`` (``F^e`` for E); values elsewhere follow by
    symmetry, and a point outside is more likely a caller error.
    """
    kind = _check_kind(kind, spec)
    x = as_copoint(x)
    if not _in_region(rs, kind, x):
        raise ValueError(f"co-point {tuple(map(str, x))} lies outside the region of the {kind}-transform")
    return sum((c * eval_orbit_function(rs, kind, lam, x) for lam, c in zip(spec.weights, spec.coeffs) if c != 0), 0j)


def _float_region_mask(rs: RootSystem, kind: Kind, x: np.ndarray, tol: float) -> np.ndarray:
    q = np.array(rs.marks, dtype=float)

    def inside(y):
        return np.all(y >= -tol, axis=1) & (y @ q <= 1 + tol)

    mask = inside(x)
    if kind is Kind.E:
        col = rs.cartan_array[:, 0].astype(float)
        mask |= inside(x - np.outer(x[:, 0], col))
    return mask


def synthesize_many(rs: RootSystem, kind, spec: Spectrum, x: np.ndarray, check_region: bool = True, tol: float = 1e-9) -> np.ndarray:
    """Vectorized :func:`synthesize` at float co-points (rows of ``x``)."""
    kind = _check_kind(kind, spec)
    x = np.asarray(x, dtype=float).reshape(-1, rs.rank)
    if check_region:
        bad = ~_float_region_mask(rs, kind, x, tol)
        if bad.any():
            raise ValueError(f"{int(bad.sum())} co-points lie outside the region of the {kind}-transform, e.g. {x[bad][0]}")
    out = np.zeros(len(x), dtype=complex)
    for lam, c in zip(spec.weights, spec.coeffs):
        if c != 0:
            out += c * evaluate(rs, kind, lam, x)
    return out


def region_volume(rs: RootSystem, kind) -> float:
    """Lebesgue volume of ``F`` (or ``F^e``) in co-weight coordinates: ``1 / (n! prod q)``."""
    vol = 1.0 / (math.factorial(rs.rank) * math.prod(rs.marks))
    return 2 * vol if Kind(kind) is Kind.E else vol


def quad_orthogonality(rs: RootSystem, kind, lam, mu, quadrature_M: int) -> complex:
    """Approximate ``int_F Phi_lam conj(Phi_mu) dx`` by a weighted grid sum at level ``quadrature_M``.

    The rule is the trapezoidal rule of the torus folded onto the grid,
    so it is exact once both weights lie in a common spectrum at that
    level.  Measure: Lebesgue in co-weight coordinates.
    """
    kind = Kind(kind)
    if kind is Kind.E:
        points = enumerate_grid_even(rs, quadrature_M)
        w = np.array([p.even_weight for p in points], dtype=float)
    else:
        points = enumerate_grid(rs, quadrature_M)
        w = np.array([grid_weight(rs, p) for p in points], dtype=float)
    u = _lattice_u(rs, points)
    a = evaluate_lattice(rs, kind, lam, u, quadrature_M)
    b = evaluate_lattice(rs, kind, mu, u, quadrature_M)
    return complex(region_volume(rs, kind) * np.sum(w * a * b.conj()) / np.sum(w))


class Decomposition(NamedTuple):
    kind: Kind
    terms: dict[Weight, int]


_PRODUCT_KINDS = {(Kind.C, Kind.C): Kind.C, (Kind.S, Kind.S): Kind.C, (Kind.C, Kind.S): Kind.S}


def decompose_product(rs: RootSystem, kinds, lam, mu) -> Decomposition:
    """Expand ``Phi_lam * Psi_mu`` into orbit functions with integer coefficients.

    ``kinds`` is one of ``("C", "C")``, ``("S", "S")``, ``("C", "S")``; the
    result is a C-expansion for the first two and an S-expansion for the
    last.  Every sum of orbit elements is folded into the dominant chamber;
    for S-expansions, sums landing on a wall cancel and are skipped.
    """
    k1, k2 = (Kind(k) for k in kinds)
    if (k1, k2) == (Kind.S, Kind.C):
        k1, k2, lam, mu = k2, k1, mu, lam
    if (k1, k2) not in _PRODUCT_KINDS:
        raise ValueError(f"unsupported kind pair {tuple(map(str, kinds))}; use (C,C), (S,S) or (C,S)")
    result = _PRODUCT_KINDS[(k1, k2)]
    for k, w in ((k1, lam), (k2, mu)):
        if not (is_strictly_dominant(w) if k is Kind.S else is_dominant(w)):
            raise ValueError(f"weight {tuple(w)} is not valid for a {k}-function")
    first = orbit(rs, lam)
    second = orbit(rs, mu)
    sign1 = [e.parity if k1 is Kind.S else 1 for e in first]
    sign2 = [e.parity if k2 is Kind.S else 1 for e in second]

    acc: dict[Weight, int] = defaultdict(int)
    for a, sa in zip(first, sign1):
        for b, sb in zip(second, sign2):
            nu = tuple(x + y for x, y in zip(a.weight, b.weight))
            dom, parity, on_wall = dominant_representative(rs, nu)
            if result is Kind.C:
                acc[dom] += sa * sb
            elif not on_wall:
                acc[dom] += sa * sb * parity

    terms = {}
    for nu in sorted(acc):
        size = orbit_size(rs, nu) if result is Kind.C else rs.weyl_order
        c, rem = divmod(acc[nu], size)
        if rem:
            raise AssertionError(f"non-integral coefficient {acc[nu]}/{size} at {nu}")
        if c:
            terms[nu] = c
    return Decomposition(result, terms)
