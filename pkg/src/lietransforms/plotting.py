"""Rasterizing interpolants over ``F`` / ``F^e`` and writing portable graymaps.

Co-points are drawn in the orthonormal frame of the standard root
realization (see :func:`rootdata.orthogonal_simple_roots`), so for C2 the
even region ``F^e`` is an axis-aligned square.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .lattice import R_INDEX
from .orbitfunc import Kind
from .rootdata import RootSystem, orthogonal_simple_roots
from .transforms import Spectrum, _float_region_mask, synthesize_many

__all__ = ["plane_frame", "region_vertices", "Raster", "render", "write_pgm", "write_raster_csv", "to_gray"]


def plane_frame(rs: RootSystem) -> tuple[np.ndarray, np.ndarray]:
    """Matrices ``(to_plane, to_copoint)`` between co-weight and orthonormal coordinates.

    ``to_plane`` (n x n) maps co-weight coordinates ``x`` to Euclidean
    coordinates ``y``; ``to_copoint`` inverts it (``x_k = <alpha_k, y>``).
    """
    roots = orthogonal_simple_roots(rs.group_type)  # n x d
    n, d = roots.shape
    if d == n:
        basis = np.eye(d)
    else:
        basis, _ = np.linalg.qr(roots.T)  # d x n, orthonormal span of the roots
    roots_plane = roots @ basis  # n x n
    return np.linalg.inv(roots_plane), roots_plane


def region_vertices(rs: RootSystem, kind) -> np.ndarray:
    """Vertices of ``F`` (or of ``F U r F`` for E) in co-weight coordinates."""
    n = rs.rank
    verts = [np.zeros(n)] + [np.eye(n)[k] / rs.marks[k] for k in range(n)]
    if Kind(kind) is Kind.E:
        col = rs.cartan_array[:, R_INDEX].astype(float)
        verts += [v - v[R_INDEX] * col for v in verts]
    return np.array(verts)


@dataclass(frozen=True)
class Raster:
    values: np.ndarray  # complex, NaN outside the region; row 0 is the top edge
    mask: np.ndarray
    extent: tuple[float, float, float, float]  # xmin, xmax, ymin, ymax
    centers: np.ndarray  # (rows, cols, dim) Euclidean pixel centers


def render(rs: RootSystem, kind, spec: Spectrum, size: int = 256) -> Raster:
    """Evaluate the interpolant at pixel centers over the bounding box of the region."""
    kind = Kind(kind)
    if rs.rank > 2:
        raise ValueError(f"heatmaps need rank <= 2, {rs} has rank {rs.rank}")
    to_plane, to_copoint = plane_frame(rs)
    corners = region_vertices(rs, kind) @ to_plane.T
    lo, hi = corners.min(axis=0), corners.max(axis=0)
    if rs.rank == 1:
        xs = lo[0] + (np.arange(size) + 0.5) * (hi[0] - lo[0]) / size
        centers = xs.reshape(1, size, 1)
        extent = (lo[0], hi[0], 0.0, 0.0)
    else:
        xs = lo[0] + (np.arange(size) + 0.5) * (hi[0] - lo[0]) / size
        ys = hi[1] - (np.arange(size) + 0.5) * (hi[1] - lo[1]) / size
        gx, gy = np.meshgrid(xs, ys)
        centers = np.stack([gx, gy], axis=-1)
        extent = (lo[0], hi[0], lo[1], hi[1])
    flat = centers.reshape(-1, rs.rank)
    x = flat @ to_copoint.T
    mask = _float_region_mask(rs, kind, x, 1e-9)
    values = np.full(len(flat), np.nan + 0j)
    values[mask] = synthesize_many(rs, kind, spec, x[mask], check_region=False)
    shape = centers.shape[:-1]
    return Raster(values.reshape(shape), mask.reshape(shape), extent, centers)


def to_gray(image: np.ndarray) -> np.ndarray:
    """Min-max scale finite pixels to 0..255; NaN pixels become mid-gray 128."""
    img = np.asarray(image, dtype=float)
    finite = np.isfinite(img)
    out = np.full(img.shape, 128, dtype=np.uint8)
    if finite.any():
        lo, hi = img[finite].min(), img[finite].max()
        if hi - lo > 1e-12 * max(1.0, abs(hi)):
            out[finite] = np.rint(255 * (img[finite] - lo) / (hi - lo)).astype(np.uint8)
        else:
            out[finite] = 255
    return out


def write_pgm(path, image: np.ndarray):
    """Binary P5 graymap, row-major, maxval 255."""
    gray = to_gray(image)
    if gray.ndim == 1:
        gray = gray[None, :]
    rows, cols = gray.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{cols} {rows}\n255\n".encode("ascii"))
        fh.write(np.ascontiguousarray(gray).tobytes())


def read_pgm(path) -> np.ndarray:
    data = Path(path).read_bytes()
    tokens, pos = [], 0
    while len(tokens) < 4:
        while data[pos:pos + 1].isspace():
            pos += 1
        start = pos
        while not data[pos:pos + 1].isspace():
            pos += 1
        tokens.append(data[start:pos].decode("ascii"))
    if tokens[0] != "P5":
        raise ValueError(f"{path}: not a binary graymap")
    cols, rows = int(tokens[1]), int(tokens[2])
    return np.frombuffer(data[pos + 1:pos + 1 + rows * cols], dtype=np.uint8).reshape(rows, cols)


def write_raster_csv(path, raster: Raster):
    """CSV of ``x,y,re,im`` (``x,re,im`` at rank 1) for pixels inside the region."""
    pts = raster.centers[raster.mask]
    vals = raster.values[raster.mask]
    cols = ["x", "y"][: pts.shape[1]]
    with open(path, "w") as fh:
        fh.write(",".join(cols + ["re", "im"]) + "\n")
        for p, v in zip(pts, vals):
            fh.write(",".join([*(format(c, ".17g") for c in p), format(v.real, ".17g"), format(v.imag, ".17g")]) + "\n")
