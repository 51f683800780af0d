"""Plain-text grid, spectrum and sample-field files.

Every file starts with a header ``# <series> <rank> <M> [<kind>]``
followed by one whitespace-separated record per line:

* grid:      ``s_0 s_1 ... s_n``           (even grid: ``s_0 ... s_n o_e``)
* spectrum:  ``lam_1 ... lam_n re im``
* samples:   ``s_0 s_1 ... s_n re im``

Floats are written with 17 significant digits, which round-trips
IEEE doubles exactly.  Blank lines and further ``#`` lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .lattice import EvenGridPoint
from .orbitfunc import Kind
from .rootdata import GroupType, RootSystem, build_root_system
from .transforms import SampleField, Spectrum, make_field, make_spectrum

__all__ = [
    "FormatError",
    "Header",
    "format_header",
    "write_grid",
    "read_grid",
    "write_spectrum",
    "read_spectrum",
    "write_field",
    "read_field",
]


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, path=None):
        where = f"{path}:" if path else ""
        where += f"{line}: " if line is not None else (" " if path else "")
        super().__init__(f"{where}{message}")
        self.line = line


@dataclass(frozen=True)
class Header:
    group: GroupType
    level: int
    kind: Kind | None = None
    even: bool = False


def format_header(rs: RootSystem, M: int, kind=None, even: bool = False) -> str:
    parts = ["#", rs.group_type.series, str(rs.rank), str(M)]
    if kind is not None:
        parts.append(str(Kind(kind)))
    if even:
        parts.append("even")
    return " ".join(parts)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _open_lines(source) -> tuple[list[str], str | None]:
    if isinstance(source, (str, Path)):
        return Path(source).read_text().splitlines(), str(source)
    return source.read().splitlines(), getattr(source, "name", None)


def _parse(source):
    lines, path = _open_lines(source)
    header = None
    records = []
    for no, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text:
            continue
        if text.startswith("#"):
            if header is None:
                header = _parse_header(text, no, path)
            continue
        if header is None:
            raise FormatError("data before the '# series rank M' header", no, path)
        records.append((no, text.split()))
    if header is None:
        raise FormatError("missing '# series rank M' header", None, path)
    return header, records, path


def _parse_header(text: str, no: int, path) -> Header:
    tok = text[1:].split()
    try:
        group = GroupType(tok[0].upper(), int(tok[1]))
        level = int(tok[2])
    except (IndexError, ValueError) as exc:
        raise FormatError(f"bad header {text!r}: {exc}", no, path) from None
    kind = None
    even = False
    for t in tok[3:]:
        if t == "even":
            even = True
        elif t in ("C", "S", "E"):
            kind = Kind(t)
        else:
            raise FormatError(f"unknown header token {t!r}", no, path)
    return Header(group, level, kind, even)


def _ints(fields, no, path):
    try:
        return tuple(int(v) for v in fields)
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(fields)!r}", no, path) from None


def _complex(fields, no, path):
    try:
        return complex(float(fields[0]), float(fields[1]))
    except ValueError:
        raise FormatError(f"expected 're im' floats, got {' '.join(fields)!r}", no, path) from None


def _write(dest, text: str):
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text)
    else:
        dest.write(text)


def write_grid(dest, rs: RootSystem, points, M: int):
    """Write ``F_M`` points, or even-grid points with an ``o_e`` column."""
    points = list(points)
    even = bool(points) and isinstance(points[0], EvenGridPoint)
    lines = [format_header(rs, M, even=even)]
    for p in points:
        row = [str(v) for v in p.s]
        if even:
            row.append(str(p.even_weight))
        lines.append(" ".join(row))
    _write(dest, "\n".join(lines) + "\n")


def read_grid(source) -> tuple[Header, list[tuple[int, ...]], list[int] | None]:
    """Return header, ``s`` tuples and (for even grids) the ``o_e`` column."""
    header, records, path = _parse(source)
    n = header.group.rank
    width = n + 2 if header.even else n + 1
    pts, weights = [], []
    for no, fields in records:
        if len(fields) != width:
            raise FormatError(f"expected {width} integers, got {len(fields)}", no, path)
        vals = _ints(fields, no, path)
        pts.append(vals[: n + 1])
        weights.append(vals[-1])
    return header, pts, (weights if header.even else None)


def write_spectrum(dest, rs: RootSystem, spec: Spectrum):
    lines = [format_header(rs, spec.level, spec.kind)]
    for lam, c in zip(spec.weights, spec.coeffs):
        lines.append(" ".join([*map(str, lam), _fmt(c.real), _fmt(c.imag)]))
    _write(dest, "\n".join(lines) + "\n")


def _resolve_kind(header: Header, kind, path):
    if kind is None and header.kind is None:
        raise FormatError("kind not given in header; pass it explicitly", None, path)
    if kind is not None and header.kind is not None and Kind(kind) is not header.kind:
        raise FormatError(f"file holds kind {header.kind}, {Kind(kind)} requested", None, path)
    return Kind(kind) if kind is not None else header.kind


def read_spectrum(source, kind=None) -> tuple[RootSystem, Spectrum]:
    header, records, path = _parse(source)
    kind = _resolve_kind(header, kind, path)
    rs = build_root_system(header.group)
    n = rs.rank
    coeffs = {}
    for no, fields in records:
        if len(fields) != n + 2:
            raise FormatError(f"expected {n} weight coordinates and 're im', got {len(fields)} fields", no, path)
        lam = _ints(fields[:n], no, path)
        if lam in coeffs:
            raise FormatError(f"duplicate weight {lam}", no, path)
        coeffs[lam] = _complex(fields[n:], no, path)
    try:
        return rs, make_spectrum(rs, kind, header.level, coeffs)
    except ValueError as exc:
        raise FormatError(str(exc), None, path) from None


def write_field(dest, rs: RootSystem, field: SampleField):
    lines = [format_header(rs, field.level, field.kind)]
    for p, v in zip(field.points, field.values):
        lines.append(" ".join([*map(str, p.s), _fmt(v.real), _fmt(v.imag)]))
    _write(dest, "\n".join(lines) + "\n")


def read_field(source, kind=None) -> tuple[RootSystem, SampleField]:
    header, records, path = _parse(source)
    kind = _resolve_kind(header, kind, path)
    rs = build_root_system(header.group)
    n = rs.rank
    values = {}
    for no, fields in records:
        if len(fields) != n + 3:
            raise FormatError(f"expected {n + 1} grid integers and 're im', got {len(fields)} fields", no, path)
        s = _ints(fields[: n + 1], no, path)
        if s in values:
            raise FormatError(f"duplicate grid point {s}", no, path)
        values[s] = _complex(fields[n + 1:], no, path)
    try:
        return rs, make_field(rs, kind, header.level, values)
    except ValueError as exc:
        raise FormatError(str(exc), None, path) from None
