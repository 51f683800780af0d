"""Command-line front end.

    lietransforms grid --group C2 --M 6 [--even] [--out grid.txt]
    lietransforms spectrum --group C2 --kind E --M 5 [--unit 2,1] [--out spec.txt]
    lietransforms transform --in field.txt --out spec.txt [--check]
    lietransforms inverse --in spec.txt --out field.txt
    lietransforms interpolate --in spec.txt --mesh 32 --out mesh.csv
    lietransforms plot --group C2 --kind E --M 5 --weight 2,1 --mesh 256 --out fig
    lietransforms verify --group G2 --kind C --M 5

Exit status: 0 on success, 1 for invalid input, 2 when a numerical check fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import fileio, plotting
from .lattice import R_INDEX, SpectrumError, enumerate_grid, enumerate_grid_even, enumerate_spectrum, sample_points
from .orbitfunc import Kind, evaluate_lattice
from .rootdata import GroupType, RootSystem, build_root_system
from .transforms import forward, gram_matrix, inverse, make_field, make_spectrum, synthesize_many, unit_spectrum
from .weyl import reflect_copoint, reflect_simple

EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 1, 2
ROUND_TRIP_TOL = 1e-10
GRAM_TOL = 1e-9
VANISH_TOL = 1e-12


def _group(text: str) -> GroupType:
    try:
        return GroupType.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _level(text: str) -> int:
    try:
        M = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"M must be an integer, got {text!r}") from None
    if M < 1:
        raise argparse.ArgumentTypeError(f"M must be >= 1, got {M}")
    return M


def _weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.replace(" ", "").strip("()").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must look like '2,1', got {text!r}") from None


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _emit(text_writer, args, rs, *payload):
    """Write to ``--out`` or stdout."""
    if args.out is None:
        text_writer(sys.stdout, rs, *payload)
    else:
        text_writer(args.out, rs, *payload)


def _info(msg: str):
    print(msg, file=sys.stderr)


# -- commands ---------------------------------------------------------------

def cmd_grid(args) -> int:
    rs = build_root_system(args.group)
    pts = enumerate_grid_even(rs, args.M) if args.even else enumerate_grid(rs, args.M)
    _emit(lambda dest, r, p: fileio.write_grid(dest, r, p, args.M), args, rs, pts)
    _info(f"{rs} M={args.M}: {len(pts)} {'even-grid' if args.even else 'grid'} points")
    return EXIT_OK


def cmd_spectrum(args) -> int:
    rs = build_root_system(args.group)
    if args.unit is not None:
        spec = unit_spectrum(rs, args.kind, args.M, args.unit)
    else:
        weights = enumerate_spectrum(rs, args.kind, args.M).weights
        spec = make_spectrum(rs, args.kind, args.M, np.zeros(len(weights)))
    _emit(fileio.write_spectrum, args, rs, spec)
    _info(f"{rs} {args.kind} M={args.M}: {len(spec.weights)} spectrum weights")
    return EXIT_OK


def _round_trip_error(rs, kind, field) -> float:
    back = inverse(rs, kind, forward(rs, kind, field))
    return float(np.max(np.abs(back.values - field.values), initial=0.0))


def cmd_transform(args) -> int:
    rs, field = fileio.read_field(args.inp, args.kind)
    spec = forward(rs, field.kind, field)
    _emit(fileio.write_spectrum, args, rs, spec)
    if args.check:
        err = _round_trip_error(rs, field.kind, field)
        ok = err < ROUND_TRIP_TOL
        print(f"round trip: max error {err:.3e} {'<' if ok else '>='} {ROUND_TRIP_TOL:g}", file=sys.stderr if args.out is None else sys.stdout)
        if not ok:
            return EXIT_FAILED
    return EXIT_OK


def cmd_inverse(args) -> int:
    rs, spec = fileio.read_spectrum(args.inp, args.kind)
    _emit(fileio.write_field, args, rs, inverse(rs, spec.kind, spec))
    return EXIT_OK


def mesh_copoints(rs: RootSystem, kind, n: int) -> np.ndarray:
    """Uniform barycentric mesh: the points of ``F_n`` (plus their ``r``-images off the wall for E)."""
    pts = [p.coords for p in enumerate_grid(rs, n)]
    if Kind(kind) is Kind.E:
        pts += [reflect_copoint(rs, R_INDEX, x) for x in pts if x[R_INDEX] != 0]
    return np.array([[float(c) for c in x] for x in pts]).reshape(len(pts), rs.rank)


def cmd_interpolate(args) -> int:
    rs, spec = fileio.read_spectrum(args.inp, args.kind)
    x = mesh_copoints(rs, spec.kind, args.mesh)
    vals = synthesize_many(rs, spec.kind, spec, x, check_region=False)
    header = ",".join([f"x{k + 1}" for k in range(rs.rank)] + ["re", "im"])
    lines = [header] + [
        ",".join([*(format(c, ".17g") for c in row), format(v.real, ".17g"), format(v.imag, ".17g")])
        for row, v in zip(x, vals)
    ]
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    _info(f"{rs} {spec.kind}: {len(x)} mesh points")
    return EXIT_OK


def _plot_paths(out: str | None) -> tuple[Path, Path]:
    base = Path(out or "plot")
    if base.suffix in (".pgm", ".csv"):
        base = base.with_suffix("")
    return base.with_suffix(".pgm"), base.with_suffix(".csv")


def cmd_plot(args) -> int:
    if args.inp is not None:
        rs, spec = fileio.read_spectrum(args.inp, args.kind)
    else:
        if args.group is None or args.kind is None or args.M is None or args.weight is None:
            raise ValueError("plot needs --in, or all of --group, --kind, --M and --weight")
        rs = build_root_system(args.group)
        spec = unit_spectrum(rs, args.kind, args.M, args.weight)
    raster = plotting.render(rs, spec.kind, spec, args.mesh)
    part = {"re": np.real, "im": np.imag, "abs": np.abs}[args.part]
    image = np.where(raster.mask, part(raster.values), np.nan)
    pgm, csv = _plot_paths(args.out)
    plotting.write_pgm(pgm, image)
    plotting.write_raster_csv(csv, raster)
    print(f"wrote {pgm} ({image.shape[1]}x{image.shape[0]}) and {csv} ({int(raster.mask.sum())} pixels inside)")
    return EXIT_OK


def verify_report(rs: RootSystem, kind, M: int, trials: int = 3, seed: int = 0) -> tuple[bool, list[str]]:
    """Run the Gram, round-trip, boundary and E-relation checks; return (passed, report lines)."""
    kind = Kind(kind)
    lines = []
    passed = True

    def check(name, value, tol):
        nonlocal passed
        ok = value < tol
        passed &= ok
        lines.append(f"{name:<28} {value:.3e}  (< {tol:g})  {'PASS' if ok else 'FAIL'}")

    pts = sample_points(rs, kind, M)
    grid = enumerate_grid(rs, M)
    spec = enumerate_spectrum(rs, kind, M)
    lines.append(f"{rs} {kind} M={M}")
    lines.append(f"grid points |F_M|             {len(grid)}  (interior {sum(p.interior for p in grid)})")
    if kind is Kind.E:
        lines.append(f"even grid points              {len(pts)}")
    lines.append(f"|spectrum| = {len(spec)}, sample points = {len(pts)}  {'PASS' if len(spec) == len(pts) else 'FAIL'}")
    passed &= len(spec) == len(pts)

    gram = gram_matrix(rs, kind, M)
    if gram.size:
        diag = np.abs(np.diag(gram))
        off = np.abs(gram - np.diag(np.diag(gram))).max() / diag.max()
        check("gram off-diagonal (rel)", off, GRAM_TOL)
        passed &= bool(diag.min() > GRAM_TOL * diag.max())

    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        field = make_field(rs, kind, M, rng.normal(size=len(pts)) + 1j * rng.normal(size=len(pts)))
        worst = max(worst, _round_trip_error(rs, kind, field))
    check("round trip", worst, ROUND_TRIP_TOL)

    if kind is Kind.S:
        wall = [p for p in grid if not p.interior]
        u = np.array([p.u for p in wall], dtype=np.int64).reshape(len(wall), rs.rank)
        worst = max((float(np.abs(evaluate_lattice(rs, kind, lam, u, M)).max(initial=0.0)) for lam in spec), default=0.0)
        check("S on boundary points", worst, VANISH_TOL)

    if kind is Kind.E:
        u = np.array([p.u for p in grid], dtype=np.int64).reshape(len(grid), rs.rank)
        worst = 0.0
        for lam in enumerate_spectrum(rs, Kind.C, M):
            r = reflect_simple(rs, R_INDEX, lam)
            e = evaluate_lattice(rs, Kind.E, lam, u, M)
            er = evaluate_lattice(rs, Kind.E, r, u, M)
            c = evaluate_lattice(rs, Kind.C, lam, u, M)
            if all(v >= 1 for v in lam):
                s = evaluate_lattice(rs, Kind.S, lam, u, M)
                worst = max(worst, np.abs(c - e - er).max(), np.abs(s - e + er).max())
            else:
                worst = max(worst, np.abs(c - e).max())
        check("E relations (C, S vs E)", float(worst), VANISH_TOL)
    return bool(passed), lines


def cmd_verify(args) -> int:
    rs = build_root_system(args.group)
    ok, lines = verify_report(rs, args.kind, args.M, trials=args.trials, seed=args.seed)
    print("\n".join(lines))
    print("verify: PASS" if ok else "verify: FAIL")
    return EXIT_OK if ok else EXIT_FAILED


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lietransforms", description="Orbit-function transforms of compact simple Lie groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, need_group=True, need_kind=True, need_M=True, has_in=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("--group", type=_group, required=need_group and not has_in, help="series and rank, e.g. C2")
        p.add_argument("--kind", type=Kind, choices=list(Kind), required=need_kind and not has_in)
        p.add_argument("--M", type=_level, required=need_M and not has_in, help="grid level")
        p.add_argument("--out", help="output path (default: stdout)")
        if has_in:
            p.add_argument("--in", dest="inp", required=name != "plot", help="input file")
        p.set_defaults(func=func)
        return p

    p = add("grid", cmd_grid, "write the grid F_M", need_kind=False)
    p.add_argument("--even", action="store_true", help="even grid for E-transforms, with o_e column")

    p = add("spectrum", cmd_spectrum, "write a spectrum template (zeros, or a unit coefficient)")
    p.add_argument("--unit", type=_weight, metavar="LAM", help="set the coefficient of LAM to 1")

    p = add("transform", cmd_transform, "sample file -> spectrum file", has_in=True)
    p.add_argument("--check", action="store_true", help="also run the inverse and report the round-trip error")

    add("inverse", cmd_inverse, "spectrum file -> sample file", has_in=True)

    p = add("interpolate", cmd_interpolate, "evaluate the interpolant on a barycentric mesh (CSV)", has_in=True)
    p.add_argument("--mesh", type=_positive, default=32, help="mesh level N (points of F_N)")

    p = add("plot", cmd_plot, "heatmap (PGM) and CSV of an interpolant over F or F^e", has_in=True)
    p.add_argument("--weight", type=_weight, help="plot the single orbit function of this weight")
    p.add_argument("--mesh", type=_positive, default=256, help="image size in pixels")
    p.add_argument("--part", choices=["re", "im", "abs"], default="re")

    p = add("verify", cmd_verify, "Gram, round-trip, boundary and E-relation checks")
    p.add_argument("--trials", type=_positive, default=3)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return args.func(args)
    except SpectrumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
