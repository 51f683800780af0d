"""E_(2,1) and E_r(2,1) for C2 over the even region F^e.

In orthonormal coordinates F^e is a square whose diagonal is the wall of
the reflection r. The two functions are mirror images across it:
E_{r lam}(x) = E_lam(r x). Writes two PGM heatmaps and CSVs.
"""

import argparse
from pathlib import Path

import numpy as np

from lietransforms import reflect_simple, root_system, unit_spectrum
from lietransforms.plotting import render, write_pgm, write_raster_csv

parser = argparse.ArgumentParser()
parser.add_argument("--out", default="demo_output")
parser.add_argument("--size", type=int, default=256)
args = parser.parse_args()
out = Path(args.out)
out.mkdir(exist_ok=True)

rs = root_system("C2")
lam = (2, 1)
rlam = reflect_simple(rs, 0, lam)
print(f"lam = {lam}, r lam = {rlam}")

rasters = {}
for name, w in [("E_2_1", lam), ("E_r_2_1", rlam)]:
    raster = render(rs, "E", unit_spectrum(rs, "E", 5, w), args.size)
    rasters[name] = raster
    write_pgm(out / f"{name}.pgm", raster.values.real)
    write_raster_csv(out / f"{name}.csv", raster)
    print(f"{name}: range [{raster.values.real.min():.3f}, {raster.values.real.max():.3f}], imag max {abs(raster.values.imag).max():.2e}")

# r swaps the two Euclidean axes here; rows run top to bottom, so the
# mirror of pixel (i, j) is (n-1-j, n-1-i)
a = rasters["E_2_1"].values
b = rasters["E_r_2_1"].values
mirror = a[::-1, ::-1].T
print("max |E_r(2,1) - mirrored E_(2,1)| =", np.abs(b - mirror).max())
print("images written to", out.resolve())
