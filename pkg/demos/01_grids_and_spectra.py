"""Grids F_M, their weights, and the matching spectrum sets.

Every simple type gets a grid of points s_0 + sum q_k s_k = M on its
fundamental simplex. The transform is invertible because the number of
labels in the lowest spectrum set always equals the number of points.
"""

import numpy as np

from lietransforms import enumerate_grid, enumerate_grid_even, enumerate_spectrum, grid_weight, root_system

# The marks q (highest root coefficients) fix the shape of the grid.
for label in ["A2", "B2", "C2", "G2", "B3", "F4"]:
    rs = root_system(label)
    print(f"{label:3s} marks {rs.marks}  dual marks {rs.dual_marks}  |W| = {rs.weyl_order}")

# %% The C2 grid at M = 4, with the torus orbit size of each point.
rs = root_system("C2")
M = 4
print("\nC2, M = 4:")
for p in enumerate_grid(rs, M):
    print(f"  s = {p.s}  x = ({', '.join(str(c) for c in p.coords)})  |Wx| = {grid_weight(rs, p)}")

# the weights add up to the number of torus points of order M, M^n det C
total = sum(grid_weight(rs, p) for p in enumerate_grid(rs, M))
print(f"sum of |Wx| = {total} = {M}^2 * det C = {M ** 2 * 2}")

# %% Counting: C uses every point, S only interior ones, E the even grid.
print("\n M   |F_M|  |S^C|  interior  |S^S|  even  |S^E|")
for M in range(1, 9):
    grid = enumerate_grid(rs, M)
    interior = sum(p.interior for p in grid)
    print(
        f"{M:2d} {len(grid):7d} {len(enumerate_spectrum(rs, 'C', M)):6d} {interior:9d}"
        f" {len(enumerate_spectrum(rs, 'S', M)):6d} {len(enumerate_grid_even(rs, M)):5d}"
        f" {len(enumerate_spectrum(rs, 'E', M)):6d}"
    )

# %% The E spectrum pairs each interior label with its mirror image.
spec = enumerate_spectrum(rs, "E", 5)
print("\nE-spectrum of C2 at M = 5:")
print(" ", np.array(spec.weights).tolist())
