"""Interpolating functions on the A2 triangle.

Sample on F_M, transform, then evaluate the finite orbit-function sum
anywhere in F. The C-interpolant really approximates the W-invariant,
periodic extension of the data, so its accuracy depends on how smooth
that extension is. A function that is itself W-invariant and periodic
converges spectrally; a generic bump gets kinks on the walls and
converges only slowly.
"""

import numpy as np

from lietransforms import evaluate, forward, root_system, sample_function, synthesize_many

rs = root_system("A2")


def invariant(x):
    # exp of a real C-function: smooth, periodic and W-invariant
    x = np.atleast_2d(np.asarray(x, dtype=float))
    return np.exp(evaluate(rs, "C", (1, 1), x).real / 3)


def bump(x):
    x = np.atleast_2d(np.asarray(x, dtype=float))
    return np.exp(-4 * np.sum((x - 0.3) ** 2, axis=-1))


rng = np.random.default_rng(0)
probe = rng.dirichlet(np.ones(3), size=400)[:, 1:]  # uniform points in x1 + x2 <= 1

print(" M  points  invariant f   generic bump")
for M in (2, 4, 6, 8, 12, 16, 24):
    errs = []
    for func in (invariant, bump):
        spec = forward(rs, "C", sample_function(rs, "C", M, lambda x: func([float(c) for c in x])[0]))
        errs.append(np.abs(synthesize_many(rs, "C", spec, probe) - func(probe)).max())
    print(f"{M:2d} {len(spec.weights):7d}  {errs[0]:.3e}     {errs[1]:.3e}")

# %% The E-interpolant lives on F^e. Its W^e-extension glues the outer
# edges of F^e by rotations, so the bump is no longer even continuous
# there and the sup error stalls (Gibbs), while the invariant function
# still converges.
print("\nE-transform on F^e (probe points in F):")
for M in (4, 8, 16):
    errs = []
    for func in (invariant, bump):
        spec = forward(rs, "E", sample_function(rs, "E", M, lambda x: func([float(c) for c in x])[0]))
        errs.append(np.abs(synthesize_many(rs, "E", spec, probe) - func(probe)).max())
    print(f"{M:2d}  invariant {errs[0]:.3e}   bump {errs[1]:.3e}")
