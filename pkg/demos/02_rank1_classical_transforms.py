"""In rank one the three transforms are the DCT-I, the DST-I and the DFT.

For A1 the fundamental region is [0, 1], the grid is x = s/M, and
C_m(x) = 2 cos(pi m x), S_m(x) = 2i sin(pi m x), E_m(x) = exp(i pi m x).
"""

import numpy as np
from scipy.fft import dct, dst

from lietransforms import forward, make_field, root_system, sample_points

a1 = root_system("A1")
M = 8
x = np.arange(M + 1) / M
f = np.exp(-3 * x) * np.cos(5 * x)

# %% C-transform against a weighted DCT-I.
field = make_field(a1, "C", M, {(M - s, s): f[s] for s in range(M + 1)})
ours = forward(a1, "C", field).coeffs.real
scale = np.full(M + 1, 1 / (2 * M))
scale[M] /= 2
classical = dct(f, type=1) * scale
print("C-coefficients :", np.round(ours, 5))
print("weighted DCT-I :", np.round(classical, 5))
print("max difference :", np.abs(ours - classical).max())

# %% S-transform against DST-I on the interior points.
g = f[1:-1]
field = make_field(a1, "S", M, {(M - s, s): g[s - 1] for s in range(1, M)})
ours = forward(a1, "S", field).coeffs
print("\nS vs DST-I     :", np.abs(ours - (-1j) * dst(g, type=1) / (2 * M)).max())

# %% E-transform: F^e = [-1, 1] holds 2M points, and the transform is a length-2M DFT.
pts = sample_points(a1, "E", M)
u = np.array([p.u[0] for p in pts])
h = np.exp(-((u / M) ** 2)) + 0.3j * u / M
field = make_field(a1, "E", M, h)
spec = forward(a1, "E", field)
y = np.zeros(2 * M, complex)
y[u % (2 * M)] = h
ref = np.fft.fft(y) / (2 * M)
print("E vs FFT       :", max(abs(c - ref[w[0] % (2 * M)]) for w, c in zip(spec.weights, spec.coeffs)))
