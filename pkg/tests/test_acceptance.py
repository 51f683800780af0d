"""Acceptance criteria 1-9, one or more tests each.

Run ``pytest tests/test_acceptance.py`` for a per-criterion PASS/FAIL table
in the terminal summary (collected by ``conftest.py``).
"""

import time
from fractions import Fraction

import numpy as np
import pytest
from scipy.fft import dct, dst

from lietransforms.cli import main as cli_main
from lietransforms.lattice import (
    R_INDEX,
    enumerate_grid,
    enumerate_spectrum,
    sample_points,
    weight_level,
)
from lietransforms.orbitfunc import eval_C, eval_E, eval_S, eval_orbit_function, evaluate
from lietransforms.plotting import plane_frame
from lietransforms.rootdata import root_system
from lietransforms.transforms import (
    decompose_product,
    forward,
    gram_matrix,
    inverse,
    make_field,
    quad_orthogonality,
)
from lietransforms.weyl import dominant_representative, orbit_size, reflect_copoint, reflect_simple

import oracles

GROUPS = ["A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"]
RANK2 = ["A2", "B2", "C2", "G2"]
KINDS = ["C", "S", "E"]
LEVELS = range(1, 9)


def rational_point(rng, n, lo=-1, hi=1, den=30):
    return tuple(Fraction(int(rng.integers(lo * den, hi * den + 1)), den) for _ in range(n))


def random_word(rng, n, parity=None):
    length = int(rng.integers(1, 7))
    if parity is not None and length % 2 != parity:
        length += 1
    return [int(i) for i in rng.integers(0, n, size=length)]


def apply_word(rs, word, x):
    for i in word:
        x = reflect_copoint(rs, i, x)
    return x


# -- 1 ----------------------------------------------------------------------

@pytest.mark.criterion(1)
def test_1_discrete_orthogonality(record_property):
    start = time.perf_counter()
    worst, where = 0.0, None
    for label in GROUPS:
        rs = root_system(label)
        for kind in KINDS:
            for M in LEVELS:
                g = gram_matrix(rs, kind, M)
                if g.size == 0:
                    continue
                diag = np.abs(np.diag(g))
                ratio = np.abs(g - np.diag(np.diag(g))).max() / diag.max()
                assert ratio < 1e-9, (label, kind, M, ratio)
                assert diag.min() > 0, (label, kind, M)
                if ratio > worst:
                    worst, where = ratio, (label, kind, M)
    elapsed = time.perf_counter() - start
    record_property("detail", f"max off/diag {worst:.2e} at {where}, {elapsed:.1f}s")
    assert elapsed < 60


# -- 2 ----------------------------------------------------------------------

@pytest.mark.criterion(2)
def test_2_invertibility(record_property):
    rng = np.random.default_rng(2024)
    worst = 0.0
    for label in GROUPS:
        rs = root_system(label)
        for kind in KINDS:
            for M in LEVELS:
                n = len(sample_points(rs, kind, M))
                for _ in range(10):
                    field = make_field(rs, kind, M, rng.normal(size=n) + 1j * rng.normal(size=n))
                    back = inverse(rs, kind, forward(rs, kind, field))
                    worst = max(worst, float(np.max(np.abs(back.values - field.values), initial=0.0)))
    record_property("detail", f"max error {worst:.2e}")
    assert worst < 1e-10


# -- 3 ----------------------------------------------------------------------

@pytest.mark.criterion(3)
def test_3_rank1_dct(record_property):
    a1 = root_system("A1")
    rng = np.random.default_rng(3)
    worst = 0.0
    for M in range(1, 33):
        f = rng.normal(size=M + 1) + 1j * rng.normal(size=M + 1)  # f[s] = f(s/M)
        field = make_field(a1, "C", M, {(M - s, s): f[s] for s in range(M + 1)})
        scale = np.full(M + 1, 1 / (2 * M))
        scale[M] /= 2  # C_0 = 1 but C_M = 2 cos(pi s)
        expected = dct(f.real, type=1) * scale + 1j * dct(f.imag, type=1) * scale
        spec = forward(a1, "C", field)
        worst = max(worst, np.abs(spec.coeffs - expected).max())
        assert [w[0] for w in spec.weights] == list(range(M + 1))
    record_property("detail", f"C vs weighted DCT-I, M<=32: {worst:.1e}")
    assert worst < 1e-10


@pytest.mark.criterion(3)
def test_3_rank1_dst(record_property):
    a1 = root_system("A1")
    rng = np.random.default_rng(4)
    worst = 0.0
    for M in range(2, 33):
        f = rng.normal(size=M - 1)  # f[k] = f((k+1)/M)
        field = make_field(a1, "S", M, {(M - s, s): f[s - 1] for s in range(1, M)})
        worst = max(worst, np.abs(forward(a1, "S", field).coeffs - (-1j) * dst(f, type=1) / (2 * M)).max())
    record_property("detail", f"S vs DST-I: {worst:.1e}")
    assert worst < 1e-10


@pytest.mark.criterion(3)
def test_3_rank1_dft(record_property):
    # F^e = [-1, 1] carries 2M points u/M and E_m(u/M) = exp(i pi m u / M)
    a1 = root_system("A1")
    rng = np.random.default_rng(5)
    worst = 0.0
    for M in range(1, 33):
        points = sample_points(a1, "E", M)
        f = rng.normal(size=2 * M) + 1j * rng.normal(size=2 * M)  # indexed by u mod 2M
        field = make_field(a1, "E", M, {p.s: f[p.u[0] % (2 * M)] for p in points})
        spec = forward(a1, "E", field)
        ref = np.fft.fft(f) / (2 * M)
        expected = np.array([ref[w[0] % (2 * M)] for w in spec.weights])
        worst = max(worst, np.abs(spec.coeffs - expected).max())
        assert sorted(w[0] for w in spec.weights) == list(range(-(M - 1), M + 1))
    record_property("detail", f"E vs DFT on exponents pi*m*u/M: {worst:.1e}")
    assert worst < 1e-10


# -- 4 ----------------------------------------------------------------------

@pytest.mark.criterion(4)
def test_4_weyl_symmetries(record_property):
    rng = np.random.default_rng(41)
    worst = 0.0
    for label in RANK2:
        rs = root_system(label)
        for _ in range(100):
            x = rational_point(rng, 2)
            lam = tuple(int(v) for v in rng.integers(0, 5, 2))
            slam = tuple(v + 1 for v in lam)
            elam = reflect_simple(rs, R_INDEX, slam) if rng.random() < 0.5 else lam
            word = random_word(rng, 2)
            wx = apply_word(rs, word, x)
            sign = (-1) ** len(word)
            even_x = apply_word(rs, random_word(rng, 2, parity=0), x)
            worst = max(
                worst,
                abs(eval_C(rs, lam, wx) - eval_C(rs, lam, x)),
                abs(eval_S(rs, slam, wx) - sign * eval_S(rs, slam, x)),
                abs(eval_E(rs, elam, even_x) - eval_E(rs, elam, x)),
            )
    record_property("detail", f"invariance {worst:.1e}")
    assert worst < 1e-12


@pytest.mark.criterion(4)
def test_4_s_vanishes_on_boundary(record_property):
    worst, count = 0.0, 0
    for label in RANK2:
        rs = root_system(label)
        for M in LEVELS:
            wall = [p for p in enumerate_grid(rs, M) if not p.interior]
            lams = enumerate_spectrum(rs, "S", M).weights or ((1, 1),)
            for lam in lams:
                for p in wall:
                    worst = max(worst, abs(eval_S(rs, lam, p.coords)))
                    count += 1
    record_property("detail", f"{count} evaluations, max |S| {worst:.1e}")
    assert worst < 1e-12


def wall_normals(rs):
    """Unit normals (Euclidean length 1, co-weight coordinates) of the walls x_k = 0 and <xi, x> = 1."""
    to_plane, _ = plane_frame(rs)
    ext = np.array(rs.extended_cartan, dtype=float)
    # coroot alpha_k^vee is column k of C; the affine wall has normal xi^vee = -column 0 of the extended matrix
    normals = [rs.cartan_array[:, k].astype(float) for k in range(rs.rank)] + [-ext[1:, 0]]
    return [v / np.linalg.norm(to_plane @ v) for v in normals]


@pytest.mark.criterion(4)
def test_4_c_normal_derivative_vanishes(record_property):
    rng = np.random.default_rng(43)
    h = 1e-4
    worst_ratio = 0.0
    for label in RANK2:
        rs = root_system(label)
        q = np.array(rs.marks, float)
        normals = wall_normals(rs)
        for _ in range(20):
            lam = tuple(int(v) for v in rng.integers(0, 5, 2))
            bound = 1e-6 * orbit_size(rs, lam)
            y = rng.dirichlet(np.ones(rs.rank + 1))[1:] / q  # interior point of F
            for k, n in enumerate(normals):
                x = y.copy()
                if k < rs.rank:
                    x[k] = 0.0
                else:
                    x = x / (q @ x)
                vals = evaluate(rs, "C", lam, np.array([x + h * n, x - h * n]))
                deriv = abs(vals[0] - vals[1]) / (2 * h)
                assert deriv < bound, (label, lam, k, deriv)
                worst_ratio = max(worst_ratio, deriv / bound)
    record_property("detail", f"max derivative / bound {worst_ratio:.1e}")


# -- 5 ----------------------------------------------------------------------

def _relation_cases(rng, rs, count):
    cases = []
    for _ in range(count):
        kind = rng.integers(0, 3)
        lam = [int(v) for v in rng.integers(1, 5, 2)]
        if kind == 1:
            lam[R_INDEX] = 0  # lam = r lam
        elif kind == 2:
            lam[1 - R_INDEX] = 0  # other wall: lam != r lam
        cases.append((tuple(lam), rational_point(rng, 2, 0, 1)))
    return cases


@pytest.mark.criterion(5)
def test_5_c_s_e_relations(record_property):
    rng = np.random.default_rng(5)
    worst, tally = 0.0, {"interior": 0, "r-wall": 0, "other wall": 0}
    for label in RANK2:
        rs = root_system(label)
        for lam, x in _relation_cases(rng, rs, 50):
            rlam = reflect_simple(rs, R_INDEX, lam)
            c, e, er = eval_C(rs, lam, x), eval_E(rs, lam, x), eval_E(rs, rlam, x)
            if all(v >= 1 for v in lam):
                tally["interior"] += 1
                s = eval_S(rs, lam, x)
                worst = max(worst, abs(c - (e + er)), abs(s - (e - er)))
            else:
                # any wall: W^e lam = W lam, so E_lam = E_{r lam} = C_lam
                tally["r-wall" if lam == rlam else "other wall"] += 1
                worst = max(worst, abs(c - e), abs(e - er))
    record_property("detail", f"{tally}, max {worst:.1e}")
    assert worst < 1e-12


@pytest.mark.criterion(5)
@pytest.mark.xfail(strict=True, reason="C = E_lam + E_{r lam} fails for dominant lam != r lam on another wall, e.g. C2 lam=(1,0)")
def test_5_literal_condition_lambda_ne_r_lambda():
    rs = root_system("C2")
    lam = (1, 0)
    x = (Fraction(1, 7), Fraction(1, 5))
    rlam = reflect_simple(rs, R_INDEX, lam)
    assert lam != rlam
    assert abs(eval_C(rs, lam, x) - (eval_E(rs, lam, x) + eval_E(rs, rlam, x))) < 1e-12


# -- 6 ----------------------------------------------------------------------

def _product_error(rs, k1, k2, lam, mu, xs):
    d = decompose_product(rs, (k1, k2), lam, mu)
    worst = 0.0
    for x in xs:
        lhs = eval_orbit_function(rs, k1, lam, x) * eval_orbit_function(rs, k2, mu, x)
        rhs = sum((c * eval_orbit_function(rs, d.kind, nu, x) for nu, c in d.terms.items()), 0j)
        worst = max(worst, abs(lhs - rhs))
    return worst


@pytest.mark.criterion(6)
def test_6_product_decompositions(record_property):
    rng = np.random.default_rng(6)
    worst = 0.0
    for label in RANK2:
        rs = root_system(label)
        for k1, k2 in [("C", "C"), ("S", "S"), ("C", "S")]:
            for _ in range(20):
                lam = tuple(int(v) + (k1 == "S") for v in rng.integers(0, 4, 2))
                mu = tuple(int(v) + (k2 == "S") for v in rng.integers(0, 4, 2))
                xs = [rational_point(rng, 2, 0, 1) for _ in range(3)]
                worst = max(worst, _product_error(rs, k1, k2, lam, mu, xs))
    record_property("detail", f"pointwise max {worst:.1e}")
    assert worst < 1e-10


@pytest.mark.criterion(6)
def test_6_rank1_identities(record_property):
    a1 = root_system("A1")
    cc = decompose_product(a1, ("C", "C"), (1,), (1,))
    ss = decompose_product(a1, ("S", "S"), (1,), (1,))
    assert cc.kind == "C" and cc.terms == {(2,): 1, (0,): 2}
    # (2i sin t)^2 = -4 sin^2 t = 2 cos 2t - 2
    assert ss.kind == "C" and ss.terms == {(2,): 1, (0,): -2}
    assert all(isinstance(c, int) for c in (*cc.terms.values(), *ss.terms.values()))
    record_property("detail", "C1*C1 = C2 + 2C0, S1*S1 = C2 - 2C0")


@pytest.mark.criterion(6)
@pytest.mark.xfail(strict=True, reason="S1*S1 = C2 - 2C0; the stated 2C0 - C2 has the opposite sign")
def test_6_literal_s1_squared():
    a1 = root_system("A1")
    assert decompose_product(a1, ("S", "S"), (1,), (1,)).terms == {(0,): 2, (2,): -1}


# -- 7 ----------------------------------------------------------------------

@pytest.mark.criterion(7)
def test_7_continuous_orthogonality_trend(record_property):
    rng = np.random.default_rng(7)
    levels = (8, 16, 32)
    zero_tol = 1e-12
    exact, trending, worst32, first = [], 0, 0.0, 0.0
    for label in RANK2:
        rs = root_system(label)
        pairs = {((1, 0), (0, 1))}
        while len(pairs) < 10:
            lam, mu = (tuple(int(v) for v in rng.integers(0, 4, 2)) for _ in range(2))
            if lam != mu:
                pairs.add((lam, mu))
        # pairs that alias on the level-8 grid: mu and the dominant form of mu + 8 alpha_1
        for _ in range(5):
            mu = tuple(int(v) for v in rng.integers(0, 3, 2))
            shifted = tuple(m + 8 * c for m, c in zip(mu, rs.cartan[0]))
            nu = dominant_representative(rs, shifted).weight
            if nu != mu:
                pairs.add((mu, nu))
        for lam, mu in sorted(pairs):
            vals = [abs(quad_orthogonality(rs, "C", lam, mu, Q)) for Q in levels]
            clipped = [v if v > zero_tol else 0.0 for v in vals]
            assert clipped[0] >= clipped[1] >= clipped[2], (label, lam, mu, vals)
            assert vals[2] < 1e-3, (label, lam, mu, vals)
            worst32 = max(worst32, vals[2])
            common = max(weight_level(rs, lam), weight_level(rs, mu)) <= levels[0]
            if common:
                exact.append(max(vals))
                assert max(vals) < zero_tol
            else:
                trending += 1
                first = max(first, vals[0])
    record_property(
        "detail",
        f"{len(exact)} pairs in a common S_8: all |value| <= {max(exact):.1e}; "
        f"{trending} other pairs non-increasing, max at 8 {first:.2f}, max at 32 {worst32:.1e}",
    )


# -- 8 ----------------------------------------------------------------------

def _read_csv(path):
    return np.loadtxt(path, delimiter=",", skiprows=1)


@pytest.mark.criterion(8)
def test_8_figure_mirror_pair(tmp_path, capsys, record_property):
    rs = root_system("C2")
    lam = (2, 1)
    rlam = reflect_simple(rs, R_INDEX, lam)
    size = 256
    for name, w in (("e", lam), ("er", rlam)):
        code = cli_main(["plot", "--group", "C2", "--kind", "E", "--M", "5", "--weight=" + ",".join(map(str, w)),
                         "--mesh", str(size), "--out", str(tmp_path / name)])
        assert code == 0
    capsys.readouterr()
    a, b = _read_csv(tmp_path / "e.csv"), _read_csv(tmp_path / "er.csv")
    assert len(a) == len(b) == size * size  # F^e fills its bounding square
    np.testing.assert_array_equal(a[:, :2], b[:, :2])

    # reflect every pixel center across the r-wall and look up the partner pixel
    to_plane, to_copoint = plane_frame(rs)
    col = rs.cartan_array[:, R_INDEX].astype(float)
    x = a[:, :2] @ to_copoint.T
    rx = x - np.outer(x[:, R_INDEX], col)
    partner = rx @ to_plane.T
    index = {tuple(np.round(p, 9)): i for i, p in enumerate(a[:, :2])}
    idx = np.array([index[tuple(np.round(p, 9))] for p in partner])
    va = a[:, 2] + 1j * a[:, 3]
    vb = b[:, 2] + 1j * b[:, 3]
    err = np.abs(vb - va[idx]).max()
    assert err < 1e-8
    # not a trivial pair: the two images differ pixelwise
    assert np.abs(vb - va).max() > 0.1

    from lietransforms.plotting import read_pgm

    ga, gb = read_pgm(tmp_path / "e.pgm").astype(int), read_pgm(tmp_path / "er.pgm").astype(int)
    assert ga.shape == gb.shape == (size, size)
    gray_err = np.abs(gb.ravel() - ga.ravel()[idx]).max()
    assert gray_err <= 1
    record_property("detail", f"{size}x{size}, mirror error {err:.1e} before quantization, {gray_err} gray level after")


# -- 9 ----------------------------------------------------------------------

@pytest.mark.criterion(9)
def test_9_grid_counting(record_property):
    a1 = root_system("A1")
    assert all(len(enumerate_grid(a1, M)) == M + 1 for M in range(1, 65))
    for label in RANK2:
        rs = root_system(label)
        for M in range(1, 13):
            assert [p.s for p in enumerate_grid(rs, M)] == oracles.brute_force_grid(rs.marks, M)
    configs = 0
    for label in GROUPS:
        rs = root_system(label)
        for kind in KINDS:
            for M in LEVELS:
                assert len(enumerate_spectrum(rs, kind, M)) == len(sample_points(rs, kind, M)), (label, kind, M)
                configs += 1
    record_property("detail", f"A1 M<=64, rank 2 M<=12 brute force, |S_M| = grid size in {configs} configurations")
