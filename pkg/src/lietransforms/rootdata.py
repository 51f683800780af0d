"""Root-system data for the simple types and exact co-point arithmetic.

Dynkin nodes follow Bourbaki numbering.  Arrays are 0-indexed, so index
``i`` refers to node ``i + 1``.  The Cartan matrix convention is
``C[i][j] = <alpha_i, alpha_j^vee>`` and long roots have squared length 2.

Weights carry integer coordinates in the basis of fundamental weights
``omega_i``; co-points carry rational coordinates in the dual basis
``omega_i^vee`` with ``<alpha_i, omega_j^vee> = delta_ij``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

__all__ = [
    "GroupType",
    "RootSystem",
    "build_root_system",
    "root_system",
    "cartan_matrix",
    "positive_roots",
    "highest_root",
    "weyl_group_order",
    "pairing",
    "as_copoint",
    "in_fundamental_region",
    "orthogonal_simple_roots",
]

Weight = tuple[int, ...]
CoPoint = tuple[Fraction, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class GroupType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in "ABCDEFG" or len(self.series) != 1:
            raise ValueError(f"unknown series {self.series!r}; expected one of A-G")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise ValueError(f"rank must be an integer, got {self.rank!r}")
        if self.series in _MIN_RANK:
            if self.rank < _MIN_RANK[self.series]:
                raise ValueError(
                    f"{self.series}_n requires n >= {_MIN_RANK[self.series]}, got n = {self.rank}"
                )
        elif self.rank not in _FIXED_RANKS[self.series]:
            allowed = ", ".join(map(str, _FIXED_RANKS[self.series]))
            raise ValueError(f"{self.series}_n exists only for n in {{{allowed}}}, got n = {self.rank}")

    @classmethod
    def parse(cls, text: str) -> "GroupType":
        """Parse labels such as ``"C2"``, ``"e8"`` or ``"A_3"``."""
        label = text.strip().replace("_", "")
        if len(label) < 2 or not label[1:].isdigit():
            raise ValueError(f"cannot parse group label {text!r}; expected e.g. 'A2' or 'G2'")
        return cls(label[0].upper(), int(label[1:]))

    def __str__(self):
        return f"{self.series}{self.rank}"


def _chain(n: int) -> list[list[int]]:
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = c[i + 1][i] = -1
    return c


def cartan_matrix(gt: GroupType) -> list[list[int]]:
    """Tabulated Cartan matrix in Bourbaki numbering."""
    n = gt.rank
    s = gt.series
    if s == "A":
        return _chain(n)
    if s == "B":
        c = _chain(n)
        c[n - 2][n - 1] = -2
        return c
    if s == "C":
        c = _chain(n)
        c[n - 1][n - 2] = -2
        return c
    if s == "D":
        c = _chain(n)
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
        c[n - 3][n - 1] = c[n - 1][n - 3] = -1
        return c
    if s == "E":
        # chain 1-3-4-...-n with node 2 on node 4
        c = [[0] * n for _ in range(n)]
        edges = [(0, 2), (1, 3)] + [(k, k + 1) for k in range(2, n - 1)]
        for i in range(n):
            c[i][i] = 2
        for i, j in edges:
            c[i][j] = c[j][i] = -1
        return c
    if s == "F":
        c = _chain(4)
        c[1][2] = -2
        return c
    if s == "G":
        return [[2, -1], [-3, 2]]
    raise AssertionError(s)


def positive_roots(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Positive roots in the simple-root basis, sorted by height then lexicographically.

    Uses the root-string criterion: ``beta + alpha_i`` is a root iff
    ``p - <beta, alpha_i^vee> > 0`` where ``p`` is the length of the
    downward ``alpha_i``-string through ``beta``.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = simple
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                p = 0
                gamma = list(beta)
                gamma[i] -= 1
                while tuple(gamma) in roots:
                    p += 1
                    gamma[i] -= 1
                pair = sum(beta[j] * cartan[j][i] for j in range(n))
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        roots |= nxt
        layer = sorted(nxt)
    return sorted(roots, key=lambda r: (sum(r), r))


def highest_root(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    roots = positive_roots(cartan)
    top = roots[-1]
    if len(roots) > 1 and sum(roots[-2]) == sum(top):
        raise ValueError("Cartan matrix is not irreducible (no unique highest root)")
    return top


def _fraction_inverse(m: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _determinant(m: Sequence[Sequence[int]]) -> Fraction:
    n = len(m)
    a = [[Fraction(v) for v in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return det


def _components(cartan: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(cartan)
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def weyl_group_order(cartan: Sequence[Sequence[int]]) -> int:
    """Order of the Weyl group of a finite-type (possibly reducible) Cartan matrix.

    Each irreducible component of rank k contributes ``k! * prod(marks) * det``.
    An empty matrix gives the trivial group.
    """
    order = 1
    for comp in _components(cartan):
        sub = [[cartan[i][j] for j in comp] for i in comp]
        marks = highest_root(sub)
        order *= math.factorial(len(comp)) * math.prod(marks) * int(_determinant(sub))
    return order


def _root_lengths_sq(cartan: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    # C_ij d_j = C_ji d_i along every edge of the Dynkin diagram
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if d[j] is None and cartan[i][j] != 0:
                d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                stack.append(j)
    top = max(d)
    return tuple(2 * v / top for v in d)


def _tabulated_weyl_order(gt: GroupType) -> int:
    n = gt.rank
    return {
        "A": lambda: math.factorial(n + 1),
        "B": lambda: 2**n * math.factorial(n),
        "C": lambda: 2**n * math.factorial(n),
        "D": lambda: 2 ** (n - 1) * math.factorial(n),
        "E": lambda: {6: 51840, 7: 2903040, 8: 696729600}[n],
        "F": lambda: 1152,
        "G": lambda: 12,
    }[gt.series]()


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable static data of a simple root system.

    Instances are shared through :func:`build_root_system`; the private
    ``_cache`` holds orbits and transform bases computed against this
    system and is only ever extended, never mutated in place.
    """

    group_type: GroupType
    cartan: tuple[tuple[int, ...], ...]
    cartan_inverse: tuple[tuple[Fraction, ...], ...]
    marks: tuple[int, ...]
    dual_marks: tuple[int, ...]
    weyl_order: int
    root_lengths_sq: tuple[Fraction, ...]
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.group_type.rank

    def __str__(self):
        return str(self.group_type)

    @cached_property
    def cartan_array(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64)

    @cached_property
    def inverse_denominator(self) -> int:
        """Common denominator ``d`` of the entries of the inverse Cartan matrix."""
        return math.lcm(*(v.denominator for row in self.cartan_inverse for v in row))

    @cached_property
    def inverse_numerators(self) -> np.ndarray:
        """Integer matrix ``d * C^{-1}``."""
        d = self.inverse_denominator
        return np.array([[int(v * d) for v in row] for row in self.cartan_inverse], dtype=np.int64)

    @cached_property
    def cartan_inverse_array(self) -> np.ndarray:
        return self.inverse_numerators / self.inverse_denominator

    @cached_property
    def extended_cartan(self) -> tuple[tuple[int, ...], ...]:
        """Cartan matrix of the affine diagram; index 0 is the node ``alpha_0 = -xi``."""
        n = self.rank
        q, d, c = self.marks, self.root_lengths_sq, self.cartan
        ext = [[0] * (n + 1) for _ in range(n + 1)]
        ext[0][0] = 2
        for j in range(n):
            ext[0][j + 1] = -sum(q[i] * c[i][j] for i in range(n))
            ext[j + 1][0] = int(-sum(q[i] * d[i] / 2 * c[j][i] for i in range(n)))
            for i in range(n):
                ext[i + 1][j + 1] = c[i][j]
        return tuple(tuple(row) for row in ext)

    @cached_property
    def coxeter_number(self) -> int:
        return 1 + sum(self.marks)


@lru_cache(maxsize=None)
def build_root_system(gt: GroupType) -> RootSystem:
    """Assemble the root system of a simple type.

    Marks come from the highest root of the Cartan matrix, dual marks
    from the highest root of its transpose (the coroot system).
    """
    c = cartan_matrix(gt)
    inv = _fraction_inverse(c)
    transpose = [list(col) for col in zip(*c)]
    order = _tabulated_weyl_order(gt)
    return RootSystem(
        group_type=gt,
        cartan=tuple(tuple(row) for row in c),
        cartan_inverse=tuple(tuple(row) for row in inv),
        marks=highest_root(c),
        dual_marks=highest_root(transpose),
        weyl_order=order,
        root_lengths_sq=_root_lengths_sq(c),
    )


def root_system(label: str | GroupType) -> RootSystem:
    """Shorthand: ``root_system("C2")``."""
    gt = label if isinstance(label, GroupType) else GroupType.parse(label)
    return build_root_system(gt)


def as_copoint(x: Sequence) -> CoPoint:
    """Coerce a sequence of ints, strings like ``"1/3"`` or Fractions to a co-point.

    Floats are converted exactly, which is rarely what a caller wants.
    """
    return tuple(Fraction(v) for v in x)


def _check_dim(rs: RootSystem, v: Sequence, what: str):
    if len(v) != rs.rank:
        raise ValueError(f"{what} has {len(v)} coordinates, {rs} needs {rs.rank}")


def pairing(rs: RootSystem, lam: Sequence[int], x: Sequence) -> Fraction:
    """Exact ``<lambda, x>`` = ``lambda^T C^{-1} x``."""
    _check_dim(rs, lam, "weight")
    _check_dim(rs, x, "co-point")
    x = as_copoint(x)
    inv = rs.cartan_inverse
    n = rs.rank
    return sum(
        (lam[i] * inv[i][j] * x[j] for i in range(n) for j in range(n) if lam[i]),
        Fraction(0),
    )


def in_fundamental_region(rs: RootSystem, x: Sequence) -> bool:
    _check_dim(rs, x, "co-point")
    x = as_copoint(x)
    return all(v >= 0 for v in x) and sum(q * v for q, v in zip(rs.marks, x)) <= 1


def orthogonal_simple_roots(gt: GroupType) -> np.ndarray:
    """Simple roots as rows in a standard orthonormal realization (long roots of norm^2 2)."""
    n, s = gt.rank, gt.series

    def e(dim, *pairs):
        v = np.zeros(dim)
        for k, c in pairs:
            v[k] += c
        return v

    if s == "A":
        return np.array([e(n + 1, (i, 1), (i + 1, -1)) for i in range(n)])
    if s in "BCD":
        rows = [e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        if s == "B":
            rows.append(e(n, (n - 1, 1)))
        elif s == "C":
            rows.append(e(n, (n - 1, 2)))
        else:
            rows.append(e(n, (n - 2, 1), (n - 1, 1)))
        roots = np.array(rows)
        return roots / np.sqrt(2) if s == "C" else roots
    if s == "E":
        rows = [np.array([0.5, -0.5, -0.5, -0.5, -0.5, -0.5, -0.5, 0.5]), e(8, (0, 1), (1, 1))]
        rows += [e(8, (k - 1, -1), (k, 1)) for k in range(1, 7)]
        return np.array(rows[:n])
    if s == "F":
        return np.array([
            e(4, (1, 1), (2, -1)),
            e(4, (2, 1), (3, -1)),
            e(4, (3, 1)),
            0.5 * np.array([1.0, -1.0, -1.0, -1.0]),
        ])
    if s == "G":
        return np.array([e(3, (0, 1), (1, -1)), e(3, (0, -2), (1, 1), (2, 1))]) / np.sqrt(3)
    raise AssertionError(s)
