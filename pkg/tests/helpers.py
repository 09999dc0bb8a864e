"""Random instances and small oracles shared by the test modules."""
import math

import numpy as np

from tropalg import (
    INF,
    MAX_PLUS,
    MAX_PLUS_COMPLETE,
    MIN_PLUS,
    NEG_INF,
    PLUS_TIMES,
    MaxMin,
    Matrix,
    Subtropical,
    WeightedDigraph,
)

REL_TOL = 1e-12
ABS_TOL = 1e-15

ALL_SEMIRINGS = [
    MAX_PLUS,
    MAX_PLUS_COMPLETE,
    MIN_PLUS,
    MaxMin(0, 10),
    PLUS_TIMES,
    Subtropical(0.5),
]


def close(a, b, rel=REL_TOL, abs_=ABS_TOL):
    return a == b or math.isclose(a, b, rel_tol=rel, abs_tol=abs_)


def random_element(sr, rng):
    """A carrier element, with 𝟘, 𝟙 and the infinities showing up often."""
    r = rng.random()
    if r < 0.08:
        return sr.zero
    if r < 0.16:
        return sr.one
    name = sr.name
    if name == "maxplus-complete" and r < 0.22:
        return INF
    if name == "plustimes" and r < 0.22:
        return INF
    if name.startswith("maxmin"):
        return float(rng.integers(int(sr.zero), int(sr.one) + 1))
    if name in ("maxplus", "maxplus-complete", "minplus"):
        return float(rng.integers(-20, 21))
    if name == "plustimes":
        return float(rng.uniform(0, 10))
    return float(rng.uniform(-10, 10))


def random_pair_ordered(sr, rng):
    a, b = random_element(sr, rng), random_element(sr, rng)
    return (a, b) if sr.leq(a, b) else (b, a)


def random_convergent(sr, n, rng, density=0.6, low=0, high=9):
    """Random integer-weighted matrix whose closure exists.

    min-plus: nonnegative weights; max-plus: weights ⪯ 𝟙; max-min: any.
    """
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            if rng.random() > density:
                row.append(sr.zero)
                continue
            v = float(rng.integers(low, high + 1))
            if sr.name.startswith("maxplus"):
                v = -v
            elif sr.name.startswith("maxmin"):
                v = float(rng.integers(int(sr.zero), int(sr.one) + 1))
            row.append(v)
        rows.append(row)
    return Matrix(sr, rows)


def random_substochastic(n, rng):
    """Nonnegative matrix with every row summing to less than one."""
    M = rng.random((n, n)) * (rng.random((n, n)) < 0.7)
    sums = M.sum(axis=1, keepdims=True)
    scale = rng.uniform(0.3, 0.95, size=(n, 1))
    M = np.where(sums > 0, M / np.where(sums > 0, sums, 1) * scale, 0.0)
    return Matrix(PLUS_TIMES, M.tolist())


def graph_of(A, names=None):
    names = names or [str(i + 1) for i in range(A.rows)]
    z = A.semiring.zero
    arcs = [(names[i], names[j], x) for i, r in enumerate(A.entries) for j, x in enumerate(r) if x != z]
    return WeightedDigraph.from_arcs(A.semiring, names, arcs)


def gauss_jordan_inverse(M):
    """Inverse of a real matrix by Gauss–Jordan with partial pivoting."""
    n = len(M)
    a = [list(map(float, r)) + [1.0 if i == j else 0.0 for j in range(n)] for i, r in enumerate(M)]
    for c in range(n):
        p = max(range(c, n), key=lambda r: abs(a[r][c]))
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0.0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [r[n:] for r in a]


def example1(sr=MIN_PLUS):
    return WeightedDigraph.from_arcs(sr, ["1", "2", "3"], [("1", "2", 1), ("2", "3", 2), ("1", "3", 5)])


def example2():
    return WeightedDigraph.from_arcs(
        MaxMin(NEG_INF, INF), ["1", "2", "3"], [("1", "2", 5), ("2", "3", 2), ("1", "3", 1)]
    )
