"""Dense matrices over a semiring and the closure algorithms built on them.

Every routine here is written with the semiring's basic operations only, so
the same code runs over max-plus, min-plus, max-min, plus-times or the
interval extension of any of them.
"""
from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from .semiring import Semiring, idempotent_measure_integral

ALGORITHMS = ("elimination", "block", "series")


class Matrix:
    """Immutable ``rows × cols`` matrix of elements of one semiring.

    >>> from tropalg.semiring import MIN_PLUS
    >>> A = Matrix(MIN_PLUS, [[0, 1], [float("inf"), 0]])
    >>> (A @ A)[0, 1]
    1.0
    """

    __slots__ = ("semiring", "rows", "cols", "entries")

    def __init__(self, semiring: Semiring, rows: Sequence[Sequence]):
        entries = tuple(tuple(semiring.check(x) for x in row) for row in rows)
        if not entries:
            raise ValueError("a matrix needs at least one row")
        width = len(entries[0])
        if width == 0 or any(len(r) != width for r in entries):
            raise ValueError("rows must be nonempty and of equal length")
        self.semiring = semiring
        self.rows = len(entries)
        self.cols = width
        self.entries = entries

    @classmethod
    def _wrap(cls, semiring, rows):
        # trusted constructor: rows are already carrier elements
        self = object.__new__(cls)
        self.semiring = semiring
        self.entries = tuple(tuple(r) for r in rows)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0])
        return self

    @classmethod
    def zeros(cls, semiring: Semiring, rows: int, cols: Optional[int] = None) -> "Matrix":
        cols = rows if cols is None else cols
        z = semiring.zero
        return cls._wrap(semiring, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, semiring: Semiring, n: int) -> "Matrix":
        return cls._wrap(semiring, _identity(semiring, n))

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def data(self) -> tuple:
        """Entries in row-major order."""
        return tuple(x for row in self.entries for x in row)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def tolist(self) -> list:
        return [list(r) for r in self.entries]

    def over(self, semiring: Semiring) -> "Matrix":
        """Same entries, viewed through another semiring object of the same carrier."""
        if semiring != self.semiring:
            raise ValueError(f"cannot view a {self.semiring.name} matrix over {semiring.name}")
        return Matrix._wrap(semiring, self.entries)

    def map(self, fn, semiring: Optional[Semiring] = None) -> "Matrix":
        return Matrix(semiring or self.semiring, [[fn(x) for x in r] for r in self.entries])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.semiring == other.semiring and self.entries == other.entries

    def __hash__(self):
        return hash((self.semiring, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"Matrix<{self.semiring.name}>[{body}]"

    def __add__(self, other):
        return mat_add(self, other)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __le__(self, other):
        return mat_leq(self, other)


def _identity(sr, n):
    z, o = sr.zero, sr.one
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def _same_carrier(A: Matrix, B: Matrix):
    if A.semiring != B.semiring:
        raise ValueError(f"mixed carriers: {A.semiring.name} and {B.semiring.name}")


def _square(A: Matrix):
    if A.rows != A.cols:
        raise ValueError(f"expected a square matrix, got {A.rows}x{A.cols}")


# list-of-lists kernels shared by the public operations

def _add(sr, X, Y):
    add = sr.add
    return [[add(x, y) for x, y in zip(rx, ry)] for rx, ry in zip(X, Y)]


def _mul(sr, X, Y):
    add, mul, z = sr.add, sr.mul, sr.zero
    inner = len(Y)
    cols = len(Y[0])
    out = []
    for xi in X:
        row = []
        for j in range(cols):
            acc = z
            # fixed k-ascending accumulation
            for k in range(inner):
                acc = add(acc, mul(xi[k], Y[k][j]))
            row.append(acc)
        out.append(row)
    return out


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    _same_carrier(A, B)
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch: {A.shape} vs {B.shape}")
    return Matrix._wrap(A.semiring, _add(A.semiring, A.entries, B.entries))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    _same_carrier(A, B)
    if A.cols != B.rows:
        raise ValueError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    return Matrix._wrap(A.semiring, _mul(A.semiring, A.entries, B.entries))


def mat_leq(A: Matrix, B: Matrix) -> bool:
    _same_carrier(A, B)
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch: {A.shape} vs {B.shape}")
    leq = A.semiring.leq
    return all(leq(a, b) for ra, rb in zip(A.entries, B.entries) for a, b in zip(ra, rb))


def dot(x: Matrix, y: Matrix):
    """``⊕_k x_k ⊙ y_k`` for two vectors (single-row or single-column matrices)."""
    _same_carrier(x, y)
    if 1 not in x.shape or 1 not in y.shape:
        raise ValueError("dot expects vectors")
    if len(x.data) != len(y.data):
        raise ValueError(f"vectors have lengths {len(x.data)} and {len(y.data)}")
    return idempotent_measure_integral(x.data, y.data, x.semiring)


def mat_pow(A: Matrix, k: int) -> Matrix:
    """``A^k`` by repeated left multiplication, ``A^0 = I``."""
    _square(A)
    if k < 0:
        raise ValueError("negative power")
    sr = A.semiring
    P = _identity(sr, A.rows)
    for _ in range(k):
        P = _mul(sr, A.entries, P)
    return Matrix._wrap(sr, P)


def _star_elimination(sr, A):
    add, mul, star = sr.add, sr.mul, sr.star
    n = len(A)
    a = [list(r) for r in A]
    for k in range(n):
        s = star(a[k][k])
        # old row k and column k, so that rows/cols k update correctly
        # in non-idempotent carriers
        rk = [mul(s, x) for x in a[k]]
        ck = [a[i][k] for i in range(n)]
        for i in range(n):
            cik = ck[i]
            ai = a[i]
            for j in range(n):
                ai[j] = add(ai[j], mul(cik, rk[j]))
    one = sr.one
    for i in range(n):
        a[i][i] = add(a[i][i], one)
    return a


def star_elimination(A: Matrix) -> Matrix:
    """Closure ``A*`` by Gauss–Jordan (Floyd–Warshall) elimination.

    Uses ``n`` scalar stars, ``n^3 + n^2`` products and ``n^3 + n`` sums.
    Raises :class:`~tropalg.semiring.DivergenceError` if a pivot star
    does not exist in the carrier.
    """
    _square(A)
    return Matrix._wrap(A.semiring, _star_elimination(A.semiring, A.entries))


def _star_block(sr, A):
    n = len(A)
    if n == 1:
        return [[sr.star(A[0][0])]]
    k = n // 2
    A11 = [r[:k] for r in A[:k]]
    A12 = [r[k:] for r in A[:k]]
    A21 = [r[:k] for r in A[k:]]
    A22 = [r[k:] for r in A[k:]]
    S = _star_block(sr, A11)
    U = _mul(sr, S, A12)           # A11* A12
    V = _mul(sr, A21, S)           # A21 A11*
    D = _add(sr, A22, _mul(sr, V, A12))
    T = _star_block(sr, D)
    UT = _mul(sr, U, T)
    top_left = _add(sr, S, _mul(sr, UT, V))
    bottom_left = _mul(sr, T, V)
    return [l + r for l, r in zip(top_left, UT)] + [l + r for l, r in zip(bottom_left, T)]


def star_block(A: Matrix) -> Matrix:
    """Closure ``A*`` by the recursive 2×2 block (escalator) formula, split at ``n // 2``."""
    _square(A)
    return Matrix._wrap(A.semiring, _star_block(A.semiring, A.entries))


class SeriesResult(NamedTuple):
    matrix: Matrix
    stabilized: bool
    # smallest k with I ⊕ … ⊕ A^k == I ⊕ … ⊕ A^(k+1), when found
    terms: Optional[int]


def star_series(A: Matrix, max_terms: Optional[int] = None) -> SeriesResult:
    """Partial sum ``I ⊕ A ⊕ … ⊕ A^max_terms`` (default ``max_terms = n``).

    Once two consecutive partial sums agree every later one does too, so
    the loop stops there; ``stabilized`` reports whether that happened.
    """
    _square(A)
    sr = A.semiring
    n = A.rows
    m = n if max_terms is None else max_terms
    if m < 0:
        raise ValueError("max_terms must be nonnegative")
    S = _identity(sr, n)
    P = S
    for k in range(1, m + 1):
        P = _mul(sr, P, A.entries)
        nxt = _add(sr, S, P)
        if nxt == S:
            return SeriesResult(Matrix._wrap(sr, S), True, k - 1)
        S = nxt
    return SeriesResult(Matrix._wrap(sr, S), False, None)


def closure(A: Matrix, algorithm: str = "elimination", max_terms: Optional[int] = None) -> Matrix:
    if algorithm == "elimination":
        return star_elimination(A)
    if algorithm == "block":
        return star_block(A)
    if algorithm == "series":
        return star_series(A, max_terms).matrix
    raise ValueError(f"unknown closure algorithm {algorithm!r}; choose from {ALGORITHMS}")


def solve_bellman(A: Matrix, B: Matrix, algorithm: str = "elimination") -> Matrix:
    """Solve ``X = AX ⊕ B`` as ``X = A* B``.

    In an idempotent semiring where the closure converges this is the least
    solution.
    """
    _square(A)
    _same_carrier(A, B)
    if B.rows != A.rows:
        raise ValueError(f"B has {B.rows} rows, A is {A.rows}x{A.cols}")
    return mat_mul(closure(A, algorithm), B)
