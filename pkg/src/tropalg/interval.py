"""Weak interval extension of a positive semiring.

An interval ``[lo, hi]`` with ``lo ⪯ hi`` is itself a semiring element:
sums, products and stars act on the bounds.  Because every algorithm in
:mod:`tropalg.linalg` is built from monotone basic operations, running it
over :class:`IntervalSemiring` returns the exact range of the scalar
algorithm over the input box, at twice the scalar operation count.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np

from . import linalg
from .linalg import Matrix
from .semiring import (
    INF,
    NEG_INF,
    CarrierError,
    DivergenceError,
    Semiring,
    UnsupportedOperation,
    idempotent_measure_integral,
)


class Interval(NamedTuple):
    lo: float
    hi: float

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


class IntervalSemiring(Semiring):
    """``I(S)``: closed intervals of ``scalar`` with boundwise operations."""

    def __init__(self, scalar: Semiring):
        if isinstance(scalar, IntervalSemiring):
            raise TypeError("nested interval extensions are not supported")
        self.scalar = scalar
        self.name = f"interval({scalar.name})"
        self.zero = Interval(scalar.zero, scalar.zero)
        self.one = Interval(scalar.one, scalar.one)
        self.is_idempotent = scalar.is_idempotent
        self.is_complete = scalar.is_complete
        self.is_semifield = False

    def interval(self, lo, hi=None) -> Interval:
        """Build ``[lo, hi]`` (a point interval when ``hi`` is omitted)."""
        s = self.scalar
        lo = s.check(lo)
        hi = lo if hi is None else s.check(hi)
        if not s.leq(lo, hi):
            raise CarrierError(f"[{lo}, {hi}] is empty: lower bound is not below upper bound in {s.name}")
        return Interval(lo, hi)

    def check(self, x):
        if isinstance(x, tuple):
            return self.interval(*x)
        return self.interval(x)

    def contains(self, x):
        try:
            self.check(x)
        except CarrierError:
            return False
        return True

    def add(self, x, y):
        a = self.scalar.add
        return Interval(a(x.lo, y.lo), a(x.hi, y.hi))

    def mul(self, x, y):
        m = self.scalar.mul
        return Interval(m(x.lo, y.lo), m(x.hi, y.hi))

    def leq(self, x, y):
        le = self.scalar.leq
        return le(x.lo, y.lo) and le(x.hi, y.hi)

    def sup(self, x, y):
        s = self.scalar.sup
        return Interval(s(x.lo, y.lo), s(x.hi, y.hi))

    def inf(self, x, y):
        i = self.scalar.inf
        return Interval(i(x.lo, y.lo), i(x.hi, y.hi))

    def star(self, x):
        st = self.scalar.star
        try:
            lo = st(x.lo)
        except DivergenceError as exc:
            raise DivergenceError(f"lower bound: {exc}", bound="lo") from None
        try:
            hi = st(x.hi)
        except DivergenceError as exc:
            raise DivergenceError(f"upper bound: {exc}", bound="hi") from None
        return Interval(lo, hi)

    def inv(self, x):
        """Exact image of ``[lo, hi]`` under inversion: ``[hi⁻¹, lo⁻¹]``.

        Inversion reverses the order, so this is i-regular but not positive;
        lifted algorithms that use it lose the exactness guarantee.
        """
        if not self.scalar.is_semifield:
            raise UnsupportedOperation(f"{self.scalar.name} is not a semifield")
        inv = self.scalar.inv
        return Interval(inv(x.hi), inv(x.lo))

    def completion(self):
        c = self.scalar.completion()
        return None if c is None else IntervalSemiring(c)


def interval_matrix(lo: Matrix, hi: Matrix) -> Matrix:
    """Interval matrix with entrywise bounds ``lo`` and ``hi``."""
    if lo.semiring != hi.semiring:
        raise ValueError(f"mixed carriers: {lo.semiring.name} and {hi.semiring.name}")
    if lo.shape != hi.shape:
        raise ValueError(f"shape mismatch: {lo.shape} vs {hi.shape}")
    I = IntervalSemiring(lo.semiring)
    return Matrix(I, [list(zip(rl, rh)) for rl, rh in zip(lo.entries, hi.entries)])


def point_matrix(A: Matrix) -> Matrix:
    """Embed a scalar matrix as degenerate intervals."""
    I = IntervalSemiring(A.semiring)
    return Matrix._wrap(I, [[Interval(x, x) for x in r] for r in A.entries])


def bounds(M: Matrix):
    """Split an interval matrix into its lower and upper scalar matrices."""
    sr = M.semiring
    if not isinstance(sr, IntervalSemiring):
        raise TypeError(f"{sr.name} matrix is not an interval matrix")
    lo = Matrix._wrap(sr.scalar, [[x.lo for x in r] for r in M.entries])
    hi = Matrix._wrap(sr.scalar, [[x.hi for x in r] for r in M.entries])
    return lo, hi


def elementary(fn: Callable) -> Callable:
    """Mark ``fn`` as built from monotone basic operations only.

    Only marked callables may be lifted; exactness of the lifted bounds
    rests on this promise.
    """
    fn.__elementary__ = True
    return fn


for _fn in (
    linalg.mat_add,
    linalg.mat_mul,
    linalg.mat_pow,
    linalg.star_elimination,
    linalg.star_block,
    linalg.closure,
    linalg.solve_bellman,
    linalg.dot,
    idempotent_measure_integral,
):
    elementary(_fn)


def _lift_arg(x):
    if isinstance(x, Matrix) and not isinstance(x.semiring, IntervalSemiring):
        return point_matrix(x)
    return x


def interval_lift(fn: Callable) -> Callable:
    """Run an elementary matrix algorithm over the interval extension.

    Scalar matrix arguments are promoted to point intervals; interval
    matrices pass through.  The generic code itself does the rest.

    >>> from tropalg.semiring import MIN_PLUS
    >>> lo = Matrix(MIN_PLUS, [[3, 1], [2, 5]]); hi = Matrix(MIN_PLUS, [[2, 0], [1, 4]])
    >>> out = interval_lift(linalg.star_elimination)(interval_matrix(lo, hi))
    >>> out[0, 1]
    [1.0, 0.0]
    """
    if not getattr(fn, "__elementary__", False):
        raise UnsupportedOperation(
            f"{getattr(fn, '__name__', fn)!r} is not marked elementary; its interval lift has no exactness guarantee"
        )

    @functools.wraps(fn)
    def lifted(*args, **kwargs):
        return fn(*(_lift_arg(a) for a in args), **{k: _lift_arg(v) for k, v in kwargs.items()})

    return lifted


# --- exactness checking ---------------------------------------------------

# stand-in distance for an infinite interval end when sampling interior points
INFINITE_PROXY = 1e6
ENDPOINT_PROB = 0.1


@dataclass
class ExactnessReport:
    samples: int
    violations: list = field(default_factory=list)
    lower_attained: bool = False
    upper_attained: bool = False
    lifted: object = None

    @property
    def ok(self) -> bool:
        return not self.violations and self.lower_attained and self.upper_attained


def _numeric_range(lo, hi):
    a, b = (lo, hi) if lo <= hi else (hi, lo)
    if a == NEG_INF:
        a = (b if math.isfinite(b) else 0.0) - INFINITE_PROXY
    if b == INF:
        b = (a if math.isfinite(a) else 0.0) + INFINITE_PROXY
    return a, b


def _sample_matrix(M: Matrix, rng: np.random.Generator) -> Matrix:
    sr = M.semiring.scalar
    rows = []
    for r in M.entries:
        u = rng.random(len(r))
        pick = rng.random(len(r))
        row = []
        for x, ui, pi in zip(r, u, pick):
            if pi < ENDPOINT_PROB or x.lo == x.hi:
                row.append(x.lo)
            elif pi < 2 * ENDPOINT_PROB:
                row.append(x.hi)
            else:
                a, b = _numeric_range(x.lo, x.hi)
                v = a + float(ui) * (b - a)
                row.append(min(max(v, a), b))
        rows.append(row)
    return Matrix._wrap(sr, rows)


def _cells(out):
    if isinstance(out, Matrix):
        return [((i, j), x) for i, r in enumerate(out.entries) for j, x in enumerate(r)]
    return [((), out)]


def exactness_check(
    algorithm: Callable,
    inputs: Sequence[Matrix],
    n_samples: int = 1000,
    seed: Optional[int] = 0,
    **kwargs,
) -> ExactnessReport:
    """Sample scalar inputs inside interval ``inputs`` and test the lifted bounds.

    ``algorithm`` takes matrices and returns a matrix or a single element.
    Every sampled output must lie between the lifted lower and upper
    bounds, and the bounds must equal the scalar outputs at the endpoint
    inputs.  Deterministic for a given ``seed``.
    """
    inputs = [_lift_arg(M) for M in inputs]
    lifted = interval_lift(algorithm)(*inputs, **kwargs)
    sr = inputs[0].semiring.scalar
    leq = sr.leq
    cells = _cells(lifted)

    lows = [bounds(M)[0] for M in inputs]
    highs = [bounds(M)[1] for M in inputs]
    lo_out = _cells(algorithm(*lows, **kwargs))
    hi_out = _cells(algorithm(*highs, **kwargs))
    report = ExactnessReport(
        samples=n_samples,
        lower_attained=[v for _, v in lo_out] == [x.lo for _, x in cells],
        upper_attained=[v for _, v in hi_out] == [x.hi for _, x in cells],
        lifted=lifted,
    )

    rng = np.random.default_rng(seed)
    for s in range(n_samples):
        sample = [_sample_matrix(M, rng) for M in inputs]
        out = _cells(algorithm(*sample, **kwargs))
        for (pos, x), (_, v) in zip(cells, out):
            if not (leq(x.lo, v) and leq(v, x.hi)):
                report.violations.append((s, pos, v, x))
    return report

