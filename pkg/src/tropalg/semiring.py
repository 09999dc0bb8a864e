"""Positive semirings over the extended reals.

Elements are plain Python floats; ``-inf`` and ``inf`` are the two infinities.
A semiring object carries the operations, so generic algorithms take the
semiring (usually through a :class:`~tropalg.linalg.Matrix`) as a parameter
and never touch the numbers directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import Optional

INF = math.inf
NEG_INF = -math.inf


class SemiringError(Exception):
    """Base class for errors raised by semiring operations."""


class CarrierError(SemiringError, ValueError):
    """An operand is not an element of the semiring's carrier."""


class DivergenceError(SemiringError, ArithmeticError):
    """A closure does not exist in a non-complete carrier."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class UnsupportedOperation(SemiringError, TypeError):
    """The semiring does not provide the requested operation."""


@dataclass
class OpCount:
    """Tally of basic operations executed by a computation."""

    adds: int = 0
    muls: int = 0
    stars: int = 0
    sups: int = 0
    infs: int = 0
    invs: int = 0

    @property
    def total(self) -> int:
        return sum(getattr(self, f.name) for f in fields(self))

    def merge(self, other: "OpCount") -> "OpCount":
        return OpCount(*(getattr(self, f.name) + getattr(other, f.name) for f in fields(self)))

    def summary(self) -> str:
        return " ".join(f"{f.name}={getattr(self, f.name)}" for f in fields(self))


class Semiring:
    """A positive semiring on (a subset of) the extended real line.

    Subclasses set ``zero``, ``one`` and the four descriptor flags, and
    implement ``add``, ``mul`` and ``contains``.  ``star`` and ``inv`` are
    optional.  Two semirings are the same carrier iff their names agree.
    """

    name = "semiring"
    zero: float
    one: float
    is_idempotent = False
    is_complete = False
    is_semifield = False

    @property
    def carrier_name(self) -> str:
        return self.name

    # --- core ---------------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def check(self, x):
        """Return ``x`` as a carrier element, raising CarrierError otherwise."""
        try:
            v = float(x)
        except (TypeError, ValueError):
            raise CarrierError(f"{x!r} is not a number") from None
        if math.isnan(v) or not self.contains(v):
            raise CarrierError(f"{x!r} is not in the carrier of {self.name}")
        return v

    # --- order --------------------------------------------------------
    def leq(self, a, b) -> bool:
        # canonical order of an idempotent semiring
        return self.add(a, b) == b

    def sup(self, a, b):
        return b if self.leq(a, b) else a

    def inf(self, a, b):
        return a if self.leq(a, b) else b

    # --- optional -----------------------------------------------------
    def star(self, a):
        raise UnsupportedOperation(f"{self.name} has no closure operation")

    def inv(self, a):
        raise UnsupportedOperation(f"{self.name} is not a semifield")

    def completion(self) -> Optional["Semiring"]:
        """The complete semiring this one embeds into, if it is known."""
        return self if self.is_complete else None

    # --- folds --------------------------------------------------------
    def sum(self, xs):
        acc = self.zero
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def prod(self, xs):
        acc = self.one
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    def __eq__(self, other):
        return isinstance(other, Semiring) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"<semiring {self.name}>"


class MaxPlus(Semiring):
    """``R ∪ {-inf}`` with max and +; ``complete=True`` adjoins ``+inf``."""

    zero = NEG_INF
    one = 0.0
    is_idempotent = True
    is_semifield = True

    def __init__(self, complete: bool = False):
        self.is_complete = complete
        self.name = "maxplus-complete" if complete else "maxplus"

    def contains(self, x):
        return self.is_complete or x != INF

    def add(self, a, b):
        return a if a >= b else b

    def mul(self, a, b):
        if a == NEG_INF or b == NEG_INF:
            # zero absorbs, also against +inf
            return NEG_INF
        return a + b

    def leq(self, a, b):
        return a <= b

    def sup(self, a, b):
        return a if a >= b else b

    def inf(self, a, b):
        return a if a <= b else b

    def star(self, a):
        if a <= 0.0:
            return 0.0
        if self.is_complete:
            return INF
        raise DivergenceError(f"star({a!r}) diverges in {self.name}")

    def inv(self, a):
        if math.isinf(a):
            if self.is_complete:
                return -a
            raise DivergenceError(f"zero has no inverse in {self.name}")
        return -a

    def completion(self):
        return MAX_PLUS_COMPLETE


class MinPlus(Semiring):
    """``R ∪ {+inf}`` with min and +; canonical order is reversed numeric."""

    name = "minplus"
    zero = INF
    one = 0.0
    is_idempotent = True
    is_semifield = True

    def contains(self, x):
        return x != NEG_INF

    def add(self, a, b):
        return a if a <= b else b

    def mul(self, a, b):
        return a + b

    def leq(self, a, b):
        return a >= b

    def sup(self, a, b):
        return a if a <= b else b

    def inf(self, a, b):
        return a if a >= b else b

    def star(self, a):
        if a >= 0.0:
            return 0.0
        raise DivergenceError(f"star({a!r}) diverges in {self.name}")

    def inv(self, a):
        if a == INF:
            raise DivergenceError(f"zero has no inverse in {self.name}")
        return -a

    def completion(self):
        return None


class MaxMin(Semiring):
    """The bottleneck semiring on ``[low, high]`` with max and min."""

    is_idempotent = True
    is_complete = True

    def __init__(self, low: float = 0.0, high: float = 1.0):
        low, high = float(low), float(high)
        if not low < high:
            raise ValueError(f"MaxMin needs low < high, got [{low}, {high}]")
        self.zero = low
        self.one = high
        self.name = f"maxmin:{_fmt(low)}:{_fmt(high)}"

    def contains(self, x):
        return self.zero <= x <= self.one

    def add(self, a, b):
        return a if a >= b else b

    def mul(self, a, b):
        return a if a <= b else b

    def leq(self, a, b):
        return a <= b

    def sup(self, a, b):
        return a if a >= b else b

    def inf(self, a, b):
        return a if a <= b else b

    def star(self, a):
        return self.one


class NonNegPlusTimes(Semiring):
    """Nonnegative reals with + and ×.  Positive but not idempotent.

    The completed carrier (the default) contains ``inf``; there the star of
    ``x >= 1`` is ``inf`` and inversion swaps 0 and ``inf``.
    """

    zero = 0.0
    one = 1.0
    is_semifield = True

    def __init__(self, complete: bool = True):
        self.is_complete = complete
        self.name = "plustimes" if complete else "plustimes-finite"

    def contains(self, x):
        return x >= 0.0 and (self.is_complete or x != INF)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        if a == 0.0 or b == 0.0:
            return 0.0
        return a * b

    def leq(self, a, b):
        return a <= b

    def sup(self, a, b):
        return a if a >= b else b

    def inf(self, a, b):
        return a if a <= b else b

    def star(self, a):
        if a < 1.0:
            return 1.0 / (1.0 - a)
        if self.is_complete:
            return INF
        raise DivergenceError(f"star({a!r}) diverges in {self.name}")

    def inv(self, a):
        if a == 0.0:
            if self.is_complete:
                return INF
            raise DivergenceError(f"zero has no inverse in {self.name}")
        if a == INF:
            return 0.0
        return 1.0 / a

    def completion(self):
        return PLUS_TIMES


class Subtropical(Semiring):
    """``R ∪ {-inf}`` with the deformed sum ``h log(e^{u/h} + e^{v/h})`` and +."""

    zero = NEG_INF
    one = 0.0
    is_semifield = True

    def __init__(self, h: float):
        h = float(h)
        if not h > 0.0:
            raise ValueError(f"h must be positive, got {h}")
        self.h = h
        self.name = f"subtropical:{_fmt(h)}"

    def contains(self, x):
        return x != INF

    def add(self, a, b):
        return maslov_add(a, b, self.h)

    def mul(self, a, b):
        return a + b

    def leq(self, a, b):
        return a <= b

    def sup(self, a, b):
        return a if a >= b else b

    def inf(self, a, b):
        return a if a <= b else b

    def inv(self, a):
        if a == NEG_INF:
            raise DivergenceError(f"zero has no inverse in {self.name}")
        return -a

    def completion(self):
        return None


def maslov_add(u: float, v: float, h: float) -> float:
    """Dequantized sum ``h log(exp(u/h) + exp(v/h))``, evaluated without overflow."""
    if not h > 0.0:
        raise ValueError(f"h must be positive, got {h}")
    if u == NEG_INF:
        return v
    if v == NEG_INF:
        return u
    hi = u if u >= v else v
    return hi + h * math.log1p(math.exp(-abs(u - v) / h))


class Counting(Semiring):
    """Wrap a semiring and tally every basic operation into ``self.ops``.

    The wrapper has the same name as the wrapped semiring, so matrices may
    be viewed through it (``A.over(Counting(A.semiring))``) without any
    cost to uninstrumented code.
    """

    def __init__(self, inner: Semiring, ops: Optional[OpCount] = None):
        self.inner = inner
        self.ops = OpCount() if ops is None else ops
        self.name = inner.name
        self.zero = inner.zero
        self.one = inner.one
        self.is_idempotent = inner.is_idempotent
        self.is_complete = inner.is_complete
        self.is_semifield = inner.is_semifield

    def contains(self, x):
        return self.inner.contains(x)

    def check(self, x):
        return self.inner.check(x)

    def add(self, a, b):
        self.ops.adds += 1
        return self.inner.add(a, b)

    def mul(self, a, b):
        self.ops.muls += 1
        return self.inner.mul(a, b)

    def leq(self, a, b):
        return self.inner.leq(a, b)

    def sup(self, a, b):
        self.ops.sups += 1
        return self.inner.sup(a, b)

    def inf(self, a, b):
        self.ops.infs += 1
        return self.inner.inf(a, b)

    def star(self, a):
        self.ops.stars += 1
        return self.inner.star(a)

    def inv(self, a):
        self.ops.invs += 1
        return self.inner.inv(a)

    def completion(self):
        c = self.inner.completion()
        return None if c is None else Counting(c, self.ops)

    def __repr__(self):
        return f"<counting {self.inner!r}>"


MAX_PLUS = MaxPlus()
MAX_PLUS_COMPLETE = MaxPlus(complete=True)
MIN_PLUS = MinPlus()
PLUS_TIMES = NonNegPlusTimes()


def _fmt(x: float) -> str:
    return format_value(x)


def format_value(x: float) -> str:
    """Round-trip-safe text for an extended real (17 significant digits)."""
    if x == INF:
        return "inf"
    if x == NEG_INF:
        return "-inf"
    return format(x, ".17g")


def parse_value(token: str) -> float:
    t = token.strip()
    if t in ("inf", "+inf"):
        return INF
    if t == "-inf":
        return NEG_INF
    v = float(t)
    if math.isnan(v) or math.isinf(v):
        # only the spelled-out tokens are accepted for infinities
        raise ValueError(f"bad number {token!r}")
    return v


def semiring_from_name(name: str) -> Semiring:
    """Look up a semiring by its stable identifier.

    >>> semiring_from_name("maxmin:0:10").one
    10.0
    """
    key, _, params = name.strip().partition(":")
    if key == "maxplus" and not params:
        return MAX_PLUS
    if key == "maxplus-complete" and not params:
        return MAX_PLUS_COMPLETE
    if key == "minplus" and not params:
        return MIN_PLUS
    if key == "plustimes" and not params:
        return PLUS_TIMES
    if key == "plustimes-finite" and not params:
        return NonNegPlusTimes(complete=False)
    try:
        if key == "maxmin":
            if not params:
                return MaxMin()
            lo, sep, hi = params.partition(":")
            if not sep:
                raise ValueError("expected maxmin:<a>:<b>")
            return MaxMin(parse_value(lo), parse_value(hi))
        if key == "subtropical":
            return Subtropical(parse_value(params))
    except ValueError as exc:
        raise ValueError(f"bad semiring identifier {name!r}: {exc}") from None
    raise ValueError(f"unknown semiring {name!r}")


def idempotent_integral(f, semiring: Semiring):
    """Supremum of a finite table (a mapping or an iterable of values)."""
    if not semiring.is_idempotent:
        raise UnsupportedOperation(f"{semiring.name} is not idempotent")
    values = list(f.values()) if hasattr(f, "values") else list(f)
    if not values:
        if semiring.is_complete:
            return semiring.zero
        raise ValueError("empty table in a non-complete semiring")
    acc = values[0]
    for v in values[1:]:
        acc = semiring.add(acc, v)
    return acc


def idempotent_measure_integral(phi, psi, semiring: Semiring):
    """``⊕_x phi(x) ⊙ psi(x)`` over a common finite domain.

    Both tables are mappings with equal key sets or sequences of equal
    length.  Over max-plus this is the tropical scalar product; over
    plus-times it is the ordinary dot product.
    """
    if hasattr(phi, "keys") != hasattr(psi, "keys"):
        raise ValueError("cannot pair a mapping with a sequence")
    if hasattr(phi, "keys"):
        if set(phi) != set(psi):
            raise ValueError("tables have different domains")
        pairs = [(phi[k], psi[k]) for k in phi]
    else:
        phi, psi = list(phi), list(psi)
        if len(phi) != len(psi):
            raise ValueError(f"tables have lengths {len(phi)} and {len(psi)}")
        pairs = list(zip(phi, psi))
    acc = semiring.zero
    for a, b in pairs:
        acc = semiring.add(acc, semiring.mul(a, b))
    return acc
