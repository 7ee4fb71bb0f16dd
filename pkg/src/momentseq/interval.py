"""Closed intervals with endpoints ``c -/+ v*sqrt(w)``.

The endpoint sum ``2c`` and product ``c^2 - v^2 w`` are always rational, which
is all the interval moment criterion needs. Endpoint comparisons are done
exactly in the quadratic field Q(sqrt w).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .exact import Scalar, fmt, to_fraction


def _isqrt_exact(w: int):
    r = math.isqrt(w)
    return r if r * r == w else None


@dataclass(frozen=True)
class QuadSurd:
    """The number ``x + y*sqrt(w)``."""

    x: Fraction
    y: Fraction
    w: int

    def _check(self, other: "QuadSurd") -> None:
        if self.w != other.w and self.y and other.y:
            raise ValueError(f"cannot mix sqrt({self.w}) and sqrt({other.w})")

    def _w(self, other: "QuadSurd") -> int:
        return self.w if self.y else other.w

    def __add__(self, other: "QuadSurd") -> "QuadSurd":
        self._check(other)
        return QuadSurd(self.x + other.x, self.y + other.y, self._w(other))

    def __neg__(self) -> "QuadSurd":
        return QuadSurd(-self.x, -self.y, self.w)

    def __sub__(self, other: "QuadSurd") -> "QuadSurd":
        return self + (-other)

    def __mul__(self, other: "QuadSurd") -> "QuadSurd":
        self._check(other)
        w = self._w(other)
        return QuadSurd(
            self.x * other.x + self.y * other.y * w,
            self.x * other.y + self.y * other.x,
            w,
        )

    def __pow__(self, k: int) -> "QuadSurd":
        result = QuadSurd(Fraction(1), Fraction(0), self.w)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sign(self) -> int:
        x, y, w = self.x, self.y, self.w
        if y == 0 or w == 0:
            return (x > 0) - (x < 0)
        sy = 1 if y > 0 else -1
        if x == 0:
            return sy
        sx = 1 if x > 0 else -1
        if sx == sy:
            return sx
        # opposite signs: compare |x| against |y| sqrt(w)
        diff = x * x - y * y * w
        if diff == 0:
            return 0
        return sx if diff > 0 else sy

    def __lt__(self, other: "QuadSurd") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "QuadSurd") -> bool:
        return (self - other).sign() <= 0

    def rational(self):
        """The value as a Fraction when it is rational, else None."""
        if self.y == 0 or self.w == 0:
            return self.x
        r = _isqrt_exact(self.w)
        return None if r is None else self.x + self.y * r

    def to_decimal(self, digits: int = 12) -> str:
        with localcontext() as ctx:
            ctx.prec = digits + 5
            val = Decimal(self.x.numerator) / Decimal(self.x.denominator)
            if self.y and self.w:
                val += Decimal(self.y.numerator) / Decimal(self.y.denominator) * Decimal(self.w).sqrt()
            ctx.prec = digits
            return str(+val)

    def __str__(self):
        r = self.rational()
        if r is not None:
            return fmt(r)
        surd = f"sqrt({self.w})" if abs(self.y) == 1 else f"{fmt(abs(self.y))}*sqrt({self.w})"
        if self.x == 0:
            return ("-" if self.y < 0 else "") + surd
        return f"{fmt(self.x)}{'-' if self.y < 0 else '+'}{surd}"


def surd(x: Scalar, y: Scalar = 0, w: int = 0) -> QuadSurd:
    return QuadSurd(to_fraction(x), to_fraction(y), int(w))


@dataclass(frozen=True)
class QuadraticInterval:
    """The interval ``[c - v*sqrt(w), c + v*sqrt(w)]``."""

    c: Fraction
    v: Fraction
    w: int

    def __post_init__(self):
        object.__setattr__(self, "c", to_fraction(self.c))
        object.__setattr__(self, "v", to_fraction(self.v))
        if isinstance(self.w, bool) or int(self.w) != self.w or self.w < 0:
            raise ValueError(f"w must be a nonnegative integer, got {self.w!r}")
        object.__setattr__(self, "w", int(self.w))
        if self.v < 0:
            raise ValueError(f"v must be nonnegative, got {self.v}")

    @classmethod
    def from_endpoints(cls, a: Scalar, b: Scalar) -> "QuadraticInterval":
        a, b = to_fraction(a), to_fraction(b)
        if a > b:
            raise ValueError(f"empty interval [{a}, {b}]")
        return cls((a + b) / 2, (b - a) / 2, 1)

    @property
    def lo(self) -> QuadSurd:
        return QuadSurd(self.c, -self.v, self.w)

    @property
    def hi(self) -> QuadSurd:
        return QuadSurd(self.c, self.v, self.w)

    @property
    def s(self) -> Fraction:
        """Endpoint sum ``a + b``."""
        return 2 * self.c

    @property
    def q(self) -> Fraction:
        """Endpoint product ``a * b``."""
        return self.c * self.c - self.v * self.v * self.w

    def to_json(self) -> dict:
        return {"c": fmt(self.c), "v": fmt(self.v), "w": self.w}

    @classmethod
    def from_json(cls, obj) -> "QuadraticInterval":
        return cls(to_fraction(obj["c"]), to_fraction(obj["v"]), int(obj["w"]))

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def _from_endpoints(lo: QuadSurd, hi: QuadSurd, w: int) -> QuadraticInterval:
    mid = QuadSurd((lo.x + hi.x) / 2, (lo.y + hi.y) / 2, w)
    half = hi - mid
    if lo.rational() is not None and hi.rational() is not None:
        # both ends rational: fold into the w = 1 form
        return QuadraticInterval(mid.rational(), half.rational(), 1)
    if mid.y != 0 or half.x != 0:
        raise ValueError(
            f"image [{lo}, {hi}] is not of the form c -/+ v*sqrt({w})"
        )
    return QuadraticInterval(mid.x, half.y, w)


def map_interval(interval: QuadraticInterval, d: int) -> QuadraticInterval:
    """Support interval of ``T_p(alpha)`` for a ``d``-variable ``p`` that is
    nonnegative on ``[a, b]^d``, given ``alpha`` supported on ``[a, b]``.

    ``T_p(alpha)`` is the moment sequence of the image of ``p * mu^d`` under
    ``x -> x_1 x_2 ... x_d``, so its support lies in the range of that
    product over the cube: the hull of the vertex products ``a^k b^(d-k)``.
    For ``a >= 0`` this is ``[a^d, b^d]``; for ``b <= 0`` and odd ``d`` it is
    ``[-|a|^d, -|b|^d]``.

    Raises ValueError when the hull endpoints leave the ``c -/+ v sqrt(w)``
    family (possible only when ``a < 0 < b`` and ``w`` is not a square).
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    a, b, w = interval.lo, interval.hi, interval.w
    if d == 1:
        return interval
    vertices = [a ** k * b ** (d - k) for k in range(d + 1)]
    lo = hi = vertices[0]
    for v in vertices[1:]:
        if v < lo:
            lo = v
        if hi < v:
            hi = v
    return _from_endpoints(lo, hi, w)
