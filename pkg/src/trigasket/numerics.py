"""Exact scalar helpers shared across the package.

Everything here is rational-first: metric values are `fractions.Fraction`,
and the only irrationalities the artifact ever needs to compare exactly are
sums of at most two square roots of rationals (triangle-with-apex distances).
`RadicalSum` decides signs of those sums by recursive squaring; nothing is
ever evaluated in floating point except for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def decimal_str(value: Fraction, places: int = 12) -> str:
    """Exact half-up decimal rendering of a rational, no float round trip."""
    if value < 0:
        return "-" + decimal_str(-value, places)
    scale = 10**places
    # round half up: floor((n*scale*2 + d) / (2 d))
    n, d = value.numerator, value.denominator
    scaled = (n * scale * 2 + d) // (2 * d)
    whole, frac = divmod(scaled, scale)
    return f"{whole}.{frac:0{places}d}"


def format_dist(value: Fraction, places: int = 12) -> str:
    """CLI-facing distance format: exact p/q fraction plus fixed decimal."""
    return f"{value.numerator}/{value.denominator} = {decimal_str(value, places)}"


def _sqrt_exact(q: Fraction) -> Fraction | None:
    """Return sqrt(q) if q is the square of a rational, else None."""
    if q < 0:
        raise ValueError("negative radicand")
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sign_one_radical(q: Fraction, c: Fraction, r: Fraction) -> int:
    """Sign of q + c*sqrt(r), r > 0, decided by squaring."""
    if c == 0:
        return _sgn(q)
    if q == 0:
        return _sgn(c)
    sq, sc = _sgn(q), _sgn(c)
    if sq == sc:
        return sq
    # opposite signs: |q| vs |c|sqrt(r) via squares
    cmp = q * q - c * c * r
    if cmp == 0:
        return 0
    return sq if cmp > 0 else sc


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class RadicalSum:
    """q + sum of c_i*sqrt(r_i) with at most two radical terms.

    Radicands are positive rationals, deduplicated by exact equality (no
    squarefree normalization: radicands here never need factoring, and
    dependent radicands like sqrt(8) vs sqrt(2) still compare correctly
    because every comparison bottoms out in squaring).
    """

    rational: Fraction
    terms: tuple[tuple[Fraction, Fraction], ...]  # ((coeff, radicand), ...)

    @staticmethod
    def of(rational: Rational = 0, *terms: tuple[Rational, Rational]) -> "RadicalSum":
        acc: dict[Fraction, Fraction] = {}
        q = Fraction(rational)
        for coeff, radicand in terms:
            c, r = Fraction(coeff), Fraction(radicand)
            if c == 0 or r == 0:
                continue
            if r < 0:
                raise ValueError("negative radicand")
            exact = _sqrt_exact(r)
            if exact is not None:
                q += c * exact
                continue
            acc[r] = acc.get(r, ZERO) + c
        clean = tuple(sorted((c, r) for r, c in acc.items() if c != 0))
        if len(clean) > 2:
            raise NotImplementedError(
                "sign decisions support at most two radical terms"
            )
        return RadicalSum(q, clean)

    # -- arithmetic (only what the artifact needs: +, -, rational scaling) --

    def _coerced(self, other: "RadicalSum | Rational") -> "RadicalSum":
        if isinstance(other, RadicalSum):
            return other
        if isinstance(other, (int, Fraction)):
            return RadicalSum.of(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: "RadicalSum | Rational") -> "RadicalSum":
        o = self._coerced(other)
        if o is NotImplemented:
            return NotImplemented
        return RadicalSum.of(self.rational + o.rational, *self.terms, *o.terms)

    __radd__ = __add__

    def __neg__(self) -> "RadicalSum":
        return RadicalSum(-self.rational, tuple((-c, r) for c, r in self.terms))

    def __sub__(self, other: "RadicalSum | Rational") -> "RadicalSum":
        return self + (-self._coerced(other))

    def __rsub__(self, other: "RadicalSum | Rational") -> "RadicalSum":
        return (-self) + other

    def __mul__(self, other: Rational) -> "RadicalSum":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        k = Fraction(other)
        return RadicalSum(self.rational * k, tuple((c * k, r) for c, r in self.terms))

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> "RadicalSum":
        return self * (1 / Fraction(other))

    # -- exact sign, the point of this class --

    def sign(self) -> int:
        ts = self.terms
        q = self.rational
        if not ts:
            return _sgn(q)
        if len(ts) == 1:
            (c, r), = ts
            return _sign_one_radical(q, c, r)
        (c1, r1), (c2, r2) = ts
        # sign of u = c1*sqrt(r1) + c2*sqrt(r2)
        s1, s2 = _sgn(c1), _sgn(c2)
        if s1 == s2:
            su = s1
        else:
            cmp = c1 * c1 * r1 - c2 * c2 * r2
            su = 0 if cmp == 0 else (s1 if cmp > 0 else s2)
        if q == 0:
            return su
        if su == 0 or su == _sgn(q):
            return _sgn(q)
        # q and u have opposite signs: compare q^2 vs u^2, where
        # u^2 = c1^2 r1 + c2^2 r2 + 2 c1 c2 sqrt(r1 r2) has one radical.
        t = _sign_one_radical(
            q * q - c1 * c1 * r1 - c2 * c2 * r2, -2 * c1 * c2, r1 * r2
        )
        if t == 0:
            return 0
        return _sgn(q) if t > 0 else su

    def is_rational(self) -> bool:
        return not self.terms

    def as_fraction(self) -> Fraction:
        if self.terms:
            raise ValueError("not a rational value")
        return self.rational

    # -- comparisons for min() and metric gates --

    def _cmp(self, other: "RadicalSum | Rational") -> int:
        return (self - other).sign()

    def __lt__(self, other: "RadicalSum | Rational") -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: "RadicalSum | Rational") -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: "RadicalSum | Rational") -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: "RadicalSum | Rational") -> bool:
        return self._cmp(other) >= 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (RadicalSum, int, Fraction)):
            return NotImplemented
        return self._cmp(other) == 0

    def __hash__(self) -> int:
        if not self.terms:
            return hash(self.rational)
        return hash((self.rational, self.terms))

    def __float__(self) -> float:
        # display only; all decisions go through sign()
        return float(self.rational) + sum(
            float(c) * math.sqrt(float(r)) for c, r in self.terms
        )

    def __str__(self) -> str:
        parts = [str(self.rational)]
        for c, r in self.terms:
            parts.append(f"+ {c}*sqrt({r})" if c >= 0 else f"- {-c}*sqrt({r})")
        return " ".join(parts)


def sqrt_fraction(q: Rational) -> "RadicalSum | Fraction":
    """Exact sqrt of a nonnegative rational: Fraction if perfect, else RadicalSum."""
    qf = Fraction(q)
    exact = _sqrt_exact(qf)
    if exact is not None:
        return exact
    return RadicalSum.of(0, (1, qf))


MetricValue = Union[Fraction, RadicalSum]


def value_sign(x: MetricValue) -> int:
    if isinstance(x, RadicalSum):
        return x.sign()
    return _sgn(x)


def value_le(a: MetricValue, b: MetricValue) -> bool:
    if isinstance(a, RadicalSum) or isinstance(b, RadicalSum):
        diff = (a if isinstance(a, RadicalSum) else RadicalSum.of(a)) - b
        return diff.sign() <= 0
    return a <= b


def value_float(x: MetricValue) -> float:
    return float(x)
