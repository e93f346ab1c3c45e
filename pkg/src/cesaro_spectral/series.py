"""Exact formal algebra: rational polynomials and truncated Laurent series."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import DomainError, OrderError

Number = Union[int, float, Fraction]


def _num(x):
    return Fraction(x) if isinstance(x, (int, Fraction)) else x


def _trim(coeffs: Sequence) -> tuple:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (Fraction(0),)


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial with exact coefficients, stored in ascending powers."""

    coeffs: Tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Number]):
        object.__setattr__(self, "coeffs", _trim(_num(c) for c in coeffs))

    @classmethod
    def parse(cls, text: str) -> "RationalPolynomial":
        """``"1,2,0,3"`` -> ``1 + 2x + 3x^3`` (ascending, rationals like ``1/2`` allowed)."""
        return cls(Fraction(t.strip()) for t in text.split(",") if t.strip())

    @property
    def degree(self) -> int:
        return 0 if self.coeffs == (0,) else len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return RationalPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return RationalPolynomial(c * _num(other) for c in self.coeffs)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "RationalPolynomial":
        if m < 0:
            raise DomainError("negative powers of a polynomial are not polynomials")
        out = RationalPolynomial([1])
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def antiderivative(self) -> "RationalPolynomial":
        return RationalPolynomial([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def integrate(self, a: Number, b: Number):
        F = self.antiderivative()
        return F(_num(b)) - F(_num(a))

    def __repr__(self) -> str:
        return f"RationalPolynomial({[str(c) for c in self.coeffs]})"


@dataclass(frozen=True)
class LaurentSeries:
    """``sum_i coefficients[i] x**(leading_exponent + i) + O(x**truncation_order)``.

    ``truncation_order=None`` marks a finite (exact) series.
    """

    leading_exponent: int
    coefficients: Tuple
    truncation_order: Optional[int] = None

    def __post_init__(self):
        coeffs = tuple(_num(c) for c in self.coefficients)
        if not coeffs or coeffs[0] == 0:
            raise DomainError("leading coefficient of a Laurent series must be nonzero")
        if self.truncation_order is not None:
            known = self.truncation_order - self.leading_exponent
            if known < 1:
                raise OrderError("truncation order must exceed the leading exponent")
            coeffs = coeffs[:known]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def leading_coefficient(self):
        return self.coefficients[0]

    def coefficient(self, exponent: int):
        if self.truncation_order is not None and exponent >= self.truncation_order:
            raise OrderError(f"coefficient of x^{exponent} is beyond O(x^{self.truncation_order})")
        i = exponent - self.leading_exponent
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def _known_relative(self, cap: int) -> int:
        if self.truncation_order is None:
            return cap
        return min(cap, self.truncation_order - self.leading_exponent)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        rel = None
        for s in (self, other):
            if s.truncation_order is not None:
                r = s.truncation_order - s.leading_exponent
                rel = r if rel is None else min(rel, r)
        n = len(self.coefficients) + len(other.coefficients) - 1
        if rel is not None:
            n = min(n, rel)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                if i + j < n:
                    out[i + j] += a * b
        lead = self.leading_exponent + other.leading_exponent
        return LaurentSeries(lead, tuple(out), None if rel is None else lead + rel)

    def power(self, m: int, relative_order: int) -> "LaurentSeries":
        """``self**m`` for any integer ``m``, through ``relative_order`` terms.

        Uses the binomial series of ``(1 + u)**m`` after factoring out the
        leading monomial; the result carries an explicit truncation order.
        """
        known = self._known_relative(relative_order)
        c0 = self.leading_coefficient
        u = [c / c0 for c in self.coefficients[1:known]] + [Fraction(0)] * max(0, known - len(self.coefficients))
        # (1 + u)^m = sum_i binom(m, i) u^i; u starts at x^1 so i < known suffices
        result = [Fraction(0)] * known
        result[0] = Fraction(1)
        u_pow = [Fraction(1)] + [Fraction(0)] * (known - 1)
        binom = Fraction(1)
        for i in range(1, known):
            binom = binom * (m - i + 1) / i
            nxt = [Fraction(0)] * known
            for a, ua in enumerate(u_pow):
                if ua:
                    for b, ub in enumerate(u[: known - 1]):
                        if ub and a + b + 1 < known:
                            nxt[a + b + 1] += ua * ub
            u_pow = nxt
            if binom:
                for e in range(known):
                    result[e] += binom * u_pow[e]
        lead_c = c0**m
        lead = self.leading_exponent * m
        return LaurentSeries(lead, tuple(lead_c * r for r in result), lead + known)


def fraction_str(x) -> str:
    """Exact text for Fractions, shortest round-trip repr for floats."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


__all__ = ["LaurentSeries", "RationalPolynomial", "fraction_str"]
