"""Spectral-density coefficients from symbol data by Lagrange-Burmann reversion.

For a radial first-order symbol ``p(z) = p1 z + p0 + p_{-1}/z + ...`` the
diagonal spectral density of ``H = p(|D|)**d`` has the Cesaro expansion::

    d_H(lam) ~ 1/(d (2 pi)**n) * sum_j a_j lam**((n - d - j)/d),   a_j = Omega_n c_j

where ``c_j`` is the coefficient of ``zeta**n`` in ``p(1/zeta)**(j - n)``.
Symbols are handled as Laurent series in ``zeta = 1/z``: leading exponent
``-1`` and coefficients ``(p1, p0, p_{-1}, ...)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from .errors import DomainError, EllipticityError, OrderError, PoleError, UnsupportedError
from .expansions import AsymptoticExpansion, Term
from .series import LaurentSeries

Number = Union[int, float, Fraction]


def sphere_area(n: int) -> float:
    """``Omega_n = 2 pi**(n/2) / Gamma(n/2)``: the area of the unit ``S^(n-1)`` in ``R^n``."""
    if n < 1:
        raise DomainError("dimension must be >= 1")
    return 2.0 * math.pi ** (n / 2) / math.gamma(n / 2)


def symbol(coefficients: Sequence[Number], truncation_order: Optional[int] = None) -> LaurentSeries:
    """Symbol ``p1 z + p0 + p_{-1}/z + ...`` from ``[p1, p0, p_{-1}, ...]``.

    Integers, Fractions and strings such as ``"1/2"`` stay exact; floats are
    kept as floats.

    ``truncation_order`` is the exponent of the ``O(zeta**T)`` remainder of
    ``p(1/zeta)``, i.e. coefficients down to ``p_{1-T}`` are known; ``None``
    means the listed coefficients are the whole symbol.
    """
    coeffs = [Fraction(c) if isinstance(c, (int, Fraction, str)) else c for c in coefficients]
    if not coeffs:
        raise DomainError("empty symbol")
    if coeffs[0] <= 0:
        raise EllipticityError(f"leading symbol coefficient p1 = {coeffs[0]} must be > 0")
    return LaurentSeries(-1, tuple(coeffs), truncation_order)


def parse_symbol(text: str) -> LaurentSeries:
    """``"1,0.5,-1/3"`` -> symbol with ``p1=1, p0=0.5, p_{-1}=-1/3``."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            out.append(Fraction(tok))
        except ValueError:
            out.append(float(tok))
    return symbol(out)


def lagrange_burmann_cj(p: LaurentSeries, n: int, j: int):
    """Coefficient of ``zeta**n`` in ``p(1/zeta)**(j - n)``.

    Exact when the symbol coefficients are rational.  ``c_n`` vanishes for
    every admissible symbol.
    """
    if n < 1:
        raise DomainError("dimension must be >= 1")
    if j < 0:
        raise DomainError("j must be >= 0")
    if p.leading_exponent != -1:
        raise UnsupportedError("only first-order symbols are reverted directly")
    if p.leading_coefficient <= 0:
        raise EllipticityError(f"leading symbol coefficient p1 = {p.leading_coefficient} must be > 0")
    if p.truncation_order is not None and p.truncation_order < j:
        raise OrderError(f"c_{j} needs p(1/zeta) through O(zeta^{j}); symbol known to O(zeta^{p.truncation_order})")
    # p(1/zeta)**m = p1**m zeta**-m (1 + u)**m; want the zeta**n coefficient, m = j - n
    powered = p.power(j - n, relative_order=j + 1)
    return powered.coefficient(n)


@dataclass(frozen=True)
class DensityExpansion:
    """``prefactor * sum_j a[j] lam**((n - d - j)/d)`` with ``prefactor = 1/(d (2 pi)**n)``."""

    n: int
    d: int
    a: Tuple
    c: Tuple = ()

    @property
    def prefactor(self) -> float:
        return 1.0 / (self.d * (2 * math.pi) ** self.n)

    def exponent(self, j: int) -> Fraction:
        return Fraction(self.n - self.d - j, self.d)

    def terms(self) -> AsymptoticExpansion:
        """Cesaro-sense expansion in ``lam`` with the prefactor folded in."""
        return AsymptoticExpansion(
            tuple(Term(self.prefactor * float(aj), self.exponent(j)) for j, aj in enumerate(self.a)),
            variable="lam",
            sense="cesaro",
        )

    def __call__(self, lam: float) -> float:
        return self.terms()(lam)

    def to_record(self) -> dict:
        rec = self.terms().to_record()
        rec.update({"n": self.n, "d": self.d, "prefactor": self.prefactor,
                    "a": [float(x) for x in self.a]})
        return rec


def density_expansion(p: LaurentSeries, n: int, d: int = 1, j_max: int = 4) -> DensityExpansion:
    """Density coefficients ``a_j = Omega_n c_j`` for ``j = 0..j_max`` (radial symbols)."""
    if d < 1:
        raise DomainError("operator order d must be >= 1")
    c = tuple(lagrange_burmann_cj(p, n, j) for j in range(j_max + 1))
    omega = sphere_area(n)
    return DensityExpansion(n, d, tuple(omega * float(cj) for cj in c), c)


def q_coefficients(s1: Number, s2: Number, s3: Number):
    """``(q2, q3)`` from pointwise values of ``sigma(H)``, ``sigma(H^2)``, ``sigma(H^3)``."""
    if all(isinstance(v, (int, Fraction)) for v in (s1, s2, s3)):
        s1, s2, s3 = Fraction(s1), Fraction(s2), Fraction(s3)
    q2 = (s2 - s1 * s1) / 2
    q3 = (s3 - 3 * s2 * s1 + 2 * s1**3) / 6
    return q2, q3


def a2_laplacian(n: int, R: Number, C: Number) -> float:
    """``a_2 = (n - 2) Omega_n / 2 * (R/6 - C)`` for ``-Delta + C`` in dimension ``n >= 3``."""
    if n < 3:
        raise UnsupportedError("a_2 in dimension 2 is a moment, not a local coefficient")
    return (n - 2) * sphere_area(n) / 2 * (R / 6 - C)


def b2k_relation(a2k: Number, n: int, k: int) -> float:
    """Heat coefficient ``b_{2k} = 2**k a_{2k} / (Omega_n (n-2)(n-4)...(n-2k))``."""
    if k < 1:
        raise DomainError("k must be a positive integer")
    denom = sphere_area(n)
    for m in range(1, k + 1):
        if n - 2 * m == 0:
            raise PoleError(f"(n - {2 * m}) vanishes for n = {n}: this coefficient is a moment")
        denom *= n - 2 * m
    return 2**k * a2k / denom


__all__ = [
    "DensityExpansion",
    "a2_laplacian",
    "b2k_relation",
    "density_expansion",
    "lagrange_burmann_cj",
    "parse_symbol",
    "q_coefficients",
    "sphere_area",
    "symbol",
]
