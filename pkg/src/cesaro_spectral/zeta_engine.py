"""Riemann zeta values through Cesaro means, and lattice sampling formulas.

``zeta(-alpha)`` is the Cesaro limit of ``sum_{n<=x} n**alpha - Fp int_0^x t**alpha dt``.
The order-``k`` mean of that difference at cutoff ``X`` is::

    sum_{n<=X} (1 - n/X)**k n**alpha - X**-k Fp int_0^X (X - t)**k t**alpha dt

and the second piece is done in closed form (binomial expansion plus finite
parts), so no quadrature error enters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Union

import numpy as np
from scipy import integrate

from .errors import DomainError, NonConvergenceError
from .functionals import TestFunctional
from .model_spectra import sum_of_squares_counts
from .summability import WeightedComb, hadamard_fp_power, riesz_sum

Number = Union[int, float, Fraction]


@dataclass
class ZetaValue:
    argument: Number
    value: float
    method: str
    exact: Optional[Fraction] = None
    ladder: list = field(default_factory=list)
    estimates: list = field(default_factory=list)

    @property
    def spread(self) -> float:
        if len(self.estimates) < 2:
            return 0.0
        return max(self.estimates) - min(self.estimates)


# --------------------------------------------------------------------------
# exact values at non-positive integers
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """``B_m`` with ``B_1 = -1/2`` (exact, memoised recurrence)."""
    if m < 0:
        raise DomainError("Bernoulli index must be non-negative")
    if m == 0:
        return Fraction(1)
    if m > 1 and m % 2:
        return Fraction(0)
    # sum_{j=0}^{m} C(m+1, j) B_j = 0
    s = sum((math.comb(m + 1, j) * bernoulli(j) for j in range(m)), Fraction(0))
    return -s / (m + 1)


def zeta_neg_int(m: int) -> Fraction:
    """``zeta(-m) = (-1)**m B_{m+1} / (m+1)``, exact."""
    if m < 0:
        raise DomainError("m must be a non-negative integer")
    return (-1) ** m * bernoulli(m + 1) / (m + 1)


# --------------------------------------------------------------------------
# Cesaro evaluation
# --------------------------------------------------------------------------


def _power_comb(alpha: float) -> WeightedComb:
    return WeightedComb.from_index(
        point=lambda n: n.astype(float),
        weight=lambda n: n.astype(float) ** alpha,
    )


def _fp_power_mean(alpha: float, k: int, X: float) -> float:
    """``X**-k Fp int_0^X (X - t)**k t**alpha dt``."""
    a = Fraction(alpha)
    power_part = Fraction(0)
    log_part = 0.0
    for i in range(k + 1):
        c = math.comb(k, i) * (-1) ** i
        if a + i == -1:
            # Fp int_0^X t^-1 dt = log X (the dropped log eps is flagged there)
            log_part += c * hadamard_fp_power(-1, X).value * X ** (k - i)
        else:
            power_part += c / (a + i + 1)
    return float(power_part) * X ** (alpha + 1) + log_part / X**k


def _exact_mean(alpha: int, k: int, X: int) -> Fraction:
    # integer alpha >= 0 and integer X: both pieces are rational, no cancellation loss
    s = sum((X - n) ** k * n**alpha for n in range(1, X + 1))
    b = sum(Fraction(math.comb(k, i) * (-1) ** i, alpha + i + 1) for i in range(k + 1))
    return (s - b * X ** (alpha + k + 1)) / Fraction(X) ** k


def zeta_via_cesaro(alpha: float, k: int = 2, X: float = 1e5, tol: Optional[float] = None) -> ZetaValue:
    """Estimate ``zeta(-alpha)`` by the order-``k`` Cesaro mean at cutoff ``X``.

    Estimates at ``X/4, X/2, X`` are kept as a stabilisation report; when
    ``tol`` is given a spread above it raises :class:`NonConvergenceError`.
    """
    if alpha == -1:
        raise DomainError("alpha = -1 is the pole of zeta")
    if X < 100:
        raise DomainError("cutoff X must be at least 100")
    if k < 0:
        raise DomainError("Cesaro order must be non-negative")
    ladder = [X / 4, X / 2, X]
    exact = None
    if float(alpha) == int(alpha) and alpha >= 0 and all(float(x).is_integer() for x in ladder):
        exact = zeta_neg_int(int(alpha))
        est = [float(_exact_mean(int(alpha), k, int(x))) for x in ladder]
    else:
        comb = _power_comb(float(alpha))
        est = [riesz_sum(comb, k, x) - _fp_power_mean(float(alpha), k, x) for x in ladder]
        if float(alpha) == int(alpha) and alpha >= 0:
            exact = zeta_neg_int(int(alpha))
    out = ZetaValue(-alpha, est[-1], "cesaro", exact, ladder, est)
    if tol is not None and out.spread > tol:
        raise NonConvergenceError(
            f"zeta({-alpha}) estimates spread {out.spread:.2e} over the ladder", estimates=est, achieved=out.spread
        )
    return out


def zeta_prime_zero(X: float = 1e5, k: int = 3) -> ZetaValue:
    """``zeta'(0)`` as minus the Cesaro limit of ``sum log n - int_0^x log t dt``."""
    if X < 1e3:
        raise DomainError("cutoff X must be at least 1e3")
    comb = WeightedComb.from_index(point=lambda n: n.astype(float), weight=lambda n: np.log(n.astype(float)))
    harmonic = math.fsum(1.0 / j for j in range(1, k + 2))

    def estimate(x: float) -> float:
        # X**-k int_0^X (X - t)^k log t dt = X (log X - H_{k+1}) / (k + 1)
        return -(riesz_sum(comb, k, x) - x * (math.log(x) - harmonic) / (k + 1))

    ladder = [X / 4, X / 2, X]
    est = [estimate(x) for x in ladder]
    return ZetaValue(0, est[-1], "cesaro", None, ladder, est)


# --------------------------------------------------------------------------
# sampling formulas
# --------------------------------------------------------------------------


def sampling_expansion(g: TestFunctional, eps: float, order: int) -> float:
    """``(1/eps) int_0^inf g + sum_{m<=order} zeta(-m) g^(m)(0) eps**m / m!``."""
    if eps <= 0:
        raise DomainError("eps must be positive")
    total = float(g.fp_integral(0)) / eps
    for m in range(order + 1):
        z = zeta_neg_int(m)
        if z:
            total += float(z) * float(g.derivative(m)) * eps**m / math.factorial(m)
    return total


def sampling_sum(g: Callable, eps: float, tol: float = 1e-16, max_terms: int = 10**8) -> float:
    """``sum_{n>=1} g(n eps)`` by direct summation, in blocks until a block is negligible."""
    if eps <= 0:
        raise DomainError("eps must be positive")
    parts = []
    start, block = 1, max(64, int(8 / eps))
    while start <= max_terms:
        n = np.arange(start, start + block, dtype=float)
        vals = np.asarray(g(n * eps), dtype=float)
        s = math.fsum(vals.tolist())
        parts.append(s)
        total = math.fsum(parts)
        if abs(s) <= tol * max(abs(total), 1e-300) and abs(vals[-1]) <= tol * max(abs(total), 1e-300):
            return total
        start += block
        block *= 2
    raise NonConvergenceError("sampling sum did not converge", estimates=parts)


@dataclass(frozen=True)
class RadialFunction:
    """``g(x) = profile(|x|**2)`` on ``R^n``."""

    profile: Callable


@dataclass(frozen=True)
class SeparableFunction:
    """``g(x) = prod_i factor(x_i)`` on ``R^n``."""

    factor: Callable


def _lattice_radial(g: RadialFunction, eps: float, n: int, tol: float, q_cap: int) -> float:
    q_max = max(64, int(4.0 / eps**2))
    while q_max <= q_cap:
        r = sum_of_squares_counts(n, q_max)
        q = np.arange(q_max + 1, dtype=float)
        terms = r * np.asarray(g.profile(eps**2 * q), dtype=float)
        total = math.fsum(terms.tolist())
        outer = math.fsum(terms[q_max // 2 + 1:].tolist())
        if abs(outer) <= tol * max(abs(total), 1e-300):
            return total
        q_max *= 2
    raise NonConvergenceError(f"lattice sum truncation radius exceeded (|k|^2 <= {q_cap})")


def _line_sum(factor: Callable, eps: float, tol: float, k_cap: int) -> float:
    K = max(32, int(4.0 / eps))
    while K <= k_cap:
        k = np.arange(-K, K + 1, dtype=float)
        vals = np.asarray(factor(eps * k), dtype=float)
        total = math.fsum(vals.tolist())
        edge = math.fsum(vals[: K // 2].tolist()) + math.fsum(vals[-(K // 2):].tolist())
        if abs(edge) <= tol * max(abs(total), 1e-300):
            return total
        K *= 2
    raise NonConvergenceError(f"lattice sum truncation radius exceeded (|k| <= {k_cap})")


def lattice_sampling(g, eps: float, n: int, tol: float = 1e-14) -> float:
    """``sum_{k in Z^n} g(k eps)`` for radial or separable ``g``."""
    if eps <= 0:
        raise DomainError("eps must be positive")
    if isinstance(g, RadialFunction):
        return _lattice_radial(g, eps, n, tol, q_cap=1 << 24)
    if isinstance(g, SeparableFunction):
        return _line_sum(g.factor, eps, tol, k_cap=1 << 26) ** n
    raise DomainError("lattice_sampling needs a RadialFunction or SeparableFunction")


def lattice_integral(g, eps: float, n: int) -> float:
    """``eps**-n int_{R^n} g`` by radial reduction or a product of line integrals."""
    if eps <= 0:
        raise DomainError("eps must be positive")
    if isinstance(g, RadialFunction):
        omega = 2 * math.pi ** (n / 2) / math.gamma(n / 2)
        val, _ = integrate.quad(lambda u: u ** (n / 2 - 1) * float(g.profile(u)), 0, np.inf,
                                epsabs=0, epsrel=1e-13, limit=400)
        return 0.5 * omega * val / eps**n
    if isinstance(g, SeparableFunction):
        val, _ = integrate.quad(lambda x: float(g.factor(x)), -np.inf, np.inf, epsabs=0, epsrel=1e-13, limit=400)
        return val**n / eps**n
    raise DomainError("lattice_integral needs a RadialFunction or SeparableFunction")
