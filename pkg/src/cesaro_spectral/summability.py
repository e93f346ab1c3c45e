"""Cesaro, Holder and Riesz means; Hadamard finite parts.

Series are handled as weighted Dirac combs ``f = sum_n a_n delta(x - p_n)``.
The order-``k`` Cesaro value of ``<f, phi>`` is read off the order-``k+1``
primitive of ``f * phi`` evaluated at a cutoff ``X``::

    k! I_{k+1}[f phi](X) / X**k = sum_{p_n <= X} (1 - p_n/X)**k a_n phi(p_n)

so the Cesaro evaluation of a comb is a Riesz sum.  Convergence is assessed
on a geometric ladder of cutoffs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np
from scipy import integrate

from .errors import DomainError, NonConvergenceError
from .functionals import TestFunctional

QUAD_TOL = 1e-10


# --------------------------------------------------------------------------
# weighted combs
# --------------------------------------------------------------------------


def _as_array(values) -> np.ndarray:
    if isinstance(values, np.ndarray) and values.dtype != object:
        return values.astype(float)
    values = list(values)
    if any(isinstance(v, Fraction) for v in values):
        return np.array([Fraction(v) for v in values], dtype=object)
    return np.asarray(values, dtype=float)


class WeightedComb:
    """A distribution ``sum_n a_n delta(x - p_n)`` with increasing support.

    Either materialised (``points``/``weights`` given) or lazy: built from
    vectorised index maps via :meth:`from_index` and extended on demand.
    Combs with any Fraction point or weight are exact: they keep object arrays so that
    primitives stay exact.
    """

    _CHUNK = 8192

    def __init__(self, points: Sequence = (), weights: Sequence = ()):
        pts = _as_array(points)
        wts = _as_array(weights)
        if pts.dtype == object or wts.dtype == object:
            pts = np.array([Fraction(v) for v in points], dtype=object)
            wts = np.array([Fraction(v) for v in weights], dtype=object)
        if pts.shape != wts.shape:
            raise DomainError("points and weights must have the same length")
        if pts.size > 1 and not all(pts[1:] > pts[:-1]):
            raise DomainError("comb support points must be strictly increasing")
        self._points = pts
        self._weights = wts
        self._point_fn: Optional[Callable] = None
        self._weight_fn: Optional[Callable] = None
        self._next_index = 0

    @classmethod
    def from_index(cls, point: Callable, weight: Callable, start: int = 1) -> "WeightedComb":
        """Lazy comb with support ``point(n)`` and weight ``weight(n)``, ``n >= start``.

        Both maps receive integer numpy arrays and must return arrays.
        """
        comb = cls()
        comb._points = np.empty(0)
        comb._weights = np.empty(0)
        comb._point_fn = point
        comb._weight_fn = weight
        comb._next_index = start
        return comb

    @property
    def lazy(self) -> bool:
        return self._point_fn is not None

    @property
    def exact(self) -> bool:
        return self._weights.dtype == object

    def _extend_past(self, x) -> None:
        while self.lazy and (self._points.size == 0 or self._points[-1] <= x):
            idx = np.arange(self._next_index, self._next_index + self._CHUNK)
            p = np.asarray(self._point_fn(idx), dtype=float)
            w = np.asarray(self._weight_fn(idx), dtype=float) * np.ones_like(p)
            if np.any(np.diff(p) <= 0) or (self._points.size and p[0] <= self._points[-1]):
                raise DomainError("lazy comb produced non-increasing support points")
            self._points = np.concatenate([self._points, p])
            self._weights = np.concatenate([self._weights, w])
            self._next_index += self._CHUNK

    def upto(self, x):
        """Support points ``<= x`` (closed interval) and their weights."""
        self._extend_past(x)
        if self.exact:
            n = sum(1 for p in self._points if p <= x)
        else:
            n = int(np.searchsorted(self._points, float(x), side="right"))
        return self._points[:n], self._weights[:n]

    def __len__(self) -> int:
        if self.lazy:
            raise TypeError("lazy comb has no length")
        return int(self._points.size)

    def __repr__(self) -> str:
        kind = "lazy" if self.lazy else f"{len(self)} atoms"
        return f"WeightedComb({kind})"


def _sum(values: np.ndarray):
    if values.dtype == object:
        return sum(values, Fraction(0))
    return math.fsum(values.tolist())


# --------------------------------------------------------------------------
# Holder / Cesaro means of sequences
# --------------------------------------------------------------------------


def _check_sequence(a, k: int, n: Optional[int]):
    arr = _as_array(a)
    if arr.size == 0:
        raise DomainError("empty sequence")
    if k < 0:
        raise DomainError("Cesaro order must be non-negative")
    if n is None:
        n = arr.size
    if not 1 <= n <= arr.size:
        raise DomainError(f"index n={n} outside 1..{arr.size}")
    return arr[:n], n


def holder_mean(a: Sequence, k: int, n: Optional[int] = None):
    """``H^(k)_n``: the ``k``-fold iterated running average, at index ``n`` (1-based)."""
    arr, n = _check_sequence(a, k, n)
    counts = np.arange(1, n + 1, dtype=arr.dtype if arr.dtype == object else float)
    h = arr
    for _ in range(k):
        h = np.cumsum(h) / counts
    return h[n - 1]


def cesaro_mean(a: Sequence, k: int, n: Optional[int] = None):
    """``k! A^(k)_n / n**k`` with ``A^(k)`` the ``k``-fold cumulative sum."""
    arr, n = _check_sequence(a, k, n)
    acc = arr
    for _ in range(k):
        acc = np.cumsum(acc)
    if arr.dtype == object:
        return acc[n - 1] * math.factorial(k) / Fraction(n) ** k
    return float(acc[n - 1]) * math.factorial(k) / float(n) ** k


# --------------------------------------------------------------------------
# Riesz means and primitives of combs
# --------------------------------------------------------------------------


def riesz_sum(comb: WeightedComb, k: int, mu, phi: Optional[Callable] = None):
    """``sum_{p_n <= mu} (1 - p_n/mu)**k a_n [phi(p_n)]``."""
    if mu <= 0:
        raise DomainError("mu must be positive")
    p, a = comb.upto(mu)
    if p.size == 0:
        return Fraction(0) if comb.exact else 0.0
    if phi is not None:
        a = a * phi(p)
    if comb.exact:
        mu_ = Fraction(mu)
        return _sum(np.array([(1 - Fraction(pi) / mu_) ** k * ai for pi, ai in zip(p, a)], dtype=object))
    return _sum((1.0 - p / float(mu)) ** k * a)


def riesz_mean(comb: WeightedComb, k: int, mu):
    """Normalised Riesz typical mean of the weight sequence, order ``k >= 1``.

    ``(k/mu) sum_{p_n <= mu} (1 - p_n/mu)**(k-1) a_n``; the factor ``k``
    makes the mean of a constant sequence on the integers tend to that
    constant.
    """
    if k < 1:
        raise DomainError("Riesz mean order must be >= 1")
    return riesz_sum(comb, k - 1, mu) * k / mu


def riesz_primitive(comb: WeightedComb, k: int, x):
    """Order-``k`` primitive with support bounded on the left.

    ``f_k(x) = sum_{p_n <= x} (x - p_n)**(k-1) a_n / (k-1)!``; exact for
    exact combs.
    """
    if k < 1:
        raise DomainError("a comb is not a function: primitive order must be >= 1")
    p, a = comb.upto(x)
    if p.size == 0:
        return Fraction(0) if comb.exact else 0.0
    fact = math.factorial(k - 1)
    if comb.exact:
        x_ = Fraction(x)
        return sum(((x_ - Fraction(pi)) ** (k - 1) * ai for pi, ai in zip(p, a)), Fraction(0)) / fact
    return _sum((float(x) - p) ** (k - 1) * a) / fact


def cesaro_evaluation(comb: WeightedComb, phi: Optional[Callable], k: int, X):
    """Estimate of ``<comb, phi>`` in the ``(C, k)`` sense at cutoff ``X``."""
    if k < 0:
        raise DomainError("Cesaro order must be non-negative")
    return riesz_sum(comb, k, X, phi)


@dataclass
class CesaroLimit:
    value: float
    ladder: list = field(default_factory=list)
    estimates: list = field(default_factory=list)
    spread: float = 0.0


def stabilize(estimate: Callable[[float], float], X0: float, tol: float, max_doublings: int = 12) -> CesaroLimit:
    """Run ``estimate`` on ``X0, 2 X0, 4 X0, ...`` until three consecutive values agree.

    Raises :class:`NonConvergenceError` when the ladder is exhausted.
    """
    ladder, est = [], []
    X = float(X0)
    for _ in range(max_doublings + 1):
        ladder.append(X)
        est.append(float(estimate(X)))
        if len(est) >= 3:
            last = est[-3:]
            spread = max(last) - min(last)
            if spread < tol:
                return CesaroLimit(est[-1], ladder, est, spread)
        X *= 2.0
    raise NonConvergenceError(
        f"Cesaro ladder did not stabilise to {tol:g} after {max_doublings} doublings",
        estimates=est,
        achieved=max(est[-3:]) - min(est[-3:]),
    )


def cesaro_limit(comb: WeightedComb, phi: Optional[Callable], k: int, X0: float,
                 tol: float = 1e-6, max_doublings: int = 12) -> CesaroLimit:
    return stabilize(lambda X: cesaro_evaluation(comb, phi, k, X), X0, tol, max_doublings)


# --------------------------------------------------------------------------
# Hadamard finite parts
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class FinitePartValue:
    value: object
    dropped_log_coefficient: object = 0


def hadamard_fp_power(alpha, upper) -> FinitePartValue:
    """``Fp int_0^upper x**alpha dx``.

    For ``alpha == -1`` the value is ``log(upper)`` and the discarded
    ``-log(eps)`` piece is flagged through ``dropped_log_coefficient = 1``.
    Exact when ``alpha`` and ``upper`` are rational with ``upper**(alpha+1)``
    rational.
    """
    if upper <= 0:
        raise DomainError("upper limit must be positive")
    if alpha == -1:
        return FinitePartValue(math.log(upper), 1)
    exact = isinstance(alpha, (int, Fraction)) and isinstance(upper, (int, Fraction))
    if exact:
        e = Fraction(alpha) + 1
        if upper == 1:
            return FinitePartValue(1 / e, 0)
        if e.denominator == 1:
            return FinitePartValue(Fraction(upper) ** int(e) / e, 0)
    e = float(alpha) + 1.0
    return FinitePartValue(float(upper) ** e / e, 0)


def _quad(f, a, b, what: str) -> float:
    val, err = integrate.quad(f, a, b, epsabs=QUAD_TOL, epsrel=QUAD_TOL, limit=400)
    if not np.isfinite(val) or err > 1e3 * max(QUAD_TOL, QUAD_TOL * abs(val)):
        raise NonConvergenceError(f"quadrature for {what} reached only {err:.2e}", achieved=err)
    return val


def fp_integral(alpha, g: TestFunctional) -> float:
    """``Fp int_0^inf x**alpha g(x) dx`` for any real ``alpha``.

    Splits at 1, subtracts enough of the Taylor polynomial of ``g`` on
    ``[0, 1]`` to make the remainder integrable, and adds back the finite
    parts of the subtracted monomials.  For ``alpha = -j`` this is the
    pseudofunction pairing ``<Pf(x^-j H(x)), g>``.
    """
    a = float(alpha)
    n_taylor = 0 if a > -1 else int(math.floor(-a - 1)) + 1
    coeffs = [float(g.derivative(k)) / math.factorial(k) for k in range(n_taylor)]

    def head(x):
        taylor = sum(c * x**k for k, c in enumerate(coeffs))
        return x**a * (float(g(x)) - taylor)

    tail_val = _quad(lambda x: x**a * float(g(x)), 1.0, np.inf, "tail")
    head_val = _quad(head, 0.0, 1.0, "head")
    corr = 0.0
    for k, c in enumerate(coeffs):
        if a + k != -1:
            corr += c / (a + k + 1)
    return tail_val + head_val + corr


def pseudofunction_eval(j: int, g: TestFunctional) -> float:
    """``<Pf(x^-j H(x)), g>``: the finite part of ``int_0^inf g(x)/x**j dx``."""
    if j < 1:
        raise DomainError("j must be a positive integer")
    return fp_integral(-j, g)


def pf_scaling_defect(j: int, sigma: float) -> float:
    """Coefficient of ``delta^(j-1)`` in the dilation defect of ``Pf(x^-j H(x))``.

    ``Pf((s x)^-j H(s x)) = s**-j Pf(x^-j H(x)) + c delta^(j-1)(x)`` with
    ``c = (-1)**(j-1) log(s) / ((j-1)! s**j)``; the sign is fixed by pairing
    both sides with a test function and comparing finite parts.
    """
    if j < 1:
        raise DomainError("j must be a positive integer")
    if sigma <= 0:
        raise DomainError("sigma must be positive")
    return (-1) ** (j - 1) * math.log(sigma) / (math.factorial(j - 1) * sigma**j)
