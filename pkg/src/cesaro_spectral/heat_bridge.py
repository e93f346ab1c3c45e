"""From Cesaro expansions to small-t expansions, and numeric heat traces.

A density ``f(lam)`` with Cesaro expansion ``sum c lam**alpha`` plus moment
terms pairs with ``g(t lam)`` term by term:

* ``c lam**alpha`` (``alpha`` not a negative integer) gives
  ``c t**(-alpha-1) Fp int lam**alpha g``;
* ``b lam**-j`` gives ``b t**(j-1) (Fp int g/lam**j - g^(j-1)(0) log t / (j-1)!)``;
* ``mu_m`` gives ``mu_m g^(m)(0) t**m / m!``.

Only the second channel produces logarithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

import mpmath
import numpy as np

from .counting import CountingExpansion, counting_expansion_sphere
from .errors import CapabilityError, DomainError, EnumerationRangeError, NonConvergenceError
from .expansions import AsymptoticExpansion, Term
from .functionals import TestFunctional
from .model_spectra import Spectrum, sphere_spectrum
from .symbol_reversion import DensityExpansion

Number = Union[int, float, Fraction]


def _is_negative_integer(a) -> bool:
    return float(a) < 0 and float(a) == math.floor(float(a))


def _density_terms(exp) -> AsymptoticExpansion:
    if isinstance(exp, CountingExpansion):
        return exp.density_terms()
    if isinstance(exp, DensityExpansion):
        return exp.terms()
    if isinstance(exp, AsymptoticExpansion):
        if exp.variable != "lam":
            raise DomainError("expected an expansion in lam")
        return exp
    raise DomainError(f"cannot bridge an object of type {type(exp).__name__}")


def cesaro_to_small_t(
    exp,
    g: TestFunctional,
    t_orders: int,
    moments: Optional[Sequence[Number]] = None,
) -> AsymptoticExpansion:
    """Small-``t`` expansion of ``<f(lam), g(t lam)>``, keeping ``t`` exponents ``<= t_orders``.

    ``moments`` defaults to those carried by a :class:`CountingExpansion`.
    """
    if not g.smooth:
        raise CapabilityError(
            f"{g.name} is not smooth; use the Riesz counting machinery for sharp cutoffs"
        )
    if moments is None:
        moments = exp.moments if isinstance(exp, CountingExpansion) else ()
    out = []
    for term in _density_terms(exp):
        if term.logpow:
            raise CapabilityError("log terms in a density are not bridged")
        a = term.exponent
        if _is_negative_integer(a):
            j = -int(a)
            if j - 1 > t_orders:
                continue
            e = Fraction(j - 1)
            out.append(Term(term.coeff * g.fp_integral(a), e))
            dj = g.derivative(j - 1)
            out.append(Term(-term.coeff * dj / math.factorial(j - 1), e, 1))
        else:
            e = -a - 1
            if float(e) > t_orders:
                continue
            out.append(Term(term.coeff * g.fp_integral(a), e))
    for m, mu in enumerate(moments):
        if m > t_orders:
            break
        if mu:
            out.append(Term(mu * g.derivative(m) / math.factorial(m), Fraction(m)))
    return AsymptoticExpansion(tuple(out), "t", "ordinary")


# --------------------------------------------------------------------------
# numeric spectral sums
# --------------------------------------------------------------------------


def _tail_bound(s: Spectrum, func: Callable, cut: float) -> float:
    # N <= B, phi >= 0 decreasing beyond cut:
    # sum_{lam > cut} m phi(lam) <= B(cut) phi(cut) + int_cut^inf B'(lam) phi(lam) dlam
    b = s.bound
    head = float(b(cut)) * float(func(cut))
    integral = mpmath.quad(lambda x: float(b.derivative(float(x))) * float(func(float(x))), [cut, mpmath.inf])
    return head + float(integral)


def spectral_sum(
    s: Spectrum,
    func: Callable,
    tol: float = 1e-12,
    start: float = 64.0,
    dps: Optional[int] = None,
) -> float:
    """``sum_l m_l func(lam_l)`` for non-negative ``func`` decreasing at large ``lam``.

    The cutoff is doubled until a rigorous tail bound from the spectrum's
    counting bound drops below ``tol`` times the partial sum.  With ``dps``
    the sum is accumulated in mpmath at that precision and returned as an
    ``mpf``.
    """
    if s.bound is None:
        raise CapabilityError(f"{s.name}: no counting bound, tail cannot be controlled")
    cut = start
    while True:
        if cut > s.horizon:
            raise EnumerationRangeError(f"{s.name}: tail bound not reached below the horizon {s.horizon:g}")
        lam, mult = s.eigenpairs(cut)
        if dps is None:
            vals = np.asarray(func(np.asarray(lam, dtype=float)), dtype=float) * mult
            total = math.fsum(vals.tolist())
        else:
            with mpmath.workdps(dps):
                total = mpmath.fsum(int(m) * func(mpmath.mpf(int(v)) if float(v).is_integer() else mpmath.mpf(float(v)))
                                    for v, m in zip(lam, mult))
        tail = _tail_bound(s, func, cut)
        if tail <= tol * abs(float(total)):
            return total
        cut *= 2
        if cut > 1e12:
            raise NonConvergenceError(f"{s.name}: tail bound stays above tolerance", achieved=tail)


def heat_trace(s: Spectrum, t: float, tol: float = 1e-12, dps: Optional[int] = None):
    """``K(t) = sum_l m_l exp(-t lam_l)``."""
    if t <= 0:
        raise DomainError("t must be positive")
    if dps is None:
        return spectral_sum(s, lambda x: np.exp(-t * np.asarray(x, dtype=float)), tol, start=max(64.0, 8.0 / t))
    tt = mpmath.mpf(t)
    return spectral_sum(
        s,
        lambda x: mpmath.exp(-tt * x) if isinstance(x, mpmath.mpf) else math.exp(-t * float(x)),
        tol,
        start=max(64.0, 8.0 / t),
        dps=dps,
    )


@dataclass(frozen=True)
class PartitionCheck:
    t: float
    exact: float
    asymptote: float
    relative_difference: float


def s3_partition_check(t: float, dps: int = 80) -> PartitionCheck:
    """Heat trace of ``1 - Laplacian`` on ``S^3`` against ``sqrt(pi)/4 t**-3/2``.

    The two differ by ``O(exp(-pi**2/t))``, far below double precision for
    small ``t``, so both are formed in mpmath and only then rounded.
    """
    if not 0 < t <= 1:
        raise DomainError("t must lie in (0, 1]")
    s = sphere_spectrum(3, shift=1)
    with mpmath.workdps(dps):
        exact = heat_trace(s, t, tol=mpmath.mpf(10) ** (-dps + 10), dps=dps)
        asym = mpmath.sqrt(mpmath.pi) / 4 * mpmath.mpf(t) ** mpmath.mpf(-1.5)
        rel = abs(exact - asym) / asym
        return PartitionCheck(t, float(exact), float(asym), float(rel))


def mulholland_expansion(n_terms: int = 4) -> AsymptoticExpansion:
    """Small-``t`` heat expansion on ``S^2`` from its exact moments."""
    from .functionals import exponential

    exp = counting_expansion_sphere(2, n_moments=max(n_terms, 1))
    return cesaro_to_small_t(exp, exponential(), t_orders=n_terms).truncate(n_terms)


def mulholland_error_order(t_ladder: Sequence[float], n_terms: int = 4) -> float:
    """Least-squares slope of ``log|K(t) - expansion|`` against ``log t`` on ``S^2``."""
    ts = list(t_ladder)
    if len(ts) < 3:
        raise DomainError("need at least three t values")
    if any(not 0 < t <= 0.5 for t in ts):
        raise DomainError("t values must lie in (0, 0.5]")
    approx = mulholland_expansion(n_terms)
    s = sphere_spectrum(2)
    err = [abs(float(heat_trace(s, t, tol=1e-15)) - approx(t)) for t in ts]
    slope, _ = np.polyfit(np.log(ts), np.log(err), 1)
    return float(slope)


def heat_table(s: Spectrum, ts: Sequence[float], approx: AsymptoticExpansion, tol: float = 1e-14):
    """Rows ``(t, exact, expansion, error)``."""
    rows = []
    for t in ts:
        exact = float(heat_trace(s, t, tol))
        a = approx(t)
        rows.append((t, exact, a, exact - a))
    return rows


@dataclass(frozen=True)
class CCResult:
    numeric: float
    predicted: float
    expansion: AsymptoticExpansion


def chamseddine_connes(s: Spectrum, phi: TestFunctional, Lambda: float, n_terms: int = 3,
                       tol: float = 1e-14) -> CCResult:
    """``Tr phi(D^2 / Lambda^2)`` numerically, and its prediction from the Weyl term.

    The prediction bridges the flat density ``vol lam / (16 pi^2)`` with
    ``t = Lambda**-2``; on flat tori every correction is ``O(Lambda**-inf)``.
    """
    if s.dimension != 4:
        raise DomainError("the Chamseddine-Connes expansion is for four-dimensional spectra")
    if Lambda <= 0:
        raise DomainError("Lambda must be positive")
    if s.bound is None:
        raise CapabilityError(f"{s.name}: no counting bound")
    L2 = float(Lambda) ** 2
    probe = phi(np.array([0.0, 1.0, 2.0]))
    if not np.any(probe):
        numeric = 0.0
    else:
        numeric = float(spectral_sum(s, lambda x: np.asarray(phi(np.asarray(x, dtype=float) / L2), dtype=float),
                                     tol, start=max(64.0, 8.0 * L2)))
    density = AsymptoticExpansion((Term(s.volume / (16 * math.pi**2), Fraction(1)),), "lam", "cesaro")
    exp = cesaro_to_small_t(density, phi, t_orders=n_terms)
    return CCResult(numeric, exp(1.0 / L2), exp)


__all__ = [
    "CCResult",
    "PartitionCheck",
    "cesaro_to_small_t",
    "chamseddine_connes",
    "heat_table",
    "heat_trace",
    "mulholland_error_order",
    "mulholland_expansion",
    "s3_partition_check",
    "spectral_sum",
]
