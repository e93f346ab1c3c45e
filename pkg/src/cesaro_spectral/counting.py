"""Counting functions, Riesz-smoothed counting and exact generalized moments.

Normalisation of moments: the density ``N'`` of a counting function is
expanded parametrically as::

    N'(lam) ~ (smooth density) + sum_m (-1)**m mu_m delta^(m)(lam) / m!

so pairing with ``g(t lam)`` turns ``mu_m`` into ``mu_m g^(m)(0) t**m / m!``.
Integrating once, the counting function itself carries ``mu_0 H(lam)`` and
``(-1)**m mu_m delta^(m-1)(lam) / m!`` for ``m >= 1``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import integrate, optimize, special

from .errors import DomainError, UnsupportedError
from .expansions import AsymptoticExpansion, Term
from .model_spectra import Spectrum
from .series import RationalPolynomial, fraction_str
from .symbol_reversion import sphere_area
from .zeta_engine import zeta_neg_int

Number = Union[int, float, Fraction]


# --------------------------------------------------------------------------
# counting functions
# --------------------------------------------------------------------------


def counting_function(s: Spectrum, lam: float, side: str = "right") -> int:
    """``N(lam+)`` (``side="right"``) or ``N(lam-)`` (``side="left"``), with multiplicity."""
    if side not in ("right", "left"):
        raise DomainError("side must be 'right' or 'left'")
    values, mult = s.eigenpairs(lam)
    if side == "left":
        mult = mult[values < lam]
    return int(np.sum(mult, dtype=np.int64))


def riesz_counting(s: Spectrum, k: int, lam: float) -> float:
    """``N^(k)(lam) = sum_{lam_l <= lam} m_l (1 - lam_l/lam)**k``."""
    if lam <= 0:
        raise DomainError("lam must be positive")
    if k < 0:
        raise DomainError("Riesz order must be non-negative")
    if k == 0:
        return counting_function(s, lam, "right")
    values, mult = s.eigenpairs(lam)
    w = (1.0 - np.asarray(values, dtype=float) / lam) ** k * mult
    # fsum rounds once, so the result does not depend on the summation order
    return math.fsum(w.tolist())


def smoothing_factor(beta: float, k: int) -> float:
    """``rho(beta, k) = Gamma(beta+1) k! / Gamma(beta+k+1)``: order-``k`` Riesz image of ``lam**beta``."""
    if beta <= -1:
        raise DomainError("smoothing factor needs beta > -1")
    if k < 0:
        raise DomainError("Riesz order must be non-negative")
    return float(math.exp(special.gammaln(beta + 1) + math.lgamma(k + 1) - special.gammaln(beta + k + 1)))


# --------------------------------------------------------------------------
# generalized moments
# --------------------------------------------------------------------------


def generalized_moments(
    weight: RationalPolynomial,
    map: RationalPolynomial,
    j: int,
    start: int = 1,
    heaviside_at: Number = 0,
    zeta: Callable[[int], Fraction] = zeta_neg_int,
) -> Fraction:
    """``< weight(l) (sum_{l >= start} delta(l - .) - H(. - heaviside_at)), map(l)**j >``.

    With ``P = weight * map**j = sum_r c_r l**r`` the comb-minus-Heaviside
    pairing is ``sum_r c_r zeta(-r)``; starting the comb elsewhere than 1 or
    the Heaviside elsewhere than 0 adds finitely many exact corrections.
    Even negative zeta values are zero and are skipped outright.
    """
    if j < 0:
        raise DomainError("moment index must be non-negative")
    P = weight * map**j
    total = Fraction(0)
    for r, c in enumerate(P.coeffs):
        if c and (r == 0 or r % 2):
            total += c * zeta(r)
    if start <= 0:
        total += sum((P(Fraction(l)) for l in range(start, 1)), Fraction(0))
    else:
        total -= sum((P(Fraction(l)) for l in range(1, start)), Fraction(0))
    total -= P.integrate(Fraction(heaviside_at), 0)
    return total


@dataclass(frozen=True)
class CountingExpansion:
    """Cesaro expansion of a counting function.

    ``main_terms`` is the smooth part of ``N`` itself (its ``lam**0`` term is
    ``mu_0``); ``moments`` are ``mu_0, mu_1, ...`` in the density
    normalisation described in the module docstring.
    """

    main_terms: AsymptoticExpansion
    moments: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        exps = [float(t.exponent) for t in self.main_terms]
        if any(b >= a for a, b in zip(exps, exps[1:])):
            raise DomainError("main term exponents must be strictly decreasing")

    def density_terms(self) -> AsymptoticExpansion:
        """Smooth part of ``N'``: derivative of the non-constant main terms."""
        out = []
        for t in self.main_terms:
            if t.logpow:
                raise UnsupportedError("log terms in counting expansions are not differentiated")
            if t.exponent != 0:
                out.append(Term(t.coeff * t.exponent, t.exponent - 1))
        return AsymptoticExpansion(tuple(out), "lam", "cesaro")

    def parametric_coefficients(self) -> Tuple[Fraction, ...]:
        """Coefficients ``(-1)**m mu_m / m!`` of ``t**m delta^(m-1)`` in ``N(lam/t)``, ``m >= 1``."""
        return tuple((-1) ** m * mu / math.factorial(m) for m, mu in enumerate(self.moments) if m >= 1)

    def __call__(self, lam: float) -> float:
        return self.main_terms(lam)

    def to_record(self) -> dict:
        rec = self.main_terms.to_record()
        rec["moments"] = [fraction_str(Fraction(m)) if isinstance(m, (int, Fraction)) else float(m)
                          for m in self.moments]
        return rec


_SPHERE_DATA = {
    # weight, map, first comb index, Heaviside origin; the Laplacian on S^2 and 1 - Laplacian on S^3
    2: (RationalPolynomial([1, 2]), RationalPolynomial([0, 1, 1]), 0, 0),
    3: (RationalPolynomial([1, 2, 1]), RationalPolynomial([1, 2, 1]), 0, -1),
}


def sphere_moments(n: int, count: int = 4) -> Tuple[Fraction, ...]:
    """``mu_0 .. mu_{count-1}`` for the sphere model (``n=2``: Laplacian, ``n=3``: ``1 - Laplacian``)."""
    if n not in _SPHERE_DATA:
        raise UnsupportedError("exact moments are implemented for S^2 and S^3 only")
    w, m, start, h = _SPHERE_DATA[n]
    return tuple(generalized_moments(w, m, j, start=start, heaviside_at=h) for j in range(count))


def counting_expansion_sphere(n: int, n_moments: int = 4) -> CountingExpansion:
    """Counting expansion on ``S^2`` (Laplacian) or ``S^3`` (``1 - Laplacian``).

    The smooth part is ``int_h^{l(lam)} weight``: ``l**2 + l = lam`` on
    ``S^2`` and ``(l + 1)**3 / 3 = lam**(3/2) / 3`` on ``S^3``.  Trailing
    zero moments are dropped, so ``S^3`` has none.
    """
    mu = list(sphere_moments(n, n_moments))
    while mu and mu[-1] == 0:
        mu.pop()
    if n == 2:
        main = [Term(Fraction(1), Fraction(1))]
    else:
        main = [Term(Fraction(1, 3), Fraction(3, 2))]
    if mu:
        main.append(Term(mu[0], Fraction(0)))
    return CountingExpansion(AsymptoticExpansion(tuple(main), "lam", "cesaro"), tuple(mu))


def weyl_leading(n: int, vol: float) -> float:
    """Coefficient of ``lam**(n/2)`` in ``N(lam)``: ``Omega_n vol / (n (2 pi)**n)``."""
    if n < 1:
        raise DomainError("dimension must be >= 1")
    if not vol > 0:
        raise DomainError("volume must be positive")
    return sphere_area(n) * vol / (n * (2 * math.pi) ** n)


def spectrum_expansion(s: Spectrum, n_moments: int = 4) -> CountingExpansion:
    """Known counting expansion for a model spectrum (Weyl term only for tori)."""
    if s.name.startswith("torus"):
        n = s.dimension
        return CountingExpansion(
            AsymptoticExpansion((Term(weyl_leading(n, s.volume), Fraction(n, 2)),), "lam", "cesaro")
        )
    if s.name == "sphere2":
        return counting_expansion_sphere(2, n_moments)
    if s.name == "sphere3+1":
        return counting_expansion_sphere(3, n_moments)
    raise UnsupportedError(f"no counting expansion for {s.name}")


def fit_leading_coefficient(s: Spectrum, power: float, lam_lo: float, lam_hi: float, points: int = 200) -> float:
    """Least-squares ``c`` in ``N(lam) ~ c lam**power`` over a geometric grid."""
    lam = np.geomspace(lam_lo, lam_hi, points)
    N = np.array([counting_function(s, float(x)) for x in lam], dtype=float)
    x = lam**power
    return float(np.dot(x, N) / np.dot(x, x))


# --------------------------------------------------------------------------
# phase space
# --------------------------------------------------------------------------


def _phase_prefactor(n: int) -> float:
    return sphere_area(n) / (n * (2 * math.pi) ** n)


def _phase_1d(V: Callable, lam: float, bounds, kinetic: float, tol: float) -> float:
    a, b = bounds
    xs = np.linspace(a, b, 2049)
    vals = np.asarray([V(x) for x in xs], dtype=float)
    inside = vals < lam
    if not inside.any():
        return 0.0
    if inside[0] or inside[-1]:
        warnings.warn("classically allowed region touches the integration bounds", RuntimeWarning, stacklevel=3)
    f = lambda x: max(lam - V(x), 0.0) / kinetic  # noqa: E731
    total = 0.0
    # integrate each allowed interval between refined turning points
    idx = np.flatnonzero(np.diff(inside.astype(int)))
    edges = [a] + [optimize.brentq(lambda x: V(x) - lam, xs[i], xs[i + 1], xtol=1e-15) for i in idx] + [b]
    for lo, hi in zip(edges, edges[1:]):
        mid = 0.5 * (lo + hi)
        if V(mid) < lam:
            v, _ = integrate.quad(lambda x: f(x) ** 0.5, lo, hi, epsabs=tol, epsrel=tol, limit=400)
            total += v
    return _phase_prefactor(1) * total


def _midpoint(V: Callable, lam: float, n: int, bounds, kinetic: float, cells: int) -> Tuple[float, bool]:
    axes = []
    for a, b in bounds:
        h = (b - a) / cells
        axes.append(a + h * (np.arange(cells) + 0.5))
    grid = np.meshgrid(*axes, indexing="ij")
    pts = np.stack(grid, axis=-1)
    vals = np.asarray(V(pts), dtype=float)
    integrand = np.maximum(lam - vals, 0.0) / kinetic
    integrand = integrand ** (n / 2)
    touch = False
    for ax in range(n):
        if np.take(integrand, 0, axis=ax).any() or np.take(integrand, -1, axis=ax).any():
            touch = True
    cell = math.prod((b - a) / cells for a, b in bounds)
    return float(integrand.sum() * cell), touch


def phase_space_counting(
    V,
    lam: float,
    n: int = 1,
    bounds: Optional[Sequence[Tuple[float, float]]] = None,
    kinetic: float = 1.0,
    tol: float = 1e-10,
    cells: int = 256,
) -> float:
    """``Omega_n / (n (2 pi)**n) int ((lam - V(x)) / kinetic)_+**(n/2) dx``.

    ``kinetic`` is the coefficient of ``-Laplacian`` (``1/2`` for
    ``(-d^2 + x^2)/2``).  ``V`` is either a callable or an array of samples
    at the cell midpoints of a uniform grid over ``bounds``.  In one
    dimension a callable is integrated adaptively between its turning
    points; otherwise the midpoint rule is used, Richardson-extrapolated
    from ``cells`` and ``2 cells`` when ``V`` is callable.  A warning is
    issued when the allowed region reaches the edge of ``bounds``.
    """
    if n < 1:
        raise DomainError("dimension must be >= 1")
    if kinetic <= 0:
        raise DomainError("kinetic coefficient must be positive")
    if bounds is None:
        raise DomainError("integration bounds are required")
    if n == 1 and len(bounds) == 2 and not isinstance(bounds[0], (tuple, list)):
        bounds = [tuple(bounds)]
    if len(bounds) != n:
        raise DomainError("need one (lo, hi) pair per dimension")
    pref = _phase_prefactor(n)
    if callable(V):
        if n == 1:
            return _phase_1d(V, lam, bounds[0], kinetic, tol)
        coarse, touch = _midpoint(V, lam, n, bounds, kinetic, cells)
        fine, touch2 = _midpoint(V, lam, n, bounds, kinetic, 2 * cells)
        if touch or touch2:
            warnings.warn("classically allowed region touches the grid boundary", RuntimeWarning, stacklevel=2)
        return pref * (4 * fine - coarse) / 3
    samples = np.asarray(V, dtype=float)
    if samples.ndim != n:
        raise DomainError("sampled potential must have one axis per dimension")
    integrand = (np.maximum(lam - samples, 0.0) / kinetic) ** (n / 2)
    for ax in range(n):
        if np.take(integrand, 0, axis=ax).any() or np.take(integrand, -1, axis=ax).any():
            warnings.warn("classically allowed region touches the grid boundary", RuntimeWarning, stacklevel=2)
            break
    cell = math.prod((b - a) / m for (a, b), m in zip(bounds, samples.shape))
    return pref * float(integrand.sum()) * cell


__all__ = [
    "CountingExpansion",
    "counting_expansion_sphere",
    "counting_function",
    "fit_leading_coefficient",
    "generalized_moments",
    "phase_space_counting",
    "riesz_counting",
    "smoothing_factor",
    "sphere_moments",
    "spectrum_expansion",
    "weyl_leading",
]
