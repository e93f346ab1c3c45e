from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cesaro_spectral import functionals
from cesaro_spectral.errors import DomainError, NonConvergenceError
from cesaro_spectral.zeta_engine import (
    RadialFunction,
    SeparableFunction,
    bernoulli,
    lattice_integral,
    lattice_sampling,
    sampling_expansion,
    sampling_sum,
    zeta_neg_int,
    zeta_prime_zero,
    zeta_via_cesaro,
)


def test_zeta_neg_int_values():
    assert zeta_neg_int(0) == Fraction(-1, 2)
    assert zeta_neg_int(1) == Fraction(-1, 12)
    assert zeta_neg_int(2) == 0
    assert zeta_neg_int(3) == Fraction(1, 120)


@pytest.mark.parametrize("k", range(1, 11))
def test_even_trivial_zeros(k):
    assert zeta_neg_int(2 * k) == 0


@pytest.mark.parametrize("m", range(0, 25))
def test_zeta_neg_int_against_mpmath(m):
    assert float(zeta_neg_int(m)) == pytest.approx(oracles.zeta(-m), rel=1e-14, abs=1e-300)


def test_bernoulli_convention():
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(0) == 1


def test_zeta_neg_int_domain():
    with pytest.raises(DomainError):
        zeta_neg_int(-1)


def test_zeta_cesaro_zero():
    z = zeta_via_cesaro(0, k=2, X=1e5)
    assert z.value == pytest.approx(-0.5, abs=1e-4)
    assert z.exact == Fraction(-1, 2)
    assert len(z.estimates) == 3


def test_zeta_cesaro_minus_one():
    assert zeta_via_cesaro(1, k=3, X=1e5).value == pytest.approx(-1 / 12, abs=1e-4)


def test_zeta_cesaro_convergent_region():
    # reference: direct partial sum to 1e7 plus the integral tail estimate
    N = 10**7
    direct = math.fsum(1.0 / np.arange(1, N + 1, dtype=float) ** 2) + 1.0 / N - 0.5 / N**2
    assert zeta_via_cesaro(-2, k=1, X=1e5).value == pytest.approx(direct, abs=1e-4)
    assert direct == pytest.approx(math.pi**2 / 6, abs=1e-12)


def test_zeta_cesaro_non_integer_against_mpmath():
    for alpha in (0.5, -0.5, 1.5):
        z = zeta_via_cesaro(alpha, k=3, X=1e5)
        assert z.value == pytest.approx(oracles.zeta(-alpha), abs=1e-4)


@pytest.mark.parametrize("m", range(0, 5))
def test_cesaro_matches_closed_form_at_nonpositive_integers(m):
    k = m + 2
    z = zeta_via_cesaro(m, k=k, X=1e4)
    assert abs(z.value - float(zeta_neg_int(m))) <= max(z.spread, 1e-6)


def test_zeta_pole_and_cutoff_rejected():
    with pytest.raises(DomainError):
        zeta_via_cesaro(-1)
    with pytest.raises(DomainError):
        zeta_via_cesaro(0, X=50)


def test_zeta_tolerance_reports_nonconvergence():
    # order 0 on a growing power does not stabilise at this cutoff
    with pytest.raises(NonConvergenceError) as info:
        zeta_via_cesaro(1, k=0, X=1e3, tol=1e-8)
    assert info.value.estimates


def test_zeta_prime_zero():
    z = zeta_prime_zero(X=1e5, k=3)
    assert z.value == pytest.approx(oracles.zeta_prime_zero(), abs=1e-3)
    assert z.value == pytest.approx(float(mpmath.zeta(0, derivative=1)), abs=1e-3)
    assert abs(z.value - oracles.zeta_prime_zero()) <= max(z.spread, 1e-4)


def test_zeta_prime_zero_ladder_trend():
    lo = zeta_prime_zero(X=1e3, k=3)
    hi = zeta_prime_zero(X=1e5, k=3)
    target = oracles.zeta_prime_zero()
    assert abs(hi.value - target) < abs(lo.value - target)
    errs = [abs(e - target) for e in hi.estimates]
    assert errs[0] > errs[1] > errs[2]


# --- sampling formulas -------------------------------------------------------


def test_sampling_expansion_exponential():
    g = functionals.exponential()
    approx = sampling_expansion(g, 0.1, 3)
    # zeta(-2) = 0 but zeta(-3) = 1/120 contributes -eps^3/720
    assert approx == pytest.approx(10 - 0.5 + 0.1 / 12 - 0.1**3 / 720, abs=1e-12)
    exact = 1.0 / math.expm1(0.1)
    assert sampling_sum(g, 0.1) == pytest.approx(exact, rel=1e-14)
    assert abs(approx - exact) < 1e-5


def test_sampling_zero_function():
    g = functionals.from_callable(lambda x: 0.0 * np.asarray(x, dtype=float), derivatives=lambda m: 0,
                                  fp_moment=lambda a: 0.0)
    assert sampling_expansion(g, 0.3, 4) == 0.0


def test_sampling_gaussian():
    g = functionals.gaussian_square()
    exact = float((mpmath.jtheta(3, 0, mpmath.exp(-0.05**2)) - 1) / 2)
    assert sampling_sum(g, 0.05) == pytest.approx(exact, rel=1e-14)
    assert abs(sampling_sum(g, 0.05) - sampling_expansion(g, 0.05, 5)) < 1e-10


@pytest.mark.parametrize("order", [1, 3, 5])
def test_sampling_error_ratio_even_orders_skip(order):
    # after an odd order the next term has zeta(-(order+1)) = 0, so the
    # remainder starts at eps^(order+2)
    g = functionals.exponential()

    def err(eps):
        return abs(1.0 / math.expm1(eps) - sampling_expansion(g, eps, order))

    ratio = err(0.2) / err(0.1)
    assert 2 ** (order + 1.5) <= ratio <= 2 ** (order + 2.5)


@pytest.mark.parametrize("order", [0, 2, 4])
def test_sampling_error_ratio(order):
    # even order: the first omitted term eps^(order+1) is nonzero
    g = functionals.exponential()

    def err(eps):
        return abs(1.0 / math.expm1(eps) - sampling_expansion(g, eps, order))

    ratio = err(0.2) / err(0.1)
    assert 2 ** (order + 0.5) <= ratio <= 2 ** (order + 1.5)


def test_lattice_gaussian_n4():
    eps = 0.05
    g = RadialFunction(lambda u: np.exp(-u))
    val = lattice_sampling(g, eps, 4)
    theta = float(mpmath.jtheta(3, 0, mpmath.exp(-(eps**2))) ** 4)
    assert val == pytest.approx(theta, rel=1e-12)
    assert val == pytest.approx(math.pi**2 / eps**4, rel=1e-10)
    assert lattice_integral(g, eps, 4) == pytest.approx(math.pi**2 / eps**4, rel=1e-11)


def test_lattice_gaussian_n2_separable():
    eps = 0.1
    g = SeparableFunction(lambda x: np.exp(-np.square(x)))
    assert lattice_sampling(g, eps, 2) == pytest.approx(math.pi / eps**2, rel=1e-8)
    assert lattice_integral(g, eps, 2) == pytest.approx(math.pi / eps**2, rel=1e-11)


def test_lattice_compact_support_only_origin():
    bump = RadialFunction(lambda u: np.where(u < 0.5, np.exp(-1 / np.maximum(0.5 - u, 1e-300)), 0.0))
    assert lattice_sampling(bump, 1.0, 3) == pytest.approx(math.exp(-2), rel=1e-14)


def test_lattice_rapid_decay_of_error():
    g = RadialFunction(lambda u: np.exp(-u))
    for eps in (0.2, 0.1, 0.05):
        err = abs(lattice_sampling(g, eps, 4) - lattice_integral(g, eps, 4)) / lattice_integral(g, eps, 4)
        # the true error is about 8 exp(-pi^2/eps^2), below double roundoff here
        assert err <= 1e-4 * eps**8


def test_lattice_error_superpolynomial_at_visible_scale():
    g = RadialFunction(lambda u: np.exp(-u))
    ladder = [1.2, 1.0, 0.8]
    errs = [abs(lattice_sampling(g, e, 4) / lattice_integral(g, e, 4) - 1) for e in ladder]
    for e, err in zip(ladder, errs):
        assert err == pytest.approx(8 * math.exp(-math.pi**2 / e**2), rel=0.05)
    slope = np.polyfit(np.log(ladder), np.log(errs), 1)[0]
    assert slope > 8


def test_lattice_requires_structure():
    with pytest.raises(DomainError):
        lattice_sampling(lambda x: x, 0.1, 2)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.05, 0.5))
def test_sampling_expansion_tracks_geometric_sum(eps):
    g = functionals.exponential()
    assert abs(sampling_expansion(g, eps, 7) - 1.0 / math.expm1(eps)) < 1e-4 * eps**6 + 1e-12
