"""Test functions with the side data the Cesaro machinery needs.

A :class:`TestFunctional` bundles a function ``g`` on ``[0, inf)`` with
(optionally) its derivatives at the origin and a finite-part moment
evaluator ``alpha -> Fp int_0^inf x**alpha g(x) dx``.  Operations that need
one of these raise :class:`~cesaro_spectral.errors.CapabilityError` when it
is missing instead of guessing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

import numpy as np
from scipy import special

from .errors import CapabilityError

Number = Union[int, float, Fraction]


def _is_negative_integer(alpha: Number) -> bool:
    return float(alpha) < 0 and float(alpha) == math.floor(float(alpha))


@dataclass(frozen=True)
class TestFunctional:
    """A rapidly decaying function ``g`` plus what is known about it at 0.

    ``derivatives`` may be a callable ``m -> g^(m)(0)`` or a finite sequence.
    ``fp_moment`` evaluates ``Fp int_0^inf x**alpha g(x) dx``; when absent the
    numerical finite part from :mod:`cesaro_spectral.summability` is used,
    which in turn needs enough derivatives.
    """

    __test__ = False  # keep pytest from collecting this class

    func: Callable
    derivatives: Optional[Union[Callable[[int], Number], Sequence[Number]]] = None
    fp_moment: Optional[Callable[[Number], Number]] = None
    smooth: bool = True
    name: str = "g"
    # only used by numeric finite parts; larger support needs a longer tail
    decay_scale: float = field(default=1.0, compare=False)

    def __call__(self, x):
        return self.func(x)

    def derivative(self, m: int) -> Number:
        if m < 0:
            raise ValueError("derivative order must be non-negative")
        if m == 0 and self.derivatives is None:
            return self.func(0.0)
        if self.derivatives is None:
            raise CapabilityError(f"{self.name}: derivatives at 0 are not available")
        if callable(self.derivatives):
            return self.derivatives(m)
        if m >= len(self.derivatives):
            raise CapabilityError(
                f"{self.name}: only {len(self.derivatives)} derivatives at 0 supplied, need order {m}"
            )
        return self.derivatives[m]

    def fp_integral(self, alpha: Number = 0) -> Number:
        """``Fp int_0^inf x**alpha g(x) dx``."""
        if not self.smooth:
            raise CapabilityError(f"{self.name} is not smooth; finite parts are undefined")
        if self.fp_moment is not None:
            return self.fp_moment(alpha)
        from .summability import fp_integral

        return fp_integral(alpha, self)


def _exp_fp_moment(alpha: Number) -> Number:
    if _is_negative_integer(alpha):
        from .summability import pseudofunction_eval

        return pseudofunction_eval(-int(alpha), exponential())
    if isinstance(alpha, (int, Fraction)) and Fraction(alpha).denominator == 1:
        return Fraction(math.factorial(int(alpha)))
    return float(special.gamma(float(alpha) + 1.0))


def exponential() -> TestFunctional:
    """``g(x) = exp(-x)``: the heat-kernel test function."""
    return TestFunctional(
        func=lambda x: np.exp(-np.asarray(x, dtype=float)) if np.ndim(x) else math.exp(-x),
        derivatives=lambda m: (-1) ** m,
        fp_moment=_exp_fp_moment,
        name="exp(-x)",
    )


def _gauss_derivative(m: int) -> int:
    if m % 2:
        return 0
    h = m // 2
    return (-1) ** h * math.factorial(m) // math.factorial(h)


def _gauss_fp_moment(alpha: Number) -> Number:
    a = float(alpha)
    if a < 0 and (a + 1) / 2 == math.floor((a + 1) / 2):
        from .summability import fp_integral

        return fp_integral(alpha, gaussian_square())
    return 0.5 * float(special.gamma((a + 1.0) / 2.0))


def gaussian_square() -> TestFunctional:
    """``g(x) = exp(-x**2)``."""
    return TestFunctional(
        func=lambda x: np.exp(-np.square(np.asarray(x, dtype=float))) if np.ndim(x) else math.exp(-x * x),
        derivatives=_gauss_derivative,
        fp_moment=_gauss_fp_moment,
        name="exp(-x^2)",
    )


def from_callable(
    func: Callable,
    derivatives=None,
    fp_moment=None,
    name: str = "g",
    decay_scale: float = 1.0,
) -> TestFunctional:
    return TestFunctional(
        func=func,
        derivatives=derivatives,
        fp_moment=fp_moment,
        name=name,
        decay_scale=decay_scale,
    )


def characteristic(cut: float = 1.0) -> TestFunctional:
    """Indicator of ``[0, cut]``.  Marked non-smooth: heat-type bridges reject it."""
    return TestFunctional(
        func=lambda x: np.where(np.asarray(x, dtype=float) <= cut, 1.0, 0.0),
        smooth=False,
        name=f"chi[0,{cut}]",
    )
