"""Cesaro summability and its use in spectral asymptotics."""

from __future__ import annotations

from .counting import (
    CountingExpansion,
    counting_expansion_sphere,
    counting_function,
    generalized_moments,
    phase_space_counting,
    riesz_counting,
    smoothing_factor,
    weyl_leading,
)
from .errors import (
    CapabilityError,
    CesaroError,
    DomainError,
    EllipticityError,
    EnumerationRangeError,
    NonConvergenceError,
    OrderError,
    PoleError,
    UnsupportedError,
)
from .expansions import AsymptoticExpansion, SmallTExpansion, Term, expansion
from .functionals import TestFunctional, characteristic, exponential, from_callable, gaussian_square
from .heat_bridge import (
    cesaro_to_small_t,
    chamseddine_connes,
    heat_trace,
    mulholland_error_order,
    s3_partition_check,
)
from .model_spectra import (
    Spectrum,
    model_spectrum,
    oscillator_spectrum,
    read_spectrum,
    sphere_spectrum,
    tabulated_spectrum,
    torus_spectrum,
    write_spectrum,
)
from .series import LaurentSeries, RationalPolynomial
from .summability import (
    WeightedComb,
    cesaro_evaluation,
    cesaro_limit,
    cesaro_mean,
    fp_integral,
    hadamard_fp_power,
    holder_mean,
    pf_scaling_defect,
    pseudofunction_eval,
    riesz_mean,
    riesz_primitive,
    riesz_sum,
)
from .symbol_reversion import (
    DensityExpansion,
    a2_laplacian,
    b2k_relation,
    density_expansion,
    lagrange_burmann_cj,
    q_coefficients,
    sphere_area,
    symbol,
)
from .zeta_engine import bernoulli, zeta_neg_int, zeta_prime_zero, zeta_via_cesaro

__version__ = "0.1.0"
