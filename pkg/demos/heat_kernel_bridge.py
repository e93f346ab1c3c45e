"""From a Cesaro counting expansion to small-t heat traces and the spectral action."""

from __future__ import annotations

import math

from cesaro_spectral import functionals
from cesaro_spectral.heat_bridge import (
    chamseddine_connes,
    heat_table,
    mulholland_error_order,
    mulholland_expansion,
    s3_partition_check,
)
from cesaro_spectral.model_spectra import sphere_spectrum, torus_spectrum

e = mulholland_expansion(4)
print("S^2 heat expansion:", " + ".join(f"({t.coeff}) t^{t.exponent}" for t in e))
for t, exact, approx, err in heat_table(sphere_spectrum(2), [0.2, 0.1, 0.05], e):
    print(f"  t={t:<5} exact={exact:.12f} expansion={approx:.12f} error={err:.2e}")
print("  error slope:", round(mulholland_error_order([0.2, 0.1, 0.05]), 3))

print("\nS^3: heat trace of 1 - Laplacian against sqrt(pi)/4 t^-3/2")
for t in (0.5, 0.25, 0.125, 0.1):
    print(f"  t={t:<6} relative difference {s3_partition_check(t).relative_difference:.2e}")

print("\nTr phi(D^2/Lambda^2) on the flat 4-torus:")
for phi, target in ((functionals.exponential(), math.pi**2), (functionals.gaussian_square(), math.pi**2 / 2)):
    r = chamseddine_connes(torus_spectrum(4), phi, 20.0)
    print(f"  {phi.name:10s} numeric/Lambda^4 = {r.numeric / 20.0**4:.9f}   target {target:.9f}")
