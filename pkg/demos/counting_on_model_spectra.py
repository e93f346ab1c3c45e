"""Counting functions, Riesz smoothing and exact moments on tori and spheres."""

from __future__ import annotations

from cesaro_spectral.counting import (
    counting_expansion_sphere,
    counting_function,
    riesz_counting,
    smoothing_factor,
    weyl_leading,
)
from cesaro_spectral.model_spectra import sphere_spectrum, torus_spectrum

t2 = torus_spectrum(2)
print("T^2 lattice count N(lam) against pi*lam:")
for lam in (10, 100, 1000, 10000):
    print(f"  {lam:>6}  {counting_function(t2, lam):>8}  {weyl_leading(2, 39.47841760435743) * lam:10.1f}")

s2 = sphere_spectrum(2)
exp = counting_expansion_sphere(2)
print("\nS^2 expansion record:", exp.to_record())
print("S^2 third Riesz mean minus lam/4 tends to 1/3:")
for lam in (1e2, 1e3, 1e4, 1e5):
    print(f"  {lam:8.0f}  {riesz_counting(s2, 3, lam) - lam / 4:.6f}")

s3 = sphere_spectrum(3, shift=1)
rho = smoothing_factor(1.5, 3)
print("\nS^3 (shifted): third Riesz mean minus rho*lam^1.5/3 has no constant term:")
for lam in (1e2, 1e3, 1e4):
    print(f"  {lam:8.0f}  {riesz_counting(s3, 3, lam) - rho * lam**1.5 / 3:+.2e}")
