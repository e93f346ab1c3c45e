"""Zeta at non-positive integers from Cesaro means of sum n**alpha."""

from __future__ import annotations

from cesaro_spectral.zeta_engine import zeta_neg_int, zeta_prime_zero, zeta_via_cesaro

for alpha in range(5):
    z = zeta_via_cesaro(alpha, k=alpha + 2, X=1e5)
    print(f"zeta({-alpha:>2}) ~ {z.value:+.10f}   exact {str(zeta_neg_int(alpha)):>7}")

# non-integer exponents go through the Riesz sum minus the finite part
z = zeta_via_cesaro(0.5, k=3, X=1e5)
print(f"zeta(-1/2) ~ {z.value:+.8f}")

zp = zeta_prime_zero()
print(f"zeta'(0)  ~ {zp.value:+.8f}   (-log(2 pi)/2 = -0.91893853)")
