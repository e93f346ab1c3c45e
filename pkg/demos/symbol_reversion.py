"""Lagrange-Burmann coefficients for a first-order symbol and the density they give."""

from __future__ import annotations

from cesaro_spectral.symbol_reversion import a2_laplacian, b2k_relation, density_expansion, lagrange_burmann_cj, parse_symbol

p = parse_symbol("1,1/2,-1/3")  # r + 1/2 - 1/(3r)
for n in (1, 2, 3, 4):
    cs = [lagrange_burmann_cj(p, n, j) for j in range(n + 2)]
    print(f"n={n}: c_j =", ", ".join(str(c) for c in cs), f"  (c_{n} vanishes)")

d = density_expansion(p, n=3, d=1, j_max=3)
print("\ndensity in dimension 3:", d.to_record())

for R, C in ((6.0, 1.0), (6.0, 0.0)):
    a2 = a2_laplacian(3, R, C)
    print(f"a2(n=3, R={R}, C={C}) = {a2:+.4f}   b2 = {b2k_relation(a2, 3, 1):+.4f}")
