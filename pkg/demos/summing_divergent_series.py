"""Cesaro and Holder means of a few divergent series."""

from __future__ import annotations

import numpy as np

from cesaro_spectral.summability import WeightedComb, cesaro_evaluation, cesaro_mean, holder_mean

# Grandi: 1 - 1 + 1 - ...; partial sums oscillate between 1 and 0
grandi = np.cumsum([(-1) ** n for n in range(10_000)])
print("Grandi   (C,1):", cesaro_mean(grandi, 1))

# 1 - 2 + 3 - 4 + ... needs two averagings
alt = np.cumsum([(-1) ** (n + 1) * n for n in range(1, 100_001)])
for k in range(4):
    print(f"1-2+3-...  (H,{k}) = {holder_mean(alt, k):+.6f}   (C,{k}) = {cesaro_mean(alt, k):+.6f}")

# sum cos(n theta) as a comb evaluated by Riesz means; the bias decays like 1/X
theta = 0.7
comb = WeightedComb.from_index(lambda n: n.astype(float), lambda n: np.cos(theta * n))
for X in (1e2, 1e3, 1e4, 1e5):
    print(f"sum cos(n*{theta}) (C,2) at X={X:8.0f}: {cesaro_evaluation(comb, None, 2, X):+.8f}   (limit -1/2)")
