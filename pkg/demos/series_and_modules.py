"""Chief series, decompositions and the GF(p)-module layer underneath them.

Run: python3 demos/series_and_modules.py
"""

import numpy as np

from residua import (
    FpModule,
    chief_series,
    load_corpus,
    nonabelian_decomposition,
    p_decomposition,
    radical,
    section_to_module,
)

# ---------------------------------------------------------------------------
# Chief series are built top-down; reseeding changes the terms, never the factors.

for name in ("S4", "SL23", "C2xA5", "S3xS3"):
    G = load_corpus(name).group
    runs = {tuple(sorted(chief_series(G, seed=s).factor_orders())) for s in range(5)}
    print(f"{name:6s} chief factors {sorted(chief_series(G).factor_orders())}  distinct multisets over 5 seeds: {len(runs)}")

# ---------------------------------------------------------------------------
# Decomposing a normal subgroup over its residual.

G = load_corpus("C2xA5").group
dec = nonabelian_decomposition(G, G)
print("\nC2xA5 non-abelian part:", dec.residual.order(), "below", [M.order() for M in dec.minimals])
S4 = load_corpus("S4").group
dec = p_decomposition(S4, S4, 2)
print("S4 2-part:", dec.residual.order(), "below", [M.order() for M in dec.minimals])

# ---------------------------------------------------------------------------
# The bottom chief factor of S4 as a GF(2)-module: V4 with S4 acting through S3.

series = chief_series(S4)
H, K = series.terms[-2], series.terms[-1]
M = section_to_module(S4, H, K, 2)
print(f"\nS4 bottom factor: dimension {M.dim} over GF({M.p}), radical dimension {radical(M).dim}")

# ---------------------------------------------------------------------------
# A Jordan block is the smallest module with a nonzero radical.

J = FpModule(3, [np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]])])
print("Jordan block over GF(3): radical dimension", radical(J).dim)
