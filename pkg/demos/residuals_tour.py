"""Residuals of small permutation groups, side by side with the brute-force oracle.

Run: python3 demos/residuals_tour.py
"""

from residua import load_corpus, parse_formation
from residua.oracle import brute_residual

# ---------------------------------------------------------------------------
# A formation residual is the smallest normal subgroup with quotient in the
# class. For S4 the supersoluble residual is the Klein four-group.

S4 = load_corpus("S4").group
U = parse_formation("supersoluble")
R = U.residual(S4)
print("S4 supersoluble residual:", R.order(), [str(g) for g in R.generators])

# ---------------------------------------------------------------------------
# The same question asked of the oracle, which sweeps the whole normal lattice.

print("oracle agrees:", brute_residual(S4, U) == R)

# ---------------------------------------------------------------------------
# Meets of formations: the residual of the meet is the join of the residuals.

for expr in ("nilpotent", "supersoluble", "meet(nilpotent,supersoluble)", "join(nilpotent,pgroups(3))"):
    print(f"{expr:32s}", parse_formation(expr).residual(S4).order())

# ---------------------------------------------------------------------------
# Across the corpus.

print()
print(f"{'group':8s} {'order':>6s} {'U':>6s} {'N':>6s} {'N*':>6s}")
for name in ("S3", "S4", "SL23", "A5", "S5", "C2xA5", "S3xS3"):
    G = load_corpus(name).group
    cols = [parse_formation(f).residual(G).order() for f in ("supersoluble", "nilpotent", "quasinilpotent")]
    print(f"{name:8s} {G.order():6d} " + " ".join(f"{c:6d}" for c in cols))
