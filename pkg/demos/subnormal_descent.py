"""Deciding F-subnormality by descent, and the chains it produces.

Run: python3 demos/subnormal_descent.py
"""

from residua import builtin, is_f_subnormal, is_k_f_subnormal, is_subnormal, load_corpus, sylow
from residua.errors import chain_bound
from residua.oracle import all_subgroups, brute_kf_subnormal
from residua.perm import Permutation
from residua.groups import PermGroup

S4 = load_corpus("S4").group
H = PermGroup(4, [Permutation.from_cycles("(1 2)", 4)])

# ---------------------------------------------------------------------------
# <(1 2)> in S4: supersoluble-subnormal, but not nilpotent-subnormal.

for name in ("supersoluble", "nilpotent"):
    ok, trace = is_k_f_subnormal(S4, H, builtin(name))
    print(f"{name:13s} verdict={ok!s:5s} chain orders={trace.orders()}")

# ---------------------------------------------------------------------------
# The descent never takes more than 2n-3 steps in S_n.

print()
for name in ("S4", "S3xS3", "S5"):
    G = load_corpus(name).group
    longest = 0
    for K in all_subgroups(G):
        ok, trace = is_k_f_subnormal(G, K, builtin("supersoluble"))
        longest = max(longest, len(trace.chain) - 1)
    print(f"{name:6s} longest supersoluble descent {longest} steps, bound {chain_bound(G.degree)}")

# ---------------------------------------------------------------------------
# Counting subgroups by kind, fast verdicts checked against the oracle.

for name in ("S4", "SL23", "S3xS3"):
    G = load_corpus(name).group
    subs = all_subgroups(G)
    f = builtin("supersoluble")
    k = sum(is_k_f_subnormal(G, K, f)[0] for K in subs)
    plain = sum(is_f_subnormal(G, K, f)[0] for K in subs)
    normal_steps = sum(is_subnormal(G, K) for K in subs)
    assert k == sum(brute_kf_subnormal(G, K, f, "k") for K in subs)
    print(f"{name:6s} subgroups={len(subs):3d} K-U-subnormal={k:3d} U-subnormal={plain:3d} subnormal={normal_steps:3d}")

# ---------------------------------------------------------------------------
# A Sylow 2-subgroup of A5 is not U-subnormal: A5 has no proper U-step down.

A5 = load_corpus("A5").group
print("\nA5 Sylow-2 U-subnormal:", is_f_subnormal(A5, sylow(A5, 2), builtin("supersoluble"))[0])
