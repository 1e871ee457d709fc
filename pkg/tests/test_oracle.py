import itertools

import pytest

from conftest import closure, elements_of, group
from residua import named
from residua.errors import ResourceError, caps
from residua.formations import builtin
from residua.groups import intersection_normal, join, normal_closure, trivial_group
from residua.io import corpus_names, load_corpus
from residua.oracle import (
    all_subgroups,
    brute_kf_subnormal,
    brute_member,
    brute_residual,
    conjugacy_class_reps,
    maximal_chain,
    normal_lattice,
    subgroup_table,
)
from residua.perm import inv, mul

CORPUS = {name: load_corpus(name).group for name in corpus_names()}
U = builtin("supersoluble")
N = builtin("nilpotent")


def classes(G):
    els = elements_of(G)
    left = set(els)
    out = []
    while left:
        x = left.pop()
        cls = {mul(mul(inv(g), x), g) for g in els}
        left -= cls
        out.append(frozenset(cls))
    return out


def brute_normal_subgroups(G):
    """Unions of conjugacy classes that contain 1 and are closed under products."""
    cl = classes(G)
    e = tuple(range(G.degree))
    ident = next(c for c in cl if e in c)
    rest = [c for c in cl if c is not ident]
    out = set()
    for r in range(len(rest) + 1):
        for pick in itertools.combinations(rest, r):
            S = ident.union(*pick)
            if all(mul(a, b) in S for a in S for b in S):
                out.add(S)
    return out


def test_normal_lattice_examples(S4):
    assert normal_lattice(S4).orders() == [1, 4, 12, 24]
    assert len(normal_lattice(named.quaternion8())) == 6
    assert len(normal_lattice(named.cyclic(7))) == 2


def test_brute_residual_examples(S4, A4, V4):
    assert brute_residual(S4, U) == V4
    assert brute_residual(S4, N) == A4
    A5 = named.alternating(5)
    assert brute_residual(A5, N) == A5


def test_brute_member_examples(S4, V4):
    assert brute_member(S4, V4, U)
    assert not brute_member(S4, trivial_group(4), U)
    assert brute_member(S4, S4, N)


def test_brute_kf_subnormal_examples(S4):
    H = group(4, "(1 2)")
    assert not brute_kf_subnormal(S4, H, N, "k")
    assert brute_kf_subnormal(S4, H, U, "f")
    assert brute_kf_subnormal(S4, S4, N, "f")


def test_subgroup_cap():
    with pytest.raises(ResourceError):
        subgroup_table(named.symmetric(6))


def test_lattice_cap(S4):
    old = caps.max_lattice_order
    caps.max_lattice_order = 10
    try:
        with pytest.raises(ResourceError):
            normal_lattice(S4)
    finally:
        caps.max_lattice_order = old


@pytest.mark.parametrize("name", [n for n in sorted(CORPUS) if len(classes(CORPUS[n])) <= 12])
def test_lattice_matches_class_unions(name):
    G = CORPUS[name]
    want = brute_normal_subgroups(G)
    got = {frozenset(elements_of(M)) for M in normal_lattice(G).members}
    assert got == want


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_lattice_is_closed_and_exhaustive(name):
    G = CORPUS[name]
    lat = normal_lattice(G)
    assert lat.members[0].is_trivial() and lat.members[-1] == G
    assert not lat.partial
    assert len(conjugacy_class_reps(G)) == len(classes(G))
    for M in lat.members:
        assert M.is_normal_in(G)
    if len(lat) <= 64:
        for A, B in itertools.combinations(lat.members, 2):
            lat.index(join(A, B))
            lat.index(intersection_normal(A, B))
    # re-closing every member's elements adds nothing new
    for x in conjugacy_class_reps(G):
        lat.index(normal_closure(G, [x]))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_maximal_chain_steps_are_chief(name):
    G = CORPUS[name]
    lat = normal_lattice(G)
    chain = maximal_chain(G, lat.members[0], lat)
    for H, K in zip(chain, chain[1:]):
        assert lat.index(K) in lat.maximal_below(lat.index(H))


@pytest.mark.parametrize("name", ["S4", "D8", "S3xS3", "A5", "SL23", "Q8"])
def test_subgroup_enumeration_is_complete(name):
    G = CORPUS[name]
    subs = {frozenset(elements_of(H)) for H in all_subgroups(G)}
    els = list(elements_of(G))
    # every subgroup generated by two elements must be listed
    for a, b in itertools.combinations(els, 2):
        assert frozenset(closure([a, b], G.degree)) in subs
    assert all(len(els) % len(S) == 0 for S in subs)
