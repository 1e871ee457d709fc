import pytest

from conftest import group
from residua import named
from residua.errors import CapabilityError, InputError, chain_bound
from residua.formations import builtin, meet
from residua.groups import join, sylow, trivial_group
from residua.io import corpus_names, load_corpus
from residua.oracle import all_subgroups, brute_class_residual, is_subnormal_brute, normal_lattice
from residua.subnormal import (
    SylowSubnormalClass,
    is_f_subnormal,
    is_k_f_subnormal,
    is_subnormal,
    sylow_subnorm_class,
)

CORPUS = {name: load_corpus(name).group for name in corpus_names()}
U = builtin("supersoluble")
N = builtin("nilpotent")


def test_is_k_f_subnormal_examples(S4):
    H = group(4, "(1 2)")
    ok, trace = is_k_f_subnormal(S4, H, U)
    assert ok and trace.orders() == [24, 8, 2]
    ok, trace = is_k_f_subnormal(S4, H, N)
    assert not ok and trace.terminal == S4
    for name in ("S4", "A5", "trivial"):
        G = CORPUS[name]
        ok, trace = is_k_f_subnormal(G, G, U)
        assert ok and trace.orders() == [G.order()]


def test_is_f_subnormal_examples(S4, A4):
    assert is_f_subnormal(S4, A4, N)[0]
    assert not is_f_subnormal(S4, group(4, "(1 2)"), N)[0]
    A5 = named.alternating(5)
    assert not is_f_subnormal(A5, sylow(A5, 2), U)[0]


def test_is_subnormal_examples(S4, V4):
    assert is_subnormal(S4, V4)
    assert not is_subnormal(S4, group(4, "(1 2)"))
    assert is_subnormal(named.dihedral8(), group(4, "(1 3)"))


def test_errors(S4):
    with pytest.raises(CapabilityError):
        is_k_f_subnormal(S4, S4, builtin("quasinilpotent"))
    with pytest.raises(CapabilityError):
        is_f_subnormal(S4, S4, meet(U, N))
    with pytest.raises(InputError):
        is_k_f_subnormal(S4, group(5, "(1 5)"), U)
    with pytest.raises(InputError):
        is_subnormal(named.alternating(4), group(4, "(1 2)"))


def test_sylow_class_examples(S4):
    plain = sylow_subnorm_class(U, {2}, "f")
    assert plain.member_mod(S4, trivial_group(4))
    A5 = named.alternating(5)
    assert not plain.member_mod(A5, trivial_group(5))
    assert plain.residual(A5) == A5
    assert plain.name == "sylw(supersoluble,2)"
    assert sylow_subnorm_class(N, {3, 2}).name == "sylwk(nilpotent,2 3)"


def test_sylow_class_needs_hereditary_chief_function():
    with pytest.raises(CapabilityError):
        SylowSubnormalClass(builtin("quasinilpotent"), {2})
    with pytest.raises(CapabilityError):
        SylowSubnormalClass(sylow_subnorm_class(U, {2}), {2})
    with pytest.raises(InputError):
        SylowSubnormalClass(U, {4})
    with pytest.raises(InputError):
        SylowSubnormalClass(U, {2}, kind="x")


@pytest.mark.parametrize("name", [n for n in sorted(CORPUS) if CORPUS[n].order() <= 500])
def test_nilpotent_k_descent_is_classical_subnormality(name):
    G = CORPUS[name]
    for H in all_subgroups(G):
        ok, trace = is_k_f_subnormal(G, H, N)
        assert ok == is_subnormal(G, H)
        assert len(trace.chain) - 1 <= chain_bound(G.degree)


@pytest.mark.parametrize("name", [n for n in sorted(CORPUS) if CORPUS[n].order() <= 200])
def test_classical_subnormality_matches_chain_search(name):
    G = CORPUS[name]
    for H in all_subgroups(G):
        assert is_subnormal(G, H) == is_subnormal_brute(G, H)


@pytest.mark.parametrize("name", [n for n in sorted(CORPUS) if CORPUS[n].order() <= 200])
def test_plain_descent_implies_k_descent(name):
    G = CORPUS[name]
    for fname in ("supersoluble", "nilpotent", "na", "shu"):
        f = builtin(fname)
        for H in all_subgroups(G):
            if is_f_subnormal(G, H, f)[0]:
                assert is_k_f_subnormal(G, H, f)[0]


@pytest.mark.parametrize("name", ["S4", "SL23", "S3xS3", "S5", "C2xA5", "D8", "A4"])
def test_sylow_subnormality_persists_in_quotients(name):
    G = CORPUS[name]
    lat = normal_lattice(G)
    for f in (U, N):
        for p in (2, 3):
            P = sylow(G, p)
            if P.is_trivial() or not is_k_f_subnormal(G, P, f)[0]:
                continue
            for K in lat.members:
                assert is_k_f_subnormal(G, join(P, K), f)[0]


@pytest.mark.parametrize("name", [n for n in sorted(CORPUS) if CORPUS[n].order() <= 200])
def test_sylow_class_residual_matches_oracle(name):
    G = CORPUS[name]
    for f in (U, N, builtin("na")):
        for kind in ("k", "f"):
            for pi in ({2}, {3}, {2, 3}, {2, 3, 5}):
                cls = sylow_subnorm_class(f, pi, kind)
                R = cls.residual(G)
                assert R == brute_class_residual(G, cls)
                assert cls.member_mod(G, R)
                assert cls.last_passes <= chain_bound(G.degree)


def test_sylow_class_member_mod_over_lattice(S4):
    cls = sylow_subnorm_class(N, {2, 3}, "k")
    R = cls.residual(S4)
    for K in normal_lattice(S4).members:
        assert cls.member_mod(S4, K) == R.is_subgroup_of(K)
