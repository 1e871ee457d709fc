import itertools
import random

import pytest

from conftest import group
from residua import named
from residua.errors import CapabilityError, InputError, InternalError
from residua.formations import (
    BUILTIN_NAMES,
    ChiefFunction,
    builtin,
    canonical_local_residual,
    complement,
    evaluate,
    is_f_central,
    join_formations,
    local_formation,
    meet,
    member,
    member_mod,
    quasi,
    quasinilpotent_baer,
    residual,
    residual_part,
)
from residua.groups import NormalSection, intersection_normal, join, o_p, primes_of, trivial_group
from residua.io import corpus_names, load_corpus
from residua.oracle import brute_residual, maximal_chain, normal_lattice
from residua.series import Decomposition

CORPUS = {name: load_corpus(name).group for name in corpus_names()}
LOCAL_NAMES = ["supersoluble", "wsupersoluble", "na", "smsupersoluble", "ssupersoluble", "shu", "nilpotent"]
U = builtin("supersoluble")
N = builtin("nilpotent")
ONE = ChiefFunction("everything", lambda sec: True)


def chief_sections(G):
    """Every chief factor of G that appears in some maximal chain of the normal lattice."""
    lat = normal_lattice(G)
    out = []
    for i, top in enumerate(lat.members):
        for j in lat.maximal_below(i):
            out.append(NormalSection(G, top, lat.members[j]))
    return out


# -- examples -----------------------------------------------------------------------

def test_evaluate_examples(S4, A4, V4):
    one = trivial_group(4)
    assert not evaluate(N, NormalSection(S4, V4, one))
    assert evaluate(N, NormalSection(S4, S4, A4))
    assert evaluate(U, NormalSection(S4, A4, V4))


def test_residual_part_examples(S4, V4):
    one = trivial_group(4)
    dec = Decomposition(one, (V4,))
    assert residual_part(S4, V4, dec, U) == V4
    assert residual_part(S4, V4, dec, ONE).is_trivial()
    S5, A5 = named.symmetric(5), named.alternating(5)
    assert residual_part(S5, A5, Decomposition(trivial_group(5), (A5,)), N) == A5


def test_residual_examples(S4, A4, V4):
    assert residual(S4, U) == V4
    assert residual(S4, N) == A4
    R = residual(named.sl23(), U)
    assert R.order() == 8 and R == named.quaternion8()
    assert residual(trivial_group(3), U).is_trivial()


def test_member_mod_examples(S4, A4, V4):
    assert member_mod(S4, A4, N)
    assert not member_mod(S4, V4, N)
    assert member_mod(S4, S4, U)
    with pytest.raises(InputError):
        member_mod(S4, group(4, "(1 2)"), N)


def test_meet_join_complement_examples(S4, A4):
    assert residual(S4, meet(N, U)) == A4
    taut = join_formations(U, complement(U))
    for name in ("S4", "A5", "SL23", "S3xS3"):
        assert residual(CORPUS[name], taut).is_trivial()


def test_local_formation_examples(S4, V4):
    nil = local_formation("nil", lambda p, G: G)
    assert not nil.evaluate(NormalSection(S4, V4, trivial_group(4)))
    assert not U.evaluate(NormalSection(S4, V4, trivial_group(4)))
    S3 = named.symmetric(3)
    A3 = group(3, "(1 2 3)")
    assert U.evaluate(NormalSection(S3, A3, trivial_group(3)))


def test_canonical_local_residual_examples(S4, A4):
    assert canonical_local_residual(U, S4, 2) == A4
    assert canonical_local_residual(N, S4, 3) == S4
    c6 = named.cyclic(6)
    assert canonical_local_residual(N, c6, 2).order() == 3
    with pytest.raises(CapabilityError):
        canonical_local_residual(builtin("pgroups", 2), S4, 2)


def test_quasi_examples():
    qn = builtin("quasinilpotent")
    A5 = named.alternating(5)
    assert member(A5, qn)
    assert residual(named.symmetric(5), qn) == A5
    assert member(named.cyclic(7), qn)
    with pytest.raises(CapabilityError):
        quasi(builtin("pgroups", 3))


def test_builtin_examples(S4, V4):
    assert residual(S4, builtin("supersoluble")) == V4
    assert member(named.symmetric(3), builtin("noncentral", 3))
    assert not member(named.cyclic(3), builtin("noncentral", 3))
    A5 = named.alternating(5)
    assert residual(A5, builtin("supersoluble")) == A5
    with pytest.raises(InputError):
        builtin("soluble")
    with pytest.raises(InputError):
        builtin("pgroups", 4)
    with pytest.raises(InputError):
        builtin("nilpotent", 2)


def test_residual_rejects_fake_chief_function():
    # in C_2 x C_2 every chief factor is G-isomorphic to every other, yet this
    # evaluator says 0 only on factors with a nontrivial bottom
    bad = ChiefFunction("bad", lambda sec: sec.bottom.is_trivial())
    with pytest.raises(InternalError):
        residual(group(4, "(1 2)", "(3 4)"), bad)


def test_quasinilpotent_two_definitions_agree():
    qb = quasinilpotent_baer()
    qn = builtin("quasinilpotent")
    for name, G in CORPUS.items():
        assert residual(G, qb) == residual(G, qn), name


# -- properties over the corpus -------------------------------------------------------

@pytest.mark.parametrize("name", sorted(CORPUS))
def test_formation_axioms(name):
    G = CORPUS[name]
    lat = normal_lattice(G)
    for fname in BUILTIN_NAMES:
        if fname in ("pgroups", "noncentral"):
            continue
        f = builtin(fname)
        ins = [K for K in lat.members if member_mod(G, K, f)]
        # quotient closure: G/K in F implies G/L in F for K <= L
        for K in ins:
            for L in lat.members:
                if K.is_subgroup_of(L):
                    assert member_mod(G, L, f)
        # subdirect products: G/A, G/B in F implies G/(A meet B) in F
        for A, B in itertools.combinations(ins, 2):
            assert member_mod(G, intersection_normal(A, B), f)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_join_residual_is_contained_in_both(name):
    G = CORPUS[name]
    atoms = [builtin(n) for n in LOCAL_NAMES] + [builtin("pgroups", 2), builtin("noncentral", 3)]
    for f1, f2 in itertools.combinations(atoms, 2):
        R = residual(G, join_formations(f1, f2))
        assert R.is_subgroup_of(residual(G, f1)) and R.is_subgroup_of(residual(G, f2))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_local_evaluation_equals_canonical_f_centrality(name):
    G = CORPUS[name]
    for fname in LOCAL_NAMES:
        f = builtin(fname)
        for sec in chief_sections(G):
            if sec.is_abelian():
                assert f.evaluate(sec) == is_f_central(f, sec), (fname, sec.index())


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_o_p_matches_pgroup_residual(name):
    G = CORPUS[name]
    for p in sorted(primes_of(G) | {2, 3}):
        assert o_p(G, p) == residual(G, builtin("pgroups", p))


def test_lattice_identities_on_sampled_sections():
    rng = random.Random(0)
    sections = [s for name in sorted(CORPUS) for s in chief_sections(CORPUS[name])]
    atoms = [builtin(n) for n in LOCAL_NAMES] + [builtin("pgroups", 2), builtin("noncentral", 2),
                                                  builtin("quasinilpotent")]
    for _ in range(1000):
        sec = rng.choice(sections)
        a, b, c = (rng.choice(atoms) for _ in range(3))
        A, B, C = (f.evaluate(sec) for f in (a, b, c))
        assert meet(a, join_formations(b, c)).evaluate(sec) == (A and (B or C))
        assert join_formations(a, meet(b, c)).evaluate(sec) == (A or (B and C))
        assert meet(a, join_formations(b, c)).evaluate(sec) == join_formations(meet(a, b), meet(a, c)).evaluate(sec)
        assert complement(meet(a, b)).evaluate(sec) == join_formations(complement(a), complement(b)).evaluate(sec)


def test_combinators_are_not_hereditary():
    assert not meet(U, N).hereditary
    assert not join_formations(U, N).hereditary
    assert not complement(U).hereditary
    assert not builtin("quasinilpotent").hereditary
    assert U.hereditary and N.hereditary and builtin("pgroups", 3).hereditary


@pytest.mark.parametrize("name", ["S4", "SL23", "S3xS3", "A5"])
def test_evaluation_constant_along_chief_chains(name):
    # every maximal chain through the lattice gives the same verdict
    G = CORPUS[name]
    lat = normal_lattice(G)
    for f in (U, N, builtin("na")):
        for K in lat.members:
            chain = maximal_chain(G, K, lat)
            verdict = all(f.evaluate(NormalSection(G, H, L)) for H, L in zip(chain, chain[1:]))
            assert verdict == member_mod(G, K, f)


def test_residual_matches_oracle_on_small_products():
    G = group(6, "(1 2 3)", "(1 2)", "(4 5 6)")
    for fname in LOCAL_NAMES:
        f = builtin(fname)
        assert residual(G, f) == brute_residual(G, f)
    assert join(residual(G, U), residual(G, N)) == residual(G, meet(U, N))
