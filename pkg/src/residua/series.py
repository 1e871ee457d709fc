"""Decompositions of normal subgroups into minimal normal pieces, and chief and
composition series built from them.

A decomposition of N (normal in G) is a pair (R, [M_1, ..., M_t]) where R is
normal in G, N/R is the direct product of the minimal normal subgroups M_i/R of
G/R, and R is the smallest normal subgroup of G below N with that property
for the class of minimal normal subgroups in question (non-abelian ones, or
p-groups for a fixed prime p).
"""

import random
from collections import OrderedDict
from dataclasses import dataclass, field

from .errors import InputError, InternalError, check_chain
from .groups import (
    NormalSection,
    PermGroup,
    agemo_derived,
    alternating_support,
    centralizer_section,
    coset_reps,
    derived_subgroup,
    join,
    normal_closure,
    perfect_core,
    primes_of,
    trivial_group,
)


@dataclass(frozen=True)
class Decomposition:
    residual: PermGroup
    minimals: tuple = ()

    def check(self, G, N):
        """Verify the structural invariants; raises InternalError on failure."""
        R = self.residual
        if not (R.is_subgroup_of(N) and R.is_normal_in(G)):
            raise InternalError("decomposition residual is not a normal subgroup below N")
        size = R.order()
        for M in self.minimals:
            if not (M.is_normal_in(G) and R.is_subgroup_of(M) and M.is_subgroup_of(N)):
                raise InternalError("decomposition piece is not normal between residual and N")
            size *= M.order() // R.order()
        if size != N.order():
            raise InternalError("pieces do not form a direct product equal to N over the residual")
        return self


@dataclass(frozen=True)
class SeriesChain:
    terms: tuple
    kind: str = "chief"
    _meta: dict = field(default_factory=dict, compare=False, repr=False)

    def orders(self):
        return [T.order() for T in self.terms]

    def factors(self):
        """Consecutive pairs (upper, lower)."""
        return list(zip(self.terms, self.terms[1:]))

    def factor_orders(self):
        return [H.order() // K.order() for H, K in self.factors()]

    def __len__(self):
        return len(self.terms)


_CACHE_SIZE = 512
_cache = OrderedDict()


def _cached(key, compute):
    hit = _cache.get(key)
    if hit is not None:
        _cache.move_to_end(key)
        return hit
    value = compute()
    _cache[key] = value
    if len(_cache) > _CACHE_SIZE:
        _cache.popitem(last=False)
    return value


def clear_cache():
    _cache.clear()


# -- non-abelian residual ------------------------------------------------------

def nonabelian_residual(N):
    """Smallest normal R of N with N/R a (possibly empty) product of non-abelian simples."""
    return _cached(("res_na", N.key), lambda: _nonabelian_residual(N))


def _nonabelian_residual(N):
    D = perfect_core(N)
    if D.is_trivial():
        return N
    supp = alternating_support(D)
    if supp is not None:
        # D is simple and self-centralizing modulo the pointwise stabilizer of its support
        C = N.pointwise_stabilizer(supp)
        return C if D.order() * C.order() == N.order() else N
    return nonabelian_residual_by_lattice(N)


def nonabelian_residual_by_lattice(N):
    """Intersection of the maximal normal subgroups M of N with N/M non-abelian simple."""
    from .oracle import normal_lattice

    lat = normal_lattice(N)
    Nd = derived_subgroup(N)
    R = N
    for i in lat.maximal_below(len(lat.members) - 1):
        M = lat.members[i]
        if not Nd.is_subgroup_of(M):
            R = _meet(lat, R, M)
    return R


def _meet(lat, A, B):
    # intersection of two lattice members: the largest member contained in both
    best = None
    for X in lat.members:
        if X.is_subgroup_of(A) and X.is_subgroup_of(B):
            if best is None or X.order() > best.order():
                best = X
    return best


# -- minimal normal and minimal subnormal subgroups ----------------------------

def _minimal_normal_over(A, K, M=None, seed=0):
    """M with M/K a minimal normal subgroup of A/K contained in M/K (default A/K)."""
    M = A if M is None else M
    # shrink through characteristic subgroups first; each stays normal in A
    while True:
        D = join(K, derived_subgroup(M))
        if K.order() < D.order() < M.order():
            M = D
            continue
        if D.order() == K.order():
            for p in sorted(primes_of(M)):
                Q = join(K, agemo_derived(M, p))
                if Q.order() < M.order():
                    if Q.order() > K.order():
                        M = Q
                        break
                    return _minimal_submodule_over(A, M, K, p, seed)
            else:
                raise InternalError("abelian section without an elementary abelian layer")
            continue
        break
    # M/K is perfect: search element closures
    while True:
        reps, _ = coset_reps(K, M)
        for r in reps:
            if K.contains(r):
                continue
            X = join(K, normal_closure(A, [r]))
            if X.order() < M.order():
                M = X
                break
        else:
            return M


def _minimal_submodule_over(A, M, K, p, seed):
    from .modules import find_submodule, section_to_module

    V = section_to_module(A, M, K, p)
    rng = random.Random(seed)
    X = V
    lift = None  # rows expressing X's basis in V coordinates
    while True:
        W = find_submodule(X, rng)
        if W is None:
            break
        sub = X.submodule(W)
        rows = W.basis if lift is None else _compose(W.basis, lift, V.p)
        lift = rows
        X = sub
    if lift is None:
        return M
    gens = list(K.generators) + [V.pullback(v) for v in lift]
    return PermGroup(A.degree, gens, order=K.order() * V.p ** len(lift))


def _compose(rows, lift, p):
    from .gfp import matmul

    return matmul(rows, lift, p)


def minimal_subnormal_over(A, K, seed=0):
    """B with K < B <= A, B subnormal in A and B/K simple."""
    if A.order() == K.order():
        raise InputError("no subgroup strictly between: the two groups are equal")
    if not (K.is_subgroup_of(A) and K.is_normal_in(A)):
        raise InputError("bottom is not a normal subgroup")
    B = _giant_over(A, K)
    if B is not None:
        return B
    M = _minimal_normal_over(A, K, seed=seed)
    while True:
        if join(K, derived_subgroup(M)).order() == K.order():
            x = next(g for g in M.generators if not K.contains(g))
            return join(K, PermGroup(A.degree, [x]))
        # M/K is a product of isomorphic non-abelian simples; pick one factor
        M2 = _giant_over(M, K) or _minimal_normal_over(M, K, seed=seed)
        if M2.order() == M.order():
            return M
        M = M2


def _giant_over(A, K):
    """Fast path: the perfect core of A is a natural alternating group meeting K trivially."""
    D = perfect_core(A)
    if D.is_trivial() or alternating_support(D) is None:
        return None
    B = join(D, K)
    if B.order() == D.order() * K.order() and B.is_normal_in(A):
        return B
    return None


# -- the two decompositions ----------------------------------------------------

def nonabelian_decomposition(G, N, seed=0):
    return _cached(("dec_na", G.key, N.key, seed), lambda: _nonabelian_decomposition(G, N, seed))


def _nonabelian_decomposition(G, N, seed):
    K = nonabelian_residual(N)
    A = N
    L = []
    while A.order() != K.order():
        check_chain(len(L), G.degree, "non-abelian decomposition")
        B = minimal_subnormal_over(A, K, seed)
        M = join(K, normal_closure(G, B.generators))
        L.append(M)
        if M.order() == A.order():
            A = K
        else:
            A = centralizer_section(A, NormalSection(A, M, K))
    return Decomposition(K, tuple(L))


def p_decomposition(G, N, p, seed=0):
    return _cached(("dec_p", G.key, N.key, p, seed), lambda: _p_decomposition(G, N, p, seed))


def _p_decomposition(G, N, p, seed):
    from . import gfp
    from .modules import radical, section_to_module, semisimple_decompose

    Q = agemo_derived(N, p, G)
    if Q.order() == N.order():
        return Decomposition(N, ())
    V = section_to_module(G, N, Q, p)
    R = radical(V, seed)
    n = G.degree
    K = PermGroup(n, list(Q.generators) + [V.pullback(r) for r in R.basis],
                  order=Q.order() * p**R.dim)
    W = V.quotient(R)
    lift = V.quotient_lift(R)
    mins = []
    for part in semisimple_decompose(W, seed):
        rows = gfp.matmul(part.basis, lift, p)
        gens = list(K.generators) + [V.pullback(v) for v in rows]
        mins.append(PermGroup(n, gens, order=K.order() * p**part.dim))
    return Decomposition(K, tuple(mins))


# -- series --------------------------------------------------------------------

def chief_series(G, top=None, bottom=None, seed=0):
    """A chief series of G from top down to bottom (both normal in G)."""
    n = G.degree
    top = G if top is None else top
    bottom = trivial_group(n) if bottom is None else bottom
    if not bottom.is_subgroup_of(top):
        raise InputError("bottom of the series is not contained in its top")
    rng = random.Random(seed)
    terms = [top]
    cur = top
    while cur.order() > bottom.order():
        terms.extend(_layer(G, cur, bottom, rng, seed))
        cur = terms[-1]
        check_chain(len(terms) - 1, n, "chief series")
    return SeriesChain(tuple(terms), "chief")


def _layer(G, cur, bottom, rng, seed):
    """Chief steps from cur down through one semisimple layer of G-chief factors."""
    index = cur.order() // bottom.order()
    options = ["na"] + [p for p in sorted(primes_of(cur)) if index % p == 0]
    if seed:
        rng.shuffle(options)
    for opt in options:
        if opt == "na":
            dec = nonabelian_decomposition(G, cur, seed)
        else:
            dec = p_decomposition(G, cur, opt, seed)
        r = join(dec.residual, bottom)
        if r.order() == cur.order():
            continue
        mins = list(dec.minimals)
        if seed:
            rng.shuffle(mins)
        asc = [r]
        for M in mins:
            nxt = join(asc[-1], M)
            if nxt.order() > asc[-1].order():
                asc.append(nxt)
        if asc[-1].order() != cur.order():
            raise InternalError("semisimple layer does not reach the top of the section")
        return list(reversed(asc[:-1]))
    raise InternalError("no decomposition splits a nontrivial normal section")


def composition_series_through(G, normals=(), seed=0):
    """A composition series of G passing through the given chain of normal subgroups."""
    n = G.degree
    chain = sorted(normals, key=lambda X: -X.order())
    for X in chain:
        if not (X.is_subgroup_of(G) and X.is_normal_in(G)):
            raise InputError("listed subgroup is not normal in the group")
    for X, Y in zip(chain, chain[1:]):
        if not Y.is_subgroup_of(X):
            raise InputError("listed subgroups do not form a chain under inclusion")
    marks = [G] + [X for X in chain if X.order() not in (G.order(), 1)] + [trivial_group(n)]
    dedup = [marks[0]]
    for X in marks[1:]:
        if X.order() < dedup[-1].order():
            dedup.append(X)
    terms = [G]
    for upper, lower in zip(dedup, dedup[1:]):
        cs = chief_series(G, upper, lower, seed)
        for H, K in cs.factors():
            terms.extend(_refine_chief(H, K, seed))
            check_chain(len(terms) - 1, n, "composition series")
    return SeriesChain(tuple(terms), "composition")


def _refine_chief(H, K, seed=0):
    """Terms strictly below H down to K with simple consecutive quotients."""
    asc = [K]
    if join(K, derived_subgroup(H)).order() == K.order():
        for h in H.generators:
            if not asc[-1].contains(h):
                asc.append(join(asc[-1], PermGroup(H.degree, [h])))
    else:
        A = H
        while A.order() != K.order():
            B = minimal_subnormal_over(A, K, seed)
            asc.append(join(asc[-1], B))
            A = K if B.order() == A.order() else centralizer_section(A, NormalSection(A, B, K))
    if asc[-1].order() != H.order():
        raise InternalError("refinement of a chief factor does not reach its top")
    return list(reversed(asc[:-1]))
