"""Permutation groups backed by a stabilizer chain, and the basic toolbox on them.

Subgroups are always plain :class:`PermGroup` objects of the same degree as
the group they live in.  Quotients never appear as objects: a section H/K is
described by the pair of subgroups (see :class:`NormalSection`).
"""

import math
import random
from dataclasses import dataclass
from functools import cached_property

from .chain import StabChain
from .errors import InputError, InternalError, ResourceError, caps
from .perm import Permutation, comm, conj, element_order, is_identity, mul, power


def is_prime(p):
    if not isinstance(p, int) or p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def _require_prime(p):
    if not is_prime(p):
        raise InputError(f"{p!r} is not a prime")


def prime_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


class PermGroup:
    """A subgroup of S_n given by generators, with a lazily built stabilizer chain.

    Instances are treated as immutable; the chain and derived data are cached.
    """

    def __init__(self, degree, gens=(), *, order=None, name=None):
        if degree < 0 or degree > caps.max_degree:
            raise ResourceError(f"degree {degree} outside 0..{caps.max_degree}")
        clean = []
        seen = set()
        for g in gens:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if len(g) != degree:
                raise InputError(f"generator {g} has degree {len(g)}, expected {degree}")
            if g.is_identity() or g in seen:
                continue
            seen.add(g)
            clean.append(g)
        self.degree = degree
        self.name = name
        self._order_hint = order
        if len(clean) > max(degree * degree, 1):
            clean = _reduce_gens(degree, clean)
        self.generators = tuple(clean)

    # -- chain-backed queries -------------------------------------------------

    @cached_property
    def chain(self):
        return StabChain(self.degree, self.generators, order=self._order_hint)

    @cached_property
    def lex_chain(self):
        """Chain on the full base 0..n-1, used for canonical coset representatives."""
        return StabChain(
            self.degree, self.chain.strong_gens(), base=range(self.degree), order=self.order()
        )

    def order(self):
        return self.chain.order()

    def __len__(self):
        return self.order()

    def contains(self, g):
        return self.chain.contains(g)

    def __contains__(self, g):
        return self.contains(g)

    def is_trivial(self):
        return not self.generators

    def is_subgroup_of(self, other):
        return all(other.contains(g) for g in self.generators)

    def __le__(self, other):
        return self.is_subgroup_of(other)

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def __hash__(self):
        return hash((self.degree, self.order()))

    @cached_property
    def key(self):
        """Cheap cache key: equal keys imply equal groups (not conversely)."""
        return (self.degree, self.generators)

    def elements(self):
        for g in self.chain.elements():
            yield Permutation._raw(g)

    def random_element(self, rng):
        return Permutation._raw(self.chain.random_element(rng))

    def identity(self):
        return Permutation.identity(self.degree)

    def orbit(self, point):
        orb = {point}
        queue = [point]
        for x in queue:
            for g in self.generators:
                y = g[x]
                if y not in orb:
                    orb.add(y)
                    queue.append(y)
        return orb

    def orbits(self):
        seen = set()
        out = []
        for x in range(self.degree):
            if x not in seen:
                o = self.orbit(x)
                seen |= o
                out.append(o)
        return out

    def support(self):
        return sorted({i for g in self.generators for i in g.support()})

    def is_abelian(self):
        gens = self.generators
        return all(mul(a, b) == mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])

    def is_normal_in(self, G):
        return all(self.contains(conj(h, g)) for h in self.generators for g in G.generators)

    def pointwise_stabilizer(self, points):
        points = list(points)
        ch = StabChain(self.degree, self.chain.strong_gens(), base=points, order=self.order())
        sub = PermGroup(self.degree, ch.stabilizer_gens(len(points)))
        return sub

    def canonical_coset_rep(self, g):
        """Canonical representative of the right coset self*g."""
        return Permutation._raw(self.lex_chain.lex_coset_rep(g))

    def __repr__(self):
        if self.name:
            return f"<PermGroup {self.name} degree={self.degree} order={self.order()}>"
        return f"<PermGroup degree={self.degree} order={self.order()} gens={len(self.generators)}>"

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def _reduce_gens(degree, gens):
    """Keep only generators that enlarge the group generated so far."""
    kept = []
    ch = StabChain(degree, [])
    for g in gens:
        if not ch.contains(g):
            kept.append(g)
            ch = StabChain(degree, kept, base=ch.base)
    return kept


@dataclass(frozen=True)
class NormalSection:
    """The factor top/bottom, both normal in ambient, bottom <= top."""

    ambient: PermGroup
    top: PermGroup
    bottom: PermGroup

    def validate(self):
        G, H, K = self.ambient, self.top, self.bottom
        if not K.is_subgroup_of(H):
            raise InputError("section bottom is not contained in top")
        if not H.is_subgroup_of(G):
            raise InputError("section top is not contained in ambient")
        if not (H.is_normal_in(G) and K.is_normal_in(G)):
            raise InputError("section terms are not normal in ambient")
        return self

    def index(self):
        return self.top.order() // self.bottom.order()

    def is_abelian(self):
        H, K = self.top, self.bottom
        return all(K.contains(comm(a, b)) for a in H.generators for b in H.generators)

    @property
    def key(self):
        return (self.ambient.key, self.top.key, self.bottom.key)


# -- construction -------------------------------------------------------------

def build_group(degree, gens, name=None):
    return PermGroup(degree, gens, name=name)


def trivial_group(degree):
    return PermGroup(degree, ())


def order(G):
    return G.order()


def contains(G, g):
    return G.contains(g)


def join(H, K):
    if H.degree != K.degree:
        raise InputError("degrees differ")
    extra = [g for g in K.generators if not H.contains(g)]
    if not extra:
        return H
    if all(K.contains(g) for g in H.generators):
        return K
    return PermGroup(H.degree, H.generators + tuple(extra))


def join_all(degree, groups):
    out = trivial_group(degree)
    for X in groups:
        out = join(out, X)
    return out


def normal_closure(G, T):
    """Smallest normal subgroup of G containing the elements (or group) T."""
    if isinstance(T, PermGroup):
        T = T.generators
    T = [g for g in T if not is_identity(g)]
    for t in T:
        if not G.contains(t):
            raise InputError(f"{Permutation._raw(t)} is not an element of the group")
    return _closure_under(G.degree, T, G.generators)


def _closure_under(degree, T, conjugators):
    gens = list(T)
    N = PermGroup(degree, gens)
    pending = list(N.generators)
    while pending:
        new = []
        for n in pending:
            for g in conjugators:
                c = conj(n, g)
                if not N.contains(c) and c not in new:
                    new.append(c)
        if not new:
            break
        base = N.chain.base
        gens = list(N.generators) + new
        N = PermGroup(degree, gens)
        N.__dict__["chain"] = StabChain(degree, N.generators, base=base)
        pending = [Permutation._raw(c) for c in new]
    return N


def commutator(H, K, ambient=None):
    """[H, K], the normal closure in <H, K> of the commutators of generators."""
    cs = []
    for a in H.generators:
        for b in K.generators:
            c = comm(a, b)
            if not is_identity(c):
                cs.append(c)
    J = join(H, K)
    if not cs:
        return trivial_group(H.degree)
    return _closure_under(H.degree, cs, J.generators)


def derived_subgroup(G):
    supp = _symmetric_support(G)
    if supp is not None:
        return _alternating_on(G.degree, supp)
    return commutator(G, G)


def _symmetric_support(G):
    """Support of G when G is the full symmetric group on it (k >= 3), else None."""
    supp = G.support()
    k = len(supp)
    if k < 3 or G.order() != math.factorial(k) or len(G.orbit(supp[0])) != k:
        return None
    return supp


def _alternating_on(n, supp):
    k = len(supp)
    pts = [x + 1 for x in supp]
    gens = [Permutation.from_cycles([tuple(pts[:3])], n)]
    if k > 3:
        rest = pts[1:] if k % 2 == 0 else pts
        gens.append(Permutation.from_cycles([tuple(rest)], n))
    return PermGroup(n, gens, order=math.factorial(k) // 2)


def perfect_core(G):
    """Last term of the derived series."""
    if alternating_support(G) is not None:
        return G
    D = G
    while True:
        D2 = derived_subgroup(D)
        if D2.order() == D.order():
            return D
        D = D2


def is_normal(G, H):
    return H.is_normal_in(G)


def agemo_derived(N, p, ambient=None):
    """N'N^p: normal closure in N of commutators and p-th powers of generators."""
    _require_prime(p)
    S = N.generators
    T = [comm(a, b) for i, a in enumerate(S) for b in S[i + 1:]]
    T += [power(a, p) for a in S]
    T = [t for t in T if not is_identity(t)]
    Q = _closure_under(N.degree, T, S) if T else trivial_group(N.degree)
    if ambient is not None and not Q.is_normal_in(ambient):
        raise InternalError("N'N^p is not normal in the ambient group")
    return Q


def primes_of(G):
    o = G.order()
    return {p for p in range(2, G.degree + 1) if is_prime(p) and o % p == 0}


def same_group(A, B):
    return A == B


# -- actions on cosets ---------------------------------------------------------

def coset_reps(K, H):
    """Canonical representatives of the right cosets K*h of K in H (K <= H)."""
    limit = caps.max_index
    if H.order() // K.order() > limit:
        raise ResourceError(
            f"index {H.order() // K.order()} exceeds the coset enumeration cap {limit}"
        )
    start = K.canonical_coset_rep(H.identity())
    reps = {start: 0}
    order = [start]
    for r in order:
        for h in H.generators:
            c = K.canonical_coset_rep(mul(r, h))
            if c not in reps:
                reps[c] = len(order)
                order.append(c)
    return order, reps


def action_kernel(G, actions):
    """Kernel of an action of G given by one image table per generator of G.

    The action is appended to the natural one on a disjoint set of points; the
    kernel is then the pointwise stabilizer of the new points.
    """
    n = G.degree
    gens = G.generators
    if not gens:
        return G
    m = len(actions[0])
    if all(all(img[i] == i for i in range(m)) for img in actions):
        return G
    ext = [tuple(g) + tuple(n + x for x in img) for g, img in zip(gens, actions)]
    moved = sorted({n + i for img in actions for i in range(m) if img[i] != i})
    ch = StabChain(n + m, ext, base=moved, order=G.order())
    kgens = [g[:n] for g in ch.stabilizer_gens(len(moved))]
    korder = 1
    for lev in ch.levels[len(moved):]:
        korder *= len(lev)
    return PermGroup(n, kgens, order=korder)


def centralizer_section(G, sec):
    """C_G(H/K) = {g in G : [g, h] in K for all h in H}, as a subgroup of G."""
    H, K = sec.top, sec.bottom
    if H.order() == K.order():
        return G
    reps, index = coset_reps(K, H)
    actions = []
    for g in G.generators:
        actions.append(tuple(index[K.canonical_coset_rep(conj(r, g))] for r in reps))
    C = action_kernel(G, actions)
    return C


def core(G, H):
    """Core_G(H): the kernel of G acting on the right cosets of H."""
    if H.order() == G.order():
        return G
    reps, index = coset_reps(H, G)
    actions = [tuple(index[H.canonical_coset_rep(mul(r, g))] for r in reps) for g in G.generators]
    return action_kernel(G, actions)


def intersection_normal(H, K):
    """H ∩ K when H normalizes K: the kernel of H acting on cosets of K in <H, K>."""
    J = join(H, K)
    reps, index = coset_reps(K, J)
    actions = [tuple(index[K.canonical_coset_rep(mul(r, h))] for r in reps) for h in H.generators]
    return action_kernel(H, actions)


# -- backtrack search ------------------------------------------------------------

def subgroup_search(G, prop, prune=None, known=()):
    """The subgroup {g in G : prop(g)}; prop must define a subgroup.

    Butler-style search level by level from the bottom of the chain.  ``prune``
    is an optional necessary condition prune(base_point, image) for membership;
    ``known`` lists elements already known to satisfy prop.
    """
    levels = G.chain.levels
    n = G.degree
    found = [tuple(g) for g in known if not is_identity(g)]

    def orbit_of(pt, gens):
        orb = {pt}
        queue = [pt]
        for x in queue:
            for s in gens:
                y = s[x]
                if y not in orb:
                    orb.add(y)
                    queue.append(y)
        return orb

    def descend(j, x):
        if j == len(levels):
            return x if prop(x) else None
        lev = levels[j]
        b = lev.point
        for delta in sorted(lev.trans, key=x.__getitem__):
            if prune is not None and not prune(b, x[delta]):
                continue
            y = x if delta == b else mul(lev.trans[delta], x)
            r = descend(j + 1, y)
            if r is not None:
                return r
        return None

    for i in reversed(range(len(levels))):
        lev = levels[i]
        b = lev.point
        prefix = [l.point for l in levels[:i]]
        gens_i = [g for g in found if all(g[c] == c for c in prefix)]
        orb = orbit_of(b, gens_i)
        dead = set()
        for gamma in sorted(lev.trans):
            if gamma in orb or gamma in dead:
                continue
            if prune is not None and not prune(b, gamma):
                dead |= orbit_of(gamma, gens_i)
                continue
            g = descend(i + 1, lev.trans[gamma])
            if g is None:
                dead |= orbit_of(gamma, gens_i)
            else:
                found.append(g)
                gens_i.append(g)
                orb = orbit_of(b, gens_i)
    return PermGroup(n, found)


def normalizer(G, H):
    """N_G(H) by backtrack search with orbit-length pruning."""
    orbit_len = {}
    for o in H.orbits():
        for x in o:
            orbit_len[x] = len(o)
    hg = H.generators

    def prop(g):
        return all(H.contains(conj(h, g)) for h in hg)

    def prune(b, gamma):
        return orbit_len[b] == orbit_len[gamma]

    known = [h for h in hg if G.contains(h)]
    return subgroup_search(G, prop, prune, known)


def centralizer(G, H):
    """C_G(H) for a subgroup H (elements of G commuting with every generator of H)."""
    hg = H.generators
    orbit_len = {}
    for o in H.orbits():
        for x in o:
            orbit_len[x] = len(o)

    def prop(g):
        return all(mul(h, g) == mul(g, h) for h in hg)

    return subgroup_search(G, prop, lambda b, c: orbit_len[b] == orbit_len[c])


def intersection(H, K):
    """H ∩ K by backtrack search over H."""
    if H.order() > K.order():
        H, K = K, H
    korb = {}
    for o in K.orbits():
        for x in o:
            korb[x] = o
    return subgroup_search(H, K.contains, lambda b, c: c in korb[b])


# -- Sylow subgroups -----------------------------------------------------------

def p_element(g, p):
    """The p-part of g: g^m where m is the p'-part of its order."""
    o = element_order(g)
    m = o // prime_part(o, p)
    return power(g, m)


def sylow(G, p, seed=0):
    """A Sylow p-subgroup by ascent through normalizers of p-subgroups."""
    _require_prime(p)
    target = prime_part(G.order(), p)
    n = G.degree
    P = trivial_group(n)
    if target == 1:
        return P
    rng = random.Random(seed)
    steps = 0
    while P.order() < target:
        steps += 1
        if steps > target.bit_length() + 1:
            raise InternalError("Sylow ascent failed to progress")
        P = _enlarge_p_subgroup(G, P, p, rng)
    return P


def _enlarge_p_subgroup(G, P, p, rng):
    def try_element(x):
        if is_identity(x) or P.contains(x):
            return None
        Q = join(P, PermGroup(P.degree, [x]))
        o = Q.order()
        return Q if prime_part(o, p) == o else None

    # cheap attempts in G first; then inside N_G(P), where success is guaranteed
    for _ in range(20):
        Q = try_element(p_element(G.chain.random_element(rng), p))
        if Q is not None:
            return Q
    N = normalizer(G, P) if not P.is_trivial() else G
    for _ in range(200):
        x = p_element(N.chain.random_element(rng), p)
        if not is_identity(x) and not P.contains(x):
            return join(P, PermGroup(P.degree, [x]))
    if N.order() > caps.max_index:
        raise ResourceError("Sylow ascent: normalizer too large for exhaustive search")
    for g in N.chain.elements():
        x = p_element(g, p)
        if not is_identity(x) and not P.contains(x):
            return join(P, PermGroup(P.degree, [x]))
    raise InternalError("no p-element outside P in its normalizer; P should be Sylow")


def o_p(G, p, seed=0):
    """O^p(G): normal closure of the Sylow q-subgroups for primes q != p."""
    gens = []
    for q in sorted(primes_of(G)):
        if q != p:
            gens.extend(sylow(G, q, seed).generators)
    if not gens:
        return trivial_group(G.degree)
    return normal_closure(G, gens)


def alternating_support(G):
    """If G acts as the alternating group A_k (k >= 5) on its support and trivially
    elsewhere, return that support; otherwise None."""
    supp = G.support()
    k = len(supp)
    if k < 5 or G.order() != math.factorial(k) // 2:
        return None
    if len(G.orbit(supp[0])) != k:
        return None
    return supp
