"""Brute-force reference computations for small groups.

Everything here works from complete element lists, so it is slow but simple
enough to trust.  The fast paths in :mod:`series`, :mod:`formations` and
:mod:`subnormal` are tested against these functions.
"""

import random
from dataclasses import dataclass, field

from .errors import InputError, InternalError, ResourceError, caps, check_chain
from .groups import NormalSection, PermGroup, join, normal_closure, trivial_group
from .perm import Permutation, inv, mul


@dataclass
class NormalLattice:
    group: PermGroup
    members: list
    covers: dict = field(default_factory=dict)  # i -> indices maximal below members[i]
    partial: bool = False

    def __len__(self):
        return len(self.members)

    def index(self, H):
        for i, M in enumerate(self.members):
            if M.order() == H.order() and H.is_subgroup_of(M):
                return i
        raise InputError("subgroup is not a normal subgroup of the lattice's group")

    def maximal_below(self, i):
        return list(self.covers[i])

    def below(self, i):
        top = self.members[i]
        return [j for j, M in enumerate(self.members) if j != i and M.is_subgroup_of(top)]

    def orders(self):
        return [M.order() for M in self.members]


def conjugacy_class_reps(G, limit=10**5):
    """One element per conjugacy class (orbits of the conjugation action on elements)."""
    if G.order() > limit:
        raise ResourceError(f"group order {G.order()} exceeds the class enumeration cap {limit}")
    seen = set()
    reps = []
    gens = [tuple(g) for g in G.generators]
    ginv = [inv(g) for g in gens]
    for x in G.chain.elements():
        if x in seen:
            continue
        reps.append(x)
        seen.add(x)
        queue = [x]
        for y in queue:
            for g, gi in zip(gens, ginv):
                z = mul(mul(gi, y), g)
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
    return reps


def _insert(found, X):
    bucket = found.setdefault(X.order(), [])
    for Y in bucket:
        if X.is_subgroup_of(Y):
            return False
    bucket.append(X)
    return True


def normal_lattice(G, seed=0):
    """All normal subgroups of G, sorted by order, with the covering relation."""
    if G.order() > caps.max_lattice_order:
        raise ResourceError(f"group order {G.order()} exceeds the lattice cap {caps.max_lattice_order}")
    n = G.degree
    partial = False
    if G.order() <= 10**5:
        seeds = conjugacy_class_reps(G)
    else:
        # too many elements to enumerate: sample, and say so
        rng = random.Random(seed)
        seeds = [G.chain.random_element(rng) for _ in range(2000)]
        partial = True
    found = {}
    _insert(found, trivial_group(n))
    for x in seeds:
        if any(i != j for i, j in enumerate(x)):
            _insert(found, normal_closure(G, [x]))
    members = [X for o in sorted(found) for X in found[o]]
    # close under joins
    k = 0
    while k < len(members):
        for j in range(k):
            J = join(members[k], members[j])
            if _insert(found, J):
                members.append(J)
                if len(members) > caps.max_lattice_members:
                    raise ResourceError(
                        f"normal lattice exceeds {caps.max_lattice_members} members"
                    )
        k += 1
    members.sort(key=lambda X: X.order())
    if members[-1].order() != G.order():
        raise InternalError("normal lattice does not reach the whole group")
    lat = NormalLattice(G, members, partial=partial)
    for i, top in enumerate(members):
        below = [j for j in range(i) if members[j].order() < top.order()
                 and members[j].is_subgroup_of(top)]
        lat.covers[i] = [
            j for j in below
            if not any(members[j].order() < members[m].order() and members[j].is_subgroup_of(members[m])
                       for m in below if m != j)
        ]
    return lat


def _lattice(G, lat):
    return normal_lattice(G) if lat is None else lat


def maximal_chain(G, K, lat=None):
    """A maximal chain of lattice members from G down to K (every step G-chief)."""
    lat = _lattice(G, lat)
    lat.index(K)
    cur = G
    chain = [G]
    while cur.order() != K.order():
        # the largest member strictly between is covered by cur
        cands = [M for M in lat.members
                 if M.order() < cur.order() and K.is_subgroup_of(M) and M.is_subgroup_of(cur)]
        cur = max(cands, key=lambda M: M.order())
        chain.append(cur)
        check_chain(len(chain) - 1, G.degree, "oracle lattice chain")
    return chain


def brute_member(G, K, f, lat=None):
    """G/K in C(f): evaluate f on every factor of a maximal chain of normal subgroups above K."""
    chain = maximal_chain(G, K, lat)
    return all(f.evaluate(NormalSection(G, H, L)) for H, L in zip(chain, chain[1:]))


def brute_residual(G, f, lat=None):
    """The least normal subgroup whose quotient lies in C(f), by sweeping the lattice."""
    lat = _lattice(G, lat)
    ok = [M for M in lat.members if brute_member(G, M, f, lat)]
    if not ok:
        raise InternalError("no quotient lies in the class, not even the trivial one")
    least = ok[0]
    for M in ok:
        if not least.is_subgroup_of(M):
            raise InternalError("class is not closed under subdirect products on this group")
    return least


# -- subgroup enumeration -----------------------------------------------------

class SubgroupTable:
    """All subgroups of a small group, as bitmasks over an element list."""

    def __init__(self, G):
        if G.order() > caps.max_subgroup_order:
            raise ResourceError(
                f"group order {G.order()} exceeds the subgroup enumeration cap {caps.max_subgroup_order}"
            )
        self.group = G
        self.elements = list(G.chain.elements())
        self.index = {g: i for i, g in enumerate(self.elements)}
        idx = self.index
        els = self.elements
        self.table = [[idx[mul(a, b)] for b in els] for a in els]
        self.inverse = [idx[inv(a)] for a in els]
        self.identity = idx[tuple(range(G.degree))]
        self._groups = {}
        self.masks = self._enumerate()

    def closure(self, gens):
        t = self.table
        mask = 1 << self.identity
        elems = [self.identity]
        gens = list(gens)
        for x in elems:
            for g in gens:
                y = t[x][g]
                if not mask >> y & 1:
                    mask |= 1 << y
                    elems.append(y)
        return mask

    def _enumerate(self):
        cyclic = {}
        for i in range(len(self.elements)):
            m = self.closure([i])
            cyclic.setdefault(m, i)
        subs = set(cyclic)
        queue = list(subs)
        gens_of = {m: [i] for m, i in cyclic.items()}
        for m in queue:
            for c, i in cyclic.items():
                if c & ~m:
                    j = self.closure(gens_of[m] + [i])
                    if j not in subs:
                        subs.add(j)
                        gens_of[j] = gens_of[m] + [i]
                        queue.append(j)
        self.gens_of = gens_of
        return sorted(subs, key=lambda m: bin(m).count("1"))

    def mask_of(self, H):
        m = 0
        for g in H.elements():
            m |= 1 << self.index[tuple(g)]
        return m

    def group_of(self, mask):
        X = self._groups.get(mask)
        if X is None:
            gens = [Permutation._raw(self.elements[i]) for i in self.gens_of[mask]]
            X = PermGroup(self.group.degree, gens)
            self._groups[mask] = X
        return X

    def is_normal_in(self, a, b):
        """Subgroup a is normal in subgroup b (a <= b assumed)."""
        t, iv = self.table, self.inverse
        a_el = [i for i in range(len(self.elements)) if a >> i & 1]
        for g in self.gens_of[b]:
            gi = iv[g]
            for x in a_el:
                if not a >> t[t[gi][x]][g] & 1:
                    return False
        return True


_tables = {}


def subgroup_table(G):
    key = G.key
    if key not in _tables:
        _tables.clear()
        _tables[key] = SubgroupTable(G)
    return _tables[key]


def all_subgroups(G):
    T = subgroup_table(G)
    return [T.group_of(m) for m in T.masks]


def kf_subnormal_set(G, f, kind="k"):
    """Bitmasks of every (K-)F-subnormal subgroup of G.

    A step A < B is allowed when B's F-residual lies in A (equivalently
    B/Core_B(A) lies in F); for kind "k" also when A is normal in B.
    """
    if kind not in ("k", "f"):
        raise InputError(f"kind must be 'k' or 'f', got {kind!r}")
    T = subgroup_table(G)
    res = {}

    def residual_mask(b):
        if b not in res:
            B = T.group_of(b)
            res[b] = T.mask_of(brute_residual(B, f))
        return res[b]

    full = T.masks[-1]
    good = {full}
    changed = True
    while changed:
        changed = False
        for a in T.masks:
            if a in good:
                continue
            for b in list(good):
                if b == a or a & ~b:
                    continue
                if residual_mask(b) & ~a == 0 or (kind == "k" and T.is_normal_in(a, b)):
                    good.add(a)
                    changed = True
                    break
    return good


_sets = {}


def brute_kf_subnormal(G, H, f, kind="k"):
    """Definition-level test: is there a chain of allowed steps from H up to G?"""
    if not H.is_subgroup_of(G):
        raise InputError("subgroup is not contained in the group")
    if H.order() == G.order():
        return True
    T = subgroup_table(G)
    key = (G.key, f, kind)
    if key not in _sets:
        _sets.clear()
        _sets[key] = kf_subnormal_set(G, f, kind)
    return T.mask_of(H) in _sets[key]


def is_subnormal_brute(G, H):
    """Classical subnormality via a chain of normal steps through all subgroups."""
    T = subgroup_table(G)
    good = {T.masks[-1]}
    changed = True
    while changed:
        changed = False
        for a in T.masks:
            if a in good:
                continue
            if any(a & ~b == 0 and T.is_normal_in(a, b) for b in good):
                good.add(a)
                changed = True
    return T.mask_of(H) in good


def brute_class_residual(G, cls, lat=None):
    """Residual of a Sylow subnormality class by sweeping the normal lattice.

    G/K is tested through the definition: for each prime p in the class's set,
    PK must be reachable from G by allowed steps (brute_kf_subnormal).
    """
    from .groups import primes_of, sylow

    lat = _lattice(G, lat)
    primes = sorted(cls.pi & primes_of(G))

    def ok(K):
        return all(
            brute_kf_subnormal(G, join(sylow(G, p), K), cls.f, cls.kind) for p in primes
        )

    good = [M for M in lat.members if ok(M)]
    least = good[0]
    for M in good:
        if not least.is_subgroup_of(M):
            raise InternalError("class is not closed under subdirect products on this group")
    return least
