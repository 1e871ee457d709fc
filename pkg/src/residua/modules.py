"""F_p G-modules coming from elementary abelian sections, and the submodule
machinery needed to split them: spinning, MeatAxe-style chopping,
homomorphism spaces, radicals and semisimple decompositions.

Vectors are rows and group elements act on the right: v -> v @ M_g.
"""

import random
from dataclasses import dataclass, field

import numpy as np

from . import gfp
from .errors import InputError, ResourceError, caps
from .groups import PermGroup, agemo_derived, is_prime, join
from .perm import Permutation, conj, inv, is_identity, mul, power


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F_p^d held as a reduced row echelon basis."""

    p: int
    ambient_dim: int
    basis: np.ndarray = field(repr=False)

    @classmethod
    def span(cls, p, d, vectors):
        vectors = [np.asarray(v, dtype=np.int64) for v in vectors]
        if not vectors:
            return cls.zero(p, d)
        r, _ = gfp.rref(np.array(vectors), p)
        return cls(p, d, r)

    @classmethod
    def zero(cls, p, d):
        return cls(p, d, np.zeros((0, d), dtype=np.int64))

    @classmethod
    def whole(cls, p, d):
        return cls(p, d, gfp.identity(d))

    @property
    def dim(self):
        return self.basis.shape[0]

    @property
    def pivots(self):
        return [int(np.nonzero(row)[0][0]) for row in self.basis]

    def reduce(self, v):
        v = np.asarray(v, dtype=np.int64) % self.p
        for row, c in zip(self.basis, self.pivots):
            if v[c]:
                v = (v - v[c] * row) % self.p
        return v

    def contains(self, v):
        return not self.reduce(v).any()

    def __contains__(self, v):
        return self.contains(v)

    def __add__(self, other):
        return Subspace.span(self.p, self.ambient_dim, list(self.basis) + list(other.basis))

    def intersect(self, other):
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.p, self.ambient_dim)
        p = self.p
        # x in other iff x @ ann = 0, ann = annihilator of other (as columns)
        ann = gfp.nullspace(other.basis, p).T
        if ann.shape[1] == 0:
            return self
        coeffs = gfp.left_nullspace(gfp.matmul(self.basis, ann, p), p)
        if coeffs.shape[0] == 0:
            return Subspace.zero(p, self.ambient_dim)
        return Subspace.span(p, self.ambient_dim, list(gfp.matmul(coeffs, self.basis, p)))

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.p == other.p
            and self.ambient_dim == other.ambient_dim
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.p, self.ambient_dim, self.basis.tobytes()))

    def complement_columns(self):
        piv = set(self.pivots)
        return [c for c in range(self.ambient_dim) if c not in piv]


class FpModule:
    """A d-dimensional F_p-module with one action matrix per acting generator.

    Modules built from a group section also carry the pullback data needed to
    translate between coordinate vectors and group elements.
    """

    def __init__(self, p, actions, dim=None, *, basis_pullback=None, section=None, gen_key=None):
        if not is_prime(p):
            raise InputError(f"{p!r} is not a prime")
        actions = [gfp.asmat(a, p) for a in actions]
        if dim is None:
            if not actions:
                raise InputError("dimension needed when there are no action matrices")
            dim = actions[0].shape[0]
        if dim > caps.max_module_dim:
            raise ResourceError(f"module dimension {dim} exceeds cap {caps.max_module_dim}")
        for a in actions:
            if a.shape != (dim, dim):
                raise InputError(f"action matrix of shape {a.shape}, expected {(dim, dim)}")
        self.p = p
        self.dim = dim
        self.actions = actions
        self.basis_pullback = basis_pullback
        self.section = section
        self.gen_key = gen_key if gen_key is not None else len(actions)
        self._coords = None

    def __repr__(self):
        return f"<FpModule p={self.p} dim={self.dim} gens={len(self.actions)}>"

    def act(self, v, i):
        return gfp.matmul(np.asarray(v, dtype=np.int64).reshape(1, -1), self.actions[i], self.p)[0]

    def submodule(self, W):
        """The action restricted to the invariant subspace W (in W's echelon basis)."""
        p = self.p
        piv = W.pivots
        mats = []
        for a in self.actions:
            img = gfp.matmul(W.basis, a, p)
            mats.append(img[:, piv])
        return FpModule(p, mats, W.dim, gen_key=self.gen_key)

    def quotient(self, W):
        """The induced action on V/W, in coordinates at the non-pivot columns of W."""
        p = self.p
        comp = W.complement_columns()
        mats = []
        for a in self.actions:
            rows = [W.reduce(a[c])[comp] for c in comp]
            mats.append(np.array(rows, dtype=np.int64).reshape(len(comp), len(comp)))
        return FpModule(p, mats, len(comp), gen_key=self.gen_key)

    def quotient_lift(self, W):
        """Matrix whose rows lift quotient coordinates back to V."""
        comp = W.complement_columns()
        lift = np.zeros((len(comp), self.dim), dtype=np.int64)
        for i, c in enumerate(comp):
            lift[i, c] = 1
        return lift

    def is_invariant(self, W):
        return all(W.contains(v) for a in self.actions for v in gfp.matmul(W.basis, a, self.p))

    def transpose(self):
        return FpModule(self.p, [a.T.copy() for a in self.actions], self.dim, gen_key=self.gen_key)

    # -- section pullbacks ----------------------------------------------------

    def coordinates(self, g):
        """Coordinate vector of the group element g modulo the section bottom."""
        if self._coords is None:
            raise InputError("module was not built from a group section")
        return self._coords(g)

    def pullback(self, v):
        """A group element representing the coordinate vector v."""
        if self.basis_pullback is None:
            raise InputError("module was not built from a group section")
        n = len(self.basis_pullback[0])
        x = tuple(range(n))
        for c, h in zip(np.asarray(v).tolist(), self.basis_pullback):
            if c % self.p:
                x = mul(x, power(h, int(c) % self.p))
        return Permutation._raw(x)


def section_to_module(G, H, K, p):
    """The elementary abelian section H/K as an F_p G-module under conjugation."""
    if not is_prime(p):
        raise InputError(f"{p!r} is not a prime")
    if H.order() == K.order():
        raise InputError("zero-dimensional section")
    if not K.is_subgroup_of(H):
        raise InputError("section bottom is not contained in top")
    if not agemo_derived(H, p).is_subgroup_of(K):
        raise InputError(f"section is not elementary abelian of exponent {p}")
    chain = [K]
    basis = []
    for h in H.generators:
        if not chain[-1].contains(h):
            basis.append(h)
            chain.append(join(chain[-1], PermGroup(H.degree, [h])))
    d = len(basis)
    if chain[-1].order() != H.order() or H.order() // K.order() != p**d:
        raise InputError("section generators do not span an elementary abelian quotient")
    binv = [inv(h) for h in basis]

    def coords(g):
        g = tuple(g)
        v = [0] * d
        for j in reversed(range(d)):
            x = g
            for c in range(p):
                if chain[j].contains(x):
                    v[j] = c
                    g = x
                    break
                x = mul(x, binv[j])
            else:
                raise InputError("element is not in the section top")
        if not is_identity(g) and not K.contains(g):
            raise InputError("element is not in the section top")
        return np.array(v, dtype=np.int64)

    mats = []
    for g in G.generators:
        mats.append(np.array([coords(conj(h, g)) for h in basis], dtype=np.int64).reshape(d, d))
    from .groups import NormalSection

    M = FpModule(
        p, mats, d, basis_pullback=basis, section=NormalSection(G, H, K), gen_key=G.key
    )
    M._coords = coords
    return M


# -- submodules -----------------------------------------------------------------

def spin(M, vectors):
    """Smallest invariant subspace containing the given vectors."""
    p = M.p
    ech = gfp.Echelon(M.dim, p)
    queue = []
    for v in vectors:
        r = ech.add(v)
        if r is not None:
            queue.append(r)
    while queue and len(ech) < M.dim:
        v = queue.pop()
        for a in M.actions:
            r = ech.add(gfp.matmul(v.reshape(1, -1), a, p)[0])
            if r is not None:
                queue.append(r)
    return Subspace.span(p, M.dim, ech.rows)


def annihilator(p, d, U):
    """{x : x . u = 0 for all u in U}."""
    if U.dim == 0:
        return Subspace.whole(p, d)
    return Subspace.span(p, d, list(gfp.nullspace(U.basis, p)))


_MAX_POINTS = 2000


class _AlgebraSampler:
    """Random elements of the enveloping algebra: random combinations of random words."""

    def __init__(self, M, rng):
        self.M = M
        self.rng = rng
        self.words = [a for a in M.actions] or [gfp.identity(M.dim)]

    def next(self):
        M, rng, p = self.M, self.rng, self.M.p
        a, b = rng.choice(self.words), rng.choice(self.words)
        self.words.append(gfp.matmul(a, b, p))
        if len(self.words) > 12:
            self.words.pop(rng.randrange(len(self.words) - 4))
        x = rng.randrange(p) * gfp.identity(M.dim)
        for w in rng.sample(self.words, min(4, len(self.words))):
            x = x + rng.randrange(p) * w
        return x % p


def find_submodule(M, rng, tries=200):
    """A proper nonzero invariant subspace, or None when M is certified simple."""
    if M.dim <= 1:
        return None
    p, d = M.p, M.dim
    sampler = _AlgebraSampler(M, rng)
    MT = None
    for _ in range(tries):
        A = sampler.next()
        ker = gfp.left_nullspace(A, p)
        k = ker.shape[0]
        if k == 0 or (p**k - 1) // (p - 1) > _MAX_POINTS:
            continue
        for v in gfp.projective_points(ker, p):
            W = spin(M, [v])
            if W.dim < d:
                return W
        if MT is None:
            MT = M.transpose()
        kerT = gfp.left_nullspace(A.T, p)
        for w in gfp.projective_points(kerT, p):
            U = spin(MT, [w])
            if U.dim < d:
                return annihilator(p, d, U)
        # every kernel vector of A and of its transpose spins to the whole space
        return None
    if (p**d - 1) // (p - 1) > 3**12:
        raise ResourceError(f"MeatAxe retry budget exhausted on a {d}-dimensional module over F_{p}")
    for v in gfp.projective_points(gfp.identity(d), p):
        W = spin(M, [v])
        if W.dim < d:
            return W
    return None


def is_simple(M, seed=0):
    return find_submodule(M, random.Random(seed)) is None


def chop(M, seed=0):
    """Composition factors of M, with multiplicity."""
    rng = random.Random(seed)
    out = []
    stack = [M]
    while stack:
        X = stack.pop()
        W = find_submodule(X, rng)
        if W is None:
            out.append(X)
        else:
            stack.append(X.quotient(W))
            stack.append(X.submodule(W))
    return out


def hom_space(M, S):
    """Basis of Hom(M, S): matrices X (dim M x dim S) with M_g X = X S_g for all g."""
    if M.p != S.p:
        raise InputError("modules over different fields")
    if len(M.actions) != len(S.actions) or M.gen_key != S.gen_key:
        raise InputError("modules for different generator lists")
    p = M.p
    dm, ds = M.dim, S.dim
    if not M.actions:
        return [v.reshape(dm, ds) for v in gfp.identity(dm * ds)]
    eqs = [
        (np.kron(a, gfp.identity(ds)) - np.kron(gfp.identity(dm), b.T)) % p
        for a, b in zip(M.actions, S.actions)
    ]
    sol = gfp.nullspace(np.concatenate(eqs, axis=0), p)
    return [v.reshape(dm, ds) for v in sol]


def is_isomorphic_simple(S, T):
    """Isomorphism test for two simple modules: a nonzero homomorphism exists."""
    return S.dim == T.dim and bool(hom_space(S, T))


def simple_types(factors):
    types = []
    for F in factors:
        if not any(is_isomorphic_simple(F, T) for T in types):
            types.append(F)
    return types


def radical(M, seed=0):
    """Intersection of all maximal submodules, via kernels of maps onto simple factors."""
    p, d = M.p, M.dim
    R = Subspace.whole(p, d)
    for S in simple_types(chop(M, seed)):
        for X in hom_space(M, S):
            R = R.intersect(Subspace.span(p, d, list(gfp.left_nullspace(X, p))))
            if R.dim == 0:
                return R
    return R


def semisimple_decompose(M, seed=0):
    """Minimal submodules whose direct sum is M (M must be semisimple)."""
    p, d = M.p, M.dim
    if radical(M, seed).dim != 0:
        raise InputError("module is not semisimple")
    parts = []
    total = Subspace.zero(p, d)
    for S in simple_types(chop(M, seed)):
        for X in hom_space(S, M):
            img = Subspace.span(p, d, list(X))
            if img.dim == 0:
                continue
            bigger = total + img
            if bigger.dim == total.dim + img.dim:
                parts.append(img)
                total = bigger
        if total.dim == d:
            break
    if total.dim != d:
        raise InputError("module is not semisimple")
    return parts
