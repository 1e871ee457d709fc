"""Stabilizer chains (base and strong generating set) via Schreier-Sims.

Two constructions are provided.  The deterministic one checks every Schreier
generator and is always correct.  The randomized one is only used when the
group order is already known (base changes, kernels of actions on extended
domains): it sifts random elements until the product of the fundamental orbit
lengths reaches that order, so its output is verified by construction.
"""

import itertools
import random

from .perm import inv, is_identity, mul


class Level:
    __slots__ = ("point", "gens", "trans", "tinv")

    def __init__(self, point, gens, degree):
        self.point = point
        self.gens = list(gens)
        self.trans = {point: tuple(range(degree))}
        self.tinv = {}
        self.rebuild()

    def rebuild(self):
        # extend the existing orbit; transversal words already stored stay valid
        trans = self.trans
        queue = list(trans)
        for gamma in queue:
            u = trans[gamma]
            for s in self.gens:
                delta = s[gamma]
                if delta not in trans:
                    trans[delta] = mul(u, s)
                    queue.append(delta)

    def rep(self, gamma, degree=None):
        return self.trans[gamma]

    def rep_inv(self, gamma, degree=None):
        v = self.tinv.get(gamma)
        if v is None:
            v = inv(self.trans[gamma])
            self.tinv[gamma] = v
        return v

    def __len__(self):
        return len(self.trans)


class StabChain:
    """Base, strong generators and transversals of a permutation group."""

    def __init__(self, degree, gens, base=(), order=None, seed=0):
        self.degree = degree
        gens = _dedupe(g for g in gens if not is_identity(g))
        if order is not None and gens:
            self._build_random(gens, list(base), order, seed)
        else:
            self._build_deterministic(gens, list(base))
        # trailing trivial levels beyond the prescribed prefix carry no data
        while (
            len(self.levels) > len(base)
            and self.levels
            and len(self.levels[-1]) == 1
        ):
            self.levels.pop()

    # -- construction -------------------------------------------------------

    def _init_levels(self, gens, base):
        base = list(base)
        for g in gens:
            if all(g[b] == b for b in base):
                base.append(next(i for i in range(self.degree) if g[i] != i))
        self.levels = []
        for i, b in enumerate(base):
            fix = base[:i]
            self.levels.append(
                Level(b, [g for g in gens if all(g[c] == c for c in fix)], self.degree)
            )

    def _add_strong(self, h, top, depth):
        """Add h as a strong generator to levels top..depth (h fixes their base prefix)."""
        if depth == len(self.levels):
            moved = next(i for i in range(self.degree) if h[i] != i)
            self.levels.append(Level(moved, [], self.degree))
        for lev in self.levels[top:depth + 1]:
            lev.gens.append(h)
            lev.rebuild()

    def _build_deterministic(self, gens, base):
        self._init_levels(gens, base)
        n = self.degree
        i = len(self.levels) - 1
        while i >= 0:
            lev = self.levels[i]
            restart = False
            for gamma in list(lev.trans):
                u = lev.rep(gamma, n)
                for s in list(lev.gens):
                    delta = s[gamma]
                    sg = mul(mul(u, s), lev.rep_inv(delta, n))
                    if is_identity(sg):
                        continue
                    h, j = self._sift_from(sg, i + 1)
                    if not is_identity(h):
                        self._add_strong(h, i + 1, j)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    def _build_random(self, gens, base, order, seed):
        self._init_levels(gens, base)
        rng = random.Random(seed)
        pool = _Rattle(gens, rng)
        tries = 0
        while self.order() < order:
            tries += 1
            if tries > 5000 + 50 * order.bit_length() * self.degree:
                # order hint inconsistent with the generators; fall back
                self._build_deterministic(gens, base)
                return
            h, j = self._sift_from(pool.next(), 0)
            if not is_identity(h):
                # h fixes base[:j], so it is a strong generator at every level up to j
                self._add_strong(h, 0, j)
        if self.order() != order:
            self._build_deterministic(gens, base)

    # -- queries ------------------------------------------------------------

    def _sift_from(self, g, start):
        n = self.degree
        for j in range(start, len(self.levels)):
            lev = self.levels[j]
            gamma = g[lev.point]
            if gamma not in lev.trans:
                return g, j
            if gamma != lev.point:
                g = mul(g, lev.rep_inv(gamma, n))
        return g, len(self.levels)

    def sift(self, g):
        return self._sift_from(tuple(g), 0)

    def contains(self, g):
        if len(g) != self.degree:
            return False
        h, j = self._sift_from(tuple(g), 0)
        return j == len(self.levels) and is_identity(h)

    @property
    def base(self):
        return [lev.point for lev in self.levels]

    def orbit_lengths(self):
        return [len(lev) for lev in self.levels]

    def order(self):
        o = 1
        for lev in self.levels:
            o *= len(lev)
        return o

    def strong_gens(self):
        return _dedupe(g for lev in self.levels for g in lev.gens)

    def stabilizer_gens(self, depth):
        """Generators of the pointwise stabilizer of the first `depth` base points."""
        return _dedupe(g for lev in self.levels[depth:] for g in lev.gens)

    def random_element(self, rng):
        n = self.degree
        g = tuple(range(n))
        for lev in reversed(self.levels):
            gamma = rng.choice(list(lev.trans))
            g = mul(g, lev.rep(gamma, n))
        return g

    def elements(self):
        """Iterate over every element (products of transversal elements)."""
        n = self.degree
        reps = [[lev.rep(gamma, n) for gamma in lev.trans] for lev in self.levels]
        if not reps:
            yield tuple(range(n))
            return
        for combo in itertools.product(*reversed(reps)):
            g = combo[0]
            for u in combo[1:]:
                g = mul(g, u)
            yield g

    def lex_coset_rep(self, g):
        """Lexicographically least element of the right coset K*g.

        Only valid when every point is a base point, in increasing order; build
        the chain with ``base=range(degree)`` for this.
        """
        x = tuple(g)
        n = self.degree
        for lev in self.levels:
            if len(lev) == 1:
                continue
            best = min(lev.trans, key=x.__getitem__)
            if best != lev.point:
                x = mul(lev.rep(best, n), x)
        return x


class _Rattle:
    """Product-replacement random element generator."""

    def __init__(self, gens, rng, length=10, warmup=50):
        self.rng = rng
        pool = list(gens)
        while len(pool) < length:
            pool.extend(gens)
        self.pool = pool[:max(length, len(gens))]
        self.acc = tuple(range(len(gens[0])))
        for _ in range(warmup):
            self.next()

    def next(self):
        rng = self.rng
        k = len(self.pool)
        i = rng.randrange(k)
        j = rng.randrange(k - 1)
        if j >= i:
            j += 1
        other = self.pool[j] if rng.random() < 0.5 else inv(self.pool[j])
        if rng.random() < 0.5:
            self.pool[i] = mul(self.pool[i], other)
        else:
            self.pool[i] = mul(other, self.pool[i])
        self.acc = mul(self.acc, self.pool[i])
        return self.acc


def _dedupe(gens):
    seen = set()
    out = []
    for g in gens:
        g = tuple(g)
        if g not in seen:
            seen.add(g)
            out.append(g)
    return out
