"""Subnormality with respect to a hereditary formation, and the classes of
groups whose Sylow subgroups for a set of primes are (K-)F-subnormal.
"""

from dataclasses import dataclass

from .errors import CapabilityError, InputError, InternalError, check_chain
from .formations import ChiefFunction, Formation
from .groups import is_prime, join, normal_closure, o_p, primes_of, sylow, trivial_group


@dataclass(frozen=True)
class DescentTrace:
    chain: tuple
    verdict: bool
    terminal: object

    def orders(self):
        return [X.order() for X in self.chain]


def _check(G, H, f):
    if not getattr(f, "hereditary", False):
        raise CapabilityError(f"{f.name} is not known to be hereditary; subnormality tests need it")
    if H.degree != G.degree or not H.is_subgroup_of(G):
        raise InputError("the subgroup is not contained in the group")


def _descend(G, H, f, use_normal_steps, seed):
    _check(G, H, f)
    chain = [G]
    cur = G
    h = H.order()
    while cur.order() != h:
        X = join(H, f.residual(cur, seed))
        if X.order() == cur.order() and use_normal_steps:
            X = normal_closure(cur, H.generators)
        if X.order() == cur.order():
            return False, DescentTrace(tuple(chain), False, cur)
        cur = X
        chain.append(cur)
        check_chain(len(chain) - 1, G.degree, "subnormality descent")
    return True, DescentTrace(tuple(chain), True, cur)


def is_k_f_subnormal(G, H, f, seed=0):
    """(verdict, trace): descend through H*X^F, then through H^X when that stalls."""
    return _descend(G, H, f, True, seed)


def is_f_subnormal(G, H, f, seed=0):
    """(verdict, trace): descend only through H*X^F."""
    return _descend(G, H, f, False, seed)


def is_subnormal(G, H):
    """Classical subnormality via the series H^G, H^(H^G), ..."""
    if not H.is_subgroup_of(G):
        raise InputError("the subgroup is not contained in the group")
    cur = G
    steps = 0
    while True:
        X = normal_closure(cur, H.generators)
        if X.order() == cur.order():
            return cur.order() == H.order()
        cur = X
        steps += 1
        check_chain(steps, G.degree, "normal closure series")


class SylowSubnormalClass(Formation):
    """Groups whose Sylow p-subgroups, p in pi, are K-F-subnormal (kind 'k')
    or F-subnormal (kind 'f')."""

    def __init__(self, f, pi, kind="k"):
        if kind not in ("k", "f"):
            raise InputError(f"kind must be 'k' or 'f', got {kind!r}")
        if not isinstance(f, ChiefFunction):
            raise CapabilityError("the base formation must be given by a chief factor function")
        if not f.hereditary:
            raise CapabilityError(f"{f.name} is not known to be hereditary")
        pi = frozenset(pi)
        for p in pi:
            if not is_prime(p):
                raise InputError(f"{p!r} is not a prime")
        self.f = f
        self.pi = pi
        self.kind = kind
        atom = "sylwk" if kind == "k" else "sylw"
        self.name = f"{atom}({f.name},{' '.join(map(str, sorted(pi)))})"
        self.hereditary = False
        self._residuals = {}
        # passes of the guard loop used by the last residual computation
        self.last_passes = 0

    def __repr__(self):
        return f"<SylowSubnormalClass {self.name}>"

    def _test(self, G, H, seed):
        fn = is_k_f_subnormal if self.kind == "k" else is_f_subnormal
        return fn(G, H, self.f, seed)

    def _failures(self, G, K, seed):
        """(p, trace) for each prime whose Sylow subgroup fails modulo K."""
        out = []
        for p in sorted(self.pi & primes_of(G)):
            P = join(sylow(G, p, seed), K)
            ok, trace = self._test(G, P, seed)
            if not ok:
                out.append((p, trace))
        return out

    def member_mod(self, G, K, seed=0):
        """G/K is in the class: each PK/K is (K-)F-subnormal in G/K, tested upstairs."""
        if not (K.is_subgroup_of(G) and K.is_normal_in(G)):
            raise InputError("the subgroup to factor out is not normal")
        return not self._failures(G, K, seed)

    def residual(self, G, seed=0):
        key = (G.key, seed)
        if key in self._residuals:
            return self._residuals[key]
        R = trivial_group(G.degree)
        passes = 0
        while True:
            fails = self._failures(G, R, seed)
            if not fails:
                break
            passes += 1
            check_chain(passes, G.degree, "Sylow class residual passes")
            gens = list(R.generators)
            for p, trace in fails:
                gens += o_p(trace.terminal, p, seed).generators
            R2 = normal_closure(G, gens)
            if R2.order() == R.order():
                raise InternalError("Sylow class residual made no progress")
            R = R2
        self.last_passes = passes
        self._residuals[key] = R
        return R


def sylow_subnorm_class(f, pi, kind="k"):
    return SylowSubnormalClass(f, pi, kind)
