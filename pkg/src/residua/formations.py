"""Formations given by chief factor functions, and their residuals.

A chief factor function f assigns 0 or 1 to a chief factor H/K of G (given as
a :class:`NormalSection`); the class C(f) holds the groups all of whose chief
factors get 1.  The residual G^F is computed by peeling semisimple layers off
from the top (see :func:`residual`).
"""

from .errors import CapabilityError, InputError, InternalError, check_chain
from .groups import (
    NormalSection,
    PermGroup,
    centralizer_section,
    is_prime,
    join,
    normal_closure,
    o_p,
    primes_of,
    sylow,
    trivial_group,
)
from .perm import comm, is_identity, power
from .series import chief_series, nonabelian_decomposition, nonabelian_residual, p_decomposition


class Formation:
    """Anything with a residual; quotient membership follows from it."""

    name = "formation"
    hereditary = False

    def residual(self, G, seed=0):
        raise NotImplementedError

    def member_mod(self, G, K, seed=0):
        return member_mod(G, K, self, seed)

    def __str__(self):
        return self.name


class ChiefFunction(Formation):
    """A 0/1 evaluator on chief factors, plus optional local data.

    ``local(p, G)`` returns G^{f(p)}; ``baer0(G)`` returns G^{f(0)}.
    Evaluations are memoized; the evaluator must be a pure function.
    """

    def __init__(self, name, evaluate, *, hereditary=False, local=None, baer0=None):
        self.name = name
        self._evaluate = evaluate
        self.hereditary = hereditary
        self.local = local
        self.baer0 = baer0
        self._values = {}
        self._residuals = {}

    def __repr__(self):
        return f"<ChiefFunction {self.name}>"

    def evaluate(self, sec):
        key = sec.key
        v = self._values.get(key)
        if v is None:
            v = bool(self._evaluate(sec))
            self._values[key] = v
        return v

    __call__ = evaluate

    def residual(self, G, seed=0):
        key = (G.key, seed)
        R = self._residuals.get(key)
        if R is None:
            R = _fresidual(G, self, seed)
            self._residuals[key] = R
        return R


# -- core algorithms -----------------------------------------------------------

def evaluate(f, sec):
    return f.evaluate(sec)


def residual_part(G, N, dec, f):
    """Join of the decomposition's residual with every piece on which f is 0."""
    T = dec.residual
    for M in dec.minimals:
        if not f.evaluate(NormalSection(G, M, dec.residual)):
            T = join(T, M)
    return T


def residual(G, f, seed=0):
    """G^F for the formation f."""
    return f.residual(G, seed)


def _fresidual(G, f, seed, verify=True):
    K = G
    rounds = 0
    while True:
        N = K
        K = residual_part(G, K, nonabelian_decomposition(G, K, seed), f)
        for p in sorted(primes_of(K)):
            K = residual_part(G, K, p_decomposition(G, K, p, seed), f)
        if K.order() == N.order():
            break
        rounds += 1
        check_chain(rounds, G.degree, "residual iteration")
    if verify:
        for H, L in chief_series(G, G, K, seed).factors():
            if not f.evaluate(NormalSection(G, H, L)):
                raise InternalError(
                    f"{f.name}: a chief factor of order {H.order() // L.order()} above the "
                    "computed residual evaluates to 0; the evaluator is not a chief factor function"
                )
    return K


def member(G, f, seed=0):
    return f.residual(G, seed).order() == 1


def member_mod(G, K, f, seed=0):
    """Whether G/K lies in the formation (K must be normal in G)."""
    if not (K.is_subgroup_of(G) and K.is_normal_in(G)):
        raise InputError("the subgroup to factor out is not normal")
    return join(f.residual(G, seed), K).order() == K.order()


# -- helpers -------------------------------------------------------------------

def _centralizes(X, H, K):
    """[X, H] <= K, for X, H, K normal in a common group."""
    return all(K.contains(comm(x, h)) for x in X.generators for h in H.generators)


def _index_primes(sec):
    idx = sec.index()
    return [p for p in range(2, sec.ambient.degree + 1) if idx % p == 0 and is_prime(p)]


def _prime_power_of(idx, p):
    while idx % p == 0:
        idx //= p
    return idx == 1


def _rad(m):
    r = 1
    q = 2
    while q * q <= m:
        if m % q == 0:
            r *= q
            while m % q == 0:
                m //= q
        q += 1
    return r * m if m > 1 else r


_memo = {}


def _memoized(tag, G, p, compute):
    key = (tag, G.key, p)
    X = _memo.get(key)
    if X is None:
        if len(_memo) > 4096:
            _memo.clear()
        X = compute()
        _memo[key] = X
    return X


def _sylows(G):
    return {q: _memoized("sylow", G, q, lambda q=q: sylow(G, q)) for q in sorted(primes_of(G))}


def _closure(G, elems):
    elems = [x for x in elems if not is_identity(x)]
    return normal_closure(G, elems) if elems else trivial_group(G.degree)


def _comm_and_powers(gens, e):
    gens = list(gens)
    out = [comm(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    out += [power(a, e) for a in gens]
    return out


# -- constructions -------------------------------------------------------------

def local_formation(name, residual_fn, hereditary=False):
    """C(f) for a local definition with G^{f(p)} = residual_fn(p, G)."""

    def ev(sec):
        G = sec.ambient
        return all(_centralizes(residual_fn(p, G), sec.top, sec.bottom) for p in _index_primes(sec))

    return ChiefFunction(name, ev, hereditary=hereditary, local=residual_fn)


def baer_local_formation(name, residual_fn, residual0, hereditary=False):
    """Baer-local: p-factors use G^{f(p)}, non-abelian factors use G^{f(0)}."""

    def ev(sec):
        G, H, K = sec.ambient, sec.top, sec.bottom
        if sec.is_abelian():
            p = _index_primes(sec)[0]
            return _centralizes(residual_fn(p, G), H, K)
        return _centralizes(residual0(G), H, K)

    return ChiefFunction(name, ev, hereditary=hereditary, local=residual_fn, baer0=residual0)


def canonical_local_residual(f, G, p, seed=0):
    """G^{F(p)} for the canonical local definition: O^p(G^{f(p)} G^F)."""
    if f.local is None:
        raise CapabilityError(f"{f.name} carries no local definition")
    return o_p(join(f.local(p, G), f.residual(G, seed)), p, seed)


def is_f_central(f, sec, seed=0):
    G = sec.ambient
    return all(
        _centralizes(canonical_local_residual(f, G, p, seed), sec.top, sec.bottom)
        for p in _index_primes(sec)
    )


def quasi(f):
    """F*: factors that are F-central or on which G induces only inner automorphisms."""
    if getattr(f, "local", None) is None:
        raise CapabilityError(f"quasi() needs a local definition; {f.name} has none")

    def ev(sec):
        if is_f_central(f, sec):
            return True
        C = centralizer_section(sec.ambient, sec)
        return join(sec.top, C).order() == sec.ambient.order()

    return ChiefFunction(f"quasi({f.name})", ev)


def meet(f1, f2):
    _require_chief(f1, f2)
    return ChiefFunction(f"meet({f1.name},{f2.name})", lambda s: f1.evaluate(s) and f2.evaluate(s))


def join_formations(f1, f2):
    _require_chief(f1, f2)
    return ChiefFunction(f"join({f1.name},{f2.name})", lambda s: f1.evaluate(s) or f2.evaluate(s))


def complement(f):
    _require_chief(f)
    return ChiefFunction(f"not({f.name})", lambda s: not f.evaluate(s))


def _require_chief(*fs):
    for f in fs:
        if not isinstance(f, ChiefFunction):
            raise CapabilityError(f"{f.name} is not given by a chief factor function")


# -- builtin catalog -----------------------------------------------------------

def _f_supersoluble(p, G):
    return _memoized("U", G, p, lambda: _closure(G, _comm_and_powers(G.generators, p - 1)))


def _f_ssupersoluble(p, G):
    return _memoized("sU", G, p, lambda: _closure(G, _comm_and_powers(G.generators, _rad(p - 1))))


def _sylow_union(G, p, exponent):
    elems = []
    for P in _sylows(G).values():
        if exponent is None:
            gens = list(P.generators)
            elems += [comm(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
        else:
            elems += _comm_and_powers(P.generators, exponent)
    return _closure(G, elems)


def _f_wsupersoluble(p, G):
    return _memoized("wU", G, p, lambda: _sylow_union(G, p, p - 1))


def _f_smsupersoluble(p, G):
    return _memoized("smU", G, p, lambda: _sylow_union(G, p, _rad(p - 1)))


def _f_na(p, G):
    return _memoized("NA", G, 0, lambda: _sylow_union(G, p, None))


def _f_shu(p, G):
    def compute():
        bad = {q for q in range(2, p) if (p - 1) % q == 0 and is_prime(q)}
        elems = [x for q, P in _sylows(G).items() if q not in bad for x in P.generators]
        return _closure(G, elems)

    return _memoized("shU", G, p, compute)


def _f_nilpotent(p, G):
    return G


def nilpotent():
    return local_formation("nilpotent", _f_nilpotent, hereditary=True)


def pgroups(p):
    if not is_prime(p):
        raise InputError(f"pgroups needs a prime, got {p!r}")
    return ChiefFunction(
        f"pgroups({p})", lambda sec: _prime_power_of(sec.index(), p), hereditary=True
    )


def noncentral(r):
    """Groups none of whose r-chief factors are central."""
    if not is_prime(r):
        raise InputError(f"noncentral needs a prime, got {r!r}")

    def ev(sec):
        if not _prime_power_of(sec.index(), r):
            return True
        return not _centralizes(sec.ambient, sec.top, sec.bottom)

    return ChiefFunction(f"noncentral({r})", ev)


def quasinilpotent():
    f = quasi(nilpotent())
    f.name = "quasinilpotent"
    return f


def quasinilpotent_baer():
    """The same class as a Baer-local formation: f(p) trivial groups, f(0) semisimple groups."""
    return baer_local_formation("quasinilpotent-baer", _f_nilpotent, nonabelian_residual)


_LOCAL = {
    "supersoluble": _f_supersoluble,
    "wsupersoluble": _f_wsupersoluble,
    "na": _f_na,
    "smsupersoluble": _f_smsupersoluble,
    "ssupersoluble": _f_ssupersoluble,
    "shu": _f_shu,
}

BUILTIN_NAMES = tuple(_LOCAL) + ("nilpotent", "quasinilpotent", "pgroups", "noncentral")
PARAMETRIZED = ("pgroups", "noncentral")

_instances = {}


def builtin(name, *params):
    """A builtin formation by name; pgroups and noncentral take one prime."""
    key = (name,) + tuple(params)
    if key in _instances:
        return _instances[key]
    if name in _LOCAL:
        _no_params(name, params)
        f = local_formation(name, _LOCAL[name], hereditary=True)
    elif name == "nilpotent":
        _no_params(name, params)
        f = nilpotent()
    elif name == "quasinilpotent":
        _no_params(name, params)
        f = quasinilpotent()
    elif name in PARAMETRIZED:
        if len(params) != 1:
            raise InputError(f"{name} takes exactly one prime")
        f = pgroups(params[0]) if name == "pgroups" else noncentral(params[0])
    else:
        raise InputError(f"unknown formation {name!r}")
    _instances[key] = f
    return f


def _no_params(name, params):
    if params:
        raise InputError(f"{name} takes no parameters")
