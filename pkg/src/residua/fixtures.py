"""Expected values for the bundled corpus, computed by the oracle.

Every value is also recomputed by the fast path; a disagreement aborts the
regeneration instead of freezing a wrong fixture.
"""

from . import oracle
from .errors import InternalError
from .formations import BUILTIN_NAMES, PARAMETRIZED, builtin
from .groups import primes_of
from .subnormal import sylow_subnorm_class

SYLOW_CLASS_ORDER_CAP = 200


def atoms(G):
    """(expression, formation) pairs exercised for G."""
    out = []
    for name in BUILTIN_NAMES:
        if name in PARAMETRIZED:
            for p in (2, 3, 5):
                out.append((f"{name}({p})", builtin(name, p)))
        else:
            out.append((name, builtin(name)))
    if G.order() <= SYLOW_CLASS_ORDER_CAP:
        for base in ("supersoluble", "nilpotent"):
            for kind in ("k", "f"):
                for pi in ((2,), (2, 3)):
                    atom = "sylwk" if kind == "k" else "sylw"
                    expr = f"{atom}({base},{' '.join(map(str, pi))})"
                    out.append((expr, sylow_subnorm_class(builtin(base), set(pi), kind)))
    return out


def expected_values(G, name=None):
    lat = oracle.normal_lattice(G)
    chain = oracle.maximal_chain(G, lat.members[0], lat)
    residuals = {}
    for expr, f in atoms(G):
        if hasattr(f, "evaluate"):
            R = oracle.brute_residual(G, f, lat)
        else:
            R = oracle.brute_class_residual(G, f, lat)
        fast = f.residual(G)
        if fast != R:
            raise InternalError(
                f"{name}: {expr} residual disagrees (fast {fast.order()}, oracle {R.order()})"
            )
        residuals[expr] = str(R.order())
    return {
        "name": name,
        "order": str(G.order()),
        "primes": sorted(primes_of(G)),
        "normal_subgroup_orders": [str(o) for o in lat.orders()],
        "chief_factor_orders": sorted(str(H.order() // K.order()) for H, K in zip(chain, chain[1:])),
        "residual_orders": residuals,
    }
