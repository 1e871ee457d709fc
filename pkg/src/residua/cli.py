"""The ``residua`` command line tool.

Exit codes: 0 success or true, 1 false, 2 input error, 3 capability error,
4 resource error, 5 failed internal self-check.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import oracle
from .errors import InputError, ResiduaError, ResourceError, caps
from .expr import parse_formation
from .formations import ChiefFunction
from .groups import NormalSection, is_prime, primes_of, trivial_group
from .io import CORPUS_DIR, corpus_names, load_corpus, parse_subgroup, read_group_file
from .perm import format_cycles
from .series import chief_series, nonabelian_decomposition, p_decomposition
from .subnormal import is_k_f_subnormal, is_f_subnormal


def _gens(G):
    return [format_cycles(g) for g in G.generators] or ["()"]


def _group_json(G):
    return {"order": str(G.order()), "generators": _gens(G)}


def _factor_info(G, H, K):
    sec = NormalSection(G, H, K)
    return {"order": str(sec.index()), "abelian": sec.is_abelian()}


def _load(path, args):
    gf = read_group_file(path)
    limit = args.max_order
    if limit is not None and gf.group.order() > limit:
        raise ResourceError(f"{path}: group order {gf.group.order()} exceeds --max-order {limit}")
    return gf


def _formation(args):
    if not args.formation:
        raise InputError("this command needs --formation")
    return parse_formation(args.formation)


def _subgroup(gf, args):
    if getattr(args, "sub", None):
        H = parse_subgroup(args.sub, gf.group.degree)
        if not H.is_subgroup_of(gf.group):
            raise InputError("--sub generators do not lie in the group")
        return H
    if gf.sub is None:
        raise InputError(f"{gf.path}: no 'sub:' lines and no --sub given")
    return gf.sub


def _mod(gf, args):
    if not args.mod:
        return trivial_group(gf.group.degree)
    K = parse_subgroup(args.mod, gf.group.degree, "--mod")
    G = gf.group
    if not (K.is_subgroup_of(G) and K.is_normal_in(G)):
        raise InputError("--mod does not give a normal subgroup of the group")
    return K


# -- commands: each returns (result dict, text lines, truth value or None) ----------

def cmd_info(gf, args):
    G = gf.group
    cs = chief_series(G, seed=args.seed)
    factors = [_factor_info(G, H, K) for H, K in cs.factors()]
    res = {
        "order": str(G.order()),
        "degree": G.degree,
        "primes": sorted(primes_of(G)),
        "chief_series": [str(o) for o in cs.orders()],
        "chief_factors": factors,
    }
    text = [
        f"order: {G.order()}",
        f"primes: {' '.join(map(str, res['primes'])) or '-'}",
        "chief factors: "
        + (", ".join(f"{f['order']}{'' if f['abelian'] else ' (non-abelian)'}" for f in factors) or "-"),
    ]
    return res, text, None


def cmd_residual(gf, args):
    f = _formation(args)
    R = f.residual(gf.group, args.seed)
    return _group_json(R), [f"order: {R.order()}"] + [f"gen: {g}" for g in _gens(R)], None


def cmd_member(gf, args):
    f = _formation(args)
    K = _mod(gf, args)
    ok = f.member_mod(gf.group, K, args.seed)
    return {"member": ok}, ["true" if ok else "false"], ok


def cmd_subnormal(gf, args):
    f = _formation(args)
    H = _subgroup(gf, args)
    fn = is_k_f_subnormal if args.kind == "k" else is_f_subnormal
    ok, trace = fn(gf.group, H, f, args.seed)
    orders = [str(o) for o in trace.orders()]
    return (
        {"subnormal": ok, "kind": args.kind, "chain": orders},
        ["true" if ok else "false", "chain: " + " > ".join(orders)],
        ok,
    )


def cmd_chief_series(gf, args):
    G = gf.group
    cs = chief_series(G, seed=args.seed)
    terms = [_group_json(T) for T in cs.terms]
    factors = [_factor_info(G, H, K) for H, K in cs.factors()]
    text = [f"{T.order()}" for T in cs.terms]
    return {"terms": terms, "factors": factors}, ["orders: " + " > ".join(text)], None


def cmd_decompose(gf, args):
    G = gf.group
    N = parse_subgroup(args.sub, G.degree) if args.sub else G
    if not (N.is_subgroup_of(G) and N.is_normal_in(G)):
        raise InputError("the subgroup to decompose is not normal in the group")
    if args.prime is None:
        dec = nonabelian_decomposition(G, N, args.seed)
    else:
        if not is_prime(args.prime):
            raise InputError(f"--prime {args.prime} is not a prime")
        dec = p_decomposition(G, N, args.prime, args.seed)
    res = {"residual": _group_json(dec.residual), "minimals": [_group_json(M) for M in dec.minimals]}
    text = [f"residual order: {dec.residual.order()}",
            "minimal orders: " + (" ".join(str(M.order()) for M in dec.minimals) or "-")]
    return res, text, None


def cmd_oracle(gf, args):
    G = gf.group
    f = _formation(args)
    what = args.what
    if what == "residual":
        if isinstance(f, ChiefFunction):
            R = oracle.brute_residual(G, f)
        else:
            R = oracle.brute_class_residual(G, f)
        return _group_json(R), [f"order: {R.order()}"] + [f"gen: {g}" for g in _gens(R)], None
    if what == "member":
        K = _mod(gf, args)
        if isinstance(f, ChiefFunction):
            lat = oracle.normal_lattice(G)
            ok = oracle.brute_member(G, K, f, lat)
        else:
            ok = oracle.brute_class_residual(G, f).is_subgroup_of(K)
        return {"member": ok}, ["true" if ok else "false"], ok
    H = _subgroup(gf, args)
    if not isinstance(f, ChiefFunction) or not f.hereditary:
        from .errors import CapabilityError

        raise CapabilityError(f"{f.name} is not known to be hereditary")
    ok = oracle.brute_kf_subnormal(G, H, f, args.kind)
    return {"subnormal": ok, "kind": args.kind}, ["true" if ok else "false"], ok


COMMANDS = {
    "info": cmd_info,
    "residual": cmd_residual,
    "member": cmd_member,
    "subnormal": cmd_subnormal,
    "chief-series": cmd_chief_series,
    "decompose": cmd_decompose,
    "oracle": cmd_oracle,
}


def _run_one(command, path, args):
    """Returns (exit code, stdout text, stderr text) for one input file."""
    try:
        gf = _load(path, args)
        res, text, truth = COMMANDS[command](gf, args)
    except ResiduaError as e:
        return e.exit_code, "", f"residua: {e}\n"
    code = 0 if truth is None or truth else 1
    if args.json:
        res = {"file": path, **res}
        out = json.dumps(res, sort_keys=True) + "\n"
    else:
        head = f"{path}:\n" if args.many else ""
        out = head + "".join(f"{'  ' if args.many else ''}{line}\n" for line in text)
    return code, out, ""


def _run_star(item):
    args = item[2]
    saved = caps.max_lattice_order
    if args.max_order is not None:
        caps.max_lattice_order = min(saved, args.max_order)
    try:
        return _run_one(*item)
    finally:
        caps.max_lattice_order = saved


def regen_fixtures(args):
    """Recompute the corpus sidecar files from the oracle, checking the fast path."""
    from .fixtures import expected_values

    names = args.files or corpus_names()
    for name in names:
        gf = load_corpus(name)
        data = expected_values(gf.group, name)
        path = CORPUS_DIR / f"{name}.expected.json"
        path.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n", encoding="utf-8")
        print(f"wrote {path.name}")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="residua",
        description="Formation residuals, quotient membership and F-subnormality for permutation groups.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--formation", "-f", help="formation expression, e.g. 'meet(nilpotent,supersoluble)'")
    common.add_argument("--kind", choices=("k", "f"), default="k", help="K-F-subnormality (k) or F-subnormality (f)")
    common.add_argument("--mod", help="generators of a normal subgroup to factor out, separated by ';'")
    common.add_argument("--sub", help="generators of a subgroup, overriding the file's 'sub:' lines")
    common.add_argument("--prime", type=int, help="prime for 'decompose' (default: non-abelian decomposition)")
    common.add_argument("--json", action="store_true", help="one JSON object per input file")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized subroutines (default 0)")
    common.add_argument("--max-order", type=int, help="refuse groups larger than this")
    common.add_argument("--jobs", type=int, default=1, help="process several input files in parallel")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")
    helps = {
        "info": "order, primes and chief factors",
        "residual": "the F-residual",
        "member": "is G (or G/mod) in F",
        "subnormal": "is the 'sub:' subgroup (K-)F-subnormal",
        "chief-series": "a chief series",
        "decompose": "non-abelian or p-decomposition of a normal subgroup",
    }
    for name, h in helps.items():
        p = sub.add_parser(name, parents=[common], help=h)
        p.add_argument("files", nargs="+", help="group files")
    p = sub.add_parser("oracle", parents=[common], help="brute-force reference computations")
    p.add_argument("what", choices=("residual", "member", "subnormal"))
    p.add_argument("files", nargs="+")
    p = sub.add_parser("regen-fixtures", help="rewrite the bundled corpus sidecar files")
    p.add_argument("files", nargs="*", help="corpus names (default: all)")
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "regen-fixtures":
        return regen_fixtures(args)
    if args.seed < 0 or args.seed >= 2**64:
        print("residua: --seed must be an unsigned 64-bit integer", file=sys.stderr)
        return 2
    if args.max_order is not None and args.max_order < 1:
        print("residua: --max-order must be positive", file=sys.stderr)
        return 2
    if args.jobs < 1:
        print("residua: --jobs must be positive", file=sys.stderr)
        return 2
    args.many = len(args.files) > 1
    items = [(args.command, path, args) for path in args.files]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            results = list(ex.map(_run_star, items))
    else:
        results = [_run_star(item) for item in items]
    code = 0
    for rc, out, err in results:
        sys.stdout.write(out)
        sys.stderr.write(err)
        if rc > 1:
            code = max(code, rc)
        elif rc == 1 and code == 0:
            code = 1
    return code


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
