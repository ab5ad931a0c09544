"""Command-line front end: ``stableclass <verb> [<subverb>] [flags]``.

Output is a table by default or a JSON envelope with ``--json``. Integers in
JSON are decimal strings. Exit codes: 0 success, 1 selftest failure,
2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Optional, Sequence

from . import acceptance, forms, jdata, manifolds, spinc
from .errors import InvalidArgument, StableClassError
from .exactmath import bernoulli_paper

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _stringify(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_stringify(v) for v in items]
    return str(obj)


def _int_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}") from None


def _sign(text: str) -> int:
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"sign must be + or -, got {text!r}")


# ---------------------------------------------------------------------------
# handlers return (result, provenance)

Result = tuple[Any, dict]


def _dimension_provenance(m: int) -> dict:
    return {"j_m": jdata.j_order(m), "c_m": jdata.c_factor(m)}


def cmd_bernoulli(args) -> Result:
    b = bernoulli_paper(args.n)
    return {"n": args.n, "value": str(b), "numerator": b.numerator, "denominator": b.denominator}, {}


def cmd_j_order(args) -> Result:
    return jdata.j_order(args.m), _dimension_provenance(args.m)


def cmd_bp_order(args) -> Result:
    return jdata.bp8_order(args.m), _dimension_provenance(args.m)


def _wall(args, suffix: str = "") -> Optional[manifolds.WallManifold]:
    alpha, beta = getattr(args, "alpha" + suffix), getattr(args, "beta" + suffix)
    a, b = getattr(args, "a" + suffix), getattr(args, "b" + suffix)
    obstruction = alpha is not None or beta is not None
    construction = a is not None or b is not None
    if obstruction and construction:
        raise UsageError(f"give either --alpha{suffix}/--beta{suffix} or --a{suffix}/--b{suffix}, not both")
    if obstruction:
        if alpha is None or beta is None:
            raise UsageError(f"--alpha{suffix} and --beta{suffix} go together")
        return manifolds.WallManifold(args.m, alpha, beta, bp_override=args.bp)
    if construction:
        if a is None or b is None:
            raise UsageError(f"--a{suffix} and --b{suffix} go together")
        return manifolds.wall_from_ab(args.m, a, b, bp_override=args.bp)
    return None


def _wall_provenance(M: manifolds.WallManifold, bp: Optional[int]) -> dict:
    fp = manifolds.family_parameters(M)
    prov = {
        "j_m": fp.j_m,
        "c_m": fp.c_m,
        "d": fp.d,
        "A": fp.A,
        "A_prime": fp.A_prime,
        "d_prime": fp.d_prime,
        "j_bar": fp.j_bar,
        "bp": fp.bp,
        "bp_source": "override" if bp is not None else "default |bP_8m|",
    }
    return prov


def _form_dict(e: forms.ExtSymForm) -> dict:
    return {"sign": e.sign, "f": list(e.f), "modulus": e.modulus, "v_nonzero": e.v_nonzero}


def cmd_wall(args) -> Result:
    M = _wall(args)
    if M is None:
        raise UsageError("wall needs --alpha/--beta or --a/--b")
    prov = _wall_provenance(M, args.bp)
    if args.subverb == "invariants":
        inv = manifolds.wall_invariants(M)
        return {
            "pair": list(M.pair),
            "d": inv.d,
            "signature": inv.sigma,
            "salpha_square": inv.salpha_sq,
            "euler_characteristic": M.euler_characteristic,
            "smooth_form": _form_dict(manifolds.smooth_ext_form(M)),
            "homotopy_form": _form_dict(manifolds.homotopy_ext_form(M)),
        }, prov
    if args.subverb == "compare":
        M2 = _wall(args, "2")
        if M2 is None:
            raise UsageError("wall compare needs --alpha2/--beta2 or --a2/--b2")
        relations: dict[str, Callable] = {
            "almost-diffeo": manifolds.almost_diffeomorphic,
            "homotopy": manifolds.homotopy_equivalent,
            "stable": manifolds.stably_almost_diffeomorphic,
        }
        chosen = [args.relation] if args.relation else sorted(relations)
        return {
            "pair1": list(M.pair),
            "pair2": list(M2.pair),
            "relations": {r: relations[r](M, M2) for r in chosen},
        }, prov
    rep = manifolds.enumerate_stable_class(M)
    if args.subverb == "enumerate":
        return {
            "members": [list(w.pair) for w in rep.members],
            "stable_count": rep.count_stable_mod_spheres,
            "homotopy_family": [list(w.pair) for w in rep.homotopy_family],
            "homotopy_classes_among_members": rep.homotopy_classes_among_members,
        }, prov
    return {
        "lower": rep.homotopy_lower,
        "upper": rep.homotopy_upper,
        "stable_count": rep.count_stable_mod_spheres,
    }, prov


def cmd_n4k(args) -> Result:
    if args.subverb == "enumerate":
        fam = manifolds.n4k_enumerate_stable_class(args.k, args.product)
        return {"members": [list(n.pair) for n in fam]}, {"k": args.k, "product": args.product}
    if args.subverb == "witness":
        product = manifolds.witness_product(args.k, args.n)
        fam = manifolds.n4k_enumerate_stable_class(args.k, product)
        return {"product": product, "members": [list(n.pair) for n in fam]}, {"k": args.k}
    n1 = manifolds.FourKManifold(args.k, *args.pair1)
    n2 = manifolds.FourKManifold(args.k, *args.pair2)
    rel = manifolds.n4k_homotopy_equivalent if args.relation == "homotopy" else manifolds.n4k_stably_diffeomorphic
    return {"pair1": list(n1.pair), "pair2": list(n2.pair), "relation": args.relation, "holds": rel(n1, n2)}, {
        "k": args.k
    }


def cmd_spinc(args) -> Result:
    if args.subverb in ("census", "orbits"):
        fn = spinc.census if args.subverb == "census" else spinc.all_orbits
        reps = fn(args.c1sq)
        return {"c1_square": args.c1sq, "count": len(reps), "classes": [list(s.c1) for s in reps]}, {}
    s1, s2 = spinc.SpinCClass(*args.s1), spinc.SpinCClass(*args.s2)
    rel = spinc.equivalent if args.relation == "equiv" else spinc.stably_equivalent
    return {"s1": list(s1.c1), "s2": list(s2.c1), "relation": args.relation, "holds": rel(s1, s2)}, {}


def cmd_form(args) -> Result:
    e1 = forms.ExtSymForm(args.sign1, args.f1, args.modulus, args.v_nonzero)
    e2 = forms.ExtSymForm(args.sign2, args.f2, args.modulus, args.v_nonzero)
    rel = forms.unoriented_equivalent if args.reversal else forms.oriented_equivalent
    return {
        "form1": _form_dict(e1),
        "form2": _form_dict(e2),
        "reversal": args.reversal,
        "equivalent": rel(e1, e2),
        "canonical1": list(forms.canonical_pair(e1, args.reversal)),
        "canonical2": list(forms.canonical_pair(e2, args.reversal)),
    }, {}


def cmd_oracle(args) -> Result:
    n = args.modulus
    formula = forms.orbit_count_pairs_formula(n)
    brute = forms.orbit_count_pairs_bruteforce(n)
    return {"modulus": n, "formula": formula, "bruteforce": brute, "agree": formula == brute}, {}


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument("--json", dest="format", action="store_const", const="json", default=argparse.SUPPRESS)
    group.add_argument("--table", dest="format", action="store_const", const="table", default=argparse.SUPPRESS)

    parser = _Parser(prog="stableclass", parents=[fmt], description="Stable classes of highly connected manifolds.")
    verbs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = verbs.add_parser("bernoulli", parents=[fmt], help="B_n in the |B_2n| convention")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_bernoulli)

    p = verbs.add_parser("j-order", parents=[fmt], help="order of the image of J in degree 4m-1")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=cmd_j_order)

    p = verbs.add_parser("bp-order", parents=[fmt], help="|bP_8m|")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=cmd_bp_order)

    p = verbs.add_parser("wall", parents=[fmt], help="(4m-1)-connected 8m-manifolds M_{a,b}")
    p.add_argument("subverb", choices=["invariants", "compare", "enumerate", "bounds"])
    p.add_argument("--m", type=int, required=True)
    for suffix in ("", "2"):
        for name in ("alpha", "beta", "a", "b"):
            p.add_argument(f"--{name}{suffix}", type=int)
    p.add_argument("--relation", choices=["homotopy", "almost-diffeo", "stable"])
    p.add_argument("--bp", type=int)
    p.set_defaults(handler=cmd_wall)

    p = verbs.add_parser("n4k", parents=[fmt], help="4k-manifolds N_{a,b}")
    p.add_argument("subverb", choices=["enumerate", "witness", "compare"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--product", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--pair1", type=_int_pair)
    p.add_argument("--pair2", type=_int_pair)
    p.add_argument("--relation", choices=["homotopy", "stable"])
    p.set_defaults(handler=cmd_n4k)

    p = verbs.add_parser("spinc", parents=[fmt], help="spin^c structures on S^2 x S^2")
    p.add_argument("subverb", choices=["census", "orbits", "compare"])
    p.add_argument("--c1sq", type=int)
    p.add_argument("--s1", type=_int_pair)
    p.add_argument("--s2", type=_int_pair)
    p.add_argument("--relation", choices=["equiv", "stable"])
    p.set_defaults(handler=cmd_spinc)

    p = verbs.add_parser("form", parents=[fmt], help="extended symmetric forms on +-H")
    p.add_argument("subverb", choices=["equiv"])
    p.add_argument("--sign1", type=_sign, required=True)
    p.add_argument("--f1", type=_int_pair, required=True)
    p.add_argument("--sign2", type=_sign, required=True)
    p.add_argument("--f2", type=_int_pair, required=True)
    p.add_argument("--modulus", type=int, required=True, help="0 means Z")
    p.add_argument("--reversal", action="store_true", help="allow orientation reversal")
    p.add_argument("--v-nonzero", action="store_true", help="nonzero parity map v")
    p.set_defaults(handler=cmd_form)

    p = verbs.add_parser("oracle", parents=[fmt], help="brute-force cross-checks")
    p.add_argument("subverb", choices=["orbit-count"])
    p.add_argument("--modulus", type=int, required=True)
    p.set_defaults(handler=cmd_oracle)

    p = verbs.add_parser("selftest", parents=[fmt], help="run the bundled acceptance checks")
    p.set_defaults(handler=None)
    return parser


_REQUIRED = {
    ("n4k", "enumerate"): ("product",),
    ("n4k", "witness"): ("n",),
    ("n4k", "compare"): ("pair1", "pair2", "relation"),
    ("spinc", "census"): ("c1sq",),
    ("spinc", "orbits"): ("c1sq",),
    ("spinc", "compare"): ("s1", "s2", "relation"),
}


def _check_required(args) -> None:
    for name in _REQUIRED.get((args.verb, getattr(args, "subverb", None)), ()):
        if getattr(args, name) is None:
            raise UsageError(f"{args.verb} {args.subverb} requires --{name}")


def _command_echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("handler", "format") and v is not None}


def _dumps(obj: Any) -> str:
    return json.dumps(_stringify(obj), sort_keys=True, indent=2)


def _table(obj: Any, prefix: str = "") -> list[str]:
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            key = f"{prefix}.{k}" if prefix else str(k)
            if isinstance(v, dict):
                lines.extend(_table(v, key))
            else:
                lines.append(f"{key}: {_scalar(v)}")
        return lines
    return [f"{prefix or 'result'}: {_scalar(obj)}"]


def _scalar(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return json.dumps(_stringify(v), sort_keys=True)
    return str(v)


def _error(code: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": {"code": code, "message": message}}, sort_keys=True) + "\n")


def _selftest(fmt: str, echo: dict) -> int:
    results = acceptance.run_all()
    ok = all(r.passed for r in results)
    if fmt == "json":
        payload = {
            "passed": ok,
            "checks": [
                {"id": r.id, "title": r.title, "passed": r.passed, "detail": r.detail, "seconds": f"{r.seconds:.3f}"}
                for r in results
            ],
        }
        print(_dumps({"schema_version": SCHEMA_VERSION, "command": echo, "result": payload, "provenance": {}}))
    else:
        print(acceptance.format_table(results))
    if not ok:
        failed = ", ".join(f"#{r.id} {r.title}" for r in results if not r.passed)
        sys.stderr.write(f"selftest failed: {failed}\n")
    return EXIT_OK if ok else EXIT_FAIL


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_required(args)
    except UsageError as exc:
        _error("usage", str(exc))
        return EXIT_USAGE
    fmt = getattr(args, "format", "table")
    echo = _command_echo(args)
    if args.verb == "selftest":
        return _selftest(fmt, echo)
    try:
        result, provenance = args.handler(args)
    except UsageError as exc:
        _error("usage", str(exc))
        return EXIT_USAGE
    except InvalidArgument as exc:
        _error(exc.code, str(exc))
        return EXIT_USAGE
    except StableClassError as exc:
        _error(exc.code, str(exc))
        return EXIT_DOMAIN
    if fmt == "json":
        print(_dumps({"schema_version": SCHEMA_VERSION, "command": echo, "result": result, "provenance": provenance}))
    else:
        for line in _table({"result": result} if not isinstance(result, dict) else result):
            print(line)
        for line in _table(provenance, "provenance") if provenance else []:
            print(line)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
