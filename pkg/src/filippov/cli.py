"""Command-line front end: check, module, scan, triple.

Exit codes: 0 success, 1 identity failure or scan anomaly, 2 input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Dict, List, Optional, Sequence

from .serialize import (
    InputError,
    algebra_from_json,
    dumps,
    lie_from_json,
    load_json_file,
    load_json_text,
    module_from_json,
    module_to_json,
    weight_from_json,
)

OK, ANOMALY, INPUT_ERROR = 0, 1, 2
CONFIG_KEYS = {"m", "n", "lambdas", "parities", "arity_min", "arity_max", "out", "workers", "lie", "module"}


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _workers(flag: Optional[int]) -> int:
    if flag is not None:
        return max(1, flag)
    env = os.environ.get("WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InputError("WORKERS must be an integer, got %r" % env)
    return 1


def parse_arity(text: str) -> List[int]:
    text = text.strip()
    try:
        if "-" in text:
            a, b = text.split("-", 1)
            vals = list(range(int(a), int(b) + 1))
        else:
            vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError("arity must look like 3, 2,3,4 or 2-4", "--arity")
    if any(v < 2 for v in vals):
        raise InputError("arity must be at least 2", "--arity")
    return vals


def _parity(text: str) -> int:
    from .nary import parity_of
    try:
        return parity_of(text)
    except ValueError as e:
        raise InputError(str(e), "--parity")


def parse_config(text: str, source: str = "<config>") -> Dict[str, object]:
    """Flat ``key = value`` lines; values of lambdas and parities are JSON."""
    cfg: Dict[str, object] = {}
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InputError("expected key = value", "%s:%d" % (source, n))
        key, val = (s.strip() for s in line.split("=", 1))
        where = "%s:%d" % (source, n)
        if key not in CONFIG_KEYS:
            raise InputError("unknown key %r" % key, where)
        if key in ("lambdas", "parities"):
            v = load_json_text(val, where)
            if not isinstance(v, list):
                raise InputError("%s must be a JSON list" % key, where)
            if key == "lambdas":
                v = [weight_from_json(w, where) for w in v]
            else:
                from .nary import parity_of
                try:
                    v = [parity_of(p) for p in v]
                except ValueError as e:
                    raise InputError(str(e), where)
            cfg[key] = v
        elif key in ("m", "n", "arity_min", "arity_max", "workers"):
            try:
                cfg[key] = int(val)
            except ValueError:
                raise InputError("%s must be an integer" % key, where)
        else:
            cfg[key] = val
    return cfg


def validate_config(cfg: Dict[str, object], base_dir: str = "."):
    amin = cfg.get("arity_min", 2)
    amax = cfg.get("arity_max", amin)
    if amin < 2:
        raise InputError("arity_min must be at least 2", "config")
    cfg["arity_min"], cfg["arity_max"] = amin, amax
    cfg.setdefault("parities", [0, 1])
    if "lie" in cfg or "module" in cfg:
        if not ("lie" in cfg and "module" in cfg):
            raise InputError("lie and module must be given together", "config")
        for k in ("lie", "module"):
            p = str(cfg[k])
            cfg[k] = p if os.path.isabs(p) else os.path.join(base_dir, p)
        return cfg
    for k in ("m", "n", "lambdas"):
        if k not in cfg:
            raise InputError("missing key %r" % k, "config")
    if cfg["m"] < 0 or cfg["n"] < 0:
        raise InputError("m and n must be nonnegative", "config")
    if cfg["m"] == cfg["n"]:
        raise InputError("m = n is excluded (A(n,n) is out of scope)", "config")
    from .modules import admissible
    for lam in cfg["lambdas"]:
        adm = admissible(cfg["m"], cfg["n"], lam)
        if not adm:
            raise InputError("inadmissible lambda %s: %s" % (list(map(str, lam)), "; ".join(adm.reasons)), "config")
    return cfg


# ---------------------------------------------------------------------------
# commands

def cmd_check(args) -> int:
    from .nary import check_anticommutativity, check_generalized_jacobi
    from .exact import qstr
    alg = algebra_from_json(load_json_file(args.file), args.file)
    ac = check_anticommutativity(alg)
    gj = check_generalized_jacobi(alg)

    def vec(v):
        return [[qstr(c), i] for i, c in sorted(v.items())]

    report = {
        "ok": not ac and not gj,
        "anticommutativity": [{"args": list(v.args), "position": v.position, "lhs": vec(v.lhs), "rhs": vec(v.rhs)}
                              for v in ac],
        "jacobi": [{"xs": list(v.xs), "ys": list(v.ys), "lhs": vec(v.lhs), "rhs": vec(v.rhs),
                    "residual": vec(v.residual)} for v in gj],
    }
    _emit(dumps(report), args.out)
    return OK if report["ok"] else ANOMALY


def _module_args(args):
    from .lie import build_amn
    from .modules import admissible
    if args.m is None or args.n is None or args.lam is None:
        raise InputError("--m, --n and --lambda are required")
    if args.m == args.n:
        raise InputError("m = n is excluded (A(n,n) is out of scope)", "--m/--n")
    lam = weight_from_json(args.lam, "--lambda")
    adm = admissible(args.m, args.n, lam)
    if not adm:
        raise InputError("inadmissible highest weight (a_i must be a nonnegative integer for i != m+1): "
                         + "; ".join(adm.reasons), "--lambda")
    return build_amn(args.m, args.n), lam, _parity(args.parity or "even")


def cmd_module(args) -> int:
    from .modules import build_module
    G, lam, par = _module_args(args)
    V = build_module(G, lam, par)
    _emit(dumps(module_to_json(V)), args.out)
    return OK


def _so_reports(cfg, arities, prefix_params):
    from .triples import lie_is_simple, triple_item
    L = lie_from_json(load_json_file(cfg["lie"]), cfg["lie"])
    V = module_from_json(load_json_file(cfg["module"]), L, cfg["module"])
    simple = lie_is_simple(L).status == "simple" if L.cartan else False
    reps = []
    for s in arities:
        try:
            reps.append(triple_item(L, V, s, dict(prefix_params, arity=s), L_simple=simple))
        except Exception as e:
            from .triples import TripleReport
            reps.append(TripleReport(params=dict(prefix_params, arity=s), status="error",
                                     notes=["%s: %s" % (type(e).__name__, e)]))
    return reps


def cmd_scan(args) -> int:
    from .triples import nonexistence_scan, scan_summary
    if not args.config:
        raise InputError("--config is required")
    try:
        with open(args.config, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise InputError("cannot read config (%s)" % e.strerror, args.config)
    cfg = validate_config(parse_config(text, args.config), os.path.dirname(os.path.abspath(args.config)))
    arities = list(range(cfg["arity_min"], cfg["arity_max"] + 1))
    workers = _workers(args.workers if args.workers is not None else cfg.get("workers"))
    out = args.out or cfg.get("out")
    if "lie" in cfg:
        reps = _so_reports(cfg, arities, {"lie": os.path.basename(cfg["lie"]),
                                           "module": os.path.basename(cfg["module"])})
        anomaly = any(r.status in ("error", "undetermined") for r in reps)
    else:
        reps = nonexistence_scan(cfg["m"], cfg["n"], cfg["lambdas"], cfg["parities"], arities, workers=workers)
        # a good triple here is an anomaly: none is expected for A(m,n)
        anomaly = any(r.status not in ("certified", "rejected") for r in reps)
    summary = scan_summary(reps)
    doc = {"summary": summary,
           "scope": "completeness is claimed only for the scanned arities %s" % arities,
           "reports": [r.to_json() for r in reps]}
    _emit(dumps(doc), out)
    sys.stderr.write("items %d: %d certificates, %d good triples, %d rejected, %d other\n"
                     % (summary["items"], summary["certified"], summary["good"], summary["rejected"], summary["other"]))
    return ANOMALY if anomaly else OK


def cmd_triple(args) -> int:
    from .triples import lie_is_simple, triple_item
    if args.arity is None:
        raise InputError("--arity is required")
    arities = parse_arity(args.arity)
    if len(arities) != 1:
        raise InputError("triple takes a single arity", "--arity")
    s = arities[0]
    if args.lie or args.module:
        if not (args.lie and args.module):
            raise InputError("--lie and --module must be given together")
        L = lie_from_json(load_json_file(args.lie), args.lie)
        V = module_from_json(load_json_file(args.module), L, args.module)
        params = {"lie": os.path.basename(args.lie), "module": os.path.basename(args.module), "arity": s}
    else:
        from .modules import build_module
        L, lam, par = _module_args(args)
        V = build_module(L, lam, par)
        params = {"m": args.m, "n": args.n, "lambda": lam.to_json(), "parity": "odd" if par else "even", "arity": s}
    simple = lie_is_simple(L).status == "simple" if L.cartan else False
    rep = triple_item(L, V, s, params, L_simple=simple)
    _emit(dumps(rep.to_json()), args.out)
    return OK if rep.status in ("certified", "good-triple", "not-good") else ANOMALY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="filippov", description="Exact Filippov superalgebra and A(m,n) toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write JSON here instead of stdout")

    c = sub.add_parser("check", help="check the Filippov identities of an algebra JSON file")
    c.add_argument("file")
    common(c)
    c.set_defaults(func=cmd_check)

    for name, func, hlp in (("module", cmd_module, "build V_Lambda over A(m,n)"),
                            ("triple", cmd_triple, "run a single good-triple analysis")):
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("--m", type=int)
        sp.add_argument("--n", type=int)
        sp.add_argument("--lambda", dest="lam", help='comma separated, e.g. "1,-1/2,0,0"')
        sp.add_argument("--parity", default="even", help="parity of the highest vector")
        common(sp)
        if name == "triple":
            sp.add_argument("--arity")
            sp.add_argument("--lie", help="Lie superalgebra JSON (structure constants)")
            sp.add_argument("--module", help="module JSON matching --lie")
        sp.set_defaults(func=func)

    s = sub.add_parser("scan", help="non-existence scan driven by a config file")
    s.add_argument("--config")
    s.add_argument("--workers", type=int)
    common(s)
    s.set_defaults(func=cmd_scan)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return INPUT_ERROR if e.code else OK
    try:
        return args.func(args)
    except InputError as e:
        sys.stderr.write("input error: %s\n" % e)
        return INPUT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
