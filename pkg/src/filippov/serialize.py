"""JSON encodings for algebras, Lie superalgebras, weights, modules and reports."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List

from .exact import SparseMatrix, qstr
from .lie import LieSuperalgebra, Weight
from .modules import Module
from .nary import NArySuperalgebra, NAryTable, ParitySpace


class InputError(ValueError):
    """Malformed input; ``where`` locates the problem."""

    def __init__(self, msg: str, where: str = ""):
        self.where = where
        super().__init__("%s: %s" % (where, msg) if where else msg)


def parse_rational(s, where: str = "") -> Fraction:
    if isinstance(s, bool):
        raise InputError("booleans are not rationals", where)
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise InputError("expected a rational string like \"-1/2\", got %r" % (s,), where)


def load_json_text(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError("invalid JSON (%s)" % e.msg, "%s:%d:%d" % (source, e.lineno, e.colno))


def load_json_file(path: str):
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise InputError("cannot read file (%s)" % e.strerror, path)
    return load_json_text(text, path)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# algebras

def _vec_to_json(v) -> List[List[Any]]:
    return [[qstr(c), i] for i, c in sorted(v.items())]


def algebra_to_json(alg: NArySuperalgebra) -> dict:
    out = {
        "arity": alg.arity,
        "even_dim": alg.space.even_dim,
        "odd_dim": alg.space.odd_dim,
        "labels": list(alg.labels),
        "table": [{"args": list(k), "value": _vec_to_json(v)} for k, v in sorted(alg.table.products.items())],
    }
    if not alg.table.canonical:
        out["canonical"] = False
    if isinstance(alg, LieSuperalgebra):
        out["cartan"] = list(alg.cartan)
        if alg.name:
            out["name"] = alg.name
    return out


def _need(d: dict, key: str, typ, where: str):
    if not isinstance(d, dict):
        raise InputError("expected an object", where)
    if key not in d:
        raise InputError("missing key %r" % key, where)
    v = d[key]
    if typ is int and (isinstance(v, bool) or not isinstance(v, int)):
        raise InputError("key %r must be an integer" % key, where)
    if typ is not int and not isinstance(v, typ):
        raise InputError("key %r has the wrong type" % key, where)
    return v


def _space_table(d: dict, source: str):
    arity = _need(d, "arity", int, source)
    ev = _need(d, "even_dim", int, source)
    od = _need(d, "odd_dim", int, source)
    if ev < 0 or od < 0:
        raise InputError("dimensions must be nonnegative", source)
    labels = d.get("labels")
    if labels is None:
        space = ParitySpace.make(ev, od)
    else:
        if not isinstance(labels, list) or len(labels) != ev + od or not all(isinstance(x, str) for x in labels):
            raise InputError("labels must be %d strings" % (ev + od), source)
        space = ParitySpace.make(ev, od, labels)
    canonical = d.get("canonical", True)
    rows = _need(d, "table", list, source)
    prods: Dict[tuple, Dict[int, Fraction]] = {}
    dim = ev + od
    for n, row in enumerate(rows):
        where = "%s: table[%d]" % (source, n)
        args = _need(row, "args", list, where)
        if len(args) != arity or not all(isinstance(a, int) and not isinstance(a, bool) and 0 <= a < dim for a in args):
            raise InputError("args must be %d basis indices below %d" % (arity, dim), where)
        vals = _need(row, "value", list, where)
        vec: Dict[int, Fraction] = {}
        for m, pair in enumerate(vals):
            w2 = "%s.value[%d]" % (where, m)
            if not isinstance(pair, list) or len(pair) != 2:
                raise InputError("expected [coeff, index]", w2)
            c = parse_rational(pair[0], w2)
            i = pair[1]
            if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < dim:
                raise InputError("index out of range", w2)
            vec[i] = vec.get(i, 0) + c
        key = tuple(args)
        if key in prods:
            raise InputError("duplicate args %r" % (key,), where)
        if canonical and list(key) != sorted(key):
            raise InputError("only canonical (non-decreasing) tuples may be stored", where)
        prods[key] = vec
    try:
        table = NAryTable(arity, prods, canonical=bool(canonical))
    except ValueError as e:
        raise InputError(str(e), source)
    return space, table


def algebra_from_json(d: dict, source: str = "<input>") -> NArySuperalgebra:
    space, table = _space_table(d, source)
    try:
        return NArySuperalgebra(space, table)
    except (ValueError, IndexError) as e:
        raise InputError(str(e), source)


def lie_from_json(d: dict, source: str = "<input>") -> LieSuperalgebra:
    space, table = _space_table(d, source)
    if table.arity != 2:
        raise InputError("a Lie superalgebra needs arity 2", source)
    cartan = d.get("cartan", [])
    if not isinstance(cartan, list) or not all(isinstance(c, int) for c in cartan):
        raise InputError("cartan must be a list of basis indices", source)
    try:
        return LieSuperalgebra(space, table, cartan=cartan, name=d.get("name", ""))
    except (ValueError, IndexError) as e:
        raise InputError(str(e), source)


# ---------------------------------------------------------------------------
# weights and modules

def weight_to_json(w) -> List[str]:
    return [qstr(x) for x in w]


def weight_from_json(v, where: str = "") -> Weight:
    if isinstance(v, str):
        v = [x for x in v.split(",")]
    if not isinstance(v, list):
        raise InputError("weight must be a list of rationals", where)
    return Weight(parse_rational(x.strip() if isinstance(x, str) else x, where) for x in v)


def matrix_to_triplets(m: SparseMatrix) -> List[List[Any]]:
    return [[i, j, qstr(v)] for i, j, v in m.entries()]


def matrix_from_triplets(rows: int, data, where: str = "") -> SparseMatrix:
    if not isinstance(data, list):
        raise InputError("matrix must be a list of [row, col, value] triplets", where)
    ent = {}
    for n, t in enumerate(data):
        if not isinstance(t, list) or len(t) != 3:
            raise InputError("bad triplet", "%s[%d]" % (where, n))
        i, j, v = t
        if not all(isinstance(x, int) and 0 <= x < rows for x in (i, j)):
            raise InputError("index out of range", "%s[%d]" % (where, n))
        ent[(i, j)] = parse_rational(v, "%s[%d]" % (where, n))
    return SparseMatrix(rows, rows, ent)


def module_to_json(V: Module) -> dict:
    G = V.G
    spec = getattr(V, "spec", None)
    out = {
        "m": getattr(G, "m", None),
        "n": getattr(G, "n", None),
        "lambda": weight_to_json(spec.lam) if spec is not None else None,
        "parity": ("odd" if spec.highest_parity else "even") if spec is not None else None,
        "dimension": V.dim,
        "even_dim": V.even_dim,
        "odd_dim": V.odd_dim,
        "labels": list(V.labels),
        "weights": [weight_to_json(w) for w in V.weights] if G.cartan else [],
        "actions": {G.labels[g]: matrix_to_triplets(V.action[g]) for g in range(G.dim)},
    }
    return out


def module_from_json(d: dict, G: LieSuperalgebra, source: str = "<input>") -> Module:
    dim = _need(d, "dimension", int, source)
    ev = d.get("even_dim", dim)
    od = d.get("odd_dim", dim - ev)
    if ev + od != dim:
        raise InputError("even_dim + odd_dim must equal dimension", source)
    acts = _need(d, "actions", dict, source)
    mats = []
    for g, lab in enumerate(G.labels):
        if lab not in acts:
            raise InputError("no action given for %s" % lab, source)
        mats.append(matrix_from_triplets(dim, acts[lab], "%s: actions.%s" % (source, lab)))
    extra = set(acts) - set(G.labels)
    if extra:
        raise InputError("actions for unknown basis elements %s" % sorted(extra), source)
    labels = d.get("labels")
    weights = None
    if d.get("weights"):
        weights = [weight_from_json(w, source) for w in d["weights"]]
    try:
        V = Module(G, [0] * ev + [1] * od, mats, labels=labels, weights=weights)
    except ValueError as e:
        raise InputError(str(e), source)
    if not V.check_parity():
        raise InputError("action matrices do not respect the grading", source)
    return V


def reports_to_json(reports) -> List[dict]:
    return [r.to_json() for r in reports]
