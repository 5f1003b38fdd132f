"""
Finite-dimensional highest-weight modules.

An induced (Verma) module is modelled on PBW monomials in the negative root
vectors, ordered as in ``triangular_decomposition``.  The irreducible
quotient V_Lambda is obtained from the radical of the contravariant form,
computed weight by weight; a second, independent construction (a vector lies
in the maximal submodule iff every simple raising operator sends it there)
serves as a cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .exact import (
    Coordinatizer,
    Q,
    RowSpace,
    SparseMatrix,
    _invert,
    axpy,
    independent_subset,
)
from .lie import (
    LieSuperalgebra,
    Weight,
    matrix_supercommutator,
    omega_map,
    root_decomposition,
    triangular_decomposition,
)
from .nary import EVEN, ODD, parity_of

Mono = Tuple[int, ...]
Vec = Dict[Mono, Fraction]


class NotFiniteDimensional(ValueError):
    pass


class InadmissibleWeight(ValueError):
    pass


class ModuleConsistencyError(ArithmeticError):
    pass


@dataclass(frozen=True)
class HWSpec:
    lam: Weight
    highest_parity: int = EVEN

    @classmethod
    def make(cls, lam, parity=EVEN) -> "HWSpec":
        return cls(Weight(lam), parity_of(parity))


@dataclass
class Admissibility:
    ok: bool
    reasons: List[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def admissible(m: int, n: int, lam) -> Admissibility:
    """Integrality test: a_i must be a nonnegative integer for every i != m+1."""
    lam = Weight(lam)
    r = m + n + 1
    if len(lam) != r:
        return Admissibility(False, ["expected %d weight entries, got %d" % (r, len(lam))])
    reasons = []
    for i, a in enumerate(lam, start=1):
        if i == m + 1:
            continue
        if a.denominator != 1 or a < 0:
            reasons.append("a_%d = %s must be a nonnegative integer (i != m+1)" % (i, a))
    return Admissibility(not reasons, reasons)


# ---------------------------------------------------------------------------
# explicit modules

class Module:
    """Finite-dimensional G-module given by one action matrix per basis element of G."""

    def __init__(self, G: LieSuperalgebra, parity: Sequence[int], action: Sequence[SparseMatrix],
                 labels: Optional[Sequence[str]] = None, weights: Optional[Sequence[Weight]] = None):
        self.G = G
        self.parity = tuple(parity)
        if list(self.parity) != sorted(self.parity):
            raise ValueError("even basis vectors must precede odd ones")
        self.action = list(action)
        if len(self.action) != G.dim:
            raise ValueError("need one action matrix per basis element")
        self.labels = tuple(labels) if labels else tuple("v%d" % (i + 1) for i in range(len(self.parity)))
        self._weights = list(weights) if weights is not None else None
        self._cols: Dict[int, List[Dict[int, Fraction]]] = {}

    @property
    def dim(self) -> int:
        return len(self.parity)

    @property
    def even_dim(self) -> int:
        return self.parity.count(EVEN)

    @property
    def odd_dim(self) -> int:
        return self.parity.count(ODD)

    def columns(self, g: int) -> List[Dict[int, Fraction]]:
        c = self._cols.get(g)
        if c is None:
            c = self.action[g].columns()
            self._cols[g] = c
        return c

    def act(self, g: int, x: Mapping[int, object]) -> Dict[int, Fraction]:
        cols = self.columns(g)
        out: Dict[int, Fraction] = {}
        for j, a in x.items():
            if a and cols[j]:
                axpy(out, a, cols[j])
        return out

    @property
    def weights(self) -> List[Weight]:
        if self._weights is None:
            self._weights = _diagonal_weights(self)
        return self._weights

    def check_representation(self) -> Optional[Tuple[int, int]]:
        """First basis pair (a, b) with rho([a,b]) != [rho(a), rho(b)], or None."""
        G = self.G
        for a in range(G.dim):
            for b in range(a, G.dim):
                lhs = SparseMatrix.zero(self.dim, self.dim)
                for k, c in G.product((a, b)).items():
                    lhs = lhs + self.action[k] * c
                rhs = matrix_supercommutator(self.action[a], G.parity[a], self.action[b], G.parity[b])
                if lhs != rhs:
                    return a, b
        return None

    def check_parity(self) -> bool:
        for g, mat in enumerate(self.action):
            for i, j, _ in mat.entries():
                if (self.parity[i] + self.parity[j]) % 2 != self.G.parity[g]:
                    return False
        return True

    def is_faithful(self) -> bool:
        """The action map G -> End(V) is injective."""
        rs = RowSpace()
        for m in self.action:
            if not rs.add(m.flat()):
                return False
        return True

    def is_irreducible(self) -> bool:
        """Burnside test: the action matrices generate all of End(V) as an algebra."""
        n = self.dim
        if n == 0:
            return False
        gens = [m for m in self.action if not m.is_zero()]
        rs = RowSpace()
        basis = []
        ident = SparseMatrix.identity(n)
        rs.add(ident.flat())
        basis.append(ident)
        i = 0
        while i < len(basis) and rs.rank < n * n:
            for g in gens:
                p = g * basis[i]
                if not p.is_zero() and rs.add(p.flat()):
                    basis.append(p)
            i += 1
        return rs.rank == n * n


def _diagonal_weights(V: Module) -> List[Weight]:
    out = [[] for _ in range(V.dim)]
    for c in V.G.cartan:
        m = V.action[c]
        if not m.is_diagonal():
            raise ModuleConsistencyError("Cartan element %s does not act diagonally" % V.G.labels[c])
        for i in range(V.dim):
            out[i].append(m[i, i])
    return [Weight(w) for w in out]


def natural_module(G: LieSuperalgebra) -> Module:
    """The defining matrix representation of a matrix-realized algebra."""
    if G.matrices is None:
        raise ValueError("algebra has no matrix realization")
    par = G.module_parity or (EVEN,) * G.matrices[0].rows
    return Module(G, par, G.matrices)


def adjoint_module(G: LieSuperalgebra) -> Module:
    return Module(G, G.parity, [G.ad(i) for i in range(G.dim)], labels=G.labels)


def weight_decomposition(V: Module) -> Dict[Weight, List[int]]:
    """Weight -> basis indices; the Cartan action must be diagonal in the given basis."""
    out: Dict[Weight, List[int]] = {}
    for i, w in enumerate(V.weights):
        out.setdefault(w, []).append(i)
    return out


def q_weight_module(V: Module, q: Mapping[int, object], x: Mapping[int, object]) -> Fraction:
    from .lie import eigenvalue
    y: Dict[int, Fraction] = {}
    for k, c in q.items():
        axpy(y, Q(c), V.act(k, x))
    return eigenvalue(dict(x), y)


# ---------------------------------------------------------------------------
# induced module

class InducedModule:
    """Ind_B^G of the one-dimensional B-module with weight Lambda, on PBW monomials.

    Monomials are exponent tuples over the negative root vectors ``gens``.
    ``monomials`` is the truncated pre-basis (odd exponents <= 1, even
    exponents below the nilpotency bound).
    """

    def __init__(self, G: LieSuperalgebra, spec: HWSpec, bounds: Optional[Sequence[int]] = None):
        if len(spec.lam) != G.rank:
            raise ValueError("weight has %d entries, algebra rank is %d" % (len(spec.lam), G.rank))
        self.G = G
        self.spec = spec
        self.lam = spec.lam
        td = triangular_decomposition(G)
        self.gens = list(td.Nminus)
        self.pos = {g: i for i, g in enumerate(self.gens)}
        self.nplus = set(td.Nplus)
        self.cartan_pos = {c: i for i, c in enumerate(G.cartan)}
        for h in td.H:
            if h not in self.cartan_pos:
                raise ValueError("degree-zero element %s is not in the Cartan list" % G.labels[h])
        rs = root_decomposition(G)
        self.gpar = [G.parity[g] for g in self.gens]
        self.alpha = [rs.weight_table[g] for g in self.gens]
        self.omega = omega_map(G)
        simple_w = [s.weight for s in rs.simple_roots]
        self.simple_raising = [s.index for s in rs.simple_roots]
        self._simple_coord = Coordinatizer([{i: x for i, x in enumerate(w) if x} for w in simple_w])
        self.depth = [self.simple_coords(a.times(-1)) for a in self.alpha]
        for d in self.depth:
            if any(x < 0 or Fraction(x).denominator != 1 for x in d):
                raise ValueError("negative part is not spanned by negative simple-root combinations")
        self.depth = [tuple(int(x) for x in d) for d in self.depth]
        self._lm: Dict[Tuple[int, Mono], Vec] = {}
        self._act: Dict[Tuple[int, Mono], Vec] = {}
        self._pair: Dict[Tuple[Mono, Mono], Fraction] = {}
        self._verma: Dict[Tuple[int, ...], List[Mono]] = {}
        self.empty: Mono = (0,) * len(self.gens)
        self.bounds = list(bounds) if bounds is not None else prebasis_bounds(G, spec.lam, self)
        self.monomials = self._truncated()

    # -- bookkeeping
    def simple_coords(self, w) -> List[Fraction]:
        c = self._simple_coord.coords({i: x for i, x in enumerate(w) if x})
        if c is None:
            raise ValueError("weight outside the root lattice span")
        return c

    def weight(self, mono: Mono) -> Weight:
        acc = list(self.lam)
        for j, a in enumerate(mono):
            if a:
                for i, x in enumerate(self.alpha[j]):
                    acc[i] += a * x
        return Weight(acc)

    def depth_of(self, mono: Mono) -> Tuple[int, ...]:
        k = len(self.simple_raising)
        acc = [0] * k
        for j, a in enumerate(mono):
            if a:
                for i in range(k):
                    acc[i] += a * self.depth[j][i]
        return tuple(acc)

    def mono_parity(self, mono: Mono) -> int:
        return (sum(a for a, p in zip(mono, self.gpar) if p) + self.spec.highest_parity) % 2

    def label(self, mono: Mono) -> str:
        parts = []
        for j, a in enumerate(mono):
            if a:
                parts.append(self.G.labels[self.gens[j]] + ("^%d" % a if a > 1 else ""))
        return "*".join(parts) + ("*v" if parts else "v")

    def _truncated(self) -> List[Mono]:
        ranges = [range(b) for b in self.bounds]
        monos = list(itertools.product(*ranges))
        monos.sort(key=lambda t: (sum(self.depth_of(t)), t))
        return monos

    def verma_monomials(self, depth: Sequence[int]) -> List[Mono]:
        """All PBW monomials (no truncation except odd squares) at the given simple-root depth."""
        depth = tuple(depth)
        got = self._verma.get(depth)
        if got is not None:
            return got
        t = len(self.gens)
        out: List[Mono] = []
        cur = [0] * t

        def rec(j, rem):
            if j == t:
                if not any(rem):
                    out.append(tuple(cur))
                return
            d = self.depth[j]
            cap = 1 if self.gpar[j] else None
            a = 0
            r = list(rem)
            while True:
                cur[j] = a
                rec(j + 1, r)
                a += 1
                if cap is not None and a > cap:
                    break
                r = [x - y for x, y in zip(r, d)]
                if any(x < 0 for x in r):
                    break
            cur[j] = 0

        rec(0, list(depth))
        out.sort()
        self._verma[depth] = out
        return out

    # -- PBW straightening
    def _bracket_neg(self, a: int, b: int) -> Dict[int, Fraction]:
        br = self.G.product((a, b))
        for k in br:
            if k not in self.pos:
                raise ModuleConsistencyError("negative part is not a subalgebra")
        return br

    def left_mult(self, j: int, mono: Mono) -> Vec:
        """x_j * mono rewritten in PBW order (j is a position in ``gens``)."""
        key = (j, mono)
        got = self._lm.get(key)
        if got is not None:
            return got
        i = next((k for k, a in enumerate(mono) if a), None)
        if i is None or j < i or (j == i and not self.gpar[j]):
            new = list(mono)
            new[j] += 1
            res: Vec = {tuple(new): Fraction(1)}
        elif j == i:
            # odd x_j twice: x_j x_j = 1/2 [x_j, x_j]
            rest = list(mono)
            rest[i] -= 1
            rest = tuple(rest)
            res = {}
            for k, c in self._bracket_neg(self.gens[j], self.gens[j]).items():
                axpy(res, c / 2, self.left_mult(self.pos[k], rest))
        else:
            rest = list(mono)
            rest[i] -= 1
            rest = tuple(rest)
            res = {}
            for k, c in self._bracket_neg(self.gens[j], self.gens[i]).items():
                axpy(res, c, self.left_mult(self.pos[k], rest))
            sign = -1 if (self.gpar[i] and self.gpar[j]) else 1
            for m2, c in self.left_mult(j, rest).items():
                axpy(res, sign * c, self.left_mult(i, m2))
        self._lm[key] = res
        return res

    def act(self, g: int, mono: Mono) -> Vec:
        """g * (mono (x) v) for a basis element g of G."""
        key = (g, mono)
        got = self._act.get(key)
        if got is not None:
            return got
        if g in self.pos:
            res = self.left_mult(self.pos[g], mono)
        elif g in self.cartan_pos:
            ev = self.weight(mono)[self.cartan_pos[g]]
            res = {mono: ev} if ev else {}
        elif g in self.nplus:
            i = next((k for k, a in enumerate(mono) if a), None)
            if i is None:
                res = {}
            else:
                rest = list(mono)
                rest[i] -= 1
                rest = tuple(rest)
                res = {}
                for k, c in self.G.product((g, self.gens[i])).items():
                    axpy(res, c, self.act(k, rest))
                sign = -1 if (self.G.parity[g] and self.gpar[i]) else 1
                for m2, c in self.act(g, rest).items():
                    axpy(res, sign * c, self.left_mult(i, m2))
        else:
            raise ValueError("basis element %d is not in the triangular decomposition" % g)
        self._act[key] = res
        return res

    def act_vec(self, g: int, x: Mapping[Mono, Fraction]) -> Vec:
        out: Vec = {}
        for mono, c in x.items():
            axpy(out, c, self.act(g, mono))
        return out

    def act_element(self, y: Mapping[int, object], x: Mapping[Mono, Fraction]) -> Vec:
        out: Vec = {}
        for g, c in y.items():
            axpy(out, Q(c), self.act_vec(g, x))
        return out

    # -- contravariant form
    def omega_element(self, g: int) -> Tuple[int, int]:
        return self.omega[g]

    def word(self, mono: Mono) -> List[int]:
        return [j for j, a in enumerate(mono) for _ in range(a)]

    def _raw_pair(self, t: Mono, mono: Mono) -> Fraction:
        """Coefficient of v in omega(y_L) ... omega(y_1) (mono v), t = y_1 ... y_L."""
        if not any(t):
            return Fraction(int(not any(mono)))
        key = (t, mono)
        got = self._pair.get(key)
        if got is not None:
            return got
        j = next(k for k, a in enumerate(t) if a)
        rest = list(t)
        rest[j] -= 1
        rest = tuple(rest)
        img, sgn = self.omega[self.gens[j]]
        s = Fraction(0)
        for m2, c in self.act(img, mono).items():
            s += c * self._raw_pair(rest, m2)
        s *= sgn
        self._pair[key] = s
        return s

    def pairing(self, t: Mono, x: Union[Mono, Mapping[Mono, object]]) -> Fraction:
        """<t v, x> = coefficient of v in omega(t) x."""
        odd = sum(a for a, p in zip(t, self.gpar) if p)
        sign = -1 if (odd * (odd - 1) // 2) % 2 else 1
        if isinstance(x, tuple):
            x = {x: Fraction(1)}
        dt = self.depth_of(t)
        s = Fraction(0)
        for mono, c in x.items():
            if self.depth_of(mono) == dt:
                s += c * self._raw_pair(t, mono)
        return sign * s

    def in_radical(self, x: Mapping[Mono, Fraction]) -> bool:
        """Form-radical membership of a weight vector (pairs to zero with every monomial)."""
        x = {m: c for m, c in x.items() if c}
        if not x:
            return True
        depths = {self.depth_of(m) for m in x}
        for d in depths:
            part = {m: c for m, c in x.items() if self.depth_of(m) == d}
            for t in self.verma_monomials(d):
                if self.pairing(t, part):
                    return False
        return True

    def in_radical_recursive(self, x: Mapping[Mono, Fraction]) -> bool:
        """x lies in the maximal submodule iff every simple raising operator sends it there."""
        x = {m: c for m, c in x.items() if c}
        if not x:
            return True
        for d in {self.depth_of(m) for m in x}:
            part = {m: c for m, c in x.items() if self.depth_of(m) == d}
            if self.empty in part:
                return False
            for e in self.simple_raising:
                if not self.in_radical_recursive(self.act_vec(e, part)):
                    return False
        return True

    def gram_block(self, depth: Sequence[int], columns: Optional[Sequence[Mono]] = None) -> SparseMatrix:
        rows = self.verma_monomials(depth)
        cols = list(columns) if columns is not None else rows
        ent = {}
        for a, t in enumerate(rows):
            for b, mono in enumerate(cols):
                v = self.pairing(t, mono)
                if v:
                    ent[(a, b)] = v
        return SparseMatrix(len(rows), len(cols), ent)


def prebasis_bounds(G: LieSuperalgebra, lam, mod: Optional[InducedModule] = None) -> List[int]:
    """Exponent bounds per negative generator: the nilpotency order (at most 2 for odd ones)."""
    td = triangular_decomposition(G)
    out = []
    for g in td.Nminus:
        k = nilpotency_order(G, lam, g, mod)
        if k == "unbounded":
            raise NotFiniteDimensional("nilpotency order along %s is unbounded; module is not finite-dimensional"
                                       % G.labels[g])
        out.append(k)
    return out


def prebasis(G: LieSuperalgebra, spec: HWSpec) -> InducedModule:
    return InducedModule(G, spec)


def pbw_action(mod: InducedModule, g: Union[int, str], mono: Mono) -> Vec:
    if isinstance(g, str):
        g = mod.G.index(g)
    return mod.act(g, tuple(mono))


def contravariant_form(mod: InducedModule) -> Dict[Tuple[int, ...], SparseMatrix]:
    """Gram matrices of the contravariant form on the pre-basis, by weight (simple-root depth)."""
    blocks: Dict[Tuple[int, ...], List[Mono]] = {}
    for m in mod.monomials:
        blocks.setdefault(mod.depth_of(m), []).append(m)
    out = {}
    for d, ms in blocks.items():
        ent = {}
        for a, t in enumerate(ms):
            for b, mono in enumerate(ms):
                v = mod.pairing(t, mono)
                if v:
                    ent[(a, b)] = v
        out[d] = SparseMatrix(len(ms), len(ms), ent)
    return out


def _h_of_root(G: LieSuperalgebra, g: int) -> Tuple[Dict[int, Fraction], int]:
    """h = [g_-alpha, g_alpha] for the negative root vector g, and the partner index."""
    partner, _ = omega_map(G)[g]
    h = G.product((partner, g))
    for k in h:
        if k not in G.cartan:
            raise ValueError("[g_-alpha, g_alpha] is not in the Cartan subalgebra")
    return h, partner


def _eval_weight(G: LieSuperalgebra, w, h: Mapping[int, Fraction]) -> Fraction:
    pos = {c: i for i, c in enumerate(G.cartan)}
    return sum((Q(c) * Q(w[pos[k]]) for k, c in h.items()), Fraction(0))


def _as_negative_root(G: LieSuperalgebra, alpha) -> int:
    td = triangular_decomposition(G)
    if isinstance(alpha, str):
        alpha = G.index(alpha)
    if isinstance(alpha, int):
        if alpha not in td.Nminus:
            raise ValueError("%s is not a negative root vector" % G.labels[alpha])
        return alpha
    w = Weight(alpha)
    rs = root_decomposition(G)
    hits = [g for g in td.Nminus if rs.weight_table[g] == w]
    if not hits:
        raise ValueError("%r is not a negative root" % (w,))
    return hits[0]


def nilpotency_order(G: LieSuperalgebra, lam, alpha, mod: Optional[InducedModule] = None):
    """Minimal k with g_alpha^k v in the maximal submodule.

    Even roots use k = 1 - 2 Lambda(h) / alpha(h) with h = [g_-alpha, g_alpha],
    or "unbounded" when that is not a positive integer.  Odd roots give 1 or 2,
    decided by the contravariant form.
    """
    g = _as_negative_root(G, alpha)
    lam = Weight(lam)
    h, _ = _h_of_root(G, g)
    ah = _eval_weight(G, root_decomposition(G).weight_table[g], h)
    lh = _eval_weight(G, lam, h)
    if G.parity[g] == EVEN:
        if ah == 0:
            return "unbounded"
        k = 1 - 2 * lh / ah
        if k.denominator != 1 or k < 1:
            return "unbounded"
        return int(k)
    if mod is None:
        mod = InducedModule(G, HWSpec(lam), bounds=[1] * len(triangular_decomposition(G).Nminus))
    mono = [0] * len(mod.gens)
    mono[mod.pos[g]] = 1
    return 1 if mod.in_radical({tuple(mono): Fraction(1)}) else 2


def brute_nilpotency_order(G: LieSuperalgebra, lam, alpha, kmax: int = 50, recursive: bool = False):
    """Smallest k <= kmax with g_alpha^k v in the maximal submodule, by direct radical tests."""
    g = _as_negative_root(G, alpha)
    mod = InducedModule(G, HWSpec(Weight(lam)), bounds=[1] * len(triangular_decomposition(G).Nminus))
    test = mod.in_radical_recursive if recursive else mod.in_radical
    j = mod.pos[g]
    for k in range(1, kmax + 1):
        mono = [0] * len(mod.gens)
        mono[j] = k
        if test({tuple(mono): Fraction(1)}):
            return k
    return None


# ---------------------------------------------------------------------------
# irreducible quotient

class IrreducibleModule(Module):
    """V_Lambda on coset representatives (single pre-basis monomials)."""

    def __init__(self, G, spec: HWSpec, parity, action, labels, weights, reps: Sequence[Mono],
                 induced: Optional[InducedModule] = None):
        super().__init__(G, parity, action, labels, weights)
        self.spec = spec
        self.reps = list(reps)
        self.induced = induced

    @property
    def highest_index(self) -> int:
        return self.reps.index(self.induced.empty)


@dataclass
class _Block:
    depth: Tuple[int, ...]
    rows: List[Mono]
    cols: List[Mono]
    sel_rows: List[int]
    inv: List[List[Fraction]]
    pairings: List[Dict[int, Fraction]]  # per basis column: row index -> value, over all rows


def _build_block(mod: InducedModule, depth, cands: List[Mono]) -> _Block:
    rows = mod.verma_monomials(depth)
    # column c as a vector over rows
    colvecs = []
    for mono in cands:
        v = {}
        for a, t in enumerate(rows):
            x = mod.pairing(t, mono)
            if x:
                v[a] = x
        colvecs.append(v)
    chosen = independent_subset(colvecs)
    cols = [cands[i] for i in chosen]
    pv = [colvecs[i] for i in chosen]
    # rows with an invertible square submatrix
    rowvecs = [{b: pv[b].get(a, 0) for b in range(len(cols)) if pv[b].get(a)} for a in range(len(rows))]
    sel = independent_subset(rowvecs)
    if len(sel) != len(cols):
        raise ModuleConsistencyError("rank mismatch in Gram block")
    sq = [[Fraction(pv[b].get(a, 0)) for b in range(len(cols))] for a in sel]
    inv = _invert(sq) if cols else []
    return _Block(tuple(depth), rows, cols, sel, inv, pv)


def _coords(mod: InducedModule, blk: _Block, x: Vec, verify: bool) -> Dict[int, Fraction]:
    rhs = [mod.pairing(blk.rows[a], x) for a in blk.sel_rows]
    k = len(blk.cols)
    c = [Fraction(0)] * k
    for i in range(k):
        if rhs[i]:
            for b in range(k):
                if blk.inv[b][i]:
                    c[b] += blk.inv[b][i] * rhs[i]
    if verify:
        sel = set(blk.sel_rows)
        for a, t in enumerate(blk.rows):
            if a in sel:
                continue
            lhs = mod.pairing(t, x)
            rec = sum((c[b] * blk.pairings[b].get(a, 0) for b in range(k)), Fraction(0))
            if lhs != rec:
                raise _NotSpanning(blk.depth)
    return {b: v for b, v in enumerate(c) if v}


class _NotSpanning(Exception):
    pass


def irreducible_quotient(mod: Union[InducedModule, None] = None, G: Optional[LieSuperalgebra] = None,
                         spec: Optional[HWSpec] = None, max_extra: int = 3) -> IrreducibleModule:
    """V_Lambda = induced module modulo the radical of the contravariant form.

    The pre-basis is certified to span: for every Chevalley generator g and basis
    vector b, g.b is checked against the full Gram block of its weight.  Should
    that fail, exponent bounds are raised (odd ones up to 2) and the construction repeats.
    """
    if mod is None:
        mod = InducedModule(G, spec)
    for extra in range(max_extra + 1):
        if extra:
            mod = InducedModule(mod.G, mod.spec, bounds=[min(b + 1, 2) if p else b + 1 for b, p in zip(mod.bounds, mod.gpar)])
        try:
            return _quotient(mod)
        except _NotSpanning:
            continue
    raise ModuleConsistencyError("pre-basis failed to span the quotient")


def _quotient(mod: InducedModule) -> IrreducibleModule:
    G = mod.G
    groups: Dict[Tuple[int, ...], List[Mono]] = {}
    for m in mod.monomials:
        groups.setdefault(mod.depth_of(m), []).append(m)
    blocks: Dict[Tuple[int, ...], _Block] = {}
    for d in sorted(groups, key=lambda d: (sum(d), d)):
        blk = _build_block(mod, d, groups[d])
        if blk.cols:
            blocks[d] = blk
    if not any(not any(d) for d in blocks):
        raise ModuleConsistencyError("highest weight vector lies in the radical")
    # global ordering: even first, then by depth
    entries = []
    for d in sorted(blocks, key=lambda d: (sum(d), d)):
        for b, mono in enumerate(blocks[d].cols):
            entries.append((mod.mono_parity(mono), sum(d), d, b, mono))
    entries.sort(key=lambda e: (e[0], e[1], e[2], e[3]))
    index = {(e[2], e[3]): i for i, e in enumerate(entries)}
    dim = len(entries)
    from .lie import chevalley_generators
    sgen = set(chevalley_generators(G))
    action = []
    for g in range(G.dim):
        ent = {}
        for i, (_, _, d, b, mono) in enumerate(entries):
            x = mod.act(g, mono)
            if not x:
                continue
            td = mod.depth_of(next(iter(x)))
            blk = blocks.get(td)
            if blk is None:
                if g in sgen and not mod.in_radical(x):
                    raise _NotSpanning(td)
                continue
            for b2, c in _coords(mod, blk, x, verify=g in sgen).items():
                ent[(index[(td, b2)], i)] = c
        action.append(SparseMatrix(dim, dim, ent))
    parity = [e[0] for e in entries]
    reps = [e[4] for e in entries]
    weights = [mod.weight(m) for m in reps]
    labels = [mod.label(m) for m in reps]
    V = IrreducibleModule(G, mod.spec, parity, action, labels, weights, reps, induced=mod)
    bad = V.check_representation()
    if bad is not None:
        raise ModuleConsistencyError("bracket compatibility fails for (%s, %s)" % (G.labels[bad[0]], G.labels[bad[1]]))
    return V


def build_module(G: LieSuperalgebra, lam, parity=EVEN) -> IrreducibleModule:
    """Validate admissibility (for A(m,n)) and construct V_Lambda."""
    lam = Weight(lam)
    if hasattr(G, "m"):
        adm = admissible(G.m, G.n, lam)
        if not adm:
            raise InadmissibleWeight("; ".join(adm.reasons))
    return irreducible_quotient(G=G, spec=HWSpec(lam, parity_of(parity)))


# ---------------------------------------------------------------------------
# independent cross-checks

def quotient_dims_recursive(mod: InducedModule, max_depth_total: Optional[int] = None) -> Dict[Tuple[int, ...], int]:
    """dim V_mu for every weight, via the recursive radical criterion.

    Each weight space of the induced module is mapped to the direct sum of the
    already reduced spaces one simple root higher; the rank of that map is the
    quotient dimension.  No contravariant form is used.
    """
    simple = mod.simple_raising
    k = len(simple)
    dims: Dict[Tuple[int, ...], int] = {}
    zero = tuple([0] * k)
    dims[zero] = 1
    # reduction map at depth 0: coefficient of v
    frontier = [zero]
    seen = {zero}
    images: Dict[Tuple[int, ...], Dict[Mono, Dict[int, Fraction]]] = {zero: {mod.empty: {0: Fraction(1)}}}

    def image(d, x: Vec) -> Dict:
        """Vector in the reduced coordinates of depth d."""
        out: Dict = {}
        for m, c in x.items():
            v = images[d].get(m)
            if v is None:
                raise KeyError(m)
            for key, a in v.items():
                w = out.get(key, 0) + c * a
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
        return out

    while frontier:
        nxt = []
        for d in frontier:
            for i in range(k):
                nd = tuple(x + (1 if j == i else 0) for j, x in enumerate(d))
                if nd in seen:
                    continue
                if max_depth_total is not None and sum(nd) > max_depth_total:
                    continue
                seen.add(nd)
                nxt.append(nd)
        for nd in sorted(nxt, key=lambda d: (sum(d), d)):
            monos = mod.verma_monomials(nd)
            raw = {}
            for m in monos:
                vec = {}
                for i, e in enumerate(simple):
                    up = tuple(x - (1 if j == i else 0) for j, x in enumerate(nd))
                    if any(x < 0 for x in up) or up not in images:
                        continue
                    y = mod.act(e, m)
                    for key, a in image(up, y).items():
                        vec[(i, key)] = a
                raw[m] = vec
            keys = sorted({kk for v in raw.values() for kk in v})
            kidx = {kk: n for n, kk in enumerate(keys)}
            vecs = {m: {kidx[kk]: a for kk, a in v.items()} for m, v in raw.items()}
            rs = RowSpace()
            basis = []
            for m in monos:
                if rs.add(vecs[m]):
                    basis.append(m)
            dim = len(basis)
            if dim == 0:
                continue
            dims[nd] = dim
            coord = Coordinatizer([vecs[m] for m in basis])
            images[nd] = {}
            for m in monos:
                c = coord.coords(vecs[m])
                images[nd][m] = {n: a for n, a in enumerate(c) if a}
        frontier = [d for d in nxt if d in dims]
    return dims


def cyclic_span_dim(V: Module, start: int) -> int:
    """Dimension of the span of everything reachable from basis vector ``start``."""
    rs = RowSpace()
    queue = [{start: Fraction(1)}]
    rs.add(queue[0])
    while queue:
        x = queue.pop()
        for g in range(V.G.dim):
            y = V.act(g, x)
            if y and rs.add(y):
                queue.append(y)
    return rs.rank
