"""
Lie superalgebras from structure constants or matrices.

The main construction is A(m, n) = sl(m+1|n+1) in the matrix-unit basis with
Cartan elements h_i = e_ii - e_{i+1,i+1}, except h_{m+1} = e_{m+1,m+1} +
e_{m+2,m+2}.  Weights are always recorded by their values on the Cartan basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .exact import Coordinatizer, Q, SparseMatrix, qstr, rank
from .nary import EVEN, ODD, GradedOperator, NArySuperalgebra, NAryTable, ParitySpace, _dictvec


class Weight(tuple):
    """Values of a functional on the Cartan basis h_1..h_r."""

    def __new__(cls, values=()):
        return super().__new__(cls, tuple(Q(v) for v in values))

    @classmethod
    def zero(cls, r: int) -> "Weight":
        return cls([0] * r)

    def plus(self, other) -> "Weight":
        return Weight(a + b for a, b in zip(self, other))

    def minus(self, other) -> "Weight":
        return Weight(a - b for a, b in zip(self, other))

    def times(self, k) -> "Weight":
        return Weight(k * a for a in self)

    def is_zero(self) -> bool:
        return not any(self)

    def to_json(self) -> List[str]:
        return [qstr(v) for v in self]

    def __repr__(self):
        return "Weight(%s)" % ", ".join(qstr(v) for v in self)


def weight_sum(ws, r: int) -> Weight:
    acc = [Fraction(0)] * r
    for w in ws:
        for i, a in enumerate(w):
            acc[i] += a
    return Weight(acc)


@dataclass(frozen=True)
class Root:
    weight: Weight
    index: int
    parity: int


@dataclass
class RootSystem:
    roots: List[Root]
    simple_roots: List[Root]

    def weights(self):
        return {r.weight for r in self.roots}

    def is_root(self, w) -> bool:
        return Weight(w) in self.weights()

    def even(self) -> List[Root]:
        return [r for r in self.roots if r.parity == EVEN]

    def odd(self) -> List[Root]:
        return [r for r in self.roots if r.parity == ODD]

    def root_space(self, w) -> List[int]:
        w = Weight(w)
        return [r.index for r in self.roots if r.weight == w]


class LieSuperalgebra(NArySuperalgebra):
    """Binary superalgebra with optional Cartan data and matrix realization.

    ``cartan`` lists the basis indices of h_1..h_r.  ``matrices`` (one per basis
    element) and ``module_parity`` describe a faithful matrix realization when
    one is known; the supertrace form uses it.
    """

    def __init__(self, space: ParitySpace, table: NAryTable, cartan: Sequence[int] = (),
                 matrices: Optional[Sequence[SparseMatrix]] = None,
                 module_parity: Optional[Sequence[int]] = None,
                 name: str = "", simple: Optional[Sequence[Tuple[int, int]]] = None,
                 omega: Optional[Sequence[Tuple[int, int]]] = None,
                 pbw_order: Optional[Sequence[int]] = None):
        if table.arity != 2:
            raise ValueError("a Lie superalgebra bracket is binary")
        super().__init__(space, table)
        self.cartan = list(cartan)
        if len(set(self.cartan)) != len(self.cartan) or any(not 0 <= c < space.dim for c in self.cartan):
            raise ValueError("bad cartan index list")
        for c in self.cartan:
            if space.parity[c] != EVEN:
                raise ValueError("Cartan elements must be even")
        self.matrices = list(matrices) if matrices is not None else None
        self.module_parity = tuple(module_parity) if module_parity is not None else None
        self.name = name
        # simple root vectors as (positive index, negative index) pairs
        self.simple = list(simple) if simple is not None else None
        self.omega = list(omega) if omega is not None else None
        self.pbw_order = list(pbw_order) if pbw_order is not None else None
        self._ad: Dict[int, SparseMatrix] = {}
        self._roots: Optional[RootSystem] = None
        self._grading: Optional[List[int]] = None

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def basis_vector(self, key) -> Dict[int, Fraction]:
        i = self.index(key) if isinstance(key, str) else key
        return {i: Fraction(1)}

    def bracket(self, a, b) -> Dict[int, Fraction]:
        return self.evaluate([a, b])

    def ad(self, i: int) -> SparseMatrix:
        m = self._ad.get(i)
        if m is None:
            m = SparseMatrix.from_columns(self.dim, [self.product((i, j)) for j in range(self.dim)])
            self._ad[i] = m
        return m

    def ad_vector(self, x) -> GradedOperator:
        x = _dictvec(x)
        acc = SparseMatrix.zero(self.dim, self.dim)
        for i, c in x.items():
            acc = acc + self.ad(i) * c
        return GradedOperator(acc, self.space.vector_parity(x))

    def weight_of(self, i: int) -> Weight:
        return root_decomposition(self).weight_table[i]

    def __repr__(self):
        tag = self.name or "LieSuperalgebra"
        return "%s(dim=%d|%d, rank=%d)" % (tag, self.space.even_dim, self.space.odd_dim, self.rank)


def supercommutator(G: LieSuperalgebra, a, b) -> Dict[int, Fraction]:
    """[a, b] for homogeneous a, b, extended from the bracket table."""
    G.space.vector_parity(_dictvec(a))
    G.space.vector_parity(_dictvec(b))
    return G.bracket(a, b)


def matrix_supercommutator(a: SparseMatrix, pa: int, b: SparseMatrix, pb: int) -> SparseMatrix:
    return a * b - (b * a) * (-1 if pa and pb else 1)


def check_super_jacobi(G: LieSuperalgebra):
    from .nary import check_anticommutativity, check_generalized_jacobi
    return check_anticommutativity(G) + check_generalized_jacobi(G)


# ---------------------------------------------------------------------------
# constructions

def from_matrices(mats: Sequence, parities: Sequence, labels: Optional[Sequence[str]] = None,
                  cartan: Sequence[int] = (), module_parity: Optional[Sequence[int]] = None,
                  name: str = "", **extra) -> LieSuperalgebra:
    """Lie superalgebra spanned by the given homogeneous matrices.

    The matrices must be linearly independent and closed under the matrix
    supercommutator; basis vectors are reordered with even ones first
    (``cartan`` indices refer to the input order).
    """
    mats = [m if isinstance(m, SparseMatrix) else SparseMatrix.from_dense(m) for m in mats]
    ps = [int(p) if p in (0, 1) else (1 if str(p).lower() == "odd" else 0) for p in parities]
    if len(ps) != len(mats):
        raise ValueError("one parity per matrix required")
    if labels is None:
        labels = ["x%d" % (i + 1) for i in range(len(mats))]
    order = sorted(range(len(mats)), key=lambda i: (ps[i], i))
    pos = {old: new for new, old in enumerate(order)}
    mats = [mats[i] for i in order]
    ps = [ps[i] for i in order]
    labels = [labels[i] for i in order]
    cartan = [pos[c] for c in cartan]
    if module_parity is not None:
        for m, p in zip(mats, ps):
            for i, j, _ in m.entries():
                if (module_parity[i] + module_parity[j]) % 2 != p:
                    raise ValueError("matrix entry (%d, %d) breaks the declared parity" % (i, j))
    coord = Coordinatizer([m.flat() for m in mats])
    prods = {}
    for i, j in itertools.combinations_with_replacement(range(len(mats)), 2):
        c = matrix_supercommutator(mats[i], ps[i], mats[j], ps[j])
        if c.is_zero():
            continue
        x = coord.coords(c.flat())
        if x is None:
            raise ValueError("matrices are not closed under the supercommutator (%s, %s)" % (labels[i], labels[j]))
        prods[(i, j)] = {k: v for k, v in enumerate(x) if v}
    space = ParitySpace(tuple(labels), tuple(ps))
    return LieSuperalgebra(space, NAryTable(2, prods), cartan=cartan, matrices=mats,
                           module_parity=module_parity, name=name, **extra)


def from_operators(ops: Sequence[GradedOperator], labels: Optional[Sequence[str]] = None) -> LieSuperalgebra:
    if not ops:
        return LieSuperalgebra(ParitySpace((), ()), NAryTable(2, {}), name="zero")
    return from_matrices([o.matrix for o in ops], [o.parity for o in ops],
                         labels or ["D%d" % (i + 1) for i in range(len(ops))])


def _unit_label(k: int, l: int, N: int) -> str:
    return "e%d%d" % (k, l) if N < 10 else "e%d_%d" % (k, l)


def build_amn(m: int, n: int) -> LieSuperalgebra:
    """A(m, n) = sl(m+1|n+1) for m != n in the matrix-unit basis."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if m == n:
        raise ValueError("A(n,n) is excluded here; that case needs the quotient psl(n+1|n+1)")
    N = m + n + 2
    mp = [EVEN] * (m + 1) + [ODD] * (n + 1)   # parity of the 1-based index k is mp[k-1]
    r = N - 1

    def unit(k, l):
        return SparseMatrix(N, N, {(k - 1, l - 1): 1})

    diag = []
    for i in range(1, r + 1):
        if i == m + 1:
            diag.append(SparseMatrix(N, N, {(i - 1, i - 1): 1, (i, i): 1}))
        else:
            diag.append(SparseMatrix(N, N, {(i - 1, i - 1): 1, (i, i): -1}))
    pairs = [(k, l) for k in range(1, N + 1) for l in range(1, N + 1) if k != l]
    even_pairs = [p for p in pairs if mp[p[0] - 1] == mp[p[1] - 1]]
    odd_pairs = [p for p in pairs if mp[p[0] - 1] != mp[p[1] - 1]]
    mats = diag + [unit(*p) for p in even_pairs] + [unit(*p) for p in odd_pairs]
    labels = ["h%d" % i for i in range(1, r + 1)] + [_unit_label(k, l, N) for k, l in even_pairs + odd_pairs]
    parities = [EVEN] * (r + len(even_pairs)) + [ODD] * len(odd_pairs)
    idx = {p: r + i for i, p in enumerate(even_pairs + odd_pairs)}
    # supertranspose: st(e_kl) = e_lk, with a minus sign on the upper-right odd block
    omega = [(i, 1) for i in range(r)] + [None] * len(pairs)
    for (k, l), i in idx.items():
        sign = -1 if (mp[k - 1] == EVEN and mp[l - 1] == ODD) else 1
        omega[i] = (idx[(l, k)], sign)
    simple = [(idx[(i, i + 1)], idx[(i + 1, i)]) for i in range(1, N)]
    pbw = [idx[(k, l)] for k in range(1, N + 1) for l in range(1, k)]
    G = from_matrices(mats, parities, labels, cartan=list(range(r)), module_parity=[p for p in mp],
                      name="A(%d,%d)" % (m, n), simple=simple, omega=omega, pbw_order=pbw)
    G.m, G.n = m, n
    G.unit_index = idx
    return G


def unit_index(G: LieSuperalgebra, k: int, l: int) -> int:
    """Basis index of e_kl (1-based matrix indices) in an A(m, n)."""
    return G.unit_index[(k, l)]


def epsilon(G: LieSuperalgebra, i: int) -> Weight:
    """eps_i in h-coordinates, from eps_i(e_jj) = delta_ij."""
    return Weight(G.matrices[c][i - 1, i - 1] for c in G.cartan)


def _antisym_ops(B: Sequence[Sequence[int]]) -> List[Tuple[Tuple[int, int], SparseMatrix]]:
    n = len(B)
    out = []
    for a, b in itertools.combinations(range(n), 2):
        # E_ab(v) = B(b, v) a - B(a, v) b
        ent: Dict[Tuple[int, int], Fraction] = {}
        for v in range(n):
            if B[b][v]:
                ent[(a, v)] = ent.get((a, v), 0) + Q(B[b][v])
            if B[a][v]:
                ent[(b, v)] = ent.get((b, v), 0) - Q(B[a][v])
        out.append(((a, b), SparseMatrix(n, n, ent)))
    return out


def so_algebra(B: Sequence[Sequence[object]], vector_labels: Optional[Sequence[str]] = None,
               cartan_pairs: Sequence[Tuple[int, int]] = (), name: str = "so") -> LieSuperalgebra:
    """so(V, B) spanned by E_ab(v) = B(b,v) a - B(a,v) b; ``cartan_pairs`` pick the torus."""
    n = len(B)
    vl = list(vector_labels) if vector_labels else ["v%d" % (i + 1) for i in range(n)]
    ops = _antisym_ops(B)
    labels = ["E_%s%s" % (vl[a], vl[b]) for (a, b), _ in ops]
    where = {p: i for i, (p, _) in enumerate(ops)}
    cartan = [where[tuple(sorted(p))] for p in cartan_pairs]
    return from_matrices([m for _, m in ops], [EVEN] * len(ops), labels, cartan=cartan,
                         module_parity=[EVEN] * n, name=name)


def so_euclidean(n: int) -> LieSuperalgebra:
    B = [[int(i == j) for j in range(n)] for i in range(n)]
    return so_algebra(B, ["%d" % (i + 1) for i in range(n)], name="so(%d)" % n)


def hyperbolic_form(n: int):
    """Split symmetric form: pairs (x_i, y_i) with B(x_i, y_i) = 1, plus z with B(z,z) = 1 if n is odd."""
    B = [[0] * n for _ in range(n)]
    labels = []
    k = n // 2
    for i in range(k):
        B[2 * i][2 * i + 1] = B[2 * i + 1][2 * i] = 1
        labels += ["x%d" % (i + 1), "y%d" % (i + 1)]
    if n % 2:
        B[n - 1][n - 1] = 1
        labels.append("z")
    return B, labels


def so_split(n: int) -> LieSuperalgebra:
    """Split so(n) over Q; the torus E_{x_i y_i} acts diagonally on the natural module."""
    B, labels = hyperbolic_form(n)
    pairs = [(2 * i, 2 * i + 1) for i in range(n // 2)]
    return so_algebra(B, labels, cartan_pairs=pairs, name="so(%d)" % n)


def osp12() -> LieSuperalgebra:
    """osp(1|2) on the (1|2)-dimensional module with form B(e,e) = 1, B(o1,o2) = -B(o2,o1) = 1."""
    h = SparseMatrix(3, 3, {(1, 1): 1, (2, 2): -1})
    e = SparseMatrix(3, 3, {(1, 2): 1})
    f = SparseMatrix(3, 3, {(2, 1): 1})
    xp = SparseMatrix(3, 3, {(1, 0): 1, (0, 2): -1})
    xm = SparseMatrix(3, 3, {(2, 0): 1, (0, 1): 1})
    return from_matrices([h, e, f, xp, xm], [EVEN, EVEN, EVEN, ODD, ODD], ["h", "e", "f", "x+", "x-"],
                         cartan=[0], module_parity=[EVEN, ODD, ODD], name="osp(1|2)",
                         simple=[(3, 4)])


# ---------------------------------------------------------------------------
# roots and gradings

class _RootData(RootSystem):
    weight_table: List[Weight]


def root_decomposition(G: LieSuperalgebra) -> RootSystem:
    """Weights of every basis vector under ad h_1..h_r, and the root system."""
    if G._roots is not None:
        return G._roots
    if not G.cartan:
        raise ValueError("algebra has no Cartan data")
    for a in G.cartan:
        for b in G.cartan:
            if G.product((a, b)):
                raise ValueError("Cartan elements do not commute")
    table = []
    for j in range(G.dim):
        vals = []
        for c in G.cartan:
            col = G.product((c, j))
            extra = [k for k in col if k != j]
            if extra:
                raise ValueError("ad %s is not diagonal on %s" % (G.labels[c], G.labels[j]))
            vals.append(col.get(j, Fraction(0)))
        table.append(Weight(vals))
    roots = []
    cset = set(G.cartan)
    for j in range(G.dim):
        if j in cset:
            continue
        if table[j].is_zero():
            raise ValueError("basis vector %s has zero weight but is not in the Cartan list" % G.labels[j])
        roots.append(Root(table[j], j, G.parity[j]))
    if G.simple is not None:
        simple = [Root(table[p], p, G.parity[p]) for p, _ in G.simple]
    else:
        pos = [rt for rt in roots if _lex_positive(rt.weight)]
        pws = {rt.weight for rt in pos}
        simple = []
        for rt in pos:
            decomposable = any(rt.weight.minus(o.weight) in pws for o in pos if o.weight != rt.weight)
            if not decomposable:
                simple.append(rt)
    rs = _RootData(roots, simple)
    rs.weight_table = table
    G._roots = rs
    return rs


def _lex_positive(w: Weight) -> bool:
    for a in w:
        if a:
            return a > 0
    return False


def standard_grading(G: LieSuperalgebra) -> List[int]:
    """Integer degree of every basis vector; simple root vectors get degree 1."""
    if G._grading is not None:
        return G._grading
    rs = root_decomposition(G)
    simple_w = [list(s.weight) for s in rs.simple_roots]
    coord = Coordinatizer([{i: x for i, x in enumerate(w) if x} for w in simple_w])
    deg = []
    for j in range(G.dim):
        w = rs.weight_table[j]
        if w.is_zero():
            deg.append(0)
            continue
        c = coord.coords({i: x for i, x in enumerate(w) if x})
        if c is None:
            raise ValueError("weight of %s is not in the span of the simple roots" % G.labels[j])
        s = sum(c)
        if s.denominator != 1:
            raise ValueError("non-integral degree for %s" % G.labels[j])
        deg.append(int(s))
    G._grading = deg
    return deg


def q_weight(G: LieSuperalgebra, q, x) -> Fraction:
    """Eigenvalue of ad q on x; q is a vector in G or the diagonal of a realization matrix."""
    if isinstance(q, (list, tuple)) and G.matrices is not None and len(q) == G.matrices[0].rows:
        qm = SparseMatrix(len(q), len(q), {(i, i): v for i, v in enumerate(q) if v})
        qv = Coordinatizer([mm.flat() for mm in G.matrices]).coords(qm.flat())
        if qv is None:
            raise ValueError("q is not an element of the algebra")
        q = {i: v for i, v in enumerate(qv) if v}
    q = _dictvec(q)
    x = _dictvec(x)
    y = G.bracket(q, x)
    return eigenvalue(x, y)


def eigenvalue(x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Fraction:
    """lam with y = lam x; ValueError if none exists."""
    if not x:
        raise ValueError("zero vector has no eigenvalue")
    k = min(x)
    lam = Q(y.get(k, 0)) / Q(x[k])
    if {i: lam * v for i, v in x.items() if lam * v} != {i: v for i, v in y.items() if v}:
        raise ValueError("vector is not an eigenvector")
    return lam


@dataclass
class TriangularDecomposition:
    H: List[int]
    Nplus: List[int]
    Nminus: List[int]


def triangular_decomposition(G: LieSuperalgebra) -> TriangularDecomposition:
    deg = standard_grading(G)
    H = [i for i in range(G.dim) if deg[i] == 0]
    plus = [i for i in range(G.dim) if deg[i] > 0]
    minus = [i for i in range(G.dim) if deg[i] < 0]
    if G.pbw_order is not None:
        if sorted(G.pbw_order) != sorted(minus):
            raise ValueError("stored PBW order does not match the negative part")
        minus = list(G.pbw_order)
    return TriangularDecomposition(H, plus, minus)


def chevalley_generators(G: LieSuperalgebra) -> List[int]:
    """Simple root vectors, their negatives and the Cartan basis; every basis element without Cartan data."""
    if not G.cartan:
        return list(range(G.dim))
    rs = root_decomposition(G)
    gens = []
    weights = rs.weight_table
    for s in rs.simple_roots:
        gens.append(s.index)
        neg = [j for j in range(G.dim) if weights[j] == s.weight.times(-1)]
        gens.extend(neg)
    gens.extend(G.cartan)
    return sorted(set(gens))


def omega_map(G: LieSuperalgebra) -> List[Tuple[int, int]]:
    """Antiautomorphism on the basis as (image index, sign); defaults to e_alpha <-> e_-alpha."""
    if G.omega is not None:
        return G.omega
    rs = root_decomposition(G)
    w = rs.weight_table
    out = []
    for j in range(G.dim):
        if j in G.cartan:
            out.append((j, 1))
            continue
        neg = [k for k in range(G.dim) if w[k] == w[j].times(-1) and k not in G.cartan]
        if len(neg) != 1:
            raise ValueError("no unique opposite root vector for %s" % G.labels[j])
        out.append((neg[0], 1))
    return out


# ---------------------------------------------------------------------------
# invariant forms

def _supertrace(mat: SparseMatrix, parity: Sequence[int]) -> Fraction:
    s = Fraction(0)
    for i, v in enumerate(mat.diagonal()):
        if v:
            s += -v if parity[i] else v
    return s


def supertrace_form(G: LieSuperalgebra) -> SparseMatrix:
    """Gram matrix of str(ab) in the matrix realization, or of str(ad a ad b) without one."""
    if G.matrices is not None:
        mats = G.matrices
        par = G.module_parity or (EVEN,) * mats[0].rows
    else:
        mats = [G.ad(i) for i in range(G.dim)]
        par = G.parity
    ent = {}
    for i in range(G.dim):
        for j in range(i, G.dim):
            v = _supertrace(mats[i] * mats[j], par)
            if v:
                ent[(i, j)] = v
                # str(ab) = (-1)^{|a||b|} str(ba)
                ent[(j, i)] = -v if (G.parity[i] and G.parity[j]) else v
    return SparseMatrix(G.dim, G.dim, ent)


def is_nondegenerate(G: LieSuperalgebra) -> bool:
    return rank(supertrace_form(G)) == G.dim


def bilinear(form: SparseMatrix, a: Mapping, b: Mapping) -> Fraction:
    s = Fraction(0)
    for i, x in a.items():
        row = form.data.get(i)
        if not row:
            continue
        for j, y in b.items():
            v = row.get(j)
            if v:
                s += x * v * y
    return s

