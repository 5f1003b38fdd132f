"""
Z2-graded n-ary superalgebras given by structure tables.

Covers the Filippov identities (super anticommutativity and the generalized
Jacobi identity), left multiplications, strictly inner derivations and their
span, multiplication algebras, ideals, solvability and a certified simplicity
test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .exact import (
    Q,
    RowSpace,
    SparseMatrix,
    SparseVector,
    axpy,
    kernel_rows,
    scaled,
    span_basis,
)

EVEN, ODD = 0, 1
PARITY_NAMES = {EVEN: "even", ODD: "odd"}


def parity_of(name) -> int:
    if name in (0, 1):
        return int(name)
    key = str(name).strip().lower()
    if key in ("even", "0"):
        return EVEN
    if key in ("odd", "1"):
        return ODD
    raise ValueError("unknown parity %r" % (name,))


class NotHomogeneous(ValueError):
    pass


class NotIDSuperalgebra(ValueError):
    """Raised by :func:`inder` when some ad_i is not a derivation."""

    def __init__(self, slot, args):
        self.slot = slot
        self.args = args
        super().__init__("ad_%d%s is not a derivation" % (slot, tuple(args)))


@dataclass(frozen=True)
class ParitySpace:
    labels: Tuple[str, ...]
    parity: Tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.parity):
            raise ValueError("labels and parities differ in length")
        if any(p not in (0, 1) for p in self.parity):
            raise ValueError("parities must be 0 or 1")
        if list(self.parity) != sorted(self.parity):
            raise ValueError("even basis vectors must precede odd ones")

    @classmethod
    def make(cls, even_dim: int, odd_dim: int, labels: Optional[Sequence[str]] = None) -> "ParitySpace":
        if labels is None:
            labels = ["e%d" % (i + 1) for i in range(even_dim)] + ["o%d" % (i + 1) for i in range(odd_dim)]
        return cls(tuple(labels), (EVEN,) * even_dim + (ODD,) * odd_dim)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def even_dim(self) -> int:
        return self.parity.count(EVEN)

    @property
    def odd_dim(self) -> int:
        return self.parity.count(ODD)

    def vector_parity(self, v: Mapping[int, object]) -> int:
        """Parity of a homogeneous vector (zero counts as even)."""
        ps = {self.parity[i] for i, c in v.items() if c}
        if len(ps) > 1:
            raise NotHomogeneous("vector mixes even and odd components")
        return ps.pop() if ps else EVEN


def _dictvec(v) -> Dict[int, Fraction]:
    if isinstance(v, SparseVector):
        return v.entries
    if isinstance(v, int):
        return {v: Fraction(1)}
    return dict(v)


def sort_sign(idx: Sequence[int], parity: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Sign and sorted tuple for an anticommutative super product.

    Every adjacent swap x, y contributes -(-1)^{p(x)p(y)}.
    """
    a = list(idx)
    sign = 1
    n = len(a)
    for i in range(n):
        for j in range(n - 1 - i):
            x, y = a[j], a[j + 1]
            if x > y:
                a[j], a[j + 1] = y, x
                if not (parity[x] and parity[y]):
                    sign = -sign
    return sign, tuple(a)


class NAryTable:
    """Structure constants on basis tuples.

    With ``canonical=True`` only non-decreasing index tuples are stored and
    every other product is rebuilt from the anticommutativity sign rule; with
    ``canonical=False`` every stored tuple is taken literally and missing ones
    are zero.
    """

    def __init__(self, arity: int, products: Optional[Mapping[Tuple[int, ...], Mapping[int, object]]] = None,
                 canonical: bool = True):
        if arity < 2:
            raise ValueError("arity must be at least 2")
        self.arity = arity
        self.canonical = canonical
        self.products: Dict[Tuple[int, ...], Dict[int, Fraction]] = {}
        for k, v in (products or {}).items():
            k = tuple(k)
            if len(k) != arity:
                raise ValueError("product %r has wrong arity" % (k,))
            if canonical and list(k) != sorted(k):
                raise ValueError("canonical table stores only sorted tuples, got %r" % (k,))
            vv = {i: Q(c) for i, c in _dictvec(v).items() if c}
            if vv:
                self.products[k] = vv


class NArySuperalgebra:
    """A Z2-graded n-ary algebra on a basis, extended multilinearly."""

    def __init__(self, space: ParitySpace, table: NAryTable):
        self.space = space
        self.table = table
        self._cache: Dict[Tuple[int, ...], Dict[int, Fraction]] = {}
        dim = space.dim
        par = space.parity
        for k, v in table.products.items():
            if any(not 0 <= i < dim for i in k) or any(not 0 <= i < dim for i in v):
                raise IndexError("product %r references an index outside the basis" % (k,))
            want = sum(par[i] for i in k) % 2
            if any(par[i] != want for i in v):
                raise ValueError("product %r does not respect the grading" % (k,))

    @property
    def arity(self) -> int:
        return self.table.arity

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def parity(self) -> Tuple[int, ...]:
        return self.space.parity

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.space.labels

    def product(self, idx: Tuple[int, ...]) -> Dict[int, Fraction]:
        """Product of basis vectors (do not mutate the result)."""
        c = self._cache.get(idx)
        if c is not None:
            return c
        if self.table.canonical:
            sign, key = sort_sign(idx, self.parity)
            base = self.table.products.get(key)
            c = scaled(sign, base) if base else {}
        else:
            c = self.table.products.get(idx, {})
        self._cache[idx] = c
        return c

    def evaluate(self, args: Sequence) -> Dict[int, Fraction]:
        if len(args) != self.arity:
            raise ValueError("expected %d arguments, got %d" % (self.arity, len(args)))
        vecs = [_dictvec(a) for a in args]
        out: Dict[int, Fraction] = {}
        if any(not v for v in vecs):
            return out
        for combo in itertools.product(*[list(v.items()) for v in vecs]):
            coef = 1
            for _, c in combo:
                coef *= c
            p = self.product(tuple(i for i, _ in combo))
            if p:
                axpy(out, coef, p)
        return out

    def is_abelian(self) -> bool:
        return all(not self.product(t) for t in itertools.product(range(self.dim), repeat=self.arity))

    def full_table(self) -> Dict[Tuple[int, ...], Dict[int, Fraction]]:
        out = {}
        for t in itertools.product(range(self.dim), repeat=self.arity):
            p = self.product(t)
            if p:
                out[t] = dict(p)
        return out

    def to_canonical(self) -> "NArySuperalgebra":
        """Same algebra with only sorted tuples stored.

        Only valid for algebras satisfying super anticommutativity.
        """
        if self.table.canonical:
            return self
        prods = {}
        for t in itertools.combinations_with_replacement(range(self.dim), self.arity):
            p = self.product(t)
            if p:
                prods[t] = dict(p)
        return NArySuperalgebra(self.space, NAryTable(self.arity, prods, canonical=True))

    def __repr__(self):
        return "NArySuperalgebra(arity=%d, dim=%d|%d)" % (self.arity, self.space.even_dim, self.space.odd_dim)


def evaluate(alg: NArySuperalgebra, args: Sequence) -> SparseVector:
    return SparseVector(alg.dim, alg.evaluate(args))


def zero_algebra(arity: int, even_dim: int, odd_dim: int = 0) -> NArySuperalgebra:
    return NArySuperalgebra(ParitySpace.make(even_dim, odd_dim), NAryTable(arity, {}))


def vector_product_algebra(dim: int, metric: Optional[Sequence[Sequence[object]]] = None,
                           labels: Optional[Sequence[str]] = None) -> NArySuperalgebra:
    """The (dim-1)-ary vector product on a dim-dimensional even space.

    ``[e_i1, ..., e_i(d-1)] = sum_l eps(i1..i(d-1) j) g^{j l} e_l`` for a
    nondegenerate symmetric ``metric`` g (identity by default).  For dim = 3
    this is the cross product.
    """
    n = dim - 1
    if metric is None:
        ginv = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    else:
        from .exact import _invert
        ginv = _invert([[Q(x) for x in r] for r in metric])
    prods = {}
    for t in itertools.combinations(range(dim), n):
        (j,) = set(range(dim)) - set(t)
        sign, _ = sort_sign(t + (j,), (0,) * dim)
        val = {}
        for l in range(dim):
            if ginv[j][l]:
                val[l] = sign * ginv[j][l]
        prods[t] = val
    space = ParitySpace(tuple(labels) if labels else tuple("e%d" % (i + 1) for i in range(dim)), (EVEN,) * dim)
    return NArySuperalgebra(space, NAryTable(n, prods))


def direct_sum(a: NArySuperalgebra, b: NArySuperalgebra) -> NArySuperalgebra:
    """Direct sum of two even algebras of the same arity (b's basis shifted)."""
    if a.arity != b.arity:
        raise ValueError("arity mismatch")
    if a.space.odd_dim or b.space.odd_dim:
        raise ValueError("direct_sum only supports even algebras")
    off = a.dim
    prods = dict(a.full_table())
    for t, v in b.full_table().items():
        prods[tuple(i + off for i in t)] = {i + off: c for i, c in v.items()}
    labels = tuple("%s" % l for l in a.labels) + tuple("%s'" % l for l in b.labels)
    space = ParitySpace(labels, (EVEN,) * (a.dim + b.dim))
    return NArySuperalgebra(space, NAryTable(a.arity, prods, canonical=False))


# ---------------------------------------------------------------------------
# identity checks

@dataclass
class AnticommutativityViolation:
    args: Tuple[int, ...]
    position: int
    lhs: Dict[int, Fraction]
    rhs: Dict[int, Fraction]


@dataclass
class JacobiViolation:
    xs: Tuple[int, ...]
    ys: Tuple[int, ...]
    lhs: Dict[int, Fraction]
    rhs: Dict[int, Fraction]

    @property
    def residual(self) -> Dict[int, Fraction]:
        return axpy(dict(self.lhs), -1, self.rhs)


def check_anticommutativity(alg: NArySuperalgebra) -> List[AnticommutativityViolation]:
    """Adjacent transpositions that break super anticommutativity.

    A violating pair of tuples related by the swap is reported once, at the
    lexicographically smaller tuple; ``position`` is the index of the second
    swapped slot.
    """
    par = alg.parity
    out = []
    for t in itertools.product(range(alg.dim), repeat=alg.arity):
        lhs = alg.product(t)
        for i in range(1, alg.arity):
            s = list(t)
            s[i - 1], s[i] = s[i], s[i - 1]
            s = tuple(s)
            if s < t:
                continue
            sign = 1 if par[t[i - 1]] and par[t[i]] else -1
            rhs = scaled(sign, alg.product(s))
            if lhs != rhs:
                out.append(AnticommutativityViolation(t, i, dict(lhs), rhs))
    out.sort(key=lambda v: (v.args, v.position))
    return out


def _right_operators(alg: NArySuperalgebra):
    """For every basis tuple y of length n-1, the map x -> [x, y2, ..., yn] by columns."""
    n, dim = alg.arity, alg.dim
    ops = {}
    for ys in itertools.product(range(dim), repeat=n - 1):
        ops[ys] = [alg.product((j,) + ys) for j in range(dim)]
    return ops


def _apply_cols(cols, x):
    out: Dict[int, Fraction] = {}
    for j, a in x.items():
        c = cols[j]
        if c:
            axpy(out, a, c)
    return out


def check_generalized_jacobi(alg: NArySuperalgebra) -> List[JacobiViolation]:
    """Basis instances of
    [[x1..xn], y2..yn] = sum_i (-1)^{p(y) (p(x_{i+1})+..+p(x_n))} [x1, .., [x_i, y2..yn], .., xn]
    that fail.
    """
    n, dim, par = alg.arity, alg.dim, alg.parity
    right = _right_operators(alg)
    out = []
    xs_all = list(itertools.product(range(dim), repeat=n))
    for ys, cols in right.items():
        py = sum(par[y] for y in ys) % 2
        ycols = [c for c in cols]
        for xs in xs_all:
            lhs = _apply_cols(ycols, alg.product(xs))
            rhs: Dict[int, Fraction] = {}
            for i in range(n):
                inner = ycols[xs[i]]
                if not inner:
                    continue
                qbar = sum(par[x] for x in xs[i + 1:]) % 2
                sign = -1 if (py and qbar) else 1
                for j, c in inner.items():
                    t = xs[:i] + (j,) + xs[i + 1:]
                    p = alg.product(t)
                    if p:
                        axpy(rhs, sign * c, p)
            if lhs != rhs:
                out.append(JacobiViolation(xs, ys, dict(lhs), rhs))
    out.sort(key=lambda v: (v.xs, v.ys))
    return out


def is_filippov(alg: NArySuperalgebra) -> bool:
    return not check_anticommutativity(alg) and not check_generalized_jacobi(alg)


# ---------------------------------------------------------------------------
# operators

@dataclass(frozen=True)
class GradedOperator:
    matrix: SparseMatrix
    parity: int

    def validate(self, space: ParitySpace):
        par = space.parity
        for i, j, _ in self.matrix.entries():
            if (par[i] + par[j]) % 2 != self.parity:
                raise ValueError("operator entry (%d, %d) breaks parity %d" % (i, j, self.parity))
        return self

    def __call__(self, v) -> Dict[int, Fraction]:
        return self.matrix.apply(_dictvec(v))


def supercommutator_ops(a: GradedOperator, b: GradedOperator) -> GradedOperator:
    ab = a.matrix * b.matrix
    ba = b.matrix * a.matrix
    sign = -1 if (a.parity and b.parity) else 1
    return GradedOperator(ab - ba * sign, (a.parity + b.parity) % 2)


def _homog_parities(alg, xs):
    try:
        return [alg.space.vector_parity(_dictvec(x)) for x in xs]
    except NotHomogeneous as e:
        raise NotHomogeneous("left multiplication needs parity-homogeneous arguments") from e


def left_mult(alg: NArySuperalgebra, xs: Sequence) -> GradedOperator:
    """L_x : y -> [x1, ..., x_{n-1}, y]."""
    if len(xs) != alg.arity - 1:
        raise ValueError("left multiplication takes %d arguments" % (alg.arity - 1))
    ps = _homog_parities(alg, xs)
    vecs = [_dictvec(x) for x in xs]
    cols = [alg.evaluate(vecs + [{j: 1}]) for j in range(alg.dim)]
    return GradedOperator(SparseMatrix.from_columns(alg.dim, cols), sum(ps) % 2)


def ad_slot(alg: NArySuperalgebra, i: int, xs: Sequence) -> GradedOperator:
    """ad_i(x1..x_{n-1}) x = (-1)^{p(x) q_i} [x1, .., x_{i-1}, x, x_i, .., x_{n-1}],
    q_i = p(x_i) + ... + p(x_{n-1}); slots are 1-based.
    """
    n = alg.arity
    if not 1 <= i <= n:
        raise IndexError("slot %d outside 1..%d" % (i, n))
    if len(xs) != n - 1:
        raise ValueError("ad_slot takes %d arguments" % (n - 1))
    ps = _homog_parities(alg, xs)
    vecs = [_dictvec(x) for x in xs]
    q = sum(ps[i - 1:]) % 2
    cols = []
    for j in range(alg.dim):
        args = vecs[: i - 1] + [{j: 1}] + vecs[i - 1:]
        v = alg.evaluate(args)
        if q and alg.parity[j]:
            v = scaled(-1, v)
        cols.append(v)
    return GradedOperator(SparseMatrix.from_columns(alg.dim, cols), sum(ps) % 2)


def is_derivation(alg: NArySuperalgebra, D: GradedOperator) -> bool:
    """Super Leibniz rule D(a1..an) = sum (-1)^{s q_i} (a1, .., D a_i, .., an) on basis tuples."""
    n, par, s = alg.arity, alg.parity, D.parity
    cols = D.matrix.columns()
    for t in itertools.product(range(alg.dim), repeat=n):
        lhs = D.matrix.apply(alg.product(t))
        rhs: Dict[int, Fraction] = {}
        q = 0
        for i in range(n):
            col = cols[t[i]]
            if col:
                sign = -1 if (s and q % 2) else 1
                for j, c in col.items():
                    p = alg.product(t[:i] + (j,) + t[i + 1:])
                    if p:
                        axpy(rhs, sign * c, p)
            q += par[t[i]]
        if lhs != rhs:
            return False
    return True


def operator_span(ops: Sequence[GradedOperator], dim: int) -> List[GradedOperator]:
    """Basis (parity-homogeneous) of the span of graded operators."""
    out = []
    for p in (EVEN, ODD):
        vecs = [o.matrix.flat() for o in ops if o.parity == p]
        for b in span_basis(vecs):
            out.append(GradedOperator(SparseMatrix.unflat(dim, dim, b), p))
    return out


def close_under_supercommutator(ops: Sequence[GradedOperator], dim: int) -> List[GradedOperator]:
    basis = operator_span(ops, dim)
    spaces = {EVEN: RowSpace(), ODD: RowSpace()}
    for b in basis:
        spaces[b.parity].add(b.matrix.flat())
    i = 0
    while i < len(basis):
        for j in range(i + 1):
            c = supercommutator_ops(basis[i], basis[j])
            if c.matrix.is_zero():
                continue
            if spaces[c.parity].add(c.matrix.flat()):
                basis.append(c)
        i += 1
    return operator_span(basis, dim)


def all_strictly_inner(alg: NArySuperalgebra):
    n = alg.arity
    for xs in itertools.product(range(alg.dim), repeat=n - 1):
        for i in range(1, n + 1):
            yield i, xs, ad_slot(alg, i, [{x: 1} for x in xs])


def inder(alg: NArySuperalgebra, check: bool = True) -> List[GradedOperator]:
    """Basis of the span of all strictly inner derivations ad_i(basis tuple)."""
    ops = []
    for i, xs, D in all_strictly_inner(alg):
        if check and not D.matrix.is_zero() and not is_derivation(alg, D):
            raise NotIDSuperalgebra(i, xs)
        ops.append(D)
    basis = operator_span(ops, alg.dim)
    if check:
        spaces = {EVEN: RowSpace(), ODD: RowSpace()}
        for b in basis:
            spaces[b.parity].add(b.matrix.flat())
        for a in basis:
            for b in basis:
                c = supercommutator_ops(a, b)
                if not spaces[c.parity].contains(c.matrix.flat()):
                    raise ArithmeticError("span of strictly inner derivations is not closed")
    return basis


def multiplication_operators(alg: NArySuperalgebra) -> List[GradedOperator]:
    """Basis of the Lie superalgebra generated by all basis left multiplications."""
    gens = [left_mult(alg, [{x: 1} for x in xs])
            for xs in itertools.product(range(alg.dim), repeat=alg.arity - 1)]
    return close_under_supercommutator(gens, alg.dim)


def multiplication_lie_algebra(alg: NArySuperalgebra):
    from .lie import from_operators
    return from_operators(multiplication_operators(alg))


# ---------------------------------------------------------------------------
# subspaces, ideals, simplicity

def _products_of_subspaces(alg, spaces: Sequence[Sequence[Mapping]]):
    for combo in itertools.product(*spaces):
        v = alg.evaluate(list(combo))
        if v:
            yield v


def derived_series(alg: NArySuperalgebra) -> List[int]:
    """Dimensions of L^(1), L^(2), ... until 0 or stabilisation."""
    n = alg.arity
    basis = [{i: 1} for i in range(alg.dim)]
    series = []
    while True:
        nxt = span_basis(_products_of_subspaces(alg, [basis] * n))
        series.append(len(nxt))
        if not nxt or len(nxt) == len(basis):
            return series
        basis = nxt


def is_solvable(alg: NArySuperalgebra) -> bool:
    return derived_series(alg)[-1] == 0


def _closure_ideal(alg, vectors: Sequence[Mapping]) -> Tuple[RowSpace, List[Dict]]:
    rs = RowSpace()
    basis = []
    for v in vectors:
        v = _dictvec(v)
        if rs.add(v):
            basis.append(dict(v))
    n = alg.arity
    others = list(itertools.product(range(alg.dim), repeat=n - 1))
    i = 0
    while i < len(basis):
        s = basis[i]
        for rest in others:
            for pos in range(n):
                args = [{r: 1} for r in rest]
                args.insert(pos, s)
                v = alg.evaluate(args)
                if v and rs.add(v):
                    basis.append(v)
        i += 1
    return rs, basis


def ideal_generated(alg: NArySuperalgebra, vectors: Sequence) -> List[Dict[int, Fraction]]:
    rs, _ = _closure_ideal(alg, vectors)
    return [{k: Fraction(x) for k, x in r.items()} for r in rs.basis()]


def is_ideal(alg: NArySuperalgebra, vectors: Sequence) -> bool:
    """True iff [S, L, .., L] (S in any slot) stays inside span(vectors).

    The span must also be graded, i.e. closed under the parity projections.
    """
    vecs = [_dictvec(v) for v in vectors]
    rs = RowSpace()
    for v in vecs:
        rs.add(v)
    par = alg.parity
    for v in vecs:
        for p in (EVEN, ODD):
            comp = {i: c for i, c in v.items() if par[i] == p}
            if comp and not rs.contains(comp):
                return False
    basis = [dict(b) for b in rs.basis()]
    n = alg.arity
    for s in basis:
        for rest in itertools.product(range(alg.dim), repeat=n - 1):
            for pos in range(n):
                args = [{r: 1} for r in rest]
                args.insert(pos, s)
                v = alg.evaluate(args)
                if v and not rs.contains(v):
                    return False
    return True


@dataclass
class SimplicityVerdict:
    status: str  # "simple" | "not-simple" | "undetermined"
    reason: str
    witness: Optional[List[Dict[int, Fraction]]] = None
    diagnostics: Dict[str, object] = field(default_factory=dict)

    def __bool__(self):
        return self.status == "simple"


def diagonal_torus(ops: Sequence[GradedOperator], dim: int) -> List[List[Fraction]]:
    """Basis of the diagonal matrices inside span(ops), as diagonal entry lists."""
    evens = [o for o in ops if o.parity == EVEN]
    if not evens:
        return []
    # unknown c_k; equations: every off-diagonal entry of sum c_k M_k vanishes
    eqs: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for k, o in enumerate(evens):
        for i, j, v in o.matrix.entries():
            if i != j:
                eqs.setdefault((i, j), {})[k] = v
    sols = kernel_rows(eqs.values(), len(evens))
    torus = []
    for c in sols:
        diag = [Fraction(0)] * dim
        for k, ck in c.items():
            for i in range(dim):
                diag[i] += ck * evens[k].matrix[i, i]
        if any(diag):
            torus.append(diag)
    rs = RowSpace()
    return [t for t in torus if rs.add({i: x for i, x in enumerate(t) if x})]


def is_simple(alg: NArySuperalgebra, torus: Optional[Sequence[Sequence[object]]] = None) -> SimplicityVerdict:
    """Simplicity with an explicit ideal witness or a complete weight-space argument.

    ``torus`` is an optional list of diagonal derivations (given by their
    diagonal entries).  Without one, the diagonal part of the span of strictly
    inner derivations is used.  "simple" is returned only when every nonzero
    weight space is one-dimensional and no nonzero ideal fits in the zero
    weight space, since then every ideal contains a basis vector.
    """
    dim = alg.dim
    if dim == 0 or derived_series(alg)[0] == 0:
        return SimplicityVerdict("not-simple", "derived subalgebra is 0", witness=[])
    full = dim
    for i in range(dim):
        gen = ideal_generated(alg, [{i: 1}])
        if len(gen) < full:
            return SimplicityVerdict("not-simple", "ideal generated by %s is proper" % alg.labels[i], witness=gen)
    if torus is None:
        try:
            ops = inder(alg, check=False)
        except Exception as e:  # pragma: no cover - defensive
            return SimplicityVerdict("undetermined", "no torus available: %s" % e)
        torus = diagonal_torus(ops, dim)
    else:
        # ideals are only stable under inner derivations, so the torus must be inner
        torus = [[Q(x) for x in t] for t in torus]
        span = RowSpace()
        for o in inder(alg, check=False):
            if o.parity == EVEN:
                span.add(o.matrix.flat())
        for t in torus:
            if len(t) != dim:
                raise ValueError("torus element has %d entries, expected %d" % (len(t), dim))
            if not span.contains({i * dim + i: x for i, x in enumerate(t) if x}):
                raise ValueError("supplied torus element is not in the span of inner derivations")
    if not torus:
        return SimplicityVerdict("undetermined", "no diagonal torus acts on the basis",
                                 diagnostics={"ideals_generated_by_basis": "all equal L"})
    weights = [tuple(t[i] for t in torus) for i in range(dim)]
    zero = tuple(Fraction(0) for _ in torus)
    nonzero = [w for w in weights if w != zero]
    if len(set(nonzero)) != len(nonzero):
        return SimplicityVerdict("undetermined", "nonzero weight spaces are not one-dimensional",
                                 diagnostics={"weights": weights})
    zero_idx = [i for i, w in enumerate(weights) if w == zero]
    if len(zero_idx) == dim:
        return SimplicityVerdict("undetermined", "torus acts with weight 0 only")
    # largest ideal inside the zero weight space: W <- {z in W : [.., z, ..] in W}
    sub = [{i: Fraction(1)} for i in zero_idx]
    n = alg.arity
    rests = list(itertools.product(range(dim), repeat=n - 1))
    while sub:
        annihilator = kernel_rows(sub, dim)
        eqs: Dict[Tuple, Dict[int, Fraction]] = {}
        for k, z in enumerate(sub):
            for rest in rests:
                for pos in range(n):
                    args = [{r: 1} for r in rest]
                    args.insert(pos, z)
                    v = alg.evaluate(args)
                    if not v:
                        continue
                    for a, f in enumerate(annihilator):
                        val = sum(c * f.get(i, 0) for i, c in v.items())
                        if val:
                            eqs.setdefault((rest, pos, a), {})[k] = val
        sol = kernel_rows(eqs.values(), len(sub))
        if len(sol) == len(sub):
            break
        new = []
        for c in sol:
            acc: Dict[int, Fraction] = {}
            for k, ck in c.items():
                axpy(acc, ck, sub[k])
            new.append(acc)
        sub = span_basis(new)
    if sub:
        if is_ideal(alg, sub):
            return SimplicityVerdict("not-simple", "ideal inside the zero weight space", witness=sub)
        return SimplicityVerdict("undetermined", "zero weight space carries an invariant subspace",
                                 diagnostics={"subspace": sub})
    return SimplicityVerdict("simple", "certified via weight-spanned ideal search",
                             diagnostics={"torus_rank": len(torus), "weights": weights})
