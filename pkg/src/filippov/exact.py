"""
Exact rational arithmetic and sparse linear algebra.

Scalars are :class:`fractions.Fraction`.  Vectors are sparse maps from index to
nonzero coefficient; matrices are stored row-wise the same way.  Elimination is
fraction-free: every working row is kept as a primitive integer vector and
combined by integer cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

Rational = Fraction

DENSE_CUTOFF = 64


def Q(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def qstr(x) -> str:
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


# ---------------------------------------------------------------------------
# dict-level helpers (hot paths use plain dicts)

def axpy(y: Dict, a, x: Mapping) -> Dict:
    """y += a*x in place, dropping zeros."""
    if not a:
        return y
    for k, v in x.items():
        w = y.get(k, 0) + a * v
        if w:
            y[k] = w
        else:
            y.pop(k, None)
    return y


def scaled(a, x: Mapping) -> Dict:
    if not a:
        return {}
    return {k: a * v for k, v in x.items()}


def lincomb(terms: Iterable[Tuple[object, Mapping]]) -> Dict:
    out: Dict = {}
    for a, x in terms:
        axpy(out, a, x)
    return out


def _primitive(row: Mapping) -> Dict[int, int]:
    """Scale a rational row to a primitive integer row (leading sign kept)."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            d = v.denominator
            den = den * d // gcd(den, d)
    out = {}
    g = 0
    for k, v in row.items():
        if not v:
            continue
        iv = int(v * den)
        out[k] = iv
        g = gcd(g, iv)
    if g > 1:
        for k in out:
            out[k] //= g
    return out


# ---------------------------------------------------------------------------

class SparseVector:
    """Sparse rational vector of fixed dimension with no stored zeros."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: Optional[Mapping[int, object]] = None):
        self.dim = dim
        ents = {}
        for k, v in (entries or {}).items():
            if not 0 <= k < dim:
                raise IndexError("index %d out of range for dimension %d" % (k, dim))
            v = Q(v)
            if v:
                ents[k] = v
        self.entries = ents

    @classmethod
    def basis(cls, dim: int, i: int) -> "SparseVector":
        return cls(dim, {i: 1})

    @classmethod
    def from_list(cls, values) -> "SparseVector":
        return cls(len(values), {i: v for i, v in enumerate(values)})

    def to_list(self) -> List[Fraction]:
        out = [Fraction(0)] * self.dim
        for k, v in self.entries.items():
            out[k] = v
        return out

    def __getitem__(self, i: int) -> Fraction:
        return self.entries.get(i, Fraction(0))

    def __iter__(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(sorted(self.entries.items()))

    def __len__(self):
        return self.dim

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __hash__(self):
        return hash((self.dim, frozenset(self.entries.items())))

    def _check(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch %d != %d" % (self.dim, other.dim))

    def __add__(self, other):
        self._check(other)
        return SparseVector(self.dim, axpy(dict(self.entries), 1, other.entries))

    def __sub__(self, other):
        self._check(other)
        return SparseVector(self.dim, axpy(dict(self.entries), -1, other.entries))

    def __neg__(self):
        return SparseVector(self.dim, scaled(-1, self.entries))

    def __mul__(self, a):
        return SparseVector(self.dim, scaled(Q(a), self.entries))

    __rmul__ = __mul__

    def __repr__(self):
        body = ", ".join("%d: %s" % (k, qstr(v)) for k, v in self)
        return "SparseVector(%d, {%s})" % (self.dim, body)


class SparseMatrix:
    """Row-major sparse rational matrix."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, entries: Optional[Mapping[Tuple[int, int], object]] = None):
        self.rows = rows
        self.cols = cols
        self.data: Dict[int, Dict[int, Fraction]] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError("entry (%d, %d) outside %dx%d" % (i, j, rows, cols))
            v = Q(v)
            if v:
                self.data.setdefault(i, {})[j] = v

    @classmethod
    def from_rows(cls, rows: int, cols: int, data: Mapping[int, Mapping[int, object]]) -> "SparseMatrix":
        m = cls(rows, cols)
        for i, row in data.items():
            r = {j: v for j, v in row.items() if v}
            if r:
                m.data[i] = r
        return m

    @classmethod
    def from_dense(cls, dense) -> "SparseMatrix":
        dense = [list(r) for r in dense]
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        return cls(rows, cols, {(i, j): v for i, r in enumerate(dense) for j, v in enumerate(r) if v})

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    @classmethod
    def from_columns(cls, rows: int, columns: List[Mapping[int, object]]) -> "SparseMatrix":
        m = cls(rows, len(columns))
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    m.data.setdefault(i, {})[j] = Q(v)
        return m

    def entries(self) -> Iterator[Tuple[int, int, Fraction]]:
        for i in sorted(self.data):
            row = self.data[i]
            for j in sorted(row):
                yield i, j, row[j]

    def nnz(self) -> int:
        return sum(len(r) for r in self.data.values())

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.data.get(i, {}).get(j, Fraction(0))

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def column(self, j: int) -> Dict[int, Fraction]:
        return {i: r[j] for i, r in self.data.items() if j in r}

    def columns(self) -> List[Dict[int, Fraction]]:
        cols: List[Dict[int, Fraction]] = [{} for _ in range(self.cols)]
        for i, r in self.data.items():
            for j, v in r.items():
                cols[j][i] = v
        return cols

    def transpose(self) -> "SparseMatrix":
        t = SparseMatrix(self.cols, self.rows)
        for i, r in self.data.items():
            for j, v in r.items():
                t.data.setdefault(j, {})[i] = v
        return t

    def is_zero(self) -> bool:
        return not self.data

    def is_diagonal(self) -> bool:
        return all(set(r) <= {i} for i, r in self.data.items())

    def diagonal(self) -> List[Fraction]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def apply(self, x: Mapping[int, object]) -> Dict[int, Fraction]:
        """Matrix times sparse dict vector."""
        out: Dict[int, Fraction] = {}
        if not x:
            return out
        for i, r in self.data.items():
            s = 0
            for j, v in r.items():
                xj = x.get(j)
                if xj:
                    s += v * xj
            if s:
                out[i] = s
        return out

    def apply_cols(self, x: Mapping[int, object], cols: Optional[List[Dict]] = None) -> Dict[int, Fraction]:
        cols = cols if cols is not None else self.columns()
        out: Dict[int, Fraction] = {}
        for j, a in x.items():
            axpy(out, a, cols[j])
        return out

    def __mul__(self, other):
        if isinstance(other, SparseVector):
            if other.dim != self.cols:
                raise ValueError("dimension mismatch")
            return SparseVector(self.rows, self.apply(other.entries))
        if isinstance(other, SparseMatrix):
            if other.rows != self.cols:
                raise ValueError("shape mismatch %dx%d * %dx%d" % (self.rows, self.cols, other.rows, other.cols))
            out = SparseMatrix(self.rows, other.cols)
            od = other.data
            for i, r in self.data.items():
                acc: Dict[int, Fraction] = {}
                for k, a in r.items():
                    ok = od.get(k)
                    if ok:
                        axpy(acc, a, ok)
                if acc:
                    out.data[i] = acc
            return out
        a = Q(other)
        out = SparseMatrix(self.rows, self.cols)
        if a:
            out.data = {i: {j: a * v for j, v in r.items()} for i, r in self.data.items()}
        return out

    def __rmul__(self, a):
        return self * a

    def _combine(self, other, sign):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        out = SparseMatrix(self.rows, self.cols)
        out.data = {i: dict(r) for i, r in self.data.items()}
        for i, r in other.data.items():
            acc = out.data.setdefault(i, {})
            axpy(acc, sign, r)
            if not acc:
                del out.data[i]
        return out

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.entries())))

    def flat(self) -> Dict[int, Fraction]:
        """Entries as a vector indexed by i*cols + j (for span computations)."""
        c = self.cols
        return {i * c + j: v for i, r in self.data.items() for j, v in r.items()}

    @classmethod
    def unflat(cls, rows: int, cols: int, vec: Mapping[int, object]) -> "SparseMatrix":
        return cls(rows, cols, {divmod(k, cols): v for k, v in vec.items()})

    def __repr__(self):
        return "SparseMatrix(%d, %d, nnz=%d)" % (self.rows, self.cols, self.nnz())


# ---------------------------------------------------------------------------
# incremental fraction-free echelon form

class RowSpace:
    """Incrementally maintained echelon basis of a row space.

    Rows are primitive integer dicts; ``pivots`` maps a leading column to its row.
    """

    def __init__(self):
        self.pivots: Dict[int, Dict[int, int]] = {}

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping) -> Dict[int, int]:
        """Reduce ``row`` until its leading column is not a pivot column.

        Returns a primitive integer row (possibly empty); only the leading entry
        is guaranteed to lie outside the pivot columns.
        """
        r = _primitive(row)
        pivots = self.pivots
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                return r
            a, b = p[c], r[c]
            g = gcd(a, b)
            a //= g
            b //= g
            # r <- a*r - b*p
            new = {}
            for k, v in r.items():
                new[k] = a * v
            for k, v in p.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                new = {k: v // g for k, v in new.items()}
            r = new
        return r

    def add(self, row: Mapping) -> bool:
        """Insert ``row``; True if it was independent of the current span."""
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    def full_reduce(self, row: Mapping) -> Dict[int, int]:
        """Reduce every pivot column out of ``row`` (not only the leading one)."""
        r = _primitive(row)
        pivots = self.pivots
        while True:
            hit = [c for c in r if c in pivots]
            if not hit:
                return r
            c = min(hit)
            p = pivots[c]
            a, b = p[c], r[c]
            g = gcd(a, b)
            a //= g
            b //= g
            new = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                new = {k: v // g for k, v in new.items()}
            r = new

    def contains(self, row: Mapping) -> bool:
        return not self.full_reduce(row)

    def rref(self) -> Dict[int, Dict[int, Fraction]]:
        """Reduced row echelon form: pivot column -> row with leading 1."""
        cols = sorted(self.pivots)
        red: Dict[int, Dict[int, int]] = {}
        for c in reversed(cols):
            r = dict(self.pivots[c])
            # eliminate later pivot columns using already reduced rows
            for c2 in [k for k in r if k != c and k in red]:
                if c2 not in r:
                    continue
                p = red[c2]
                a, b = p[c2], r[c2]
                g = gcd(a, b)
                a //= g
                b //= g
                new = {k: a * v for k, v in r.items()}
                for k, v in p.items():
                    w = new.get(k, 0) - b * v
                    if w:
                        new[k] = w
                    else:
                        new.pop(k, None)
                r = new
            g = 0
            for v in r.values():
                g = gcd(g, v)
            if g > 1:
                r = {k: v // g for k, v in r.items()}
            red[c] = r
        return {c: {k: Fraction(v, r[c]) for k, v in r.items()} for c, r in red.items()}

    def basis(self) -> List[Dict[int, int]]:
        return [self.pivots[c] for c in sorted(self.pivots)]


# ---------------------------------------------------------------------------
# dense Bareiss path (small column counts)

def _bareiss(dense: List[List[int]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free Bareiss elimination on an integer matrix.

    Returns the echelon rows and the pivot columns.
    """
    a = [list(r) for r in dense]
    nrows = len(a)
    pivcols: List[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = None
        for i in range(r, nrows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            f = ai[c]
            ar = a[r]
            for j in range(c, ncols):
                ai[j] = (p * ai[j] - f * ar[j]) // prev
        # columns left of c in rows below are zero already
        prev = p
        pivcols.append(c)
        r += 1
    return a[:r], pivcols


def _dense_int_rows(m: SparseMatrix) -> List[List[int]]:
    out = []
    for i in range(m.rows):
        row = m.data.get(i)
        if not row:
            continue
        pr = _primitive(row)
        dense = [0] * m.cols
        for j, v in pr.items():
            dense[j] = v
        out.append(dense)
    return out


def _dense_kernel(m: SparseMatrix) -> List[Dict[int, Fraction]]:
    rows, piv = _bareiss(_dense_int_rows(m), m.cols)
    # back substitution with Fractions on the small echelon form
    n = m.cols
    free = [c for c in range(n) if c not in set(piv)]
    out = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for r in range(len(piv) - 1, -1, -1):
            c = piv[r]
            row = rows[r]
            s = sum((row[j] * x[j] for j in range(c + 1, n) if row[j] and x[j]), Fraction(0))
            x[c] = -s / row[c]
        out.append({j: v for j, v in enumerate(x) if v})
    return out


# ---------------------------------------------------------------------------
# public operations

def rank(m: SparseMatrix, dense: Optional[bool] = None) -> int:
    """Exact rank over the rationals."""
    if dense is None:
        dense = m.cols < DENSE_CUTOFF and m.rows < 4 * DENSE_CUTOFF
    if dense:
        return len(_bareiss(_dense_int_rows(m), m.cols)[1])
    rs = RowSpace()
    for i in sorted(m.data):
        rs.add(m.data[i])
    return rs.rank


def kernel_rows(rows: Iterable[Mapping], ncols: int) -> List[Dict[int, Fraction]]:
    """Null space basis of the system whose equations are ``rows``."""
    rs = RowSpace()
    for r in rows:
        if r:
            rs.add(r)
    red = rs.rref()
    piv = set(red)
    out = []
    # column -> list of (pivot col, coefficient) for fast back-substitution
    bycol: Dict[int, List[Tuple[int, Fraction]]] = {}
    for c, r in red.items():
        for k, v in r.items():
            if k != c:
                bycol.setdefault(k, []).append((c, v))
    for f in range(ncols):
        if f in piv:
            continue
        x = {f: Fraction(1)}
        for c, v in bycol.get(f, ()):
            x[c] = -v
        out.append(x)
    return out


def kernel_basis(m: SparseMatrix, dense: Optional[bool] = None) -> List[SparseVector]:
    """Exact basis of {x : m x = 0}; size is cols - rank(m)."""
    if dense is None:
        dense = m.cols < DENSE_CUTOFF and m.rows < 4 * DENSE_CUTOFF
    if dense:
        vecs = _dense_kernel(m)
    else:
        vecs = kernel_rows((m.data[i] for i in sorted(m.data)), m.cols)
    return [SparseVector(m.cols, v) for v in vecs]


def solve(m: SparseMatrix, b: SparseVector) -> Optional[SparseVector]:
    """Some x with m x = b, or None when the system is inconsistent."""
    if b.dim != m.rows:
        raise ValueError("right-hand side has dimension %d, matrix has %d rows" % (b.dim, m.rows))
    n = m.cols
    rs = RowSpace()
    for i in range(m.rows):
        row = dict(m.data.get(i, {}))
        if b[i]:
            row[n] = b[i]
        if row:
            rs.add(row)
    if n in rs.pivots:
        return None
    red = rs.rref()
    x = {}
    for c, r in red.items():
        v = r.get(n)
        if v:
            x[c] = v
    return SparseVector(n, x)


def span_basis(vectors: Iterable[Mapping]) -> List[Dict[int, Fraction]]:
    """Echelon basis (as Fractions) of the span of the given dict vectors."""
    rs = RowSpace()
    for v in vectors:
        rs.add(v)
    return [{k: Fraction(x) for k, x in r.items()} for r in rs.basis()]


def independent_subset(vectors: List[Mapping]) -> List[int]:
    """Indices of a maximal independent subfamily, chosen greedily in order."""
    rs = RowSpace()
    return [i for i, v in enumerate(vectors) if rs.add(v)]


def coordinates(basis: List[Mapping], x: Mapping) -> Optional[List[Fraction]]:
    """Coefficients c with sum c_i basis_i = x, or None if x is outside the span."""
    k = len(basis)
    # columns of the system are basis vectors; rows indexed by support
    rows: Dict[object, Dict[int, object]] = {}
    for j, v in enumerate(basis):
        for i, a in v.items():
            rows.setdefault(i, {})[j] = a
    for i, a in x.items():
        rows.setdefault(i, {})[k] = a
    rs = RowSpace()
    for i in sorted(rows, key=repr):
        rs.add(rows[i])
    if k in rs.pivots:
        return None
    red = rs.rref()
    if len(red) < k:
        raise ValueError("basis vectors are linearly dependent")
    return [red[c].get(k, Fraction(0)) if c in red else Fraction(0) for c in range(k)]


def _invert(a: List[List[Fraction]]) -> List[List[Fraction]]:
    n = len(a)
    m = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    for c in range(n):
        p = next(i for i in range(c, n) if m[i][c])
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [v * inv for v in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                mc = m[c]
                m[i] = [x - f * y for x, y in zip(m[i], mc)]
    return [r[n:] for r in m]


class Coordinatizer:
    """Coordinates with respect to a fixed linearly independent family.

    A set of pivot positions is chosen once so that each query only reads
    ``len(basis)`` entries of the input; :meth:`coords` then checks the
    reconstruction exactly and returns None for vectors outside the span.
    """

    def __init__(self, basis: List[Mapping]):
        self.basis = [dict(b) for b in basis]
        k = len(basis)
        rs = RowSpace()
        for b in self.basis:
            if not rs.add(b):
                raise ValueError("basis vectors are linearly dependent")
        # pivot positions of an echelon form are a valid square selection
        self.positions = sorted(rs.pivots)
        sub = [[Fraction(b.get(p, 0)) for p in self.positions] for b in self.basis]
        # c . sub = x[positions]  ->  c = x[positions] . sub^{-1}
        self._inv = _invert(sub) if k else []
        self.k = k

    def coords(self, x: Mapping, check: bool = True) -> Optional[List[Fraction]]:
        k = self.k
        xp = [x.get(p, 0) for p in self.positions]
        c = [Fraction(0)] * k
        for i, xi in enumerate(xp):
            if xi:
                row = self._inv[i]
                for j in range(k):
                    if row[j]:
                        c[j] += xi * row[j]
        if check:
            rec: Dict = {}
            for j, cj in enumerate(c):
                if cj:
                    axpy(rec, cj, self.basis[j])
            if rec != {a: b for a, b in x.items() if b}:
                return None
        return c
