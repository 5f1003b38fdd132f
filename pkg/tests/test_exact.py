from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from filippov.exact import (
    Coordinatizer,
    RowSpace,
    SparseMatrix,
    SparseVector,
    kernel_basis,
    qstr,
    rank,
    solve,
)

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    cells = draw(st.lists(st.lists(st.one_of(st.just(Fraction(0)), rationals), min_size=c, max_size=c),
                          min_size=r, max_size=r))
    return SparseMatrix.from_dense(cells)


def test_rank_examples():
    assert rank(SparseMatrix.zero(3, 3)) == 0
    assert rank(SparseMatrix.identity(4)) == 4
    assert rank(SparseMatrix.from_dense([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(SparseMatrix.identity(3)) == []
    assert len(kernel_basis(SparseMatrix.zero(2, 3))) == 3
    (v,) = kernel_basis(SparseMatrix.from_dense([[1, 1]]))
    assert v[0] == -v[1] != 0


def test_solve_examples():
    b = SparseVector.from_list([1, Fraction(-2, 3), 5])
    assert solve(SparseMatrix.identity(3), b) == b
    assert solve(SparseMatrix.zero(2, 2), SparseVector.from_list([0, 1])) is None
    assert solve(SparseMatrix.from_dense([[2]]), SparseVector.from_list([3])) == SparseVector.from_list([Fraction(3, 2)])


def test_no_stored_zeros():
    v = SparseVector(4, {0: 0, 2: Fraction(1, 2), 3: Fraction(0, 5)})
    assert v.entries == {2: Fraction(1, 2)}
    m = SparseMatrix(2, 2, {(0, 0): 0, (1, 0): 3})
    assert m.nnz() == 1


def test_rational_serialization():
    assert qstr(Fraction(-1, 2)) == "-1/2"
    assert qstr(Fraction(4, 2)) == "2"
    assert qstr(Fraction(0)) == "0"


def test_rowspace_and_coordinates():
    rs = RowSpace()
    assert rs.add({0: 1, 1: 2})
    assert not rs.add({0: 2, 1: 4})
    assert rs.add({1: 1})
    assert rs.rank == 2 and rs.contains({0: 5, 1: Fraction(1, 3)})
    c = Coordinatizer([{0: 1, 1: 1}, {1: 1}])
    assert c.coords({0: 2, 1: 5}) == [2, 3]
    assert c.coords({2: 1}) is None


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert not m.apply(v.entries)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_consistent(m, data):
    x = SparseVector.from_list(data.draw(st.lists(rationals, min_size=m.cols, max_size=m.cols)))
    b = SparseVector(m.rows, m.apply(x.entries))
    y = solve(m, b)
    assert y is not None
    assert SparseVector(m.rows, m.apply(y.entries)) == b


@settings(max_examples=40, deadline=None)
@given(matrices(max_rows=4, max_cols=4))
def test_sparse_and_dense_rank_agree(m):
    assert rank(m, dense=True) == rank(m, dense=False)


@given(rationals, rationals)
def test_exact_arithmetic(a, b):
    assert (a + b) - b == a
