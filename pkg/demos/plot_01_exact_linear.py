"""
Exact sparse linear algebra
===========================

Every coefficient is a Fraction, so ranks and kernels are exact.
"""

from fractions import Fraction

from filippov import SparseMatrix, SparseVector, kernel_basis, rank, solve

# a 3x4 matrix whose third row is the sum of the first two
M = SparseMatrix.from_dense([[1, 2, 0, Fraction(1, 3)],
                             [0, 1, 1, 0],
                             [1, 3, 1, Fraction(1, 3)]])
print("rank", rank(M))

# rank plus nullity is the number of columns
K = kernel_basis(M)
print("kernel dimension", len(K))
for v in K:
    assert M.apply(dict(v)) == {}
    print(" ", [str(x) for x in v.to_list()])

# solving M x = b for a consistent right-hand side
b = SparseVector.from_list([1, 1, 2])
x = solve(M, b)
print("solution", [str(c) for c in x.to_list()])

# an inconsistent one has no solution
print("inconsistent:", solve(M, SparseVector.from_list([1, 1, 0])))
