"""
n-ary superalgebras and the Filippov identities
===============================================

Structure tables, the two defining identities, simplicity and Inder.
"""

from filippov import check_anticommutativity, check_generalized_jacobi, inder, is_simple, vector_product_algebra
from filippov.nary import direct_sum

# the ternary vector product on a 4-dimensional Euclidean space
A = vector_product_algebra(4)
print("arity", A.arity, "dim", A.dim)
print("anticommutativity violations", len(check_anticommutativity(A)))
print("Jacobi violations", len(check_generalized_jacobi(A)))

# with the Euclidean metric no diagonal torus acts on this basis, so simplicity stays open
v = is_simple(A)
print("Euclidean:", v.status, "-", v.reason)

# a hyperbolic metric exposes a torus of inner derivations and the ideal search closes
g = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
v = is_simple(vector_product_algebra(4, metric=g))
print("hyperbolic:", v.status, "-", v.reason)

# Inder is spanned by the operators ad(x, y) and here is so(4)
print("dim Inder", len(inder(A)))

# a direct sum is Filippov but not simple; the verdict carries a witness ideal
B = direct_sum(vector_product_algebra(4), vector_product_algebra(4))
w = is_simple(B)
print("direct sum:", w.status, "witness of dim", len(w.witness))
