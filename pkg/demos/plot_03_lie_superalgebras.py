"""
The Lie superalgebra A(1,2)
===========================

Supertraceless 5x5 block matrices with odd off-diagonal blocks.
"""

from filippov import build_amn, root_decomposition, supertrace_form, triangular_decomposition
from filippov.lie import check_super_jacobi, is_nondegenerate, unit_index

G = build_amn(1, 2)
print("dim", G.dim, "=", G.space.even_dim, "|", G.space.odd_dim)
print("Jacobi violations", len(check_super_jacobi(G)))

# two odd matrix units bracket into the Cartan subalgebra
e13, e31 = unit_index(G, 1, 3), unit_index(G, 3, 1)
print("[e13, e31] =", {G.labels[k]: str(c) for k, c in G.bracket({e13: 1}, {e31: 1}).items()})

# roots are weights of the Cartan subalgebra on the off-diagonal units
rs = root_decomposition(G)
print("roots", len(rs.roots))
print("e21 has weight", G.weight_of(G.index("e21")))

td = triangular_decomposition(G)
print("negative part", [G.labels[g] for g in td.Nminus])

# the supertrace form is invariant and nondegenerate
print("supertrace form nondegenerate:", is_nondegenerate(G), "with", supertrace_form(G).nnz(), "nonzero Gram entries")
