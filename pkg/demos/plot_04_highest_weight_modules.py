"""
Highest weight modules
======================

Induced modules, nilpotency orders and the irreducible quotient.
"""

from fractions import Fraction

from filippov import admissible, build_amn, build_module, natural_module, nilpotency_order
from filippov.modules import weight_decomposition

G = build_amn(1, 2)
e21 = G.index("e21")

# the power of g_{-alpha} killing the highest vector grows with the label
for a in range(5):
    print("a =", a, "order", nilpotency_order(G, [a, 0, 0, 0], e21))

# admissible labels: integers except in the odd slot
print(bool(admissible(1, 2, [1, Fraction(-1, 2), 0, 0])))
print(admissible(1, 2, [1, 0, -1, 0]).reasons)

# Lambda = (1,0,0,0) gives back the 5-dimensional matrix module
V = build_module(G, [1, 0, 0, 0])
print("dim", V.dim, "split", (V.even_dim, V.odd_dim))
print("weights", sorted(weight_decomposition(V)))
print("matrix module dim", natural_module(G).dim)

for lam in ([0, 1, 0, 0], [2, 0, 0, 0], [1, Fraction(-1, 2), 0, 0]):
    W = build_module(G, lam)
    print(lam, "->", W.dim, (W.even_dim, W.odd_dim))
