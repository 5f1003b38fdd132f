"""
Good triples and the non-existence scan
=======================================

so(4) on its natural module yields the ternary vector product.
A(1,2) on small highest weight modules yields nothing.
"""

from filippov import build_amn, nonexistence_scan, so_split
from filippov.modules import natural_module
from filippov.triples import intertwiner_space, scan_summary, skewsymmetric_filter, triple_item

L = so_split(4)
V = natural_module(L)
hs = intertwiner_space(L, V, 3)
print("hom dim", hs.dim, "skew", len(skewsymmetric_filter(hs)))

rep = triple_item(L, V, 3, {"case": "so(4) natural"})
print(rep.status, rep.surjectivity, "inder", rep.checks["inder_dim"])

# the scan certifies every item with "hom-space-zero" or "image-span-proper"
G = build_amn(1, 2)
reps = nonexistence_scan(1, 2, [[1, 0, 0, 0], [2, 0, 0, 0]], parities=(0, 1), arities=(2, 3))
for r in reps:
    print(r.params["lambda"], r.params["parity"], r.params["arity"], r.hom_dim, r.certificate)
print(scan_summary(reps))
