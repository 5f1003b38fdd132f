"""Exact engine for Filippov superalgebras and highest weight modules of A(m,n)."""

from .exact import Coordinatizer, RowSpace, SparseMatrix, SparseVector, kernel_basis, rank, solve
from .lie import (
    LieSuperalgebra,
    Weight,
    build_amn,
    osp12,
    root_decomposition,
    so_euclidean,
    so_split,
    supertrace_form,
    triangular_decomposition,
)
from .modules import (
    HWSpec,
    InducedModule,
    IrreducibleModule,
    Module,
    admissible,
    brute_nilpotency_order,
    build_module,
    irreducible_quotient,
    natural_module,
    nilpotency_order,
)
from .nary import (
    NArySuperalgebra,
    NAryTable,
    ParitySpace,
    check_anticommutativity,
    check_generalized_jacobi,
    inder,
    is_filippov,
    is_simple,
    vector_product_algebra,
)
from .triples import (
    TripleReport,
    filippov_from_triple,
    good_triple_check,
    intertwiner_space,
    nonexistence_scan,
    skewsymmetric_filter,
    surjectivity_analysis,
)

__version__ = "0.1.0"

__all__ = [
    "Coordinatizer",
    "RowSpace",
    "SparseMatrix",
    "SparseVector",
    "kernel_basis",
    "rank",
    "solve",
    "LieSuperalgebra",
    "Weight",
    "build_amn",
    "osp12",
    "root_decomposition",
    "so_euclidean",
    "so_split",
    "supertrace_form",
    "triangular_decomposition",
    "HWSpec",
    "InducedModule",
    "IrreducibleModule",
    "Module",
    "admissible",
    "brute_nilpotency_order",
    "build_module",
    "irreducible_quotient",
    "natural_module",
    "nilpotency_order",
    "NArySuperalgebra",
    "NAryTable",
    "ParitySpace",
    "check_anticommutativity",
    "check_generalized_jacobi",
    "inder",
    "is_filippov",
    "is_simple",
    "vector_product_algebra",
    "TripleReport",
    "filippov_from_triple",
    "good_triple_check",
    "intertwiner_space",
    "nonexistence_scan",
    "skewsymmetric_filter",
    "surjectivity_analysis",
]
