import itertools
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from filippov.exact import RowSpace, SparseMatrix
from filippov.nary import (
    GradedOperator,
    NArySuperalgebra,
    NAryTable,
    ParitySpace,
    ad_slot,
    check_anticommutativity,
    check_generalized_jacobi,
    derived_series,
    direct_sum,
    evaluate,
    inder,
    is_derivation,
    is_filippov,
    is_ideal,
    is_simple,
    is_solvable,
    left_mult,
    multiplication_lie_algebra,
    multiplication_operators,
    supercommutator_ops,
    vector_product_algebra,
    zero_algebra,
)

small = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


def cross():
    return vector_product_algebra(3)


def span_of(ops):
    spaces = {0: RowSpace(), 1: RowSpace()}
    for o in ops:
        spaces[o.parity].add(o.matrix.flat())
    return spaces


def test_evaluate_examples():
    z = zero_algebra(3, 3)
    assert evaluate(z, [{0: 1}, {1: 2}, {2: 1}]).is_zero()
    c = cross()
    assert evaluate(c, [{0: 1}, {1: 1}]).entries == {2: 1}
    assert evaluate(c, [{0: 2}, {1: 1}]) == evaluate(c, [{0: 1}, {1: 1}]) * 2


def test_anticommutativity_counterexample():
    # [e1, e2] = e3 but [e2, e1] = e3 as well: a literal, non-canonical table
    space = ParitySpace.make(3, 0)
    alg = NArySuperalgebra(space, NAryTable(2, {(0, 1): {2: 1}, (1, 0): {2: 1}}, canonical=False))
    viol = check_anticommutativity(alg)
    assert len(viol) == 1
    assert viol[0].args == (0, 1) and viol[0].position == 1


def test_odd_pair_symmetric_is_fine():
    space = ParitySpace.make(1, 2)
    alg = NArySuperalgebra(space, NAryTable(2, {(1, 2): {0: 1}, (2, 1): {0: 1}}, canonical=False))
    assert check_anticommutativity(alg) == []


def test_vector_product_is_filippov():
    vp = vector_product_algebra(4)
    assert check_anticommutativity(vp) == []
    assert check_generalized_jacobi(vp) == []
    assert check_generalized_jacobi(zero_algebra(3, 4)) == []


def test_negated_constant_breaks_jacobi():
    vp = vector_product_algebra(4)
    prods = dict(vp.table.products)
    k = sorted(prods)[0]
    prods[k] = {i: -c for i, c in prods[k].items()}
    # one sign flip alone is still a metric vector product, so also move its target
    prods[sorted(prods)[1]] = {0: 1}
    mutated = NArySuperalgebra(vp.space, NAryTable(3, prods))
    assert check_generalized_jacobi(mutated)


def test_single_negated_constant_is_indefinite_metric():
    vp = vector_product_algebra(4)
    prods = dict(vp.table.products)
    k = sorted(prods)[0]
    prods[k] = {i: -c for i, c in prods[k].items()}
    assert is_filippov(NArySuperalgebra(vp.space, NAryTable(3, prods)))


def test_left_mult_examples():
    c = cross()
    L = left_mult(c, [{0: 1}])
    assert L({1: 1}) == {2: 1}
    assert left_mult(c, [{}]).matrix.is_zero()
    space = ParitySpace.make(1, 2)
    odd3 = NArySuperalgebra(space, NAryTable(3, {}))
    assert left_mult(odd3, [{1: 1}, {2: 1}]).parity == 0


def test_ad_slot_examples():
    vp = vector_product_algebra(4)
    xs = [{0: 1}, {1: 1}]
    assert ad_slot(vp, 3, xs).matrix == left_mult(vp, xs).matrix
    # all even: no sign, just the insertion
    D = ad_slot(vp, 1, xs)
    for j in range(4):
        assert D({j: 1}) == vp.evaluate([{j: 1}] + xs)
    space = ParitySpace.make(1, 2, ["e", "o1", "o2"])
    alg = NArySuperalgebra(space, NAryTable(3, {(0, 1, 2): {0: 1}}))
    D = ad_slot(alg, 1, [{1: 1}, {0: 1}])
    val = alg.evaluate([{2: 1}, {1: 1}, {0: 1}])
    assert val
    assert D({2: 1}) == {k: -v for k, v in val.items()}


def test_is_derivation_examples():
    vp = vector_product_algebra(4)
    assert is_derivation(vp, GradedOperator(SparseMatrix.zero(4, 4), 0))
    assert not is_derivation(vp, GradedOperator(SparseMatrix.identity(4), 0))
    for xs in itertools.product(range(4), repeat=2):
        for i in (1, 2, 3):
            assert is_derivation(vp, ad_slot(vp, i, [{x: 1} for x in xs]))


def test_multiplication_algebra_dimensions():
    assert multiplication_lie_algebra(vector_product_algebra(4)).dim == 6
    assert multiplication_lie_algebra(cross()).dim == 3
    assert multiplication_lie_algebra(zero_algebra(3, 3)).dim == 0


def test_inder_examples():
    assert len(inder(vector_product_algebra(4))) == 6
    assert len(inder(zero_algebra(3, 3))) == 0
    c = cross()
    I, M = inder(c), multiplication_operators(c)
    assert len(I) == len(M) == 3
    sI, sM = span_of(I), span_of(M)
    assert all(sM[o.parity].contains(o.matrix.flat()) for o in I)
    assert all(sI[o.parity].contains(o.matrix.flat()) for o in M)


def test_derived_series_and_solvable():
    z = zero_algebra(3, 3)
    assert derived_series(z) == [0] and is_solvable(z)
    vp = vector_product_algebra(4)
    assert derived_series(vp)[0] == 4 and not is_solvable(vp)
    nil = NArySuperalgebra(ParitySpace.make(4, 0), NAryTable(3, {(0, 1, 2): {3: 1}}))
    assert is_filippov(nil)
    assert is_solvable(nil)


def test_is_ideal_examples():
    c = cross()
    assert is_ideal(c, [{i: 1} for i in range(3)])
    assert is_ideal(c, [])
    assert not is_ideal(c, [{0: 1}])


def test_is_simple_examples():
    z = zero_algebra(3, 3)
    v = is_simple(z)
    assert v.status == "not-simple" and v.reason == "derived subalgebra is 0"
    ds = direct_sum(cross(), cross())
    v = is_simple(ds)
    assert v.status == "not-simple"
    assert len(v.witness) == 3
    assert is_ideal(ds, v.witness)


def test_repeated_even_argument_in_canonical_table_is_flagged():
    repeated = NArySuperalgebra(ParitySpace.make(1, 0), NAryTable(2, {(0, 0): {0: 1}}))
    assert check_anticommutativity(repeated)


def test_vector_product_simple_with_split_metric_torus():
    # hyperbolic metric: the inner derivations contain a diagonal torus with distinct weights
    g = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    vp = vector_product_algebra(4, metric=g)
    assert is_filippov(vp)
    v = is_simple(vp)
    assert v.status == "simple"
    assert v.reason == "certified via weight-spanned ideal search"


def test_reports_are_deterministic():
    vp = vector_product_algebra(4)
    prods = dict(vp.table.products)
    prods[sorted(prods)[1]] = {0: 1}
    bad = NArySuperalgebra(vp.space, NAryTable(3, prods))
    a, b = check_generalized_jacobi(bad), check_generalized_jacobi(bad)
    assert [(x.xs, x.ys) for x in a] == [(x.xs, x.ys) for x in b]
    keys = [(x.xs, x.ys) for x in a]
    assert keys == sorted(keys)


def _operator_form_holds(alg):
    """[L_y, L_x] = sum_i (-1)^{p(y)(p(x_1)+..+p(x_{i-1}))} L(x_1, .., L_y x_i, .., x_{n-1})."""
    n, par = alg.arity, alg.parity
    for ys in itertools.product(range(alg.dim), repeat=n - 1):
        Ly = left_mult(alg, [{y: 1} for y in ys])
        for xs in itertools.product(range(alg.dim), repeat=n - 1):
            Lx = left_mult(alg, [{x: 1} for x in xs])
            lhs = supercommutator_ops(Ly, Lx).matrix
            rhs = SparseMatrix.zero(alg.dim, alg.dim)
            q = 0
            for i, x in enumerate(xs):
                yx = Ly({x: 1})
                if yx:
                    args = [{t: 1} for t in xs]
                    args[i] = yx
                    term = left_mult(alg, args).matrix
                    rhs = rhs + (term * (-1 if Ly.parity and q % 2 else 1))
                q += par[x]
            if lhs != rhs:
                return False
    return True


def test_operator_form_of_jacobi():
    assert _operator_form_holds(vector_product_algebra(4))
    assert _operator_form_holds(cross())


def test_operator_form_with_odd_elements():
    from filippov.lie import osp12
    assert _operator_form_holds(osp12())


def test_inder_is_ideal_in_derivations():
    vp = vector_product_algebra(4)
    basis = inder(vp)
    spaces = span_of(basis)
    # the derivation relation [D, ad(x)] = sum ad(.., D x_i, ..) for D in inder
    for D in basis:
        for xs in itertools.product(range(4), repeat=2):
            L = left_mult(vp, [{x: 1} for x in xs])
            c = supercommutator_ops(D, L)
            assert spaces[c.parity].contains(c.matrix.flat())
            rhs = SparseMatrix.zero(4, 4)
            for i, x in enumerate(xs):
                args = [{t: 1} for t in xs]
                args[i] = D({x: 1})
                if args[i]:
                    rhs = rhs + left_mult(vp, args).matrix
            assert c.matrix == rhs


@st.composite
def canonical_tables(draw):
    ev = draw(st.integers(0, 2))
    od = draw(st.integers(0, 2))
    dim = ev + od
    if dim == 0:
        ev, dim = 1, 1
    arity = draw(st.integers(2, 3))
    par = [0] * ev + [1] * (dim - ev)
    prods = {}
    for t in itertools.combinations_with_replacement(range(dim), arity):
        if any(t.count(i) > 1 for i in range(ev)):
            continue  # a repeated even argument forces the product to vanish
        p = sum(par[i] for i in t) % 2
        targets = [i for i in range(dim) if par[i] == p]
        if targets and draw(st.booleans()):
            prods[t] = {i: draw(small) for i in targets}
    return NArySuperalgebra(ParitySpace.make(ev, dim - ev), NAryTable(arity, prods))


@settings(max_examples=40, deadline=None)
@given(canonical_tables())
def test_canonical_tables_are_anticommutative(alg):
    assert check_anticommutativity(alg) == []


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=4, max_size=4))
def test_diagonal_metric_vector_products(diag):
    g = [[diag[i] if i == j else 0 for j in range(4)] for i in range(4)]
    vp = vector_product_algebra(4, metric=g)
    assert is_filippov(vp)
    assert len(inder(vp)) == 6
    for i in (1, 2, 3):
        assert is_derivation(vp, ad_slot(vp, i, [{0: 1}, {2: 1}]))
