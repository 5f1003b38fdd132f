from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from filippov.lie import build_amn, triangular_decomposition
from filippov.modules import (
    HWSpec,
    InducedModule,
    NotFiniteDimensional,
    admissible,
    brute_nilpotency_order,
    build_module,
    contravariant_form,
    cyclic_span_dim,
    irreducible_quotient,
    natural_module,
    nilpotency_order,
    pbw_action,
    prebasis,
    quotient_dims_recursive,
    weight_decomposition,
)
from oracles import intertwiners, is_invertible

HALF = Fraction(-1, 2)


@pytest.fixture(scope="module")
def G():
    return build_amn(1, 2)


@pytest.fixture(scope="module")
def nat(G):
    return build_module(G, [1, 0, 0, 0])


def test_admissible():
    assert admissible(1, 2, [1, HALF, 0, 0])
    bad = admissible(1, 2, [1, 0, -1, 0])
    assert not bad and "a_3" in bad.reasons[0]
    assert admissible(1, 2, [0, 0, 0, 0])


def test_nilpotency_examples(G):
    e21 = G.index("e21")
    assert nilpotency_order(G, [2, 0, 0, 0], e21) == 3
    td = triangular_decomposition(G)
    for g in td.Nminus:
        if G.parity[g]:
            assert nilpotency_order(G, [1, HALF, 0, 0], g) in (1, 2)
    for s in ("e21", "e43", "e54"):
        assert nilpotency_order(G, [0, 0, 0, 0], s) == 1
    assert nilpotency_order(G, [HALF, 0, 0, 0], e21) == "unbounded"


@pytest.mark.parametrize("a", range(5))
def test_nilpotency_formula_brute_force(G, a):
    e21 = G.index("e21")
    k = nilpotency_order(G, [a, 0, 0, 0], e21)
    assert k == a + 1
    assert brute_nilpotency_order(G, [a, 0, 0, 0], e21) == k
    assert brute_nilpotency_order(G, [a, 0, 0, 0], e21, recursive=True) == k


def test_nilpotency_formula_all_even_roots(G):
    td = triangular_decomposition(G)
    evens = [g for g in td.Nminus if not G.parity[g]]
    for lam in ([1, 0, 2, 0], [0, 3, 1, 1], [2, HALF, 0, 1]):
        for g in evens:
            k = nilpotency_order(G, lam, g)
            if k != "unbounded":
                assert brute_nilpotency_order(G, lam, g, kmax=k + 2) == k


def test_prebasis(G):
    mod = prebasis(G, HWSpec.make([1, 0, 0, 0]))
    assert 5 <= len(mod.monomials)
    bound = 1
    for b in mod.bounds:
        bound *= b
    assert len(mod.monomials) <= bound
    triv = prebasis(G, HWSpec.make([0, 0, 0, 0]))
    assert triv.monomials == [triv.empty]
    with pytest.raises(NotFiniteDimensional):
        prebasis(G, HWSpec.make([HALF, 0, 0, 0]))


def test_monomial_weights(G):
    mod = prebasis(G, HWSpec.make([2, 1, 0, 0]))
    for mono in mod.monomials[:40]:
        w = list(mod.lam)
        for j, a in enumerate(mono):
            for i in range(4):
                w[i] += a * mod.alpha[j][i]
        assert tuple(mod.weight(mono)) == tuple(w)
        for pos, h in enumerate(G.cartan):
            assert pbw_action(mod, h, mono) == ({mono: w[pos]} if w[pos] else {})


def test_pbw_action_examples(G):
    mod = prebasis(G, HWSpec.make([2, 0, 0, 0]))
    for g in triangular_decomposition(G).Nplus:
        assert pbw_action(mod, g, mod.empty) == {}
    e21 = [0] * len(mod.gens)
    e21[mod.pos[G.index("e21")]] = 1
    e21 = tuple(e21)
    assert pbw_action(mod, "e12", e21) == {mod.empty: 2}
    assert mod.pairing(mod.empty, mod.empty) == 1
    assert mod.pairing(e21, e21) == 2
    assert mod.pairing(e21, mod.empty) == 0


def test_contravariant_blocks(G):
    mod = prebasis(G, HWSpec.make([1, 0, 0, 0]))
    blocks = contravariant_form(mod)
    assert blocks[(0, 0, 0, 0)].to_dense() == [[1]]


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_contravariance(data):
    G = build_amn(1, 2)
    mod = InducedModule(G, HWSpec.make([1, HALF, 0, 0]))
    monos = [m for m in mod.monomials if sum(mod.depth_of(m)) <= 3]
    u = data.draw(st.sampled_from(monos))
    w = data.draw(st.sampled_from(monos))
    g = data.draw(st.integers(0, G.dim - 1))

    def form(x, y):
        return sum((a * b * mod.pairing(t, m) for t, a in x.items() for m, b in y.items()), Fraction(0))

    img, sg = mod.omega[g]
    sign = -1 if (G.parity[g] and mod.mono_parity(u)) else 1
    assert form(mod.act(g, u), {w: 1}) == sign * sg * form({u: 1}, mod.act(img, w))


def test_natural_module_quotient(G, nat):
    assert nat.dim == 5 and (nat.even_dim, nat.odd_dim) == (2, 3)
    assert nat.check_representation() is None
    ref = natural_module(G)
    Ts = intertwiners(nat, ref)
    assert len(Ts) == 1 and is_invertible(Ts[0])


def test_weight_decomposition(G, nat):
    wd = weight_decomposition(nat)
    assert len(wd) == 5 and all(len(v) == 1 for v in wd.values())
    assert (1, 0, 0, 0) in wd and (-1, 1, 0, 0) in wd
    triv = build_module(G, [0, 0, 0, 0])
    assert triv.dim == 1 and list(weight_decomposition(triv)) == [(0, 0, 0, 0)]


@pytest.mark.parametrize("lam,par,dim", [
    ([1, 0, 0, 0], 0, 5),
    ([1, 0, 0, 0], 1, 5),
    ([0, 1, 0, 0], 0, 13),
    ([2, 0, 0, 0], 0, 12),
    ([1, HALF, 0, 0], 0, 128),
])
def test_irreducible_modules(G, lam, par, dim):
    V = build_module(G, lam, par)
    assert V.dim == dim
    assert V.check_representation() is None
    assert V.check_parity()
    for h in G.cartan:
        assert V.action[h].is_diagonal()
    assert cyclic_span_dim(V, V.highest_index) == V.dim
    assert V.parity[V.highest_index] == par
    dims = quotient_dims_recursive(V.induced)
    assert sum(dims.values()) == V.dim


def test_odd_highest_vector_swaps_parity(G):
    ev = build_module(G, [1, 0, 0, 0], 0)
    od = build_module(G, [1, 0, 0, 0], 1)
    assert (od.even_dim, od.odd_dim) == (ev.odd_dim, ev.even_dim)


def test_chain_independent_in_quotient(G):
    # 1 (x) v, g v, ..., g^{k-1} v survive the quotient as independent vectors
    V = build_module(G, [3, 1, 0, 0])
    e21 = G.index("e21")
    k = nilpotency_order(G, [3, 1, 0, 0], e21)
    x = {V.highest_index: Fraction(1)}
    from filippov.exact import RowSpace
    rs = RowSpace()
    for _ in range(k):
        assert rs.add(x)
        x = V.act(e21, x)
    assert x == {}


def test_irreducible_quotient_entry_points(G):
    V = irreducible_quotient(G=G, spec=HWSpec.make([0, 0, 0, 0]))
    assert V.dim == 1


def test_a01_natural():
    G = build_amn(0, 1)
    V = build_module(G, [1, 0])
    assert V.dim == 3
    Ts = intertwiners(V, natural_module(G))
    assert len(Ts) == 1 and is_invertible(Ts[0])
