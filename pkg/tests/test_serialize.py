import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from filippov.lie import build_amn, osp12, so_split
from filippov.modules import build_module, natural_module
from filippov.nary import vector_product_algebra
from filippov.serialize import (
    InputError,
    algebra_from_json,
    algebra_to_json,
    dumps,
    lie_from_json,
    load_json_text,
    module_from_json,
    module_to_json,
    parse_rational,
    weight_from_json,
)


def roundtrip_text(obj):
    text = dumps(obj)
    assert json.loads(text) == obj
    return text


@pytest.mark.parametrize("make", [lambda: vector_product_algebra(4), osp12, lambda: build_amn(0, 1)])
def test_algebra_roundtrip(make):
    alg = make()
    d = algebra_to_json(alg)
    roundtrip_text(d)
    back = algebra_from_json(json.loads(dumps(d)))
    assert back.full_table() == alg.full_table()
    assert back.parity == alg.parity and back.labels == alg.labels


def test_lie_roundtrip_keeps_cartan():
    L = so_split(4)
    back = lie_from_json(algebra_to_json(L))
    assert back.cartan == L.cartan
    assert algebra_to_json(back) == algebra_to_json(L)


def test_module_roundtrip():
    G = build_amn(1, 2)
    V = build_module(G, [1, 0, 0, 0], "odd")
    d = module_to_json(V)
    roundtrip_text(d)
    assert d["dimension"] == 5 and d["parity"] == "odd" and d["lambda"] == ["1", "0", "0", "0"]
    W = module_from_json(json.loads(dumps(d)), G)
    assert W.action == V.action and W.parity == V.parity
    d2 = module_to_json(W)
    for k in ("dimension", "even_dim", "odd_dim", "labels", "weights", "actions"):
        assert d2[k] == d[k]


def test_module_roundtrip_structure_constant_path():
    L = so_split(4)
    V = natural_module(L)
    L2 = lie_from_json(json.loads(dumps(algebra_to_json(L))))
    W = module_from_json(json.loads(dumps(module_to_json(V))), L2)
    assert W.check_representation() is None


def test_parse_errors_locate_the_problem():
    with pytest.raises(InputError) as e:
        load_json_text('{"a": 1,\n  "b": }', "f.json")
    assert "f.json:2" in str(e.value)
    d = algebra_to_json(vector_product_algebra(3))
    d["table"][1]["value"][0][0] = "x/2"
    with pytest.raises(InputError) as e:
        algebra_from_json(d, "f.json")
    assert "table[1]" in str(e.value)
    with pytest.raises(InputError):
        algebra_from_json({"arity": 2, "even_dim": 1, "odd_dim": 0, "table": [{"args": [0, 5], "value": []}]})
    with pytest.raises(InputError):
        parse_rational(True)


def test_weight_strings():
    assert weight_from_json("1,-1/2,0,0") == (1, Fraction(-1, 2), 0, 0)
    assert weight_from_json(["2", 0]) == (2, 0)


@settings(max_examples=50)
@given(st.builds(Fraction, st.integers(-10 ** 6, 10 ** 6), st.integers(1, 10 ** 4)))
def test_rational_strings_roundtrip(q):
    from filippov.exact import qstr
    assert parse_rational(qstr(q)) == q
