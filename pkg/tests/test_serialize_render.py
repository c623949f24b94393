from __future__ import annotations

import json

import pytest

from fqhg.errors import MalformedInput
from fqhg.exactnum import Matrix, Scalar, vector
from fqhg.render import element, render_certificate, render_pair, tensor
from fqhg.serialize import (
    Bundle,
    Side,
    algebra_from_json,
    algebra_to_json,
    bundle_from_json,
    bundle_to_json,
    dumps,
    loads,
    matrix_from_json,
    matrix_to_json,
    to_plain,
)


def test_element_rendering():
    L = ["u", "v", "w"]
    assert element(vector([1, "-1/2", 0]), L) == "u - 1/2 v"
    assert element(vector([0, 0, 0]), L) == "0"
    assert element(vector(["-1", 0, 2]), L) == "-u + 2 w"
    assert element([Scalar(0, 1), Scalar(0, -2), Scalar(1, 1)], L) == "i u - 2i v + (1+i) w"


def test_tensor_rendering():
    assert tensor(vector([1, 0, 0, "1/2"]), ["u", "v"]) == "u⊗u + 1/2 v⊗v"


def test_pair_rendering():
    assert render_pair(Matrix.diag([1, "1/2"]), ["a", "b"], ["x", "y"]).splitlines()[1] == "  ⟨a,x⟩ = 1, ⟨a,y⟩ = 0"


def test_certificate_rendering(hecke_s3):
    text = render_certificate(hecke_s3.fqh_a.certify(), "A")
    assert text.startswith("A: PASS")
    assert "  star_ok: true" in text


def test_matrix_json():
    M = Matrix.from_rows([[1, "1/2"], ["i", "-3"]])
    obj = matrix_to_json(M)
    assert obj == {"rows": 2, "cols": 2, "entries": ["1", "1/2", "i", "-3"]}
    assert matrix_from_json(obj) == M
    with pytest.raises(MalformedInput):
        matrix_from_json({"rows": 2, "cols": 2, "entries": ["1"]})
    with pytest.raises(MalformedInput):
        matrix_from_json({"rows": 1, "cols": 1, "entries": [1.5]})
    with pytest.raises(MalformedInput):
        matrix_from_json(obj, (3, 3))


@pytest.mark.parametrize("fx", ["hecke_s3", "free_z2", "matched_s3", "vw_pair"])
def test_bundle_round_trip(fx, request):
    c = request.getfixturevalue(fx)
    b = Bundle(c.name, Side.from_fqh(c.fqh_a), Side.from_fqh(c.fqh_b), c.pair.P, c.meta)
    text = dumps(bundle_to_json(b))
    back = loads(text)
    assert back == b
    assert back.a.to_fqh() == c.fqh_a
    assert dumps(bundle_to_json(back)) == text


def test_algebra_json_round_trip(hecke_s3):
    A = hecke_s3.pair.B
    assert algebra_from_json(algebra_to_json(A)).table == A.table


@pytest.mark.parametrize("mutate", [
    lambda o: o.update(schema="fqhg/0"),
    lambda o: o["a"]["algebra"].update(dim=0),
    lambda o: o["a"]["algebra"].update(mult=[]),
    lambda o: o["a"].update(counit=["1"]),
    lambda o: o["a"].pop("coproduct"),
    lambda o: o.update(b=None),
    lambda o: o.update(meta=[]),
    lambda o: o["a"]["algebra"].update(unit=["x", "0"]),
])
def test_malformed_bundles(hecke_s3, mutate):
    c = hecke_s3
    obj = bundle_to_json(Bundle(c.name, Side.from_fqh(c.fqh_a), Side.from_fqh(c.fqh_b), c.pair.P))
    obj = json.loads(json.dumps(obj))
    mutate(obj)
    with pytest.raises(MalformedInput):
        bundle_from_json(obj)


def test_side_without_antipode():
    s = loads(dumps(bundle_to_json(Bundle("x", Side(*_tiny(), None)))))
    with pytest.raises(MalformedInput):
        s.a.to_fqh()
    with pytest.raises(MalformedInput):
        s.pair()


def _tiny():
    from fqhg.constructions import alpha_family

    F = alpha_family(1)
    return F.algebra, F.coproduct, F.counit, F.integral


def test_to_plain():
    assert to_plain({"a": (Scalar("1/2"), frozenset({2, 1})), 3: None}) == {"a": ["1/2", [1, 2]], "3": None}
