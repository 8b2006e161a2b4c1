import json

import pytest

from novikov.algebra import BimodNov, regular, regular_bimodule
from novikov.errors import DocumentError
from novikov.fields import GF, QQ
from novikov.fixtures import example_algebra, example_beta, example_t
from novikov.linalg import Matrix
from novikov.operators import LinMap
from novikov.postnov import PostNov, post_from_rb
from novikov.serialize import (
    bundle_document,
    bundle_to_trialgebra,
    dumps,
    from_document,
    loads,
    to_document,
)
from novikov.tensors import Tensor2
from novikov.ybe import BilForm


def roundtrip(obj):
    return from_document(loads(dumps(to_document(obj))))


def test_algebra_roundtrip():
    for field in (QQ, GF(5)):
        alg = example_algebra(field)
        back = roundtrip(alg)
        assert back.mul == alg.mul and back.field == field


def test_linmap_roundtrip():
    t = example_t(QQ)
    assert roundtrip(t).mat == t.mat


def test_tensor_and_form_roundtrip():
    r = Tensor2(QQ, (("1/2", 0), (3, "-2")))
    assert roundtrip(r) == r
    b = BilForm(GF(7), ((1, 2), (2, 3)))
    assert roundtrip(b).grid == b.grid


def test_bimodule_roundtrips(a2):
    b = regular_bimodule(a2)
    back = roundtrip(b)
    assert back.l_mats == b.l_mats and back.r_mats == b.r_mats
    ctx = regular(a2)
    back2 = roundtrip(ctx)
    assert isinstance(back2, BimodNov)
    assert back2.mul == ctx.mul


def test_postnov_roundtrip(a2):
    p = post_from_rb(a2, LinMap.identity(QQ, 2), -1)
    back = roundtrip(p)
    assert back.circ == p.circ and back.tri_l == p.tri_l and back.tri_r == p.tri_r


def test_bundle_and_trialgebra(fixture_path):
    from novikov.serialize import load_path

    parts = from_document(load_path(fixture_path("trialgebra.json")))
    tri = bundle_to_trialgebra(parts)
    assert tri.dim == 2
    bad = dict(parts)
    del bad["derivation"]
    with pytest.raises(DocumentError):
        bundle_to_trialgebra(bad)


def test_rational_scalars_as_strings():
    doc = to_document(Tensor2(QQ, (("1/3", 0), (0, 0))))
    payload = json.dumps(doc)
    assert "1/3" in payload
    # integer shorthand accepted on input
    doc["payload"]["entries"][0][0] = 2
    assert from_document(doc)[0, 0] == QQ.coerce(2)


def test_document_errors():
    with pytest.raises(DocumentError):
        from_document({"format": 99, "kind": "algebra", "field": {"kind": "rational"}, "payload": {}})
    with pytest.raises(DocumentError):
        from_document({"format": 1, "kind": "nope", "field": {"kind": "rational"}, "payload": {}})
    with pytest.raises(DocumentError):
        from_document({"format": 1, "kind": "algebra", "field": {"kind": "rational"}, "payload": {"dim": 2, "mul": []}})
    with pytest.raises(DocumentError):
        loads("not json")
    with pytest.raises(DocumentError):
        bundle_document(
            {
                "a": to_document(example_algebra(QQ)),
                "b": to_document(example_algebra(GF(3))),
            }
        )


def test_prime_scalars_reduced():
    doc = to_document(example_algebra(GF(5)))
    doc["payload"]["mul"][0][0][0] = -1
    back = from_document(doc)
    assert back.mul[0][0][0] == 4
