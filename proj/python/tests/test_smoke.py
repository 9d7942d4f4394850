import json
import pathlib

import pytest

import huainf

ROOT = pathlib.Path(__file__).resolve().parents[2]
INSTANCES = ROOT / "instances"


def load(name):
    return json.loads((INSTANCES / name).read_text())


def test_differential_anchors():
    assert huainf.diff("ainf", "m2") == "0"
    assert huainf.diff("ainf", "m3") == "(m2⊗1)m2 - (1⊗m2)m2"
    assert huainf.diff("ainf-hu", "m1;0") == "1 - (1⊗i)m2"
    assert huainf.diff("f1-hu", "v") == "i·ρ∅ - i·f1"


def test_basis_counts():
    counts = [sum(len(t) for t in huainf.basis("ainf", n).values()) for n in range(1, 7)]
    assert counts == [1, 1, 3, 11, 45, 197]


def test_infinite_basis_needs_bound():
    with pytest.raises(ValueError):
        huainf.basis("ainf-hu", 1)
    assert huainf.basis("ainf-hu", 0, nullary_max=1) == {0: ["i"]}


def test_coalgebra():
    assert huainf.delta("f1", "f2") == "f2·f1' + (f1⊗f1)f2'"
    assert huainf.counit("f1", "f1") == "1"
    assert huainf.counit("f1", "f3") == "0"


def test_homology_window():
    for n in range(0, 3):
        h = huainf.homology("ainf-hu", n, nullary_max=2, lo=-2, hi=1)
        assert h == {-2: 0, -1: 0, 0: 1, 1: 0}


def test_verify_report_is_deterministic():
    a = huainf.verify("dsq", arity_max=5, jobs=2)
    b = huainf.verify("dsq", arity_max=5, jobs=1)
    assert a == b
    assert a["status"] == "pass"
    assert all("timing" not in c for c in a["checks"])


def test_check_instances():
    assert huainf.check_instance(load("strict_unit.json"))["status"] == "pass"
    assert huainf.check_instance(load("dg_algebra.json"), "ainf")["status"] == "pass"
    report = huainf.check_instance(load("broken_leibniz.json"))
    assert report["status"] == "fail"
    assert any(c["status"] == "fail" and c["witness"] for c in report["checks"])


def test_compose_round_trip():
    gh = huainf.compose_instances(load("morphism_g.json"), load("morphism_h.json"))
    assert huainf.check_instance(gh, "morphism")["status"] == "pass"


def test_schema_errors():
    with pytest.raises(ValueError, match="unknown basis element"):
        huainf.check_instance({"module": [{"name": "1", "degree": 0}], "operations": {"m2": [{"in": ["1", "1"], "out": "z"}]}})


def test_instances_match_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((ROOT / "docs" / "instance.schema.json").read_text())
    for path in sorted(INSTANCES.glob("*.json")):
        jsonschema.validate(json.loads(path.read_text()), schema)
