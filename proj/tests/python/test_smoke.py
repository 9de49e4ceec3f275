"""End-to-end smoke tests for the python module.

The module path and fixture directory come from the environment (the CMake
test target sets both); run via `ctest -R python_smoke` or point PYTHONPATH
at the built extension yourself.
"""

import os

import pytest

import graphzeta

THREE_CYCLE = """
{
  "vertices": ["a", "b", "c"],
  "scheme": {"preset": "IHARA"},
  "arcs": [
    {"tail": "a", "head": "b"},
    {"tail": "b", "head": "c"},
    {"tail": "c", "head": "a"}
  ]
}
"""


def fixture(name):
    return os.path.join(os.environ["GRAPHZETA_FIXTURE_DIR"], name)


def test_parse_file_and_verify():
    inst = graphzeta.parse_file(fixture("mixed_multidigraph.json"))
    assert inst.vertex_count == 3
    assert inst.arc_count == 8
    assert inst.scheme == "GENERAL"
    assert not inst.symbolic

    report = graphzeta.verify(inst)
    assert report["match"] is True
    assert report["hashimoto"] == report["ihara"]
    assert report["scheme"] == "GENERAL"


def test_phi_partition_names():
    inst = graphzeta.parse_file(fixture("mixed_multidigraph.json"))
    phi = inst.phi_partition()
    assert phi["loop"] == [("v1", "v1")]
    assert phi["one_way"] == [("v1", "v3")]
    assert phi["two_way"] == [("v1", "v2"), ("v2", "v3")]


def test_hashimoto_equals_ihara_text():
    inst = graphzeta.parse_text(THREE_CYCLE)
    assert graphzeta.hashimoto(inst) == "1 - t^3"
    assert graphzeta.ihara(inst) == "1 - t^3"


def test_series_agreement():
    inst = graphzeta.parse_text(THREE_CYCLE)
    out = graphzeta.series(inst, T=6)
    assert out["match"] is True
    assert out["exp"] == ["1", "0", "0", "1", "0", "0", "1"]
    assert out["euler"] == out["exp"]
    assert out["hashimoto_inverse"] == out["exp"]


def test_nm_counts():
    inst = graphzeta.parse_text(THREE_CYCLE)
    assert graphzeta.nm(inst, T=6) == ["0", "0", "3", "0", "0", "3"]


def test_symbolic_instance():
    inst = graphzeta.parse_file(fixture("single_edge_bartholdi.json"))
    assert inst.symbolic
    report = graphzeta.verify(inst)
    assert report["match"] is True
    assert report["hashimoto"] == "1 - q^2*t^2"


def test_classical_closed_form():
    inst = graphzeta.parse_file(fixture("triangle.json"))
    assert graphzeta.classical(inst) == "1 - 2*t^3 + t^6"


def test_lyndon_words():
    assert graphzeta.lyndon_words(2, 2) == [[1], [1, 2], [2]]
    assert graphzeta.lyndon_words(1, 3) == [[1]]


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        graphzeta.parse_text("{}")


def test_budget_error_is_runtime_error():
    inst = graphzeta.parse_file(fixture("mixed_multidigraph.json"))
    with pytest.raises(RuntimeError, match="max.paths"):
        graphzeta.series(inst, T=6, max_paths=10)
