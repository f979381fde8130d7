"""Instance file format: bit-exact round-trips and error reporting."""

import json

import pytest

from homhopf.catalog import entry, names
from homhopf.errors import InstanceFormatError
from homhopf.instance_io import (emit_instance, load_instance, max_dim,
                                 parse_instance)


@pytest.mark.parametrize("name", names())
def test_emit_parse_emit_is_a_fixed_point(name):
    text = emit_instance(entry(name))
    assert emit_instance(parse_instance(text)) == text


@pytest.mark.parametrize("name", names())
def test_emission_is_deterministic(name):
    assert emit_instance(entry(name)) == emit_instance(entry(name))


def test_parse_preserves_exact_rationals():
    text = emit_instance(entry("matrix-datum-2"))
    inst = parse_instance(text)
    assert inst.kind == "coalgebra-datum"
    again = json.loads(emit_instance(inst))
    assert again["hopf"]["dim"] == 4


def test_truncated_file_reports_location():
    with pytest.raises(InstanceFormatError) as exc:
        parse_instance("{ not json")
    assert "line 1" in str(exc.value)


def test_missing_block_reports_key():
    doc = json.loads(emit_instance(entry("kC2")))
    del doc["hopf"]["mult"]
    with pytest.raises(InstanceFormatError, match="mult"):
        parse_instance(json.dumps(doc))


def test_bad_scalar_reports_position():
    doc = json.loads(emit_instance(entry("kC2")))
    doc["hopf"]["alpha"][0][0] = "1/0"
    with pytest.raises(InstanceFormatError, match=r"alpha\[0\]\[0\]"):
        parse_instance(json.dumps(doc))


def test_wrong_shape_is_rejected():
    doc = json.loads(emit_instance(entry("kC2")))
    doc["hopf"]["comult"] = doc["hopf"]["comult"][:-1]
    with pytest.raises(InstanceFormatError, match="comult"):
        parse_instance(json.dumps(doc))


def test_singular_automorphism_is_rejected():
    doc = json.loads(emit_instance(entry("kC2")))
    doc["hopf"]["alpha"] = [["1", "1"], ["1", "1"]]
    with pytest.raises(InstanceFormatError, match="not invertible"):
        parse_instance(json.dumps(doc))


def test_dimension_cap_from_environment(monkeypatch):
    monkeypatch.setenv("HOMHOPF_MAX_DIM", "3")
    assert max_dim() == 3
    with pytest.raises(InstanceFormatError, match="exceeds the cap"):
        parse_instance(emit_instance(entry("sweedler-H4")))
    monkeypatch.setenv("HOMHOPF_MAX_DIM", "4")
    parse_instance(emit_instance(entry("sweedler-H4")))


def test_default_cap_is_twelve(monkeypatch):
    monkeypatch.delenv("HOMHOPF_MAX_DIM", raising=False)
    assert max_dim() == 12


def test_invalid_cap_is_an_input_error(monkeypatch):
    monkeypatch.setenv("HOMHOPF_MAX_DIM", "many")
    with pytest.raises(InstanceFormatError):
        max_dim()


def test_load_instance_missing_file():
    with pytest.raises(InstanceFormatError):
        load_instance("/nonexistent/instance.json")


def test_round_trip_through_disk(tmp_path):
    text = emit_instance(entry("kC3-twisted"))
    path = tmp_path / "inst.json"
    path.write_text(text)
    inst = load_instance(str(path))
    assert emit_instance(inst) == text
