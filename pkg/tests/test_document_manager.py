import json
from fractions import Fraction

import pytest

from singularity_app.core.document_manager import (DocumentManager, document_to_dict, dump_report,
                                                   parse_germ_document)
from singularity_app.core.errors import GermParseError
from singularity_app.utils.rationals import format_rational, parse_rational

A1_3 = {
    "vertices": [{"id": "1", "weight": 3}],
    "edges": [],
    "boundary": [{"coeff": "1/2", "incidence": {"1": 1}, "label": "C"}],
    "d_data": {"d_squared": "1", "min_dc": None,
               "d_components": [{"coeff": "2", "incidence": {"1": 1}}]},
}


def with_changes(**changes):
    data = json.loads(json.dumps(A1_3))
    data.update(changes)
    return data


def test_parse_document():
    document = parse_germ_document(A1_3)
    assert document.graph.weights == (3,)
    assert document.boundary.curves[0].coefficient == Fraction(1, 2)
    assert document.boundary.curves[0].label == "C"
    assert document.d_data.d_squared == 1
    assert document.d_data.min_dc is None
    assert document.d_data.d_components.curves[0].coefficient == 2


def test_round_trip():
    document = parse_germ_document(A1_3)
    assert parse_germ_document(document_to_dict(document)) == document


@pytest.mark.parametrize("data, location", [
    (with_changes(colour="red"), "document"),
    (with_changes(vertices=[{"id": "1", "weight": 3, "genus": 0}]), "vertices[0]"),
    (with_changes(vertices=[{"id": "1", "weight": "3"}]), "vertices[0].weight"),
    (with_changes(boundary=[{"coeff": "1/0", "incidence": {"1": 1}}]), "boundary[0].coeff"),
    (with_changes(boundary=[{"coeff": "0.5", "incidence": {"1": 1}}]), "boundary[0].coeff"),
    (with_changes(boundary=[{"coeff": "1/2", "incidence": {"9": 1}}]), "boundary[0].incidence"),
    (with_changes(boundary=[{"coeff": "1/2", "incidence": {"1": 0}}]), "boundary[0]"),
    (with_changes(edges=[["1"]]), "edges[0]"),
    (with_changes(d_data={"d_squared": "x"}), "d_data.d_squared"),
    (with_changes(d_data={"d_squared": "1", "extra": 1}), "d_data"),
])
def test_parse_errors_name_the_field(data, location):
    with pytest.raises(GermParseError) as info:
        parse_germ_document(data)
    assert info.value.location == location


def test_graph_errors_are_parse_errors():
    data = with_changes(vertices=[{"id": "1", "weight": 3}, {"id": "2", "weight": 2}], boundary=[], d_data=None)
    with pytest.raises(GermParseError, match="connected"):
        parse_germ_document(data)


def test_rationals():
    assert parse_rational("-3/6", "x") == Fraction(-1, 2)
    assert parse_rational(4, "x") == 4
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    for bad in ("1/0", "1.5", "", "1/2/3", True, 0.5, None):
        with pytest.raises(GermParseError):
            parse_rational(bad, "x")


def test_load_document(write_document):
    success, document, msg = DocumentManager.load_document(write_document(A1_3))
    assert success and msg == "Success"
    assert document.graph.weights == (3,)


def test_load_failures(tmp_path, write_document):
    success, document, msg = DocumentManager.load_document(str(tmp_path / "missing.json"))
    assert not success and document is None
    assert "does not exist" in msg

    broken = tmp_path / "broken.json"
    broken.write_text("{")
    success, _, msg = DocumentManager.load_document(str(broken))
    assert not success and msg.startswith("Failed to load document")

    success, _, msg = DocumentManager.load_document(write_document(with_changes(colour="red")))
    assert not success and "unknown field 'colour'" in msg


def test_sample_germs_parse(germs_dir):
    paths = sorted(germs_dir.glob("*.json"))
    assert paths
    for path in paths:
        success, _, msg = DocumentManager.load_document(str(path))
        assert success, msg


def test_save_report_is_sorted(tmp_path):
    path = tmp_path / "report.json"
    success, _ = DocumentManager.save_report(str(path), {"b": "1/2", "a": 1})
    assert success
    assert path.read_text() == dump_report({"a": 1, "b": "1/2"})
    assert list(json.loads(path.read_text())) == ["a", "b"]


def test_save_document(tmp_path):
    path = tmp_path / "germ.json"
    document = parse_germ_document(A1_3)
    success, _ = DocumentManager.save_document(str(path), document)
    assert success
    assert DocumentManager.load_document(str(path))[1] == document
