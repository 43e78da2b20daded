from dataclasses import replace
from fractions import Fraction

import pytest

from singularity_app.core.appendix_table import APPENDIX_TABLE, AffineInX, TableEntry, table_row
from singularity_app.core.errors import InvalidM
from singularity_app.core.etypes import (CENTER_ID, ORIENTATIONS, ETypeSpec, arm_vertex_id, build_etype_graph,
                                         etype_aci, printed_order, proposition3_sweep, verify_appendix)


def test_table_shape():
    assert len(APPENDIX_TABLE) == 15
    assert [row.row for row in APPENDIX_TABLE] == list(range(1, 16))
    for row in APPENDIX_TABLE:
        assert len(row.entries()) == 2 + len(row.arm1) + len(row.arm2)
    assert table_row(6).notation == "(m;4;2,2)"
    assert table_row(8).x_expression == "30m-59"
    with pytest.raises(KeyError):
        table_row(16)


def test_affine_value_and_denominator():
    value = AffineInX(Fraction(4, 3), Fraction(14, 3))
    assert value.evaluate(7) == 2
    assert value.predicted_denominator(7) == 21
    assert str(value) == "4/3 + 14/(3x)"


def test_build_graph_layout():
    spec = ETypeSpec(4, 3)
    g = build_etype_graph(spec)
    assert g.ids[0] == CENTER_ID
    assert g.weight(CENTER_ID) == 3
    assert len(g) == 1 + 3 + 2 + 1
    assert g.neighbours(arm_vertex_id(1, 3)) == [arm_vertex_id(1, 2)]
    assert printed_order(spec) == [CENTER_ID, "arm1.3", "arm1.2", "arm1.1", "arm2.1", "arm2.2", "arm3.1"]
    assert printed_order(spec, ORIENTATIONS[1])[1:4] == ["arm1.1", "arm1.2", "arm1.3"]


def test_invalid_specs():
    with pytest.raises(InvalidM):
        ETypeSpec(16, 2)
    with pytest.raises(InvalidM):
        build_etype_graph(ETypeSpec(1, 1))


def test_e6_center_value():
    # rational double point: a = 0, so a + c at the center is -(A^-1)_cc = 6
    assert etype_aci(ETypeSpec(1, 2))[CENTER_ID] == 6


def test_appendix_reproduces():
    report = verify_appendix((2, 6))
    assert report.passed
    assert report.orientation == ORIENTATIONS[0]
    assert len(report.cells) == 75
    assert report.skipped == []
    assert all(cell.proposition3 for cell in report.cells)
    assert all(cell.denominators_divide for cell in report.cells)


def test_row6_reading_is_confirmed():
    report = verify_appendix((2, 6))
    assert report.confirmed_readings == {"row 6 arm2.1": "4/3 + 14/(3x)"}


def test_tampered_table_is_detected():
    row = table_row(1)
    bogus = replace(row, center=TableEntry("1+6/x", (AffineInX(Fraction(1), Fraction(6)),)))
    report = verify_appendix((2, 3), table=(bogus,))
    assert not report.passed
    assert {cell.mismatch_vertex for cell in report.cells} == {CENTER_ID}
    assert "computed" in report.cells[0].detail


def test_proposition3():
    results = proposition3_sweep((2, 10))
    assert len(results) == 15 * 9
    assert all(ok for _, _, ok in results)
