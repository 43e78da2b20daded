from __future__ import annotations

import os
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from singularity_app.config import MACHINE_JSON_INDENT
from singularity_app.core.boundary import BoundaryData, CurveGerm
from singularity_app.core.dualgraph import DualGraph
from singularity_app.core.errors import GermError, GermParseError
from singularity_app.utils.rationals import format_rational, parse_rational

logger = logging.getLogger(__name__)

DOCUMENT_KEYS = {"vertices", "edges", "boundary", "d_data"}
VERTEX_KEYS = {"id", "weight"}
CURVE_KEYS = {"coeff", "incidence", "label"}
D_DATA_KEYS = {"d_squared", "min_dc", "d_components"}


@dataclass(frozen=True)
class DData:
    d_squared: Fraction
    min_dc: Fraction | None = None
    d_components: BoundaryData = field(default_factory=BoundaryData)


@dataclass(frozen=True)
class GermDocument:
    graph: DualGraph
    boundary: BoundaryData = field(default_factory=BoundaryData)
    d_data: DData | None = None


def _expect(value: Any, kind: type | tuple[type, ...], path: str) -> Any:
    if not isinstance(value, kind):
        names = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise GermParseError(f"expected {names}, got {type(value).__name__}", location=path)
    return value


def _check_keys(data: Any, allowed: set[str], path: str, required: tuple[str, ...] = ()) -> None:
    _expect(data, dict, path)
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise GermParseError(f"unknown field {unknown[0]!r}", location=path)
    for key in required:
        if key not in data:
            raise GermParseError(f"missing field {key!r}", location=path)


def _parse_curves(items: Any, vertex_ids: set[str], path: str) -> BoundaryData:
    curves = []
    for index, item in enumerate(_expect(items, list, path)):
        here = f"{path}[{index}]"
        _check_keys(item, CURVE_KEYS, here, required=("coeff", "incidence"))
        coefficient = parse_rational(item["coeff"], f"{here}.coeff")
        incidence: dict[str, int] = {}
        for vid, count in _expect(item["incidence"], dict, f"{here}.incidence").items():
            if vid not in vertex_ids:
                raise GermParseError(f"unknown vertex {vid!r}", location=f"{here}.incidence")
            if isinstance(count, bool) or not isinstance(count, int):
                raise GermParseError(f"incidence must be an integer, got {count!r}", location=f"{here}.incidence.{vid}")
            incidence[vid] = count
        label = item.get("label")
        if label is not None:
            _expect(label, str, f"{here}.label")
        try:
            curves.append(CurveGerm.create(coefficient, incidence, label=label))
        except GermError as e:
            raise GermParseError(e.message, location=here) from e
    return BoundaryData(tuple(curves))


def parse_germ_document(data: Any) -> GermDocument:
    """Validate a decoded germ document; every error names the offending field."""
    _check_keys(data, DOCUMENT_KEYS, "document", required=("vertices",))
    vertices: list[tuple[str, int]] = []
    for index, item in enumerate(_expect(data["vertices"], list, "vertices")):
        here = f"vertices[{index}]"
        _check_keys(item, VERTEX_KEYS, here, required=("id", "weight"))
        vid = _expect(item["id"], str, f"{here}.id")
        weight = item["weight"]
        if isinstance(weight, bool) or not isinstance(weight, int):
            raise GermParseError(f"weight must be an integer, got {weight!r}", location=f"{here}.weight")
        vertices.append((vid, weight))

    edges: list[tuple[str, str]] = []
    for index, item in enumerate(_expect(data.get("edges", []), list, "edges")):
        here = f"edges[{index}]"
        if not isinstance(item, list) or len(item) != 2 or not all(isinstance(v, str) for v in item):
            raise GermParseError("edge must be a pair of vertex ids", location=here)
        edges.append(tuple(item))

    try:
        graph = DualGraph.from_lists(vertices, edges)
    except GermError as e:
        raise GermParseError(e.message, location="vertices/edges") from e

    vertex_ids = set(graph.ids)
    boundary = _parse_curves(data.get("boundary", []), vertex_ids, "boundary")

    d_data = None
    if data.get("d_data") is not None:
        raw = data["d_data"]
        _check_keys(raw, D_DATA_KEYS, "d_data", required=("d_squared",))
        min_dc = raw.get("min_dc")
        d_data = DData(
            d_squared=parse_rational(raw["d_squared"], "d_data.d_squared"),
            min_dc=None if min_dc is None else parse_rational(min_dc, "d_data.min_dc"),
            d_components=_parse_curves(raw.get("d_components", []), vertex_ids, "d_data.d_components"),
        )
    return GermDocument(graph, boundary, d_data)


def _curves_to_list(data: BoundaryData) -> list[dict[str, Any]]:
    result: list[dict[str, Any]] = []
    for curve in data.curves:
        item = {"coeff": format_rational(curve.coefficient), "incidence": dict(curve.incidence)}
        if curve.label is not None:
            item["label"] = curve.label
        result.append(item)
    return result


def document_to_dict(document: GermDocument) -> dict[str, Any]:
    graph = document.graph
    data: dict[str, Any] = {
        "vertices": [{"id": vid, "weight": weight} for vid, weight in graph.vertices],
        "edges": sorted(sorted(edge) for edge in graph.edges),
        "boundary": _curves_to_list(document.boundary),
    }
    if document.d_data is not None:
        d = document.d_data
        data["d_data"] = {
            "d_squared": format_rational(d.d_squared),
            "min_dc": None if d.min_dc is None else format_rational(d.min_dc),
            "d_components": _curves_to_list(d.d_components),
        }
    return data


class DocumentManager:
    @staticmethod
    def load_json(file_path: str) -> tuple[bool, Any, str]:
        if not os.path.exists(file_path):
            return False, None, f"File does not exist: {file_path}"
        try:
            with open(file_path, 'r') as f:
                data = json.load(f)
            return True, data, "Success"
        except Exception as e:
            return False, None, f"Failed to load document: {e}"

    @staticmethod
    def load_document(file_path: str) -> tuple[bool, GermDocument | None, str]:
        success, data, msg = DocumentManager.load_json(file_path)
        if not success:
            return False, None, msg
        try:
            return True, parse_germ_document(data), "Success"
        except GermError as e:
            logger.debug("rejected %s: %s", file_path, e.describe())
            return False, None, f"{file_path}: {e.describe()}"

    @staticmethod
    def save_document(file_path: str, document: GermDocument) -> tuple[bool, str]:
        try:
            with open(file_path, 'w') as f:
                json.dump(document_to_dict(document), f, indent=MACHINE_JSON_INDENT)
            return True, "Document saved successfully"
        except Exception as e:
            return False, f"Failed to save document: {e}"

    @staticmethod
    def save_report(file_path: str, report: dict[str, Any]) -> tuple[bool, str]:
        try:
            with open(file_path, 'w') as f:
                f.write(dump_report(report))
            return True, "Report saved successfully"
        except Exception as e:
            return False, f"Failed to save report: {e}"


def dump_report(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=MACHINE_JSON_INDENT, sort_keys=True) + "\n"
