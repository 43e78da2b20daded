"""The 15 E-type log-terminal families and the check of their a_i + c_i table."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from singularity_app.config import DEFAULT_APPENDIX_M_RANGE, PROPOSITION3_M_RANGE
from singularity_app.core.appendix_table import APPENDIX_TABLE, TableEntry, TableRow, table_row
from singularity_app.core.cycles import GermFamily, classify, discrepancy_cycle
from singularity_app.core.dualgraph import DualGraph, VertexId, build_intersection_matrix, inverse_entry
from singularity_app.core.errors import GermError, InvalidM

logger = logging.getLogger(__name__)

CENTER_ID = "C0"

# (arm1 direction, arm2 direction) in the printed tuple; the first one is the documented convention.
ORIENTATIONS: tuple[tuple[str, str], ...] = (
    ("far_to_near", "near_to_far"),
    ("near_to_far", "near_to_far"),
    ("far_to_near", "far_to_near"),
    ("near_to_far", "far_to_near"),
)


def arm_vertex_id(arm: int, position: int) -> VertexId:
    """Position counts from the center: 1 is the vertex adjacent to C0."""
    return f"arm{arm}.{position}"


@dataclass(frozen=True)
class ETypeSpec:
    row: int
    m: int

    def __post_init__(self):
        if not 1 <= self.row <= len(APPENDIX_TABLE):
            raise InvalidM(f"row must be in 1..{len(APPENDIX_TABLE)}", location=f"row {self.row}")

    @property
    def table(self) -> TableRow:
        return table_row(self.row)

    @property
    def arm1(self) -> tuple[int, ...]:
        """Weights far-to-near the center."""
        return self.table.arm1

    @property
    def arm2(self) -> tuple[int, ...]:
        return self.table.arm2

    @property
    def arm3(self) -> tuple[int, ...]:
        return (2,)

    @property
    def x(self) -> int:
        return self.table.x(self.m)


def build_etype_graph(spec: ETypeSpec) -> DualGraph:
    vertices: list[tuple[VertexId, int]] = [(CENTER_ID, spec.m)]
    edges: list[tuple[VertexId, VertexId]] = []
    for arm, far_to_near in enumerate((spec.arm1, spec.arm2, spec.arm3), start=1):
        previous = CENTER_ID
        for position, weight in enumerate(reversed(far_to_near), start=1):
            vid = arm_vertex_id(arm, position)
            vertices.append((vid, weight))
            edges.append((previous, vid))
            previous = vid
    try:
        graph = DualGraph.from_lists(vertices, edges)
        kind = classify(graph)
    except GermError as exc:
        raise InvalidM(exc.message, location=f"row {spec.row}, m={spec.m}") from exc
    if kind.family is not GermFamily.E:
        raise InvalidM(f"graph is {kind.label}", location=f"row {spec.row}, m={spec.m}")
    return graph


def etype_aci(spec: ETypeSpec) -> dict[VertexId, Fraction]:
    """a_i + c_{i,i} for every vertex, with c_{i,i} = -(A^-1)_{ii}."""
    graph = build_etype_graph(spec)
    matrix = build_intersection_matrix(graph)
    a = discrepancy_cycle(graph)
    return {vid: a[vid] - inverse_entry(matrix, vid, vid) for vid in graph.ids}


def printed_order(spec: ETypeSpec, orientation: tuple[str, str] = ORIENTATIONS[0]) -> list[VertexId]:
    """Vertex ids in the order the table prints its values."""
    def arm(index: int, length: int, direction: str) -> list[VertexId]:
        near_to_far = [arm_vertex_id(index, p) for p in range(1, length + 1)]
        return near_to_far if direction == "near_to_far" else near_to_far[::-1]

    return ([CENTER_ID]
            + arm(1, len(spec.arm1), orientation[0])
            + arm(2, len(spec.arm2), orientation[1])
            + [arm_vertex_id(3, 1)])


def _reading_for(entry: TableEntry, x: int, value: Fraction) -> int | None:
    for index, reading in enumerate(entry.readings):
        if reading.evaluate(x) == value:
            return index
    return None


@dataclass
class AppendixCell:
    row: int
    m: int
    x: int
    status: str  # "pass", "fail" or "skip"
    values: dict[VertexId, Fraction] = field(default_factory=dict)
    mismatch_vertex: VertexId | None = None
    detail: str = ""
    proposition3: bool = True
    readings: dict[VertexId, str] = field(default_factory=dict)
    denominator_mismatches: list[VertexId] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    @property
    def denominators_divide(self) -> bool:
        return not self.denominator_mismatches


@dataclass
class AppendixReport:
    cells: list[AppendixCell]
    orientation: tuple[str, str]
    confirmed_readings: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(cell.passed for cell in self.cells)

    @property
    def skipped(self) -> list[AppendixCell]:
        return [cell for cell in self.cells if cell.status == "skip"]

    @property
    def convention(self) -> str:
        return f"center; arm1 {self.orientation[0]}; arm2 {self.orientation[1]}; arm3"


def _multiset_matches(row: TableRow, x: int, values: dict[VertexId, Fraction]) -> bool:
    remaining = Counter(values.values())
    for entry in row.entries():
        for reading in entry.readings:
            value = reading.evaluate(x)
            if remaining[value] > 0:
                remaining[value] -= 1
                break
        else:
            return False
    return True


def _compare_cell(spec: ETypeSpec, row: TableRow, values: dict[VertexId, Fraction],
                  orientation: tuple[str, str]) -> AppendixCell:
    x = spec.x
    cell = AppendixCell(spec.row, spec.m, x, "pass", values=values)
    cell.proposition3 = all(v > 1 for v in values.values())
    if not _multiset_matches(row, x, values):
        cell.status = "fail"
        cell.detail = "multiset of values differs from the table"
    for vid, entry in zip(printed_order(spec, orientation), row.entries()):
        reading = _reading_for(entry, x, values[vid])
        if reading is None:
            cell.status = "fail"
            cell.mismatch_vertex = vid
            cell.detail = f"{vid}: computed {values[vid]}, table {entry.printed} gives {entry.readings[0].evaluate(x)}"
            break
        if entry.is_ambiguous:
            cell.readings[vid] = str(entry.readings[reading])
        if entry.readings[reading].predicted_denominator(x) % values[vid].denominator:
            cell.denominator_mismatches.append(vid)
    if cell.status == "pass" and not cell.proposition3:
        cell.status = "fail"
        cell.detail = "some a_i + c_i is not > 1"
    return cell


def verify_appendix(m_range: tuple[int, int] = DEFAULT_APPENDIX_M_RANGE,
                    table: tuple[TableRow, ...] = APPENDIX_TABLE) -> AppendixReport:
    """Compare every printed value with the exact solver for each (row, m) in the range."""
    low, high = m_range
    computed: list[tuple[ETypeSpec, TableRow, dict[VertexId, Fraction] | None, str]] = []
    for row in table:
        for m in range(low, high + 1):
            spec = ETypeSpec(row.row, m)
            try:
                computed.append((spec, row, etype_aci(spec), ""))
            except InvalidM as exc:
                logger.debug("skipping row %d, m=%d: %s", row.row, m, exc)
                computed.append((spec, row, None, exc.describe()))

    def cells_for(orientation: tuple[str, str]) -> list[AppendixCell]:
        cells = []
        for spec, row, values, reason in computed:
            if values is None:
                cells.append(AppendixCell(spec.row, spec.m, spec.x, "skip", detail=reason))
            else:
                cells.append(_compare_cell(spec, row, values, orientation))
        return cells

    chosen = ORIENTATIONS[0]
    cells = cells_for(chosen)
    if not all(cell.passed for cell in cells):
        for orientation in ORIENTATIONS[1:]:
            candidate = cells_for(orientation)
            if all(cell.passed for cell in candidate):
                chosen, cells = orientation, candidate
                break
    logger.debug("appendix orientation: %s", chosen)

    report = AppendixReport(cells, chosen)
    for cell in cells:
        for vid, reading in cell.readings.items():
            report.confirmed_readings.setdefault(f"row {cell.row} {vid}", reading)
    return report


def proposition3_sweep(m_range: tuple[int, int] = PROPOSITION3_M_RANGE) -> list[tuple[int, int, bool]]:
    """(row, m, every a_i + c_i > 1) for all admitted cells."""
    results = []
    for row in APPENDIX_TABLE:
        for m in range(m_range[0], m_range[1] + 1):
            try:
                values = etype_aci(ETypeSpec(row.row, m))
            except InvalidM:
                continue
            results.append((row.row, m, all(v > 1 for v in values.values())))
    return results
