"""Boundary and auxiliary divisors through the point: pullbacks, mu, qlt test, Lemma 3 constant."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from singularity_app.core.cycles import (DiscrepancyResult, discrepancy_cycle, fundamental_cycle,
                                         negative_definite_matrix)
from singularity_app.core.dualgraph import Cycle, DualGraph, VertexId, solve_linear
from singularity_app.core.errors import EmptyDy, InvalidBoundary, MuUndefined

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurveGerm:
    """A curve through y: its coefficient and how its strict transform meets each Delta_j."""

    coefficient: Fraction
    incidence: tuple[tuple[VertexId, int], ...]
    label: str | None = None

    def __post_init__(self):
        coefficient = Fraction(self.coefficient)
        if coefficient < 0:
            raise InvalidBoundary(f"coefficient {coefficient} is negative", location=self.label)
        incidence = tuple(sorted((str(v), int(k)) for v, k in dict(self.incidence).items()))
        if any(k < 0 for _, k in incidence):
            raise InvalidBoundary("incidence numbers must be nonnegative", location=self.label)
        if not any(k for _, k in incidence):
            raise InvalidBoundary("curve does not pass through the point (incidence all zero)", location=self.label)
        object.__setattr__(self, "coefficient", coefficient)
        object.__setattr__(self, "incidence", incidence)

    @classmethod
    def create(cls, coefficient: Fraction | int | str, incidence: Mapping[VertexId, int],
               label: str | None = None) -> CurveGerm:
        return cls(Fraction(coefficient), tuple(incidence.items()), label)

    def incidence_cycle(self, g: DualGraph) -> Cycle:
        unknown = {v for v, _ in self.incidence} - set(g.ids)
        if unknown:
            raise InvalidBoundary(f"incidence refers to unknown vertex {sorted(unknown)[0]}", location=self.label)
        return Cycle.from_mapping(g.ids, dict(self.incidence))

    def scaled(self, t: Fraction) -> CurveGerm:
        return CurveGerm(self.coefficient * t, self.incidence, self.label)


@dataclass(frozen=True)
class BoundaryData:
    curves: tuple[CurveGerm, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))

    def __bool__(self) -> bool:
        return bool(self.curves)

    @property
    def integral_part_zero(self) -> bool:
        """[B] = 0: every coefficient lies in [0, 1)."""
        return all(0 <= c.coefficient < 1 for c in self.curves)

    def scaled(self, t: Fraction) -> BoundaryData:
        return BoundaryData(tuple(c.scaled(t) for c in self.curves))

    def __add__(self, other: BoundaryData) -> BoundaryData:
        return BoundaryData(self.curves + other.curves)


@dataclass(frozen=True)
class QltReport:
    is_qlt: bool
    worst_coefficient: Fraction
    integral_part_zero: bool
    coefficients: Cycle


@dataclass(frozen=True)
class Lemma3Constant:
    value: Fraction
    attained_at: str
    hypothesis_holds: bool


def pullback_excess(g: DualGraph, c: CurveGerm) -> Cycle:
    """Exceptional part of f*C: the solution of A.x = -incidence (f*C.Delta_j = 0)."""
    matrix = negative_definite_matrix(g)
    return solve_linear(matrix, -c.incidence_cycle(g))


def boundary_excess(g: DualGraph, data: BoundaryData | None) -> Cycle:
    total = Cycle.zero(g.ids)
    for curve in (data.curves if data else ()):
        total = total + pullback_excess(g, curve) * curve.coefficient
    return total


def mu(g: DualGraph, d: BoundaryData | None) -> Fraction:
    """max{mu : mu (Z - Delta_y) <= f*B}, read off the exceptional coefficients.

    Needs Z - Delta_y > 0 on every vertex; this holds whenever every a_j < 1.
    """
    if not d:
        return Fraction(0)
    gap = fundamental_cycle(g) - discrepancy_cycle(g)
    flat = [v for v in g.ids if gap[v] <= 0]
    if flat:
        raise MuUndefined(f"Z - Delta_y is {gap[flat[0]]} on vertex {flat[0]}; the germ is not log-terminal")
    excess = boundary_excess(g, d)
    return min(excess[v] / gap[v] for v in g.ids)


def quasi_log_terminal_check(g: DualGraph, b: BoundaryData | None) -> QltReport:
    b = b or BoundaryData()
    total = discrepancy_cycle(g) + boundary_excess(g, b)
    worst = max(total.values)
    integral_zero = b.integral_part_zero
    return QltReport(worst < 1 and integral_zero, worst, integral_zero, total)


def lemma3_constant(g: DualGraph, b_y: BoundaryData | None, d_y: BoundaryData | None,
                    delta: DiscrepancyResult) -> Lemma3Constant:
    """c = min{(1 - b_i)/d_i, (1 - a_j - b_j')/d_j'}."""
    if not d_y:
        raise EmptyDy("D_y has no component through the point")
    b_y = b_y or BoundaryData()
    a = delta.delta_cycle
    b_exc = boundary_excess(g, b_y)
    d_exc = boundary_excess(g, d_y)
    boundary_on = {c.label: c.coefficient for c in b_y.curves if c.label is not None}

    candidates: list[tuple[Fraction, str]] = []
    for index, curve in enumerate(d_y.curves):
        if curve.coefficient > 0:
            b_i = boundary_on.get(curve.label, Fraction(0)) if curve.label is not None else Fraction(0)
            candidates.append(((1 - b_i) / curve.coefficient, f"curve {curve.label or index}"))
    for vid in g.ids:
        if d_exc[vid] > 0:
            candidates.append(((1 - a[vid] - b_exc[vid]) / d_exc[vid], f"vertex {vid}"))
    if not candidates:
        raise EmptyDy("every D_y coefficient is zero")
    value, where = min(candidates, key=lambda item: item[0])

    sums = [d_exc[v] + a[v] + b_exc[v] for v in g.ids]
    holds = all(s.denominator == 1 and s >= 2 for s in sums)
    if not holds:
        logger.warning("d_j' + a_j + b_j' is not an integer >= 2 on every vertex: %s",
                       [str(s) for s in sums])
    return Lemma3Constant(value, where, holds)


def inequality_one(c: Fraction, mu: Fraction, delta_y: Fraction,
                   excess_terms: Fraction) -> tuple[Fraction, bool]:
    lhs = (1 - c) * (1 - mu) * delta_y / 2 + excess_terms
    return lhs, lhs > 1


def inequality_one_terms(g: DualGraph, b_y: BoundaryData | None, d_y: BoundaryData | None,
                         delta: DiscrepancyResult, c: Fraction,
                         d1_incidence: Mapping[VertexId, int]) -> Fraction:
    """sum_j (b_j' + c d_j' + a_j) (Delta_j . D_1)."""
    b_exc = boundary_excess(g, b_y)
    d_exc = boundary_excess(g, d_y)
    a = delta.delta_cycle
    meets = Cycle.from_mapping(g.ids, dict(d1_incidence))
    return sum(((b_exc[v] + c * d_exc[v] + a[v]) * meets[v] for v in g.ids), Fraction(0))


def a1_case_lhs(p: Fraction, mu: Fraction, a1: Fraction, c: Fraction) -> Fraction:
    """Closed value of the inequality's left side at a smooth or A_1 point: 1 + (p + mu - 1)(1 - a_1)c."""
    return 1 + (p + mu - 1) * (1 - a1) * c
