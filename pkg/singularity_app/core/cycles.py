"""Fundamental cycle, discrepancy cycle, delta_y, arithmetic genus and classification."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import networkx as nx

from singularity_app.core.appendix_table import APPENDIX_TABLE
from singularity_app.core.dualgraph import (Cycle, DualGraph, IntersectionMatrix, VertexId,
                                            build_intersection_matrix, is_negative_definite,
                                            solve_linear)
from singularity_app.core.errors import NotMinimalResolution, NotNegativeDefinite

logger = logging.getLogger(__name__)


class GermFamily(str, Enum):
    SMOOTH = "smooth"
    A = "A"
    D = "D"
    E = "E"
    LOG_TERMINAL_OTHER = "log_terminal_other"
    NOT_LOG_TERMINAL = "not_log_terminal"


@dataclass(frozen=True)
class GermKind:
    family: GermFamily
    n: int
    weights: tuple[int, ...] = ()
    row: int | None = None
    m: int | None = None
    is_rational_double_point: bool = False

    @property
    def is_log_terminal(self) -> bool:
        return self.family is not GermFamily.NOT_LOG_TERMINAL

    @property
    def is_singular(self) -> bool:
        return self.family is not GermFamily.SMOOTH

    @property
    def label(self) -> str:
        weights = ",".join(map(str, self.weights))
        if self.family is GermFamily.SMOOTH:
            text = "smooth point"
        elif self.family is GermFamily.A:
            text = f"A_{self.n} ({weights})"
        elif self.family is GermFamily.D:
            text = f"D_{self.n} (chain {weights})"
        elif self.family is GermFamily.E:
            text = f"E-type row {self.row} (m={self.m})"
        elif self.family is GermFamily.LOG_TERMINAL_OTHER:
            text = "log-terminal, unmatched shape"
        else:
            text = "not log-terminal"
        if self.is_rational_double_point:
            text += ", rational double point"
        return text


@dataclass(frozen=True)
class DiscrepancyResult:
    delta_cycle: Cycle
    fundamental: Cycle
    delta_y: Fraction
    kind: GermKind


def negative_definite_matrix(g: DualGraph) -> IntersectionMatrix:
    m = build_intersection_matrix(g)
    if not is_negative_definite(m):
        raise NotNegativeDefinite("intersection matrix is not negative definite")
    return m


def fundamental_cycle(g: DualGraph) -> Cycle:
    """Laufer's procedure: start from the reduced cycle and add Delta_i while Z.Delta_i > 0."""
    rows = negative_definite_matrix(g).rows()
    n = len(rows)
    z = [1] * n
    while True:
        for i in range(n):
            if sum(rows[i][j] * z[j] for j in range(n)) > 0:
                z[i] += 1
                logger.debug("fundamental cycle: adding %s -> %s", g.ids[i], z)
                break
        else:
            break
    return Cycle(g.ids, tuple(z))


def discrepancy_cycle(g: DualGraph) -> Cycle:
    """Coefficients a_j of Delta_y = f*K_Y - K_X, from A.a = 2 - w."""
    if g.is_smooth:
        return Cycle(g.ids, (Fraction(-1),))
    if not g.is_minimal:
        raise NotMinimalResolution("a (-1)-curve only appears in the smooth blow-up")
    m = negative_definite_matrix(g)
    return solve_linear(m, Cycle(g.ids, tuple(2 - w for w in g.weights)))


def self_intersection_delta(g: DualGraph) -> Fraction:
    """-(Z - Delta_y)^2, before the quasi-log-terminal case split."""
    m = negative_definite_matrix(g)
    excess = fundamental_cycle(g) - discrepancy_cycle(g)
    return -m.pair(excess, excess)


def delta_invariant(g: DualGraph, boundary=None) -> Fraction:
    from singularity_app.core.boundary import quasi_log_terminal_check

    if not quasi_log_terminal_check(g, boundary).is_qlt:
        return Fraction(0)
    return self_intersection_delta(g)


def arithmetic_genus(g: DualGraph, z: Cycle) -> Fraction:
    """Pa(Z) = Z(Z + K_X)/2 + 1 with K_X.Delta_i = w_i - 2."""
    if not z.is_integral():
        raise ValueError("arithmetic genus needs an integral cycle")
    m = build_intersection_matrix(g)
    canonical = sum((z[v] * (w - 2) for v, w in g.vertices), Fraction(0))
    return (m.pair(z, z) + canonical) / 2 + 1


def chain_order(g: DualGraph) -> list[VertexId] | None:
    """Vertices along the chain, starting at the endpoint that comes first in input order."""
    if not g.is_tree or any(g.degree(v) > 2 for v in g.ids):
        return None
    ends = [v for v in g.ids if g.degree(v) <= 1]
    return nx.shortest_path(g.nx_graph, ends[0], ends[-1])


def star_arms(g: DualGraph) -> tuple[VertexId, list[list[VertexId]]] | None:
    """Center and arms (each listed near-to-far) of a tree with one branch vertex."""
    if not g.is_tree:
        return None
    branch = [v for v in g.ids if g.degree(v) >= 3]
    if len(branch) != 1 or g.degree(branch[0]) != 3:
        return None
    center = branch[0]
    rest = g.nx_graph.copy()
    rest.remove_node(center)
    arms = []
    for start in g.neighbours(center):
        tips = [v for v in nx.node_connected_component(rest, start) if v != start and rest.degree[v] <= 1]
        arms.append(nx.shortest_path(rest, start, tips[0]) if tips else [start])
    return center, arms


def d_shape_order(g: DualGraph) -> list[VertexId] | None:
    """Chain far end first, branch vertex n-2, then the two weight-2 forks n-1, n."""
    star = star_arms(g)
    if star is None:
        return None
    center, arms = star
    forks = [arm for arm in arms if len(arm) == 1 and g.weight(arm[0]) == 2]
    if len(forks) < 2:
        return None
    if len(forks) == 3:
        chain_arm, forks = forks[0], forks[1:]
    else:
        chain_arm = next(arm for arm in arms if arm not in forks)
    return list(reversed(chain_arm)) + [center, forks[0][0], forks[1][0]]


def match_etype(g: DualGraph) -> tuple[int, int] | None:
    """(row, m) of the appendix family whose star shape matches g, if any."""
    star = star_arms(g)
    if star is None:
        return None
    center, arms = star
    short = [arm for arm in arms if len(arm) == 1 and g.weight(arm[0]) == 2]
    if len(short) != 1:
        return None
    others = [tuple(g.weight(v) for v in reversed(arm)) for arm in arms if arm is not short[0]]
    for row in APPENDIX_TABLE:
        if (row.arm1, row.arm2) in ((others[0], others[1]), (others[1], others[0])):
            return row.row, g.weight(center)
    return None


def classify(g: DualGraph) -> GermKind:
    negative_definite_matrix(g)
    if g.is_smooth:
        return GermKind(GermFamily.SMOOTH, 1, (1,))
    a = discrepancy_cycle(g)
    rdp = all(v == 0 for v in a.values)
    if any(v >= 1 for v in a.values):
        return GermKind(GermFamily.NOT_LOG_TERMINAL, len(g), g.weights)

    order = chain_order(g)
    if order is not None:
        return GermKind(GermFamily.A, len(g), tuple(g.weight(v) for v in order), is_rational_double_point=rdp)
    order = d_shape_order(g)
    if order is not None:
        chain = tuple(g.weight(v) for v in order[:-2])
        return GermKind(GermFamily.D, len(g), chain, is_rational_double_point=rdp)
    match = match_etype(g)
    if match is not None:
        row, m = match
        return GermKind(GermFamily.E, len(g), g.weights, row=row, m=m, is_rational_double_point=rdp)

    logger.warning("log-terminal graph %s matches no A/D/E shape", g.weights)
    return GermKind(GermFamily.LOG_TERMINAL_OTHER, len(g), g.weights, is_rational_double_point=rdp)


def analyse_germ(g: DualGraph) -> DiscrepancyResult:
    return DiscrepancyResult(
        delta_cycle=discrepancy_cycle(g),
        fundamental=fundamental_cycle(g),
        delta_y=delta_invariant(g),
        kind=classify(g),
    )
