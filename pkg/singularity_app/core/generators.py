"""Seeded random instances for the verification sweeps."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from singularity_app.config import (MAX_BOUNDARY_CURVES, MAX_CHAIN_LENGTH, MAX_D_CHAIN_LENGTH,
                                    MAX_DENOMINATOR, MAX_INCIDENCE, PROPOSITION3_M_RANGE, WEIGHT_RANGE)
from singularity_app.core.appendix_table import APPENDIX_TABLE
from singularity_app.core.boundary import BoundaryData, CurveGerm, boundary_excess
from singularity_app.core.cycles import DiscrepancyResult, analyse_germ, discrepancy_cycle, negative_definite_matrix
from singularity_app.core.dualgraph import Cycle, DualGraph, solve_linear
from singularity_app.core.errors import InvalidM
from singularity_app.core.etypes import ETypeSpec, build_etype_graph

logger = logging.getLogger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_weights(rng: np.random.Generator, length: int,
                   weight_range: tuple[int, int] = WEIGHT_RANGE) -> list[int]:
    low, high = weight_range
    return [int(w) for w in rng.integers(low, high + 1, size=length)]


def random_chain(rng: np.random.Generator, max_length: int = MAX_CHAIN_LENGTH) -> list[int]:
    return random_weights(rng, int(rng.integers(1, max_length + 1)))


def random_d_chain(rng: np.random.Generator, max_length: int = MAX_D_CHAIN_LENGTH) -> list[int]:
    """Chain part w_1..w_k (k >= 2) of a D-graph."""
    return random_weights(rng, int(rng.integers(2, max_length + 1)))


def random_etype_spec(rng: np.random.Generator,
                      m_range: tuple[int, int] = PROPOSITION3_M_RANGE) -> ETypeSpec:
    row = int(rng.integers(1, len(APPENDIX_TABLE) + 1))
    return ETypeSpec(row, int(rng.integers(m_range[0], m_range[1] + 1)))


def random_rational(rng: np.random.Generator, max_denominator: int = MAX_DENOMINATOR) -> Fraction:
    """A rational in [0, 1)."""
    q = int(rng.integers(1, max_denominator + 1))
    return Fraction(int(rng.integers(0, q)), q)


def random_boundary(rng: np.random.Generator, g: DualGraph,
                    max_curves: int = MAX_BOUNDARY_CURVES) -> BoundaryData:
    curves = []
    for k in range(int(rng.integers(0, max_curves + 1))):
        support = int(rng.integers(1, min(2, len(g)) + 1))
        chosen = rng.choice(len(g), size=support, replace=False)
        incidence = {g.ids[int(i)]: int(rng.integers(1, MAX_INCIDENCE + 1)) for i in chosen}
        curves.append(CurveGerm.create(random_rational(rng), incidence, label=f"B{k}"))
    return BoundaryData(tuple(curves))


def random_germ(rng: np.random.Generator) -> DualGraph:
    """A log-terminal germ: chain, D-graph, E-type star or the smooth point."""
    shape = int(rng.integers(0, 10))
    if shape == 0:
        return DualGraph.smooth_point()
    if shape < 5:
        return DualGraph.chain(random_chain(rng))
    if shape < 8:
        return DualGraph.d_shape(random_d_chain(rng))
    while True:
        try:
            return build_etype_graph(random_etype_spec(rng))
        except InvalidM:
            continue


def qlt_rescale(g: DualGraph, boundary: BoundaryData) -> BoundaryData:
    """Scale B down until every coefficient of Delta_y + B^exc is below 1."""
    a = discrepancy_cycle(g)
    excess = boundary_excess(g, boundary)
    factor = Fraction(1)
    for vid in g.ids:
        if a[vid] + excess[vid] >= 1:
            factor = min(factor, (1 - a[vid]) / (2 * excess[vid]))
    return boundary if factor == 1 else boundary.scaled(factor)


def random_qlt_instance(rng: np.random.Generator) -> tuple[DualGraph, BoundaryData]:
    g = random_germ(rng)
    return g, qlt_rescale(g, random_boundary(rng, g))


@dataclass(frozen=True)
class Lemma3Instance:
    germ: DualGraph
    boundary: BoundaryData
    d_components: BoundaryData
    delta: DiscrepancyResult


def random_lemma3_instance(rng: np.random.Generator) -> Lemma3Instance:
    """A qlt germ with D_y chosen so that d_j' + a_j + b_j' = N_j is an integer >= 2.

    D_y has one curve per vertex meeting only that vertex; its coefficients
    v = M N - (w - 2) - B.Delta solve the pullback equations, where M = -A
    and N is a positive multiple of |det A| M^-1 1.
    """
    g, boundary = random_qlt_instance(rng)
    matrix = negative_definite_matrix(g)
    det = abs(matrix.determinant())
    base = solve_linear(matrix, Cycle.constant(g.ids, -1)) * det
    meets = Cycle.zero(g.ids)
    for curve in boundary.curves:
        meets = meets + curve.incidence_cycle(g) * curve.coefficient

    lowest = max(w - 2 + meets[v] for v, w in g.vertices) + 1
    scale = max(2, math.ceil(lowest / det)) + int(rng.integers(0, 3))
    coefficients = {v: scale * det - (w - 2) - meets[v] for v, w in g.vertices}
    d_components = BoundaryData(tuple(
        CurveGerm.create(coefficients[v], {v: 1}, label=f"D{v}") for v in g.ids))
    logger.debug("lemma 3 instance: N=%s", [str(scale * base[v]) for v in g.ids])
    return Lemma3Instance(g, boundary, d_components, analyse_germ(g))
