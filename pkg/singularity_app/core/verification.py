"""The verification sweeps behind ``verify <suite>``.

Each suite returns a SuiteReport made of named checks.  A check records how
many cases it ran and the first few counterexamples; a suite passes when
every check does.  Sweeps run serially in a fixed order so reports are
reproducible for a given seed.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

import networkx as nx
import numpy as np

from singularity_app.config import (DEFAULT_APPENDIX_M_RANGE, DEFAULT_SEED, DEFAULT_TRIALS,
                                    FUNDAMENTAL_COEFFICIENT_BOUND, FUNDAMENTAL_MAX_VERTICES,
                                    FUNDAMENTAL_RANDOM_GRAPHS, FUNDAMENTAL_WEIGHT_RANGE,
                                    PROPOSITION3_M_RANGE)
from singularity_app.core import generators
from singularity_app.core.appendix_table import APPENDIX_TABLE
from singularity_app.core.boundary import lemma3_constant, mu, pullback_excess, quasi_log_terminal_check
from singularity_app.core.continuants import (an_aci, an_delta_closed, an_discrepancy_closed,
                                              an_inverse_entry_closed, continuant_a, continuant_d,
                                              dn_closed, dn_inverse_entry_closed, proposition1_holds,
                                              proposition2_holds)
from singularity_app.core.cycles import (GermFamily, classify, delta_invariant, discrepancy_cycle,
                                         fundamental_cycle)
from singularity_app.core.dualgraph import (DualGraph, build_intersection_matrix, inverse_entry,
                                            is_negative_definite)
from singularity_app.core.errors import InvalidM
from singularity_app.core.etypes import ETypeSpec, build_etype_graph, proposition3_sweep, verify_appendix

logger = logging.getLogger(__name__)

MAX_REPORTED_FAILURES = 5
ATLAS_MAX_VERTICES = 7
SUITES = ("appendix", "continuants", "lemmas", "fundamental")


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.cases += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(describe())


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult]
    parameters: dict[str, object] = field(default_factory=dict)
    details: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def _chain_ids(w) -> list[str]:
    return [str(i) for i in range(1, len(w) + 1)]


def verify_continuants(trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED) -> SuiteReport:
    rng = generators.make_rng(seed)
    conventions = CheckResult("conventions")
    conventions.record(continuant_a([]) == 1, lambda: f"a() = {continuant_a([])}")
    conventions.record(continuant_d([]) == 4, lambda: f"d() = {continuant_d([])}")

    recurrence = CheckResult("recurrence")
    d_identity = CheckResult("d_equals_minus_4_a_with_1")
    a_inverse = CheckResult("an_inverse_entries")
    a_discrepancy = CheckResult("an_discrepancy")
    proposition1 = CheckResult("proposition1")
    d_inverse = CheckResult("dn_inverse_entries")
    d_discrepancy = CheckResult("dn_discrepancy_and_aci")
    proposition2 = CheckResult("proposition2")

    for _ in range(trials):
        w = generators.random_chain(rng)
        g = DualGraph.chain(w)
        matrix = build_intersection_matrix(g)
        det_ok = matrix.determinant() == continuant_a(w)
        if len(w) >= 2:
            det_ok = det_ok and continuant_a(w) == -w[-1] * continuant_a(w[:-1]) - continuant_a(w[:-2])
        recurrence.record(det_ok, lambda: f"chain {w}")
        d_identity.record(continuant_d(w) == -4 * continuant_a(list(w) + [1]), lambda: f"d{tuple(w)}")

        i, j = (int(x) for x in rng.integers(1, len(w) + 1, size=2))
        computed = inverse_entry(matrix, str(i), str(j))
        a_inverse.record(an_inverse_entry_closed(w, i, j) == computed,
                         lambda: f"chain {w} entry ({i},{j}): closed {an_inverse_entry_closed(w, i, j)} vs {computed}")
        a = discrepancy_cycle(g)
        a_discrepancy.record(all(an_discrepancy_closed(w, k) == a[str(k)] for k in range(1, len(w) + 1))
                             and all(an_aci(w, k) == a[str(k)] - inverse_entry(matrix, str(k), str(k))
                                     for k in range(1, len(w) + 1)),
                             lambda: f"chain {w}")
        proposition1.record(proposition1_holds(w), lambda: f"chain {w}")

        dw = generators.random_d_chain(rng)
        dg = DualGraph.d_shape(dw)
        d_matrix = build_intersection_matrix(dg)
        n = len(dw) + 2
        i, j = (int(x) for x in rng.integers(1, n + 1, size=2))
        d_computed = inverse_entry(d_matrix, str(i), str(j))
        d_inverse.record(d_matrix.determinant() == continuant_d(dw)
                         and dn_inverse_entry_closed(dw, i, j) == d_computed,
                         lambda: f"D-chain {dw} entry ({i},{j})")
        da = discrepancy_cycle(dg)
        d_discrepancy.record(
            all(dn_closed(dw, k) == (da[str(k)], da[str(k)] - inverse_entry(d_matrix, str(k), str(k)))
                for k in range(1, n + 1)),
            lambda: f"D-chain {dw}")
        proposition2.record(proposition2_holds(dw), lambda: f"D-chain {dw}")

    checks = [conventions, recurrence, d_identity, a_inverse, a_discrepancy, proposition1,
              d_inverse, d_discrepancy, proposition2]
    return SuiteReport("continuants", checks, {"trials": trials, "seed": seed})


def verify_lemmas(trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED) -> SuiteReport:
    rng = generators.make_rng(seed)
    delta_bounds = CheckResult("lemma2_delta_bounds")
    chain_delta = CheckResult("chain_delta_identity")
    lemma1 = CheckResult("lemma1_mu_below_one")
    pullbacks = CheckResult("pullback_excess_nonnegative")
    lemma3 = CheckResult("lemma3_c_at_most_half")

    germs: list[DualGraph] = [DualGraph.smooth_point()]
    for _ in range(trials):
        germs.append(DualGraph.chain(generators.random_chain(rng)))
        germs.append(DualGraph.d_shape(generators.random_d_chain(rng)))
    for entry in APPENDIX_TABLE:
        for m in range(PROPOSITION3_M_RANGE[0], PROPOSITION3_M_RANGE[1] + 1):
            try:
                germs.append(build_etype_graph(ETypeSpec(entry.row, m)))
            except InvalidM:
                continue

    for g in germs:
        kind = classify(g)
        delta = delta_invariant(g)
        if kind.family is GermFamily.SMOOTH:
            ok = delta == 4
        elif kind.is_rational_double_point:
            ok = delta == 2
        else:
            ok = 0 < delta < 2
        delta_bounds.record(ok, lambda: f"{kind.label}: delta_y = {delta}")
        if kind.family is GermFamily.A:
            chain_delta.record(delta == an_delta_closed(kind.weights), lambda: f"{kind.label}: delta_y = {delta}")

    for _ in range(trials):
        g, boundary = generators.random_qlt_instance(rng)
        qlt = quasi_log_terminal_check(g, boundary)
        value = mu(g, boundary)
        lemma1.record(qlt.is_qlt and value < 1, lambda: f"{g.weights}: qlt={qlt.is_qlt} mu={value}")
        for curve in boundary.curves:
            excess = pullback_excess(g, curve)
            pullbacks.record(excess.is_effective(), lambda: f"{g.weights}: {curve.incidence} -> {excess.values}")

        instance = generators.random_lemma3_instance(rng)
        constant = lemma3_constant(instance.germ, instance.boundary, instance.d_components, instance.delta)
        lemma3.record(constant.hypothesis_holds and 0 < constant.value <= Fraction(1, 2),
                      lambda: f"{instance.germ.weights}: c={constant.value} at {constant.attained_at}")

    return SuiteReport("lemmas", [delta_bounds, chain_delta, lemma1, pullbacks, lemma3],
                       {"trials": trials, "seed": seed}, {"germs": len(germs)})


def verify_appendix_suite(m_range: tuple[int, int] = DEFAULT_APPENDIX_M_RANGE) -> SuiteReport:
    report = verify_appendix(m_range)
    table = CheckResult("appendix_table")
    denominators = CheckResult("denominators_divide_prediction")
    for cell in report.cells:
        table.record(cell.passed, lambda: f"row {cell.row}, m={cell.m}: {cell.detail}")
        if cell.status == "pass":
            denominators.record(cell.denominators_divide,
                                lambda: f"row {cell.row}, m={cell.m}: {cell.denominator_mismatches}")
    proposition3 = CheckResult("proposition3")
    for row, m, ok in proposition3_sweep():
        proposition3.record(ok, lambda: f"row {row}, m={m}")
    details = {
        "convention": report.convention,
        "confirmed_readings": dict(report.confirmed_readings),
        "skipped": [f"row {cell.row}, m={cell.m}: {cell.detail}" for cell in report.skipped],
    }
    return SuiteReport("appendix", [table, denominators, proposition3], {"m_range": list(m_range)}, details)


@lru_cache(maxsize=None)
def _search_grid(n: int, bound: int) -> np.ndarray:
    """Every vector in {1..bound}^n, in lexicographic order."""
    return np.array(list(itertools.product(range(1, bound + 1), repeat=n)), dtype=np.int64)


def brute_force_fundamental(g: DualGraph, bound: int = FUNDAMENTAL_COEFFICIENT_BOUND) -> tuple[int, ...] | None:
    """Smallest cycle with all coefficients in 1..bound and Z.Delta_i <= 0, by exhaustive search.

    None when no such cycle lies in the box or the candidates have no least element.
    """
    matrix = np.array(build_intersection_matrix(g).rows(), dtype=np.int64)
    grid = _search_grid(len(g), bound)
    candidates = grid[np.all(grid @ matrix <= 0, axis=1)]
    if len(candidates) == 0:
        return None
    smallest = candidates[np.argmin(candidates.sum(axis=1))]
    if not np.all(candidates >= smallest):
        return None
    return tuple(int(x) for x in smallest)


def _weighted(graph: nx.Graph, weights: Iterable[int]) -> DualGraph:
    ids = {node: str(i) for i, node in enumerate(graph.nodes, start=1)}
    return DualGraph.from_lists(zip(ids.values(), weights), ((ids[a], ids[b]) for a, b in graph.edges))


def connected_shapes(max_vertices: int) -> list[nx.Graph]:
    """One graph per isomorphism class of connected graphs on 1..max_vertices vertices."""
    if max_vertices > ATLAS_MAX_VERTICES:
        raise ValueError(f"the graph atlas stops at {ATLAS_MAX_VERTICES} vertices")
    return [shape for shape in nx.graph_atlas_g()
            if 1 <= shape.number_of_nodes() <= max_vertices and nx.is_connected(shape)]


def _graphs_on(shape: nx.Graph, weight_range: tuple[int, int]) -> Iterable[DualGraph]:
    low, high = weight_range
    for weights in itertools.product(range(low, high + 1), repeat=shape.number_of_nodes()):
        yield _weighted(shape, weights)


def _random_graph(rng: np.random.Generator, n: int, weight_range: tuple[int, int]) -> DualGraph | None:
    shape = nx.gnp_random_graph(n, 0.5, seed=int(rng.integers(2 ** 31)))
    if not nx.is_connected(shape):
        return None
    return _weighted(shape, generators.random_weights(rng, n, weight_range))


def verify_fundamental(trials: int = FUNDAMENTAL_RANDOM_GRAPHS, seed: int = DEFAULT_SEED,
                       max_vertices: int = FUNDAMENTAL_MAX_VERTICES,
                       weight_range: tuple[int, int] = FUNDAMENTAL_WEIGHT_RANGE,
                       bound: int = FUNDAMENTAL_COEFFICIENT_BOUND) -> SuiteReport:
    """Laufer's procedure against the brute-force search.

    Every connected graph with at most ``max_vertices`` vertices is enumerated
    up to isomorphism, with every weight assignment in ``weight_range``; on top
    of that ``trials`` random graphs with ``max_vertices + 1`` vertices are
    drawn.  Graphs whose fundamental cycle has a coefficient above ``bound``
    lie outside the search box and are counted, not compared.
    """
    rng = generators.make_rng(seed)
    check = CheckResult("laufer_equals_brute_force")
    exhaustive = itertools.chain.from_iterable(_graphs_on(shape, weight_range)
                                               for shape in connected_shapes(max_vertices))
    sampled = (_random_graph(rng, max_vertices + 1, weight_range) for _ in range(trials))
    not_definite = beyond_bound = 0
    for g in itertools.chain(exhaustive, sampled):
        if g is None:
            continue
        if not is_negative_definite(build_intersection_matrix(g)):
            not_definite += 1
            continue
        laufer = tuple(int(z) for z in fundamental_cycle(g).values)
        if max(laufer) > bound:
            beyond_bound += 1
            continue
        brute = brute_force_fundamental(g, bound)
        check.record(laufer == brute, lambda: f"{g.weights} edges {sorted(map(sorted, g.edges))}: "
                                              f"Laufer {laufer}, search {brute}")
    logger.debug("fundamental suite: %d compared, %d not negative definite, %d beyond the search bound",
                 check.cases, not_definite, beyond_bound)
    return SuiteReport("fundamental", [check],
                       {"trials": trials, "seed": seed, "max_vertices": max_vertices, "bound": bound},
                       {"not_negative_definite": not_definite, "beyond_search_bound": beyond_bound})


def run_suite(suite: str, m_range: tuple[int, int] | None = None, trials: int | None = None,
              seed: int | None = None) -> SuiteReport:
    seed = DEFAULT_SEED if seed is None else seed
    if suite == "appendix":
        return verify_appendix_suite(m_range or DEFAULT_APPENDIX_M_RANGE)
    if suite == "continuants":
        return verify_continuants(DEFAULT_TRIALS if trials is None else trials, seed)
    if suite == "lemmas":
        return verify_lemmas(DEFAULT_TRIALS if trials is None else trials, seed)
    if suite == "fundamental":
        return verify_fundamental(FUNDAMENTAL_RANDOM_GRAPHS if trials is None else trials, seed)
    raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
