from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singularity_app.core.boundary import BoundaryData, CurveGerm
from singularity_app.core.continuants import an_delta_closed
from singularity_app.core.cycles import (GermFamily, analyse_germ, arithmetic_genus, chain_order, classify,
                                         d_shape_order, delta_invariant, discrepancy_cycle,
                                         fundamental_cycle, self_intersection_delta)
from singularity_app.core.dualgraph import Cycle, DualGraph, build_intersection_matrix
from singularity_app.core.errors import NotMinimalResolution, NotNegativeDefinite
from singularity_app.core.etypes import CENTER_ID, ETypeSpec, arm_vertex_id, build_etype_graph
from strategies import dominant_graphs


def test_fundamental_cycle_of_rdp(d4):
    assert fundamental_cycle(d4).as_dict() == {"1": 1, "2": 2, "3": 1, "4": 1}
    assert fundamental_cycle(DualGraph.chain([2, 2, 2])).values == (1, 1, 1)


def test_fundamental_cycle_of_e8():
    e8 = build_etype_graph(ETypeSpec(8, 2))
    z = fundamental_cycle(e8)
    assert z[CENTER_ID] == 6
    assert [z[arm_vertex_id(1, p)] for p in range(1, 5)] == [5, 4, 3, 2]
    assert [z[arm_vertex_id(2, p)] for p in range(1, 3)] == [4, 2]
    assert z[arm_vertex_id(3, 1)] == 3


def test_fundamental_cycle_is_anti_nef(nlt_star):
    m = build_intersection_matrix(nlt_star)
    z = fundamental_cycle(nlt_star)
    assert all(v <= 0 for v in m.apply(z).values)


def test_discrepancy(a2_23, smooth, nlt_star):
    assert discrepancy_cycle(a2_23).values == (Fraction(1, 5), Fraction(2, 5))
    assert discrepancy_cycle(smooth).values == (-1,)
    assert discrepancy_cycle(nlt_star)["c"] == 1
    assert discrepancy_cycle(nlt_star)["l1"] == Fraction(1, 2)


def test_discrepancy_needs_minimal_resolution():
    with pytest.raises(NotMinimalResolution):
        discrepancy_cycle(DualGraph.chain([1, 2]))


def test_not_negative_definite_is_rejected():
    with pytest.raises(NotNegativeDefinite):
        fundamental_cycle(DualGraph.chain([1, 1]))
    with pytest.raises(NotNegativeDefinite):
        classify(DualGraph.chain([1, 1]))


@pytest.mark.parametrize("weights, delta", [
    ([2], Fraction(2)),
    ([3], Fraction(4, 3)),
    ([2, 3], Fraction(7, 5)),
    ([2, 2, 2], Fraction(2)),
])
def test_delta_on_chains(weights, delta):
    g = DualGraph.chain(weights)
    assert delta_invariant(g) == delta
    assert an_delta_closed(weights) == delta


def test_delta_special_germs(smooth, d4, nlt_star):
    assert delta_invariant(smooth) == 4
    assert delta_invariant(d4) == 2
    assert delta_invariant(nlt_star) == 0


def test_delta_is_zero_when_boundary_breaks_qlt(smooth):
    boundary = BoundaryData((CurveGerm.create(1, {"E": 1}),))
    assert delta_invariant(smooth, boundary) == 0
    assert self_intersection_delta(smooth) == 4


def test_arithmetic_genus(d4, nlt_star):
    assert arithmetic_genus(d4, fundamental_cycle(d4)) == 0
    assert arithmetic_genus(nlt_star, fundamental_cycle(nlt_star)) == 0
    with pytest.raises(ValueError):
        arithmetic_genus(d4, Cycle.constant(d4.ids, Fraction(1, 2)))


def test_classify(a2_23, d4, smooth, nlt_star):
    kind = classify(a2_23)
    assert kind.family is GermFamily.A
    assert kind.label == "A_2 (2,3)"
    assert not kind.is_rational_double_point

    kind = classify(d4)
    assert kind.family is GermFamily.D
    assert kind.weights == (2, 2)
    assert kind.is_rational_double_point

    assert classify(smooth).family is GermFamily.SMOOTH
    assert not classify(smooth).is_singular
    assert classify(nlt_star).family is GermFamily.NOT_LOG_TERMINAL
    assert not classify(nlt_star).is_log_terminal


def test_chain_orders_start_at_first_endpoint():
    g = DualGraph.from_lists([("b", 3), ("a", 2), ("c", 4)], [("a", "b"), ("b", "c")])
    assert chain_order(g) == ["a", "b", "c"]
    assert classify(g).weights == (2, 3, 4)


def test_d_shape_order():
    g = DualGraph.d_shape([3, 4, 2])
    assert d_shape_order(g) == ["1", "2", "3", "4", "5"]
    assert classify(g).weights == (3, 4, 2)


@pytest.mark.parametrize("row", range(1, 16))
def test_classify_etype(row):
    kind = classify(build_etype_graph(ETypeSpec(row, 3)))
    assert kind.family is GermFamily.E
    assert (kind.row, kind.m) == (row, 3)


def test_analyse_germ(a1_3):
    result = analyse_germ(a1_3)
    assert result.delta_cycle.values == (Fraction(1, 3),)
    assert result.fundamental.values == (1,)
    assert result.delta_y == Fraction(4, 3)
    assert result.kind.label == "A_1 (3)"


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(2, 10), min_size=1, max_size=8))
def test_chain_delta_in_range(weights):
    g = DualGraph.chain(weights)
    delta = delta_invariant(g)
    if all(w == 2 for w in weights):
        assert delta == 2
    else:
        assert 0 < delta < 2
    assert delta == an_delta_closed(weights)


@settings(max_examples=60, deadline=None)
@given(dominant_graphs(minimal=True))
def test_minimal_discrepancies_exceed_minus_one(g):
    a = discrepancy_cycle(g)
    assert all(v > -1 for v in a.values)
    assert a.is_effective()


def test_classify_row3_star_at_m2():
    g = DualGraph.from_lists([("c", 2), ("p", 3), ("q", 3), ("r", 2)], [("c", "p"), ("c", "q"), ("c", "r")])
    kind = classify(g)
    assert kind.family is GermFamily.E
    assert (kind.row, kind.m) == (3, 2)
    assert discrepancy_cycle(g)["c"] == Fraction(4, 5)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(2, 10), min_size=2, max_size=8))
def test_d_fork_order_is_immaterial(chain):
    g = DualGraph.d_shape(chain)
    n = len(g)
    swapped = DualGraph(g.vertices[:-2] + (g.vertices[-1], g.vertices[-2]), g.edges)
    reversed_input = DualGraph(tuple(reversed(g.vertices)), g.edges)
    for other in (swapped, reversed_input):
        assert classify(other) == classify(g)
        assert delta_invariant(other) == delta_invariant(g)
        assert discrepancy_cycle(other).as_dict() == discrepancy_cycle(g).as_dict()
    a = discrepancy_cycle(g)
    assert a[str(n - 1)] == a[str(n)]
