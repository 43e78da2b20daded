from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singularity_app.core.continuants import (an_aci, an_aci_signed, an_discrepancy_closed,
                                              an_inverse_entry_closed, continuant_a, continuant_d,
                                              dn_closed, dn_inverse_entry_closed, proposition1_holds,
                                              proposition2_holds)
from singularity_app.core.cycles import discrepancy_cycle
from singularity_app.core.dualgraph import DualGraph, build_intersection_matrix, inverse_entry

chains = st.lists(st.integers(2, 10), min_size=1, max_size=10)
d_chains = st.lists(st.integers(2, 10), min_size=2, max_size=8)


def test_conventions():
    assert continuant_a([]) == 1
    assert continuant_a([2]) == -2
    assert continuant_a([2, 3]) == 5
    assert continuant_d([]) == 4
    assert continuant_d([2]) == -4
    assert continuant_d([2, 2]) == 4
    assert continuant_d([3, 2]) == 8


def test_closed_forms_on_a2():
    w = [2, 3]
    assert an_inverse_entry_closed(w, 1, 1) == Fraction(-3, 5)
    assert an_inverse_entry_closed(w, 2, 1) == Fraction(-1, 5)
    assert an_discrepancy_closed(w, 1) == Fraction(1, 5)
    assert an_discrepancy_closed(w, 2) == Fraction(2, 5)
    # endpoints sit exactly at 1 - 1/|det|
    assert an_aci(w, 1) == an_aci(w, 2) == Fraction(4, 5)


def test_closed_forms_on_d_chain_3_2():
    w = [3, 2]
    assert [dn_closed(w, i)[0] for i in range(1, 5)] == [Fraction(1, 2), Fraction(1, 2),
                                                         Fraction(1, 4), Fraction(1, 4)]
    assert dn_closed(w, 3)[1] == Fraction(9, 8)
    assert proposition2_holds(w)


def test_index_out_of_range():
    with pytest.raises(IndexError):
        an_inverse_entry_closed([2, 3], 0, 1)
    with pytest.raises(IndexError):
        dn_closed([2, 2], 5)


@settings(max_examples=80, deadline=None)
@given(chains)
def test_recurrence_and_d_identity(w):
    assert continuant_a(w) == build_intersection_matrix(DualGraph.chain(w)).determinant()
    if len(w) >= 2:
        assert continuant_a(w) == -w[-1] * continuant_a(w[:-1]) - continuant_a(w[:-2])
    assert continuant_d(w) == -4 * continuant_a(list(w) + [1])


@settings(max_examples=60, deadline=None)
@given(chains, st.data())
def test_an_closed_forms_match_solver(w, data):
    g = DualGraph.chain(w)
    m = build_intersection_matrix(g)
    a = discrepancy_cycle(g)
    n = len(w)
    i = data.draw(st.integers(1, n))
    j = data.draw(st.integers(1, n))
    assert an_inverse_entry_closed(w, i, j) == inverse_entry(m, str(i), str(j))
    assert an_discrepancy_closed(w, i) == a[str(i)]
    assert an_aci(w, i) == an_aci_signed(w, i) == a[str(i)] - inverse_entry(m, str(i), str(i))


@settings(max_examples=80, deadline=None)
@given(chains)
def test_proposition1(w):
    assert proposition1_holds(w)


@settings(max_examples=40, deadline=None)
@given(d_chains, st.data())
def test_dn_closed_forms_match_solver(w, data):
    g = DualGraph.d_shape(w)
    m = build_intersection_matrix(g)
    a = discrepancy_cycle(g)
    n = len(w) + 2
    assert m.determinant() == continuant_d(w)
    i = data.draw(st.integers(1, n))
    j = data.draw(st.integers(1, n))
    assert dn_inverse_entry_closed(w, i, j) == inverse_entry(m, str(i), str(j))
    a_i, aci = dn_closed(w, i)
    assert a_i == a[str(i)]
    assert aci == a_i - inverse_entry(m, str(i), str(i))
    assert proposition2_holds(w)
