"""Closed forms for chains (type A_n) and D-shaped graphs (type D_n).

Indices are 1-based as in the usual matrix display: a chain is w_1..w_n; a
D-graph has chain w_1..w_{n-2} with the two (-2)-forks n-1 and n attached
to vertex n-2.  ``a(...)`` is the determinant of the chain matrix with
diagonal -w_i, ``d(...)`` the determinant of the D-shaped matrix.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

WeightSeq = Sequence[int]


def continuant_a(w: WeightSeq) -> Fraction:
    """a(w_1..w_n) via a(..w_j) = -w_j a(..w_{j-1}) - a(..w_{j-2}); a() = 1."""
    previous, current = 0, 1
    for weight in w:
        previous, current = current, -weight * current - previous
    return Fraction(current)


def continuant_d(w: WeightSeq) -> Fraction:
    """d(w_1..w_k), forks on w_k; d() = 4 and d(w) = -4w + 4."""
    if not w:
        return Fraction(4)
    # expand from the fork end: d(w_i..w_k) = -w_i d(w_{i+1}..w_k) - d(w_{i+2}..w_k)
    after, current = 4, -4 * w[-1] + 4
    for weight in reversed(w[:-1]):
        after, current = current, -weight * current - after
    return Fraction(current)


def _abs_a(w: WeightSeq) -> Fraction:
    return (-1) ** len(w) * continuant_a(w)


def _abs_d(w: WeightSeq) -> Fraction:
    return (-1) ** len(w) * continuant_d(w)


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"index {i} outside 1..{n}")


def an_inverse_entry_closed(w: WeightSeq, i: int, j: int) -> Fraction:
    n = len(w)
    _check_index(i, n)
    _check_index(j, n)
    det = continuant_a(w)
    if j < i:
        value = (-1) ** (i + j) * continuant_a(w[:j - 1]) * continuant_a(w[i:])
    elif j > i:
        value = (-1) ** (i + j) * continuant_a(w[:i - 1]) * continuant_a(w[j:])
    else:
        value = continuant_a(w[:i - 1]) * continuant_a(w[i:])
    return value / det


def an_discrepancy_closed(w: WeightSeq, i: int) -> Fraction:
    n = len(w)
    _check_index(i, n)
    det = continuant_a(w)
    return 1 + ((-1) ** (i + 1) * continuant_a(w[i:]) + (-1) ** (i + n) * continuant_a(w[:i - 1])) / det


def an_aci(w: WeightSeq, i: int) -> Fraction:
    """a_i + c_{i,i} in the absolute-value form."""
    _check_index(i, len(w))
    left, right = _abs_a(w[:i - 1]), _abs_a(w[i:])
    return 1 + ((left - 1) * (right - 1) - 1) / _abs_a(w)


def an_aci_signed(w: WeightSeq, i: int) -> Fraction:
    """a_i + c_{i,i} from the signed forms, with c_{i,i} = -A~_{ii}."""
    return an_discrepancy_closed(w, i) - an_inverse_entry_closed(w, i, i)


def an_delta_closed(w: WeightSeq) -> Fraction:
    """delta_y = 2 - a_1 - a_n on a chain."""
    return 2 - an_discrepancy_closed(w, 1) - an_discrepancy_closed(w, len(w))


def proposition1_holds(w: WeightSeq) -> bool:
    n = len(w)
    det = _abs_a(w)
    for i in range(1, n + 1):
        value = an_aci(w, i)
        if i in (1, n):
            if value != 1 - 1 / det:
                return False
        elif value < 1:
            return False
    return True


def dn_closed(w: WeightSeq, i: int) -> tuple[Fraction, Fraction]:
    """(a_i, a_i + c_{i,i}) on the D-graph with chain w; i = n-1, n are the forks."""
    k = len(w)
    n = k + 2
    _check_index(i, n)
    det = _abs_d(w)
    if i <= k:
        tail = _abs_d(w[i:])
        a_i = 1 - tail / det
        return a_i, 1 + tail * (_abs_a(w[:i - 1]) - 1) / det
    a_fork = Fraction(1, 2) - 2 / det
    return a_fork, 1 + (_abs_a(w[:k - 1]) - 2) / det


def dn_inverse_entry_closed(w: WeightSeq, i: int, j: int) -> Fraction:
    """Entry (i, j) of D^-1 for the D-graph with chain w."""
    k = len(w)
    n = k + 2
    _check_index(i, n)
    _check_index(j, n)
    det = continuant_d(w)
    lo, hi = min(i, j), max(i, j)
    if hi <= k:
        value = (-1) ** (i + j) * continuant_a(w[:lo - 1]) * continuant_d(w[hi:])
    elif lo <= k:
        value = (-1) ** (lo + n - 1) * -2 * continuant_a(w[:lo - 1])
    elif lo == hi:
        value = continuant_a(list(w) + [2])
    else:
        value = continuant_a(w[:k - 1])
    return value / det


def proposition2_holds(w: WeightSeq) -> bool:
    return all(dn_closed(w, i)[1] >= 1 for i in range(1, len(w) + 3))
