"""The 15 exceptional log-terminal star families and their printed a_i + c_i values.

A family ``(m; a, b, c; d, e)`` is a center of weight m joined to three arms:
arm1 with weights a, b, c listed far-to-near the center, arm2 with d, e
listed far-to-near, and arm3 a single (-2)-curve.  Each printed value has the
form ``const + coef / x`` where x is an affine function of m.

Printed values per row are stored in the printed order:
center; arm1 far->near; arm2 near->far; arm3.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from math import lcm


@dataclass(frozen=True)
class AffineInX:
    const: F
    coef: F

    def evaluate(self, x: int | F) -> F:
        return self.const + self.coef / x

    def predicted_denominator(self, x: int) -> int:
        """Common denominator of const and coef/x; evaluated values divide it."""
        return lcm(self.const.denominator, self.coef.denominator * x)

    def __str__(self) -> str:
        coef = self.coef
        if coef.denominator == 1:
            tail = f"{coef.numerator}/x"
        else:
            tail = f"{coef.numerator}/({coef.denominator}x)"
        return f"{self.const} + {tail}"


@dataclass(frozen=True)
class TableEntry:
    """One printed value; typographically ambiguous entries carry several readings."""

    printed: str
    readings: tuple[AffineInX, ...]

    @property
    def is_ambiguous(self) -> bool:
        return len(self.readings) > 1


@dataclass(frozen=True)
class TableRow:
    row: int
    arm1: tuple[int, ...]
    arm2: tuple[int, ...]
    x_slope: int
    x_offset: int
    center: TableEntry
    arm1_values: tuple[TableEntry, ...]
    arm2_values: tuple[TableEntry, ...]
    arm3_value: TableEntry

    def x(self, m: int) -> int:
        return self.x_slope * m + self.x_offset

    @property
    def notation(self) -> str:
        arm1 = ",".join(map(str, self.arm1))
        arm2 = ",".join(map(str, self.arm2))
        return f"(m;{arm1};{arm2})"

    @property
    def x_expression(self) -> str:
        return f"{self.x_slope}m{self.x_offset:+d}"

    def entries(self) -> tuple[TableEntry, ...]:
        return (self.center, *self.arm1_values, *self.arm2_values, self.arm3_value)


def _v(printed: str, const, coef) -> TableEntry:
    return TableEntry(printed, (AffineInX(F(const), F(coef)),))


CENTER_T = _v(r"1+\frac5x", 1, 5)
ONE_PLUS_1_OVER_X = _v(r"1+\frac1x", 1, 1)
ONE_PLUS_3_OVER_X = _v(r"1+\frac3x", 1, 3)
ONE_PLUS_7_OVER_X = _v(r"1+\frac7x", 1, 7)
CENTER_O = _v(r"1+\frac{11}x", 1, 11)
CENTER_I = _v(r"1+\frac{29}x", 1, 29)
O_FAR = _v(r"1+\frac1{2x}", 1, F(1, 2))
O_ARM3 = _v(r"1+\frac5{2x}", 1, F(5, 2))
O_LONG_ARM = (O_FAR, _v(r"\frac32+\frac5{2x}", F(3, 2), F(5, 2)), _v(r"\frac32+\frac6x", F(3, 2), 6))
O_ARM2_22 = (_v(r"\frac43+\frac{14}{3x}", F(4, 3), F(14, 3)), ONE_PLUS_1_OVER_X)
I_ARM2_22 = (_v(r"\frac43+\frac{38}{3x}", F(4, 3), F(38, 3)), ONE_PLUS_3_OVER_X)
I_LONG_ARM = (
    ONE_PLUS_1_OVER_X,
    _v(r"\frac85+\frac{22}{5x}", F(8, 5), F(22, 5)),
    _v(r"\frac95+\frac{51}{5x}", F(9, 5), F(51, 5)),
    _v(r"\frac85+\frac{92}{5x}", F(8, 5), F(92, 5)),
)

# Row 6 prints "\frac43+\frac14{3x}": either 4/3 + 14/(3x) or 4/3 + 1/(4*3x).
ROW6_ARM2_NEAR = TableEntry(
    r"\frac43+\frac14{3x}",
    (AffineInX(F(4, 3), F(14, 3)), AffineInX(F(4, 3), F(1, 12))),
)

APPENDIX_TABLE: tuple[TableRow, ...] = (
    TableRow(1, (2, 2), (2, 2), 6, -11, CENTER_T,
             (_v(r"1+\frac1{3x}", 1, F(1, 3)), _v(r"\frac43+\frac2x", F(4, 3), 2)),
             (_v(r"\frac43+\frac2x", F(4, 3), 2), _v(r"1+\frac1{3x}", 1, F(1, 3))),
             ONE_PLUS_1_OVER_X),
    TableRow(2, (2, 2), (3,), 2, -3, _v(r"1+\frac5{3x}", 1, F(5, 3)),
             (_v(r"1+\frac1{9x}", 1, F(1, 9)), _v(r"\frac43+\frac2{3x}", F(4, 3), F(2, 3))),
             (_v(r"1+\frac1{9x}", 1, F(1, 9)),),
             _v(r"1+\frac1{3x}", 1, F(1, 3))),
    TableRow(3, (3,), (3,), 6, -7, CENTER_T,
             (_v(r"1+\frac1{3x}", 1, F(1, 3)),),
             (_v(r"1+\frac1{3x}", 1, F(1, 3)),),
             ONE_PLUS_1_OVER_X),
    TableRow(4, (2, 2, 2), (2, 2), 12, -23, CENTER_O, O_LONG_ARM, O_ARM2_22, O_ARM3),
    TableRow(5, (2, 2, 2), (3,), 12, -19, CENTER_O, O_LONG_ARM, (ONE_PLUS_1_OVER_X,), O_ARM3),
    TableRow(6, (4,), (2, 2), 12, -17, CENTER_O, (O_FAR,), (ROW6_ARM2_NEAR, ONE_PLUS_1_OVER_X), O_ARM3),
    TableRow(7, (4,), (3,), 12, -13, CENTER_O, (O_FAR,), (ONE_PLUS_1_OVER_X,), O_ARM3),
    TableRow(8, (2, 2, 2, 2), (2, 2), 30, -59, CENTER_I, I_LONG_ARM, I_ARM2_22, ONE_PLUS_7_OVER_X),
    TableRow(9, (2, 2, 2, 2), (3,), 30, -49, CENTER_I, I_LONG_ARM, (ONE_PLUS_3_OVER_X,), ONE_PLUS_7_OVER_X),
    TableRow(10, (2, 3), (2, 2), 30, -47, CENTER_I,
             (ONE_PLUS_1_OVER_X, _v(r"\frac65+\frac{22}{5x}", F(6, 5), F(22, 5))),
             I_ARM2_22, ONE_PLUS_7_OVER_X),
    TableRow(11, (2, 3), (3,), 30, -37, CENTER_I,
             (ONE_PLUS_1_OVER_X, _v(r"\frac65+\frac{22}{5x}", F(6, 5), F(22, 5))),
             (ONE_PLUS_3_OVER_X,), ONE_PLUS_7_OVER_X),
    TableRow(12, (3, 2), (2, 2), 30, -53, CENTER_I,
             (ONE_PLUS_1_OVER_X, _v(r"\frac75+\frac{51}{5x}", F(7, 5), F(51, 5))),
             I_ARM2_22, ONE_PLUS_7_OVER_X),
    TableRow(13, (3, 2), (3,), 30, -43, CENTER_I,
             (ONE_PLUS_1_OVER_X, _v(r"\frac75+\frac{51}{5x}", F(7, 5), F(51, 5))),
             (ONE_PLUS_3_OVER_X,), ONE_PLUS_7_OVER_X),
    TableRow(14, (5,), (2, 2), 30, -41, CENTER_I, (ONE_PLUS_1_OVER_X,), I_ARM2_22, ONE_PLUS_7_OVER_X),
    TableRow(15, (5,), (3,), 30, -31, CENTER_I, (ONE_PLUS_1_OVER_X,), (ONE_PLUS_3_OVER_X,), ONE_PLUS_7_OVER_X),
)


def table_row(row: int) -> TableRow:
    for entry in APPENDIX_TABLE:
        if entry.row == row:
            return entry
    raise KeyError(f"no appendix row {row}")
