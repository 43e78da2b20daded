from __future__ import annotations

import re
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from singularity_app.core.errors import GermParseError

if TYPE_CHECKING:
    from singularity_app.core.dualgraph import Cycle

RATIONAL_PATTERN = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(value: Any, path: str) -> Fraction:
    """Exact rational from "p/q" or an integer; anything else is a parse error at ``path``."""
    if isinstance(value, bool):
        raise GermParseError(f"expected a rational, got {value!r}", location=path)
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str) or not RATIONAL_PATTERN.match(value.strip()):
        raise GermParseError(f"malformed rational {value!r}", location=path)
    numerator, _, denominator = value.strip().partition("/")
    if denominator and int(denominator) == 0:
        raise GermParseError(f"malformed rational {value!r} (zero denominator)", location=path)
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_cycle(cycle: Cycle) -> dict[str, str]:
    """{vertex id: "p/q"} in vertex order."""
    return {vid: format_rational(v) for vid, v in cycle.items()}
