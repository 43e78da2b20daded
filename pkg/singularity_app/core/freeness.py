"""Sufficient conditions for the adjoint system |M| to be free at y.

The criterion is one-sided: a negative answer is reported as NotDetermined
together with the inequality that failed and by how much.  It never claims
that y is a base point.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction

from singularity_app.core.boundary import BoundaryData, mu, quasi_log_terminal_check
from singularity_app.core.cycles import GermFamily, GermKind, classify, self_intersection_delta
from singularity_app.core.dualgraph import DualGraph
from singularity_app.core.errors import InvalidBoundary

logger = logging.getLogger(__name__)

ADJOINT_TARGET = "|M|"
ROUNDUP_TARGET = "|K_Y + ceil(D)|"

D_SQUARED_CONDITION = "D^2 > (1-mu)^2 delta_y"
DC_CONDITION = "DC >= (1-mu) delta_y/2"
POSITIVITY_CONDITION = "D^2 > 0"
MISSING_MIN_DC = "MissingMinDC"


class Outcome(str, Enum):
    FREE = "Free"
    NOT_DETERMINED = "NotDetermined"


@dataclass(frozen=True)
class FreenessProblem:
    germ: DualGraph
    d_squared: Fraction
    boundary: BoundaryData = field(default_factory=BoundaryData)
    min_dc: Fraction | None = None


@dataclass(frozen=True)
class FreenessReason:
    kind: GermKind
    is_qlt: bool
    mu: Fraction | None
    delta_y: Fraction
    d_squared: Fraction
    min_dc: Fraction | None
    d_squared_threshold: Fraction
    dc_threshold: Fraction
    path: str | None = None
    failed: str | None = None
    margin: Fraction | None = None
    caveats: tuple[str, ...] = ()
    target: str = ADJOINT_TARGET


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    reason: FreenessReason

    @property
    def is_free(self) -> bool:
        return self.outcome is Outcome.FREE

    def summary(self) -> str:
        reason = self.reason
        if self.is_free:
            return f"Free: {reason.target} is free at y via {reason.path}"
        if reason.failed == MISSING_MIN_DC:
            return "NotDetermined: min DC not supplied and the non-A_n clause does not apply"
        if reason.failed in (D_SQUARED_CONDITION, POSITIVITY_CONDITION):
            text = "NotDetermined: D^2 not strictly greater than the threshold"
        else:
            text = "NotDetermined: min DC below (1-mu) delta_y/2"
        return f"{text} ({reason.failed}, margin {reason.margin})"


def _uses_non_an_clause(kind: GermKind) -> bool:
    return kind.family in (GermFamily.D, GermFamily.E)


def check_freeness(p: FreenessProblem) -> Verdict:
    g = p.germ
    kind = classify(g)
    qlt = quasi_log_terminal_check(g, p.boundary)
    d_squared = Fraction(p.d_squared)
    min_dc = None if p.min_dc is None else Fraction(p.min_dc)

    caveats = []
    if d_squared <= 0:
        logger.warning("D^2 = %s <= 0: the nef-and-big hypothesis cannot hold", d_squared)
        caveats.append("D^2 <= 0, so M - (K_Y + B) is not nef and big")

    if not qlt.is_qlt:
        base = FreenessReason(kind, False, None, Fraction(0), d_squared, min_dc,
                              Fraction(0), Fraction(0), caveats=tuple(caveats))
        if d_squared > 0:
            return Verdict(Outcome.FREE, replace(base, path="delta_y = 0 (not quasi-log-terminal)"))
        return Verdict(Outcome.NOT_DETERMINED, replace(base, failed=POSITIVITY_CONDITION, margin=d_squared))

    mu_value = mu(g, p.boundary)
    delta_y = self_intersection_delta(g)
    d2_threshold = (1 - mu_value) ** 2 * delta_y
    dc_threshold = (1 - mu_value) * delta_y / 2
    base = FreenessReason(kind, True, mu_value, delta_y, d_squared, min_dc,
                          d2_threshold, dc_threshold, caveats=tuple(caveats))
    logger.debug("freeness: kind=%s mu=%s delta_y=%s thresholds=(%s, %s)",
                 kind.label, mu_value, delta_y, d2_threshold, dc_threshold)

    if d_squared <= d2_threshold:
        return Verdict(Outcome.NOT_DETERMINED,
                       replace(base, failed=D_SQUARED_CONDITION, margin=d_squared - d2_threshold))
    if _uses_non_an_clause(kind):
        return Verdict(Outcome.FREE, replace(base, path="non-A_n clause"))
    if min_dc is None:
        return Verdict(Outcome.NOT_DETERMINED, replace(base, failed=MISSING_MIN_DC))
    if min_dc >= dc_threshold:
        return Verdict(Outcome.FREE, replace(base, path="DC condition"))
    return Verdict(Outcome.NOT_DETERMINED, replace(base, failed=DC_CONDITION, margin=min_dc - dc_threshold))


def check_corollary(g: DualGraph, d_rounding: BoundaryData, d_squared: Fraction,
                    min_dc: Fraction | None = None) -> Verdict:
    """Freeness of |K_Y + ceil(D)| at y, with B = ceil(D) - D."""
    for curve in d_rounding.curves:
        if not 0 <= curve.coefficient < 1:
            raise InvalidBoundary(f"fractional part {curve.coefficient} is outside [0, 1)", location=curve.label)
    verdict = check_freeness(FreenessProblem(g, d_squared, d_rounding, min_dc))
    return replace(verdict, reason=replace(verdict.reason, target=ROUNDUP_TARGET))
