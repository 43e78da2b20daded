"""Machine-readable report dictionaries and their text rendering.

Reports are plain dicts whose rationals are "p/q" strings, so the same
object is written as JSON for ``--format machine`` and pretty-printed for
text output.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from singularity_app.core.boundary import Lemma3Constant, QltReport
from singularity_app.core.cycles import GermKind
from singularity_app.core.dualgraph import Cycle
from singularity_app.core.freeness import Verdict
from singularity_app.core.verification import SuiteReport
from singularity_app.utils.rationals import format_cycle, format_rational

Report = dict[str, Any]


def _rational(value: Fraction | None) -> str | None:
    return None if value is None else format_rational(value)


def kind_report(kind: GermKind) -> Report:
    return {
        "family": kind.family.value,
        "label": kind.label,
        "n": kind.n,
        "weights": list(kind.weights),
        "row": kind.row,
        "m": kind.m,
        "log_terminal": kind.is_log_terminal,
        "rational_double_point": kind.is_rational_double_point,
    }


def qlt_report(qlt: QltReport) -> Report:
    return {
        "is_qlt": qlt.is_qlt,
        "worst_coefficient": format_rational(qlt.worst_coefficient),
        "integral_part_zero": qlt.integral_part_zero,
        "coefficients": format_cycle(qlt.coefficients),
    }


def invariants_report(kind: GermKind, fundamental: Cycle, discrepancy: Cycle, delta_y: Fraction,
                      mu: Fraction | None, qlt: QltReport, genus: Fraction) -> Report:
    return {
        "command": "invariants",
        "kind": kind_report(kind),
        "fundamental_cycle": format_cycle(fundamental),
        "discrepancy": format_cycle(discrepancy),
        "delta_y": format_rational(delta_y),
        "mu": _rational(mu),
        "qlt": qlt_report(qlt),
        "arithmetic_genus": format_rational(genus),
    }


def verdict_report(verdict: Verdict, lemma3: Lemma3Constant | None = None,
                   p: Fraction | None = None) -> Report:
    reason = verdict.reason
    report: Report = {
        "command": "freeness",
        "outcome": verdict.outcome.value,
        "summary": verdict.summary(),
        "target": reason.target,
        "path": reason.path,
        "failed": reason.failed,
        "margin": _rational(reason.margin),
        "kind": kind_report(reason.kind),
        "is_qlt": reason.is_qlt,
        "mu": _rational(reason.mu),
        "delta_y": format_rational(reason.delta_y),
        "d_squared": format_rational(reason.d_squared),
        "min_dc": _rational(reason.min_dc),
        "thresholds": {
            "d_squared": format_rational(reason.d_squared_threshold),
            "min_dc": format_rational(reason.dc_threshold),
        },
        "caveats": list(reason.caveats),
    }
    if p is not None:
        report["p"] = format_rational(p)
    if lemma3 is not None:
        report["lemma3"] = {
            "c": format_rational(lemma3.value),
            "attained_at": lemma3.attained_at,
            "hypothesis_holds": lemma3.hypothesis_holds,
        }
    return report


def suite_report(report: SuiteReport) -> Report:
    return {
        "command": "verify",
        "suite": report.suite,
        "passed": report.passed,
        "parameters": report.parameters,
        "details": report.details,
        "checks": {
            check.name: {"passed": check.passed, "cases": check.cases,
                         "failure_count": check.failure_count, "failures": list(check.failures)}
            for check in report.checks
        },
    }


def _cycle_text(cycle: dict[str, str]) -> str:
    return ", ".join(f"{vid}: {value}" for vid, value in cycle.items())


def render_text(report: Report) -> str:
    command = report.get("command")
    lines: list[str] = []
    if command in ("invariants", "classify"):
        lines.append(f"kind: {report['kind']['label']}")
    if command == "invariants":
        qlt = report["qlt"]
        lines += [
            f"fundamental cycle Z: {_cycle_text(report['fundamental_cycle'])}",
            f"discrepancy Delta_y: {_cycle_text(report['discrepancy'])}",
            f"delta_y: {report['delta_y']}",
            f"mu(B, y): {report['mu'] if report['mu'] is not None else 'undefined (not log-terminal)'}",
            f"quasi-log-terminal: {'yes' if qlt['is_qlt'] else 'no'} "
            f"(worst coefficient {qlt['worst_coefficient']}, [B] = 0: {qlt['integral_part_zero']})",
            f"Pa(Z): {report['arithmetic_genus']}",
        ]
    elif command == "mu":
        lines.append(f"mu(B, y): {report['mu']}")
        lines.append(f"B exceptional part: {_cycle_text(report['boundary_excess'])}")
        if "p" in report:
            lines.append(f"p = mu(D, y): {report['p']}")
    elif command == "freeness":
        lines.append(report["summary"])
        lines.append(f"kind: {report['kind']['label']}")
        lines.append(f"mu: {report['mu'] if report['mu'] is not None else '-'}   delta_y: {report['delta_y']}")
        lines.append(f"D^2 = {report['d_squared']} vs threshold (1-mu)^2 delta_y = {report['thresholds']['d_squared']}")
        lines.append(f"min DC = {report['min_dc'] if report['min_dc'] is not None else 'not supplied'}"
                     f" vs threshold (1-mu) delta_y/2 = {report['thresholds']['min_dc']}")
        if "p" in report:
            lines.append(f"p = mu(D, y): {report['p']}")
        if "lemma3" in report:
            lemma3 = report["lemma3"]
            lines.append(f"Lemma 3 constant c = {lemma3['c']} at {lemma3['attained_at']}"
                         f" (integrality hypothesis {'holds' if lemma3['hypothesis_holds'] else 'fails'})")
        lines += [f"caveat: {caveat}" for caveat in report["caveats"]]
    elif command == "verify":
        lines.append(f"suite {report['suite']}: {'PASS' if report['passed'] else 'FAIL'}")
        for name, check in report["checks"].items():
            status = "pass" if check["passed"] else f"FAIL ({check['failure_count']})"
            lines.append(f"  {name}: {status}, {check['cases']} cases")
            lines += [f"    {failure}" for failure in check["failures"]]
        for key, value in sorted(report["details"].items()):
            lines.append(f"  {key}: {value}")
    return "\n".join(lines)
