from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from typing import Any

from singularity_app.config import DEFAULT_SEED, LOG_FORMAT
from singularity_app.core.boundary import (BoundaryData, boundary_excess, lemma3_constant, mu,
                                           quasi_log_terminal_check)
from singularity_app.core.cycles import (analyse_germ, arithmetic_genus, classify, delta_invariant,
                                         discrepancy_cycle, fundamental_cycle)
from singularity_app.core.document_manager import DocumentManager, GermDocument, dump_report
from singularity_app.core.dualgraph import DualGraph
from singularity_app.core.errors import GermError, MissingDData, MuUndefined
from singularity_app.core.freeness import FreenessProblem, check_corollary, check_freeness
from singularity_app.core.verification import SUITES, run_suite
from singularity_app.cli import reports
from singularity_app.utils.rationals import format_cycle, format_rational

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


def parse_m_range(text: str) -> tuple[int, int]:
    """'A..B' -> (A, B)."""
    low, sep, high = text.partition("..")
    try:
        if not sep:
            raise ValueError
        m_range = (int(low), int(high))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    if m_range[0] > m_range[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return m_range


class SingularityCli:
    def __init__(self, version: str = "1.0.0", release_date: str = "") -> None:
        self.version = version
        self.release_date = release_date
        self.parser = self.build_parser()

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="singularity",
            description="Invariants of surface singularities from resolution dual graphs.")
        parser.add_argument("--version", action="version",
                            version=f"%(prog)s {self.version} ({self.release_date})")
        parser.add_argument("-v", "--verbose", action="store_true", help="log computation steps")

        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--format", choices=("text", "machine"), default="text")
        common.add_argument("--output", help="also save the machine report to this file")

        commands = parser.add_subparsers(dest="command", required=True)
        for name, handler, help_text in (
                ("invariants", self.cmd_invariants, "Z, Delta_y, delta_y, mu, qlt report and Pa(Z)"),
                ("classify", self.cmd_classify, "A_n / D_n / E-type / not log-terminal"),
                ("mu", self.cmd_mu, "mu(B, y), and mu(D, y) when D-data is given"),
                ("freeness", self.cmd_freeness, "evaluate the freeness criterion at y")):
            sub = commands.add_parser(name, parents=[common], help=help_text)
            sub.add_argument("file", help="germ document (JSON)")
            sub.set_defaults(handler=handler)
            if name == "freeness":
                sub.add_argument("--corollary", action="store_true",
                                 help="read the boundary as ceil(D) - D and judge |K_Y + ceil(D)|")

        verify = commands.add_parser("verify", parents=[common], help="run a verification suite")
        verify.add_argument("suite", choices=SUITES)
        verify.add_argument("--m", type=parse_m_range, dest="m_range", help="m range A..B (appendix)")
        verify.add_argument("--trials", type=int, help="number of random cases")
        verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
        verify.set_defaults(handler=self.cmd_verify)
        return parser

    def run(self, argv: list[str] | None = None) -> int:
        args = self.parser.parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                            format=LOG_FORMAT)
        try:
            return args.handler(args)
        except GermError as e:
            print(f"error [{e.code}]: {e.describe()}", file=sys.stderr)
            return EXIT_ERROR

    def load(self, args: argparse.Namespace) -> GermDocument | None:
        success, document, msg = DocumentManager.load_document(args.file)
        if not success:
            print(f"error: {msg}", file=sys.stderr)
        return document

    def emit(self, args: argparse.Namespace, report: dict[str, Any]) -> int:
        if args.format == "machine":
            sys.stdout.write(dump_report(report))
        else:
            print(reports.render_text(report))
        if args.output:
            success, msg = DocumentManager.save_report(args.output, report)
            if not success:
                print(f"error: {msg}", file=sys.stderr)
                return EXIT_ERROR
        return EXIT_OK

    @staticmethod
    def mu_if_defined(g: DualGraph, boundary: BoundaryData) -> Fraction | None:
        try:
            return mu(g, boundary)
        except MuUndefined as e:
            logger.info("mu not reported: %s", e.describe())
            return None

    def cmd_invariants(self, args: argparse.Namespace) -> int:
        document = self.load(args)
        if document is None:
            return EXIT_ERROR
        g = document.graph
        fundamental = fundamental_cycle(g)
        report = reports.invariants_report(
            kind=classify(g),
            fundamental=fundamental,
            discrepancy=discrepancy_cycle(g),
            delta_y=delta_invariant(g, document.boundary),
            mu=self.mu_if_defined(g, document.boundary),
            qlt=quasi_log_terminal_check(g, document.boundary),
            genus=arithmetic_genus(g, fundamental),
        )
        return self.emit(args, report)

    def cmd_classify(self, args: argparse.Namespace) -> int:
        document = self.load(args)
        if document is None:
            return EXIT_ERROR
        return self.emit(args, {"command": "classify", "kind": reports.kind_report(classify(document.graph))})

    def cmd_mu(self, args: argparse.Namespace) -> int:
        document = self.load(args)
        if document is None:
            return EXIT_ERROR
        g = document.graph
        report: dict[str, Any] = {
            "command": "mu",
            "mu": format_rational(mu(g, document.boundary)),
            "boundary_excess": format_cycle(boundary_excess(g, document.boundary)),
        }
        if document.d_data is not None and document.d_data.d_components:
            report["p"] = format_rational(mu(g, document.d_data.d_components))
        return self.emit(args, report)

    def cmd_freeness(self, args: argparse.Namespace) -> int:
        document = self.load(args)
        if document is None:
            return EXIT_ERROR
        if document.d_data is None:
            raise MissingDData("freeness needs a d_data section", location=args.file)
        g, d = document.graph, document.d_data
        if args.corollary:
            verdict = check_corollary(g, document.boundary, d.d_squared, d.min_dc)
        else:
            verdict = check_freeness(FreenessProblem(g, d.d_squared, document.boundary, d.min_dc))

        lemma3 = p = None
        if d.d_components and verdict.reason.is_qlt:
            p = mu(g, d.d_components)
            lemma3 = lemma3_constant(g, document.boundary, d.d_components, analyse_germ(g))
        return self.emit(args, reports.verdict_report(verdict, lemma3=lemma3, p=p))

    def cmd_verify(self, args: argparse.Namespace) -> int:
        logger.debug("verify %s: m=%s trials=%s seed=%s", args.suite, args.m_range, args.trials, args.seed)
        result = run_suite(args.suite, m_range=args.m_range, trials=args.trials, seed=args.seed)
        status = self.emit(args, reports.suite_report(result))
        if status != EXIT_OK:
            return status
        return EXIT_OK if result.passed else EXIT_CHECK_FAILED
