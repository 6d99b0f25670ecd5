from typing import Optional

from cleo.helpers import argument
from cleo.helpers import option

from .command import EXIT_HOLDS
from .command import Command


def _verdict(value: Optional[bool]) -> str:
    if value is None:
        return "<comment>skipped</comment>"

    return "<success>yes</success>" if value else "<fg=red>no</>"


class AnalyzeCommand(Command):
    name = "analyze"
    description = "Reports the Rees, quasi-Rees and one-block properties of an algebra."

    arguments = [argument("file", "The algebra file.")]
    options = [option("json", None, "Output the report as JSON.")]

    help = """The <info>analyze</info> command computes the congruence lattice and decides
every property on it. Properties with several equivalent characterizations are
computed each way and the command fails if they disagree.

Checks whose resource limit is exceeded are reported as skipped."""

    loggers = ["ualgebra.formats.report"]

    def handle(self) -> int:
        from ualgebra.formats import build_report
        from ualgebra.utils.helpers import format_elements

        alg = self.load_algebra()
        report = build_report(alg, config=self.config)

        if self.option("json"):
            self.emit(report.to_json())

            return EXIT_HOLDS

        self.line(f"<c1>{report.algebra}</c1> ({report.size} elements)")
        self.line("")
        self.line(f"<c2>Congruences</c2>: {len(report.congruences)}")
        atoms = ", ".join(str(a) for a in report.atoms)
        self.line(f"  atoms: {atoms or 'none'}")
        self.line(
            "  absorbing elements: {}".format(
                format_elements(report.absorbing) if report.absorbing else "none"
            )
        )

        rows = [
            ("Rees", report.rees),
            ("  via two-generated subuniverses", report.rees_two_generated),
            ("  via unary polynomials", report.rees_polynomials),
            ("quasi-Rees", report.quasi_rees.holds),
            ("one-block-property", report.obp.holds),
            ("congruence uniform", report.uniform),
            ("modular", report.modular),
            ("semimodular", report.semimodular),
            ("idempotent", report.idempotent),
        ]
        rows += [(f"{n}-permutable", value) for n, value in report.permutable.items()]
        rows += [
            (f"weakly regular at {e}", value)
            for e, value in report.weakly_regular.items()
        ]

        self.line("")
        width = max(len(label) for label, _ in rows)
        for label, value in rows:
            self.line(f"{label.ljust(width)}  {_verdict(value)}")

        if report.rees_counterexample is not None:
            self.line("")
            self.line(
                "<comment>{}² ∪ ω is not a congruence</comment>".format(
                    format_elements(report.rees_counterexample)
                )
            )

        return EXIT_HOLDS
