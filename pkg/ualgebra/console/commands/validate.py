from pathlib import Path

from cleo.helpers import argument

from ualgebra.console.exceptions import UsageError

from .command import EXIT_FAILS
from .command import EXIT_HOLDS
from .command import Command


class ValidateCommand(Command):
    name = "validate"
    description = "Checks that an algebra file is well-formed."

    arguments = [argument("file", "The algebra file.")]

    help = """The <info>validate</info> command parses an algebra file and checks its
operation tables: one table per declared symbol, of length size^arity, with
every entry inside the universe.

Syntax errors exit with code 2, invalid tables with code 1."""

    def handle(self) -> int:
        from ualgebra.algebra import validate
        from ualgebra.formats import parse_algebra

        path = Path(self.argument("file"))
        if not path.is_file():
            raise UsageError(f"The file {path} does not exist")

        alg = parse_algebra(path.read_text(encoding="utf-8"), validate_result=False)
        violations = validate(alg)
        if violations:
            for violation in violations:
                self.line_error(f"<error>{violation}</error>")

            return EXIT_FAILS

        self.line(
            "<c1>{}</c1> is valid: {} elements, {} operation(s)".format(
                alg.name,
                alg.size,
                len(alg.signature),
            )
        )
        for symbol in alg.signature:
            self.line(f"  - <c2>{symbol.name}</c2> of arity {symbol.arity}")

        return EXIT_HOLDS
