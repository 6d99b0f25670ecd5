from cleo.helpers import argument
from cleo.helpers import option

from .command import EXIT_HOLDS
from .command import Command


class QuotientCommand(Command):
    name = "quotient"
    description = "Builds the quotient of an algebra by a congruence."

    arguments = [argument("file", "The algebra file.")]
    options = [
        option("theta", None, 'The congruence, e.g. "0|1 2 3".', flag=False),
        option("out", None, "Write the quotient to the given path.", flag=False),
    ]

    help = """The <info>quotient</info> command writes the quotient algebra in the algebra
file format. Its elements are the blocks of the congruence, numbered by their
least element.

    <comment>ua quotient diamond.alg --theta "0|1 2 3"</comment>"""

    def handle(self) -> int:
        from ualgebra.formats import dump_algebra
        from ualgebra.formats import parse_partition
        from ualgebra.quotients import quotient_algebra

        alg = self.load_algebra()
        theta = parse_partition(self.required_option("theta"), alg.size)
        quotient = quotient_algebra(alg, theta)

        self.emit(dump_algebra(quotient.algebra), self.option("out"))

        return EXIT_HOLDS
