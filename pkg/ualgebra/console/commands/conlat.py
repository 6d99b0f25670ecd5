from cleo.helpers import argument
from cleo.helpers import option

from .command import EXIT_HOLDS
from .command import Command


class ConlatCommand(Command):
    name = "conlat"
    description = "Computes the congruence lattice of an algebra."

    arguments = [argument("file", "The algebra file.")]
    options = [
        option(
            "dot",
            None,
            "Write the Hasse diagram in DOT format to the given path (- for stdout).",
            flag=False,
        ),
        option("json", None, "Output the lattice as JSON."),
    ]

    help = """The <info>conlat</info> command lists every congruence of the algebra in
canonical order, most blocks first, followed by the covering pairs.

    <comment>ua conlat diamond.alg --dot diamond.dot</comment>"""

    def handle(self) -> int:
        from ualgebra.congruences import all_congruences
        from ualgebra.formats import emit_dot
        from ualgebra.formats import emit_lattice_json

        alg = self.load_algebra()
        lattice = all_congruences(alg, config=self.config)

        dot = self.option("dot")
        if dot is not None:
            self.emit(emit_dot(lattice, alg.name), dot)
            if dot == "-":
                return EXIT_HOLDS

        if self.option("json"):
            self.emit(emit_lattice_json(lattice, alg.name))

            return EXIT_HOLDS

        self.line(f"<c1>{alg.name}</c1> has <b>{len(lattice)}</b> congruence(s)")
        for i, theta in enumerate(lattice.congruences):
            self.line(f"  <comment>{i}</comment>  {theta}")

        self.line("")
        self.line("Covers:")
        for i, j in lattice.sorted_covers():
            self.line(f"  <comment>{i}</comment> ≺ <comment>{j}</comment>")

        return EXIT_HOLDS
