from cleo.helpers import argument
from cleo.helpers import option

from .command import EXIT_FAILS
from .command import EXIT_HOLDS
from .command import Command


class CheckIdentityCommand(Command):
    name = "check-identity"
    description = "Checks whether an identity holds in an algebra."

    arguments = [argument("file", "The algebra file.")]
    options = [
        option("lhs", None, "The left-hand side term.", flag=False),
        option("rhs", None, "The right-hand side term.", flag=False),
    ]

    help = """The <info>check-identity</info> command evaluates both terms under every
assignment of their variables. Variables are x, y, z and x0 to x9.

    <comment>ua check-identity diamond.alg --lhs "join(x,y)" --rhs "join(y,x)"</comment>

Exits with code 0 when the identity holds and 1 otherwise."""

    def handle(self) -> int:
        from ualgebra.algebra import satisfies_identity
        from ualgebra.algebra.term import variable_name
        from ualgebra.formats import parse_term

        alg = self.load_algebra()
        lhs = parse_term(self.required_option("lhs"), alg.signature)
        rhs = parse_term(self.required_option("rhs"), alg.signature)

        check = satisfies_identity(alg, lhs, rhs, config=self.config)
        if check:
            self.line(
                f"<c2>{lhs} ≈ {rhs}</c2> <success>holds</success> in {alg.name}"
            )

            return EXIT_HOLDS

        counterexample = check.counterexample or {}
        assignment = " ".join(
            f"{variable_name(index)}={value}"
            for index, value in sorted(counterexample.items())
        )
        self.line(f"<c2>{lhs} ≈ {rhs}</c2> <fg=red>fails</> in {alg.name}")
        self.line(f"  counterexample: <comment>{assignment}</comment>")

        return EXIT_FAILS
