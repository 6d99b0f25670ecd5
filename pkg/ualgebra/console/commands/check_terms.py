from typing import List
from typing import Tuple

from cleo.helpers import argument
from cleo.helpers import option

from .command import EXIT_FAILS
from .command import EXIT_HOLDS
from .command import Command


class CheckTermsCommand(Command):
    name = "check-terms"
    description = "Checks the binary term conditions behind quasi-Rees and weak regularity."

    arguments = [argument("file", "The algebra file.")]
    options = [
        option("p0", None, "The binary term p0(x,y).", flag=False),
        option("p", None, "A further binary term.", flag=False, multiple=True),
        option(
            "constant",
            None,
            "Check weak regularity at this element with the --p terms.",
            flag=False,
        ),
    ]

    help = """The <info>check-terms</info> command runs, on binary terms in x and y:

  - with two or more terms: p0(x,y) = p1(x,y) = ... holds exactly when x = y;
  - always: f(v(x),...,v(x)) ≈ v(x) for every operation f, where v(x) = p0(x,x);
  - with <comment>--constant e</comment>: t1(x,y) = ... = e holds exactly when x = y,
    using the --p terms, or p0 alone when none is given.

Exits with code 0 when every condition that was run holds and 1 otherwise."""

    def handle(self) -> int:
        from ualgebra.algebra import substitute
        from ualgebra.algebra import x
        from ualgebra.formats import parse_term
        from ualgebra.properties import check_csakany_term
        from ualgebra.properties import check_p_terms_condition
        from ualgebra.properties import check_weak_regularity_terms

        alg = self.load_algebra()
        p0 = parse_term(self.required_option("p0"), alg.signature)
        others = [parse_term(text, alg.signature) for text in self.option("p") or []]
        terms = [p0] + others

        results: List[Tuple[str, bool, str]] = []

        if len(terms) > 1:
            check = check_p_terms_condition(alg, terms)
            detail = f"fails at (x,y) = {check.pair}" if not check else ""
            results.append(("p-terms", check.holds, detail))

        v = substitute(p0, {1: x})
        check = check_csakany_term(alg, v, config=self.config)
        detail = f"fails for {check.symbol}" if not check else ""
        results.append((f"idempotent term v(x) = {v}", check.holds, detail))

        e = self.integer_option("constant")
        if e is not None:
            check = check_weak_regularity_terms(alg, e, others or [p0])
            detail = f"fails at (x,y) = {check.pair}" if not check else ""
            results.append((f"weak regularity at {e}", check.holds, detail))

        for label, holds, detail in results:
            verdict = "<success>holds</success>" if holds else "<fg=red>fails</>"
            line = f"<c2>{label}</c2>: {verdict}"
            if detail:
                line += f" <comment>({detail})</comment>"

            self.line(line)

        return EXIT_HOLDS if all(holds for _, holds, _ in results) else EXIT_FAILS
