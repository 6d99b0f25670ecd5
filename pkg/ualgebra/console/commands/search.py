from typing import Any
from typing import Dict

from cleo.helpers import option

from ualgebra.console.exceptions import UsageError

from .command import EXIT_HOLDS
from .command import Command


class SearchCommand(Command):
    name = "search"
    description = "Searches small algebras for given combinations of properties."

    options = [
        option("signature", None, 'The signature, e.g. "op f 2;op c 0".', flag=False),
        option("size", None, "The size of the universe.", flag=False),
        option("exhaustive", None, "Scan every table assignment (default)."),
        option("random", None, "Draw random tables from this seed.", flag=False),
        option("count", None, "How many random algebras to draw.", flag=False),
        option("up-to-iso", None, "Skip algebras isomorphic to an earlier one."),
        option("limit", None, "Stop after this many witnesses.", flag=False),
        option(
            "require",
            None,
            "A property the witnesses must have.",
            flag=False,
            multiple=True,
        ),
        option(
            "forbid",
            None,
            "A property the witnesses must not have.",
            flag=False,
            multiple=True,
        ),
        option("json", None, "Output the result as JSON."),
    ]

    help = """The <info>search</info> command streams algebras of the given signature and
size and keeps those that have every required property and no forbidden one.

Properties: rees, quasi-rees, obp, uniform, directoid, idempotent.

    <comment>ua search --signature "op f 2" --size 3 --require obp --forbid quasi-rees</comment>

Witnesses are printed in the algebra file format, in generation order."""

    loggers = ["ualgebra.structures.search"]

    def handle(self) -> int:
        from ualgebra.formats import dump_algebra
        from ualgebra.formats import emit_json
        from ualgebra.formats import parse_signature
        from ualgebra.formats.emitters import SCHEMA_VERSION
        from ualgebra.structures import GeneratorSpec
        from ualgebra.structures import search_algebras
        from ualgebra.structures.generators import EXHAUSTIVE
        from ualgebra.structures.generators import RANDOM

        signature = parse_signature(self.required_option("signature"))
        size = self.integer_option("size")
        if size is None:
            raise UsageError('The "--size" option is required')

        seed = self.integer_option("random")
        if seed is not None and self.option("exhaustive"):
            raise UsageError('The "--exhaustive" and "--random" options are exclusive')

        count = self.integer_option("count")
        if seed is not None and count is None:
            raise UsageError('The "--random" option needs "--count"')

        spec = GeneratorSpec(
            signature,
            size,
            mode=RANDOM if seed is not None else EXHAUSTIVE,
            seed=seed,
            count=count or 0,
            up_to_isomorphism=self.option("up-to-iso"),
        )
        result = search_algebras(
            spec,
            require=self.option("require") or [],
            forbid=self.option("forbid") or [],
            limit=self.integer_option("limit"),
            config=self.config,
        )

        if self.option("json"):
            data: Dict[str, Any] = {
                "v": SCHEMA_VERSION,
                "signature": str(signature),
                "size": size,
                "mode": spec.mode,
                "searched": result.searched,
                "count": result.count,
                "witnesses": [dump_algebra(alg) for alg in result.witnesses],
            }
            self.emit(emit_json(data))

            return EXIT_HOLDS

        for alg in result.witnesses:
            self.emit(dump_algebra(alg))
            self.line("")

        self.line(
            f"<b>{result.count}</b> witness(es)"
            f" among <b>{result.searched}</b> candidates"
        )

        return EXIT_HOLDS
