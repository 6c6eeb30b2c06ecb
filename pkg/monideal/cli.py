"""
Command-line front end: one subcommand per analysis, table or JSON output.

Exit codes: 0 on success, 1 when a computation fails (or a self-test or law
check does not pass), 2 on a usage, parse or schema error. In ``json`` mode
exactly one JSON document goes to standard output; diagnostics and logs
always go to standard error.

Examples
--------
.. code-block:: console

    $ monideal fluct --ring x,y --ideal "x^7,y^7,x^2*y^5,x^5*y^2" --horizon 5
    $ monideal spi --ring x,y,z --ideal "x^4,y^4,x^3*y,x*y^3,x^2*y^2*z" --horizon 4
    $ monideal --output json family --m 2 --r 1 --analyze
"""

import argparse
import logging
import sys
from functools import singledispatch
from typing import Callable, Dict, List, Optional, Sequence

import pandas as pd

from . import __version__
from .base import MonomialIdeal, colon, power
from .cache import PowerCache, set_default_power_cache
from .config import LOG_LEVELS, Settings
from .corpus import run_selftest
from .decomposition import Decomposition, irreducible_decomposition
from .errors import MonomialIdealError, ParseError, SchemaError
from .formats import CheckTable, to_json
from .laws import DEFAULT_INSTANCES, run_law_checks
from .operators import ExpansionSpec, WeightSpec, expand, localize, weight
from .parser import parse_ideal, parse_prime, parse_ring, parse_uint_list, print_canonical
from .persistence import (
    FamilyReport,
    FluctuationVerdict,
    SpiReport,
    analyze_family,
    ass_powers,
    colon_pattern,
    detect_fluctuation,
    family_lmr,
    observed_spi,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


# -----------------------------------------------------------------------------
# argument parsing

def _at_least(lower: int) -> Callable[[str], int]:
    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < lower:
            raise argparse.ArgumentTypeError(f"must be at least {lower}, got {value}")
        return value
    return convert


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as exit code 2 without exiting the interpreter."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monideal", description="Exact computations on monomial ideals.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--output", choices=("table", "json"), default="table",
                        help="Render results as a table (default) or one JSON document")
    parser.add_argument("--cache-dir", default=None,
                        help="Persist computed powers here (default: $MONIDEAL_CACHE_DIR)")
    parser.add_argument("--workers", type=_at_least(1), default=None,
                        help="Threads for colon pattern scans (default: all cores)")
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, default=None,
                        help="Logging level on standard error")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def ideal_command(name: str, summary: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=summary)
        sub.add_argument("--ring", required=True, help='Variable names, e.g. "x,y,z"')
        sub.add_argument("--ideal", required=True, help='Generators, e.g. "x^2*y, y^3"')
        return sub

    ideal_command("colon", "minimal generators of (I : J)").add_argument(
        "--ideal2", required=True, help="The divisor ideal J")
    ideal_command("power", "minimal generators of I^s").add_argument(
        "--exp", type=_at_least(0), required=True, help="The exponent s")
    ideal_command("ass", "associated primes of I^s for s = 1..s_max").add_argument(
        "--powers", type=_at_least(1), default=1, help="s_max (default 1)")
    ideal_command("decompose", "irredundant irreducible decomposition")
    for name, summary in (("spi", "colon pattern and observed strong persistence index"),
                          ("fluct", "colon pattern and fluctuation witnesses")):
        ideal_command(name, summary).add_argument("--horizon", type=_at_least(2), default=None,
                                                  help="Scan horizon L (default: $MONIDEAL_HORIZON or 6)")
    ideal_command("expand", "expansion I* by a tuple").add_argument(
        "--tuple", required=True, help='Positive block sizes, e.g. "3,1,2"')
    ideal_command("weight", "weighted ideal I_W").add_argument(
        "--weights", required=True, help='Positive weights, e.g. "1,4,2"')
    ideal_command("localize", "monomial localization I(p)").add_argument(
        "--prime", required=True, help='Prime as a variable list, e.g. "(x, y)"')

    family = commands.add_parser("family", help="the (m, r) family with strong persistence index m+1")
    family.add_argument("--m", type=_at_least(1), required=True)
    family.add_argument("--r", type=_at_least(1), required=True)
    family.add_argument("--analyze", action="store_true", help="Also scan colon pattern and Ass")
    family.add_argument("--horizon", type=_at_least(2), default=None,
                        help="Scan horizon for --analyze (default m+3)")

    commands.add_parser("selftest", help="run the worked-example regression corpus")
    check = commands.add_parser("check", help="randomized operator-law checks")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--instances", type=_at_least(1), default=DEFAULT_INSTANCES,
                       help=f"Random instances per law (default {DEFAULT_INSTANCES})")
    return parser


# -----------------------------------------------------------------------------
# subcommands

class _Context:
    def __init__(self, args: argparse.Namespace, settings: Settings, cache: PowerCache):
        self.args = args
        self.settings = settings
        self.cache = cache

    @property
    def horizon(self) -> int:
        return self.args.horizon or self.settings.horizon

    def ring(self):
        return parse_ring(self.args.ring)

    def ideal(self, attribute: str = "ideal") -> MonomialIdeal:
        return parse_ideal(getattr(self.args, attribute), self.ring())

    def pattern(self):
        return colon_pattern(self.ideal(), self.horizon, self.cache, self.settings.workers)


def _family(ctx: _Context):
    a = ctx.args
    if not a.analyze:
        return family_lmr(a.m, a.r)
    return analyze_family(a.m, a.r, a.horizon, ctx.cache, ctx.settings.workers)


COMMANDS: Dict[str, Callable[[_Context], object]] = {
    "colon": lambda ctx: colon(ctx.ideal(), ctx.ideal("ideal2")),
    "power": lambda ctx: power(ctx.ideal(), ctx.args.exp, ctx.cache),
    "ass": lambda ctx: ass_powers(ctx.ideal(), ctx.args.powers, ctx.cache),
    "decompose": lambda ctx: irreducible_decomposition(ctx.ideal()),
    "spi": lambda ctx: observed_spi(ctx.pattern()),
    "fluct": lambda ctx: detect_fluctuation(ctx.pattern()),
    "expand": lambda ctx: expand(ctx.ideal(), ExpansionSpec(ctx.ring(), parse_uint_list(ctx.args.tuple))),
    "weight": lambda ctx: weight(ctx.ideal(), WeightSpec(parse_uint_list(ctx.args.weights))),
    "localize": lambda ctx: localize(ctx.ideal(), parse_prime(ctx.args.prime, ctx.ring())),
    "family": _family,
    "selftest": lambda ctx: run_selftest(ctx.cache, ctx.settings.workers),
    "check": lambda ctx: run_law_checks(ctx.args.seed, ctx.args.instances, ctx.cache),
}


# -----------------------------------------------------------------------------
# table rendering

def _frame(rows: List[dict]) -> str:
    return pd.DataFrame(rows).to_string(index=False)


def _pattern_frame(pattern) -> str:
    return _frame([
        {"l": ell, "colon": f"(I^{ell + 1} : I) vs I^{ell}", "d": label}
        for ell, label in enumerate(pattern.labels(), start=1)
    ])


@singledispatch
def render_table(result) -> str:
    raise TypeError(f"cannot render {type(result).__name__}")


@render_table.register
def _(ideal: MonomialIdeal) -> str:
    return print_canonical(ideal)


@render_table.register
def _(d: Decomposition) -> str:
    return _frame([
        {"component": print_canonical(c), "radical": print_canonical(c.radical())}
        for c in d.components
    ])


@render_table.register
def _(report: SpiReport) -> str:
    return "\n".join([
        _pattern_frame(report.pattern),
        f"observed_spi: {report.observed_spi} (horizon {report.horizon}, not certified)",
        f"trailing_equal_run: {report.trailing_equal_run}",
    ])


def _triple(triple) -> str:
    return "none" if triple is None else "({}, {}, {})".format(*triple)


@render_table.register
def _(verdict: FluctuationVerdict) -> str:
    return "\n".join([
        _pattern_frame(verdict.pattern),
        f"case_i: {_triple(verdict.case_i)}",
        f"case_ii: {_triple(verdict.case_ii)}",
        f"verdict: {verdict.verdict.value}",
    ])


@render_table.register
def _(scan: list) -> str:
    return _frame([
        {"s": s, "Ass": " ".join(print_canonical(p) for p in sorted(primes, key=lambda p: p.sort_key()))}
        for s, primes in scan
    ])


@render_table.register
def _(report: FamilyReport) -> str:
    return "\n\n".join([
        f"L(m={report.m}, r={report.r}) = {print_canonical(report.ideal)}",
        render_table(report.spi),
        f"case_i: {_triple(report.fluctuation.case_i)}\n"
        f"case_ii: {_triple(report.fluctuation.case_ii)}\n"
        f"verdict: {report.fluctuation.verdict.value}",
        render_table(report.ass),
    ])


@render_table.register
def _(table: CheckTable) -> str:
    frame = _frame([
        {"check": r.name, "result": "pass" if r.passed else "FAIL", "detail": r.detail}
        for r in table.results
    ])
    passed = sum(r.passed for r in table.results)
    return f"{frame}\n{table.title}: {passed}/{len(table.results)} passed"


# -----------------------------------------------------------------------------
# entry points

def _configure_logging(level: str) -> None:
    logging.basicConfig(level=getattr(logging, level), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s", force=True)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one invocation and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help and --version
        return exc.code if isinstance(exc.code, int) else EXIT_OK

    try:
        settings = Settings.from_env().override(
            cache_dir=args.cache_dir, workers=args.workers, log_level=args.log_level
        )
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _configure_logging(settings.log_level)

    cache = PowerCache(settings.cache_dir)
    previous = set_default_power_cache(cache)
    try:
        result = COMMANDS[args.command](_Context(args, settings, cache))
        text = to_json(result) if args.output == "json" else render_table(result)
    except (ParseError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MonomialIdealError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    finally:
        set_default_power_cache(previous)

    print(text)
    if isinstance(result, CheckTable) and not result.passed:
        return EXIT_FAILURE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
