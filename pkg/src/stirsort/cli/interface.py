"""
Command Line Interface Module

This module provides the command-line interface for generating
configurations, solving and validating rearrangements, computing bound
certificates and running the scaling and mixing experiments.

Exit codes: 0 success or verdict produced, 1 input error,
2 resource or feasibility limit.
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import List, NoReturn, Optional, Sequence

from ..analysis.bounds import certificate
from ..books.configuration import (
    StirringParams,
    format_config,
    gen_alternating,
    gen_random_stirred,
    is_well_stirred,
    xi,
)
from ..books.moves import validate_rearrangement
from ..errors import FormatError, GenerationError, SearchError, StirsortError
from ..formats import (
    certificate_record,
    dumps,
    parse_fraction,
    parse_target,
    read_config_file,
    read_steps_file,
    rearrangement_record,
    solve_record,
    validation_record,
)
from ..search.heuristics import bubble_heuristic, merge_heuristic
from ..search.solvers import TargetKind, exact_min_cost, verify_witness
from ..settings import load_settings
from .experiments import mix_rows, scaling_rows, write_mix_csv, write_scaling_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_LIMIT = 2


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser reporting flag errors with exit code 1"""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_fraction(text)
    except FormatError as e:
        raise argparse.ArgumentTypeError(str(e))


def _format_field(value: object) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


class CLI:
    """Command-line interface handler"""

    def __init__(self):
        """Initialize CLI handler"""
        self.parser = self._create_parser()
        self.settings = load_settings()

    def _create_parser(self) -> argparse.ArgumentParser:
        """Create command-line argument parser

        Returns:
            Configured argument parser
        """
        parser = _ArgumentParser(
            prog="stirsort",
            description="stirsort - rearrangement costs of stirred binary configurations"
        )
        parser.add_argument(
            "-c", "--config",
            help="Path to settings file",
            default=None
        )
        parser.add_argument(
            "--debug",
            action="store_true",
            help="Enable debug logging"
        )
        commands = parser.add_subparsers(dest="command", metavar="COMMAND")
        commands.required = True

        gen = commands.add_parser("gen", help="Generate a configuration")
        gen.add_argument("--n", type=int, required=True, help="Number of cells")
        gen.add_argument("--pattern", choices=["alternating", "random"], default="alternating")
        gen.add_argument("--period", type=int, default=2, help="Period of the alternating pattern")
        gen.add_argument("--kappa", type=_rational, help="Stirring constant p/q (random pattern)")
        gen.add_argument("--window", type=int, help="Window length in cells (random pattern)")
        gen.add_argument("--seed", type=int, default=0, help="Random seed")
        gen.add_argument("--max-tries", type=int, default=None, help="Rejection-sampler budget")
        gen.set_defaults(handler=self.cmd_gen)

        solve = commands.add_parser("solve", help="Find a minimum-cost rearrangement")
        solve.add_argument("--input", required=True, help="Configuration file")
        solve.add_argument("--target", default="sorted", help="sorted or run:COLOR:S")
        solve.add_argument("--limit", type=int, default=None, help="Expanded-state limit")
        solve.add_argument("--heuristic", choices=["merge", "bubble"], help="Print a heuristic rearrangement instead")
        solve.add_argument("--output", help="Write the record to this file")
        solve.set_defaults(handler=self.cmd_solve)

        bound = commands.add_parser("bound", help="Compute a lower-bound certificate")
        bound.add_argument("--kappa", type=_rational, required=True)
        bound.add_argument("--eps", type=_rational, required=True)
        bound.add_argument("--chain", type=int, default=None, help="Number of chain entries to record")
        bound.set_defaults(handler=self.cmd_bound)

        scaling = commands.add_parser("scaling", help="Cost versus scale study (CSV)")
        scaling.add_argument("--kappa", type=_rational, required=True)
        scaling.add_argument("--k-min", type=int, required=True)
        scaling.add_argument("--k-max", type=int, required=True)
        scaling.add_argument("--exact-cap", type=int, default=None, help="Largest N solved exactly")
        scaling.add_argument("--workers", type=int, default=None, help="Rows evaluated concurrently")
        scaling.set_defaults(handler=self.cmd_scaling)

        mix = commands.add_parser("mix", help="Torus mixing study (CSV)")
        mix.add_argument("--grid", type=int, required=True, help="Grid side M")
        mix.add_argument("--stages", type=int, default=1)
        mix.add_argument("--kappa", type=_rational, default=Fraction(3, 10))
        mix.add_argument("--radii", type=int, nargs="+", default=None, help="Ball radii in cells")
        mix.set_defaults(handler=self.cmd_mix)

        check = commands.add_parser("check", help="Test the well-stirred condition")
        check.add_argument("--input", required=True)
        check.add_argument("--kappa", type=_rational, required=True)
        check.add_argument("--window", type=int, required=True)
        check.set_defaults(handler=self.cmd_check)

        validate = commands.add_parser("validate", help="Validate a rearrangement")
        validate.add_argument("--input", required=True)
        validate.add_argument("--steps", required=True, help="JSON step list or rearrangement record")
        validate.set_defaults(handler=self.cmd_validate)

        return parser

    def _configure_logging(self, debug: bool) -> None:
        """Send log records to standard error at the configured level"""
        log_settings = self.settings["logging"]
        logging.basicConfig(
            level=getattr(logging, str(log_settings["level"]).upper(), logging.WARNING),
            format=log_settings["format"],
            stream=sys.stderr,
        )
        if debug:
            logging.getLogger("stirsort").setLevel(logging.DEBUG)

    def cmd_gen(self, args: argparse.Namespace) -> None:
        if args.pattern == "alternating":
            c = gen_alternating(args.n, args.period)
        else:
            if args.kappa is None or args.window is None:
                raise FormatError("--pattern random needs --kappa and --window")
            max_tries = self.settings["generation"]["max_tries"] if args.max_tries is None else args.max_tries
            c = gen_random_stirred(args.n, StirringParams(args.kappa, args.window), args.seed, max_tries)
        print(format_config(c))

    def cmd_solve(self, args: argparse.Namespace) -> None:
        c = read_config_file(args.input)
        if args.heuristic:
            construction = merge_heuristic if args.heuristic == "merge" else bubble_heuristic
            record = rearrangement_record(construction(c))
        else:
            target = parse_target(args.target)
            if target.kind is TargetKind.RUN and target.s > c.n:
                raise FormatError(f"Target {target} asks for a run longer than {c.n} cells")
            search = self.settings["search"]
            result = exact_min_cost(
                c,
                target,
                state_limit=search["state_limit"] if args.limit is None else args.limit,
                max_cells=search["max_cells"],
            )
            if not verify_witness(result, c, target):
                raise SearchError(f"Witness for {c} failed verification")
            record = solve_record(result, target)
        text = dumps(record)
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="\n") as f:
                f.write(text + "\n")
            logger.info(f"Wrote record to {args.output}")
        else:
            print(text)

    def cmd_bound(self, args: argparse.Namespace) -> None:
        print(dumps(certificate_record(certificate(args.kappa, args.eps, args.chain))))

    def cmd_scaling(self, args: argparse.Namespace) -> None:
        scaling = self.settings["scaling"]
        search = self.settings["search"]
        rows = scaling_rows(
            args.kappa,
            args.k_min,
            args.k_max,
            exact_cap=scaling["exact_cap"] if args.exact_cap is None else args.exact_cap,
            workers=scaling["workers"] if args.workers is None else args.workers,
            state_limit=search["state_limit"],
            max_cells=search["max_cells"],
        )
        write_scaling_csv(rows, sys.stdout)

    def cmd_mix(self, args: argparse.Namespace) -> None:
        if args.radii is not None:
            radii = args.radii
        else:
            radii = [r for r in self.settings["mixing"]["radii"] if 2 * r < args.grid]
        write_mix_csv(mix_rows(args.grid, args.stages, args.kappa, radii), sys.stdout)

    def cmd_check(self, args: argparse.Namespace) -> None:
        c = read_config_file(args.input)
        params = StirringParams(args.kappa, args.window)
        verdict = is_well_stirred(c, params)
        print(f"well_stirred: {str(verdict).lower()}")
        print(f"xi: {xi(c)}")
        print(f"eps: {params.eps(c.n)}")

    def cmd_validate(self, args: argparse.Namespace) -> None:
        c = read_config_file(args.input)
        record = validation_record(validate_rearrangement(read_steps_file(args.steps, c)))
        for key in ("valid", "complete", "gamma", "gamma_normalized", "failing_step"):
            print(f"{key}: {_format_field(record[key])}")

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """Run the CLI interface

        Args:
            argv: Arguments without the program name (defaults to sys.argv)

        Returns:
            Process exit code
        """
        args = self.parser.parse_args(argv)

        try:
            self.settings = load_settings(args.config)
            self._configure_logging(args.debug)
            args.handler(args)
            return EXIT_OK

        except (GenerationError, SearchError) as e:
            logger.error(f"Error: {e}")
            return EXIT_LIMIT

        except (StirsortError, OSError) as e:
            logger.error(f"Error: {e}")
            return EXIT_INPUT


def main(argv: Optional[List[str]] = None) -> None:
    """Main entry point"""
    cli = CLI()
    sys.exit(cli.run(argv))


if __name__ == "__main__":
    main()
