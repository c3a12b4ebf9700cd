# Copyright (c) 2026 The py_magnetic_ab_flow authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

"""Module with the command-line entry point."""

# Imports
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from py_magnetic_ab_flow._version import __version__
from py_magnetic_ab_flow.cli.commands import Commands
from py_magnetic_ab_flow.cli.run_config import RunConfig, RunConfigConst, RunConfigLoader
from py_magnetic_ab_flow.common import (
    AccuracyError, CalibrationError, ConfigError, CutoffInsufficientError, DomainError, ResultTable,
    SingularTimeError, TruncationError
)
from py_magnetic_ab_flow.saver import TableSaver


logger = logging.getLogger(__name__)

CommandRunner = Callable[[RunConfig], ResultTable]


class ExitCodes:
    """Class container for exit codes."""

    SUCCESS: int = 0
    VERIFICATION_FAILURE: int = 1
    USAGE_ERROR: int = 2


class CliMain:
    """Class container for the command-line parser and command dispatch."""

    @staticmethod
    def CommandRunners() -> Dict[str, CommandRunner]:
        return {
            "spectrum": Commands.Spectrum,
            "verify": Commands.Verify,
            "decay-scan": Commands.DecayScan,
            "evolve": Commands.Evolve,
            "kernel-eval": Commands.KernelEval,
            "poisson-check": Commands.PoissonCheck,
        }

    @staticmethod
    def BuildParser() -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--alpha", help="Magnetic flux, not an integer")
        common.add_argument("--b0", help="Field strength, strictly positive")
        common.add_argument("--sigma", help="Comma-separated weight exponents in [0, mu], e.g. '0,mu/2,mu'")
        common.add_argument("--t", help="Comma-separated times, e.g. '0.3,pi/4'")
        common.add_argument("--kmax", help="Angular momentum cutoff")
        common.add_argument("--mmax", help="Radial quantum number cutoff")
        common.add_argument("--out", help="Output file, standard output if not specified")
        common.add_argument("--format", choices=["csv", "json"], help="Output format (default: csv)")
        common.add_argument("--config", help="Flat JSON configuration file, overridden by flags")
        common.add_argument("--jobs", help="Number of worker processes of the scans")
        common.add_argument("--route", choices=list(RunConfigConst.ROUTES), help="Evolution route (default: both)")
        common.add_argument("--data", choices=list(RunConfigConst.DATA_FAMILIES),
                            help="Initial data of the evolution (default: eigen)")
        common.add_argument("--suite", help="Comma-separated verification suites (default: all)")
        common.add_argument("--log-level", default="WARNING",
                            choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                            help="Logging level, records go to standard error (default: WARNING)")

        parser = argparse.ArgumentParser(prog="py-magnetic-ab-flow",
                                         description="Spectral theory, propagator kernels and weighted time-decay "
                                                     "scans for the Aharonov-Bohm flux in a homogeneous "
                                                     "magnetic field.")
        parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
        subparsers = parser.add_subparsers(dest="command", required=True)
        for name, runner in CliMain.CommandRunners().items():
            doc = (runner.__doc__ or "").strip().splitlines()
            subparsers.add_parser(name, parents=[common], help=doc[0] if doc else None)
        return parser

    @staticmethod
    def IsFailure(command: str,
                  table: ResultTable) -> bool:
        if command == "verify":
            return not table.Summary()["all_passed"]
        if command == "poisson-check":
            return not table.Summary()["passed"]
        return False


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = CliMain.BuildParser().parse_args(argv)
    except SystemExit as ex:
        return ExitCodes.USAGE_ERROR if ex.code else ExitCodes.SUCCESS

    logging.basicConfig(level=args.log_level,
                        format="[%(levelname)s] %(name)s: %(message)s",
                        stream=sys.stderr)

    try:
        run_cfg = RunConfigLoader.FromArgs(args)
    except ConfigError as ex:
        print(f"[error] {ex}", file=sys.stderr)
        return ExitCodes.USAGE_ERROR

    try:
        table = CliMain.CommandRunners()[args.command](run_cfg)
    except (ConfigError, DomainError, SingularTimeError) as ex:
        print(f"[error] {ex}", file=sys.stderr)
        return ExitCodes.USAGE_ERROR
    except (AccuracyError, CalibrationError, CutoffInsufficientError, TruncationError) as ex:
        print(f"[error] {type(ex).__name__}: {ex}", file=sys.stderr)
        return ExitCodes.VERIFICATION_FAILURE

    saver = TableSaver(table)
    out_path = run_cfg.OutPath()
    if out_path is None:
        sys.stdout.write(saver.ToString(run_cfg.Format()))
    else:
        try:
            saver.SaveToFile(out_path, run_cfg.Format())
        except OSError as ex:
            print(f"[error] Cannot write {out_path}: {ex}", file=sys.stderr)
            return ExitCodes.USAGE_ERROR
        logger.info("Results written to %s", out_path)

    if CliMain.IsFailure(args.command, table):
        print(f"[{args.command}] FAIL", file=sys.stderr)
        return ExitCodes.VERIFICATION_FAILURE
    return ExitCodes.SUCCESS


if __name__ == "__main__":
    sys.exit(main())
