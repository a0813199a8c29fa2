#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
FockBench  Copyright (C) 2026  FockBench developers
This program is free software and comes with ABSOLUTELY NO WARRANTY; for details see LICENSE file.
"""

import logging
import sys
import traceback
from argparse import ArgumentParser
from logging.handlers import RotatingFileHandler
from os.path import abspath, dirname, join

if __name__ == '__main__':
    # running this file directly, i.e. without installing FockBench as a module
    sys.path.append(dirname(dirname(abspath(__file__))))


# import FockBench submodules
from FockBench.config import ExperimentKind, LRoundingMode
from FockBench.Experiments.ExperimentRunner import ExitCode, ExperimentRunner
from FockBench.Logs.CustomLogFormatter import CustomLogFormatter
from FockBench.Logs.MaxLevelFilter import MaxLevelFilter
from FockBench.Utils import get_fockbench_version, setup_user_settings_directory

LOG_FILE_NAME = 'fockbench.log'

SUBCOMMAND_HELP = {
    ExperimentKind.STRUCTURAL: "Exact identities of the count-difference projectors and the beamsplitter.",
    ExperimentKind.DISTRIBUTION: "Convergence of the count-difference distribution to the quadrature density.",
    ExperimentKind.COLLAPSE: "Convergence of the conditional collapse kernels to the quadrature limit.",
    ExperimentKind.PITOP: "Distance between interval collapses and quadrature interval projections.",
    ExperimentKind.ASYMPTOTICS: "Scalar limits behind the kernel convergence.",
    ExperimentKind.TELEPORT: "Teleportation with ideal and homodyne Bell measurements.",
    ExperimentKind.SAMPLE: "Monte-Carlo sampling of count-difference outcomes.",
}


def build_argument_parser() -> ArgumentParser:
    version, git_rev = get_fockbench_version()
    argparser = ArgumentParser(
        prog='fockbench',
        description="""FockBench simulates balanced homodyne detection in a truncated Fock space. Every subcommand
                       runs one numerical experiment, checks its convergence statements against tolerances and
                       writes CSV tables and a JSON manifest."""
    )
    argparser.add_argument('--version', action='version', version='FockBench {:s} ({:s})'.format(version, git_rev))

    common = ArgumentParser(add_help=False)
    common.add_argument('-c', '--config', type=str, default=None,
                        help='TOML experiment configuration. Without it, all parameters keep their defaults.')
    common.add_argument('-j', '--jobs', type=int, default=1,
                        help='Number of worker processes evaluating sweep points. Results are merged in sweep order.')
    common.add_argument('--floor-l', action='store_true', dest='floor_l', default=False,
                        help='Map quadrature values to count differences by flooring instead of rounding.')
    common.add_argument('--pin-fixtures', action='store_true', dest='pin_fixtures', default=False,
                        help='Write the configured fixture file from the reference values instead of comparing'
                             ' against it.')
    common.add_argument('-l', '--log-file-level', type=str,
                        help='Logging level of the log file, i.e. all messages of the level at least chosen here are'
                             ' printed to the log file, any lower levels are omitted. By default set to "info".',
                        choices=["debug", "info", "warning", "error", "critical"],
                        default="info")
    common.add_argument("-v", "--verbose",
                        help="Makes the console output verbose. This flag is ignored if -q or -V are set.",
                        action="store_true",
                        dest='verbose',
                        default=False)
    common.add_argument("-V", "--Verbose",
                        help="Makes the console output very verbose. This flag is ignored if -q is set.",
                        action="store_true",
                        dest="Verbose",
                        default=False)
    common.add_argument("-q", "--quiet",
                        help="Hides warnings from console output.",
                        action="store_true",
                        dest="quiet",
                        default=False)

    subparsers = argparser.add_subparsers(dest='experiment', metavar='experiment', required=True)
    for kind in ExperimentKind:
        subparsers.add_parser(str(kind), parents=[common], help=SUBCOMMAND_HELP[kind])
    return argparser


def setup_logging(args) -> str:
    """Attaches the console and log file handlers to the root logger. Returns the log file path."""
    # create users settings folder
    log_file_path = join(setup_user_settings_directory(makedir_if_needed=True), LOG_FILE_NAME)

    # get root logger instance
    logger = logging.getLogger()
    logger.setLevel("DEBUG")  # root logger needs to capture all messages

    # create custom formatter which truncates line lengths
    clf = CustomLogFormatter()

    # create console output for warnings
    sh = logging.StreamHandler(sys.stderr)
    sh.setLevel(logging.ERROR if args.quiet else logging.WARNING)
    sh.setFormatter(clf)
    logger.addHandler(sh)

    # create console output for infos and debugs
    if not args.quiet and (args.verbose or args.Verbose):
        cons = logging.StreamHandler(sys.stdout)
        cons.setLevel(logging.DEBUG if args.Verbose else logging.INFO)
        cons.addFilter(MaxLevelFilter(logging.INFO))
        cons.setFormatter(clf)
        logger.addHandler(cons)

    # create log file rotating handler, no colors in the file
    rfh = RotatingFileHandler(log_file_path, mode='a', maxBytes=100e6, backupCount=5)
    rfh.setLevel(str.upper(args.log_file_level))  # defaults to INFO
    rfh.setFormatter(CustomLogFormatter(use_color=False))
    logger.addHandler(rfh)

    # make sure all uncaught exceptions are written to the log
    def log_except_hook(*exc_info):
        text = "".join(traceback.format_exception(*exc_info))
        logging.error("Unhandled exception: %s", text)

    sys.excepthook = log_except_hook
    return log_file_path


def run_cli(argv=None, configure_logging: bool = True) -> int:
    """Parses `argv`, runs the experiment and returns the process exit status."""
    args = build_argument_parser().parse_args(argv)
    if configure_logging:
        setup_logging(args)

    logger = logging.getLogger()
    # greet user and start logging
    logger.info('==============================================================================')
    logger.info('FockBench started with arguments ' + str(sys.argv if argv is None else argv))

    if args.jobs < 1:
        logger.error("--jobs must be at least 1, got %d", args.jobs)
        return ExitCode.CONFIG_ERROR

    runner = ExperimentRunner(ExperimentKind(args.experiment), config_path=args.config, jobs=args.jobs,
                              rounding=LRoundingMode.FLOOR if args.floor_l else LRoundingMode.ROUND,
                              pin_fixtures=args.pin_fixtures)
    exit_code = runner.run()

    logger.info('Stopped with exit status %d.', int(exit_code))
    logger.info('==============================================================================')
    return int(exit_code)


# launch
def main():
    sys.exit(run_cli())


if __name__ == '__main__':
    main()
