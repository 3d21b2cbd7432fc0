"""Entry point of the gvmpy command-line interface"""

import argparse
import json
import logging
import sys

import pandas as pd

from ..exceptions import ConfigError, GVMError
from . import commands, io
from .config import COMMANDS, ExperimentConfig

logger = logging.getLogger(__name__)

EXIT_SCHEMA = 1
EXIT_IO = 2

_DESCRIPTIONS = {
    'fit': "Estimate, fit and optionally refine by maximum likelihood",
    'sample': "Write synthetic data drawn from a kernel model",
    'estimate': "Write the empirical covariance or PSD of a series",
    'benchmark': "Time the GVM fit and the full-GP likelihood against n",
    'recover': "Run a parameter recovery study and summarise the PRE",
}


def build_parser():
    """
        argparse parser with one sub-command per verb.
    """
    parser = argparse.ArgumentParser(
        prog="gvmpy", description="Likelihood-free GP hyperparameter estimation")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="JSON configuration file")
    common.add_argument("--seed", type=int, default=None, help="Override the config seed")
    common.add_argument("--out-dir", default=None, help="Override the output directory")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging")

    verbs = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        verb = verbs.add_parser(command, parents=[common], help=_DESCRIPTIONS[command])
        if command == "fit":
            verb.add_argument("--refine-ml", action="store_true",
                              help="Refine the GVM estimate by maximum likelihood")

    return parser


def run(args):
    """
        Loads the configuration and runs the command; returns the exit code.
    """
    try:
        details = io.read_json(args.config)
    except OSError as ex:
        logger.error("Can not read %s: %s", args.config, ex)
        return EXIT_IO
    except json.JSONDecodeError as ex:
        logger.error("%s is not valid JSON: %s", args.config, ex)
        return EXIT_SCHEMA

    try:
        config = ExperimentConfig.from_dict(args.command, details, args.seed, args.out_dir)
    except (ConfigError, ValueError) as ex:
        logger.error("Invalid configuration: %s", ex)
        return EXIT_SCHEMA

    try:
        if args.command == "fit":
            return commands.cmd_fit(config, refine_ml=args.refine_ml)
        if args.command == "sample":
            return commands.cmd_sample(config)
        if args.command == "estimate":
            return commands.cmd_estimate(config)
        if args.command == "benchmark":
            return commands.cmd_benchmark(config)
        return commands.cmd_recovery_study(config)

    except ConfigError as ex:
        logger.error("Invalid configuration: %s", ex)
        return EXIT_SCHEMA
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError, io.DataFileError) as ex:
        logger.error("Input/output error: %s", ex)
        return EXIT_IO
    except GVMError as ex:
        logger.error("Numerical failure: %s", ex)
        return commands.EXIT_NUMERIC
    except ValueError as ex:
        logger.error("Invalid value: %s", ex)
        return EXIT_SCHEMA


def main(argv=None):
    """
        Console script `gvmpy`.
    """
    args = build_parser().parse_args(argv)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    return run(args)


if __name__ == "__main__":
    sys.exit(main())
