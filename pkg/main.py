import argparse
import logging
import sys

from src.conf.config import config
from src.exceptions import PeriodicLawError
from src.routes import cluster, patterns, posets, sequences, shells, topology

logger = logging.getLogger("periodiclaw")

ROUTES = (sequences, shells, posets, cluster, topology, patterns)


def build_parser() -> argparse.ArgumentParser:
    """
    Assemble the command-line parser from the route modules.

    Returns:
        argparse.ArgumentParser: Parser with one subcommand per registered route.
    """
    parser = argparse.ArgumentParser(prog="periodiclaw",
                                     description="Periodic-law sequences, shell orders, posets and chemotopology")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Log progress to standard error")
    verbosity.add_argument("--debug", action="store_true", help="Log debugging detail to standard error")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for route in ROUTES:
        route.register(subparsers)
    return parser


def configure_logging(verbose: bool = False, debug: bool = False) -> None:
    level = logging.DEBUG if debug else logging.INFO if verbose else config.LOG_LEVEL
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True)


def run(argv: list[str]) -> int:
    """
    Execute one invocation.

    Args:
        argv (list[str]): Arguments without the program name.

    Returns:
        int: 0 on success, 1 on invalid input or usage, 2 when an internal invariant fails.

    Note:
        Results go to standard output, diagnostics to standard error. Argparse exits with 2 on usage
        errors; that status is reserved for invariant failures, so it is mapped to 1.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 0 if err.code in (0, None) else 1
    configure_logging(args.verbose, args.debug)
    try:
        output = args.handler(args)
    except PeriodicLawError as err:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {err.detail}", file=sys.stderr)
        return err.exit_code
    sys.stdout.write(output)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
