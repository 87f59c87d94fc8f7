import argparse

from src.conf import messages
from src.conf.config import config
from src.exceptions import InputError
from src.services import formats
from src.services.sequences import mills_weight, sequence_table, tchitcherin_volume


def register(subparsers) -> None:
    parser = subparsers.add_parser("sequences", help="Period cardinalities and related integer sequences as CSV")
    parser.add_argument("--max", dest="max_n", type=int, default=config.DEFAULT_PERIODS,
                        help="Last period index (default: %(default)s)")
    parser.add_argument("--mills", nargs=2, type=int, metavar=("N", "T"),
                        help="Print Mills' weight 15 (N - 0.9375^T) instead of the table")
    parser.add_argument("--tchitcherin", nargs=2, metavar=("A", "N"),
                        help="Print Tchitcherin's volume A (2 - 0.00535 A N) instead of the table")
    parser.set_defaults(handler=sequences)


def sequences(args: argparse.Namespace) -> str:
    """
    Emit the cardinality table, or one historical formula value.

    Args:
        args (argparse.Namespace): Parsed ``sequences`` arguments.

    Returns:
        str: CSV with one row per period (``n,cardinality,halved,accumulated,shell_capacity,triangular,weise``),
        or a single real value.

    Raises:
        PreconditionError: If an argument is out of range.
    """
    if args.mills:
        return formats.real(mills_weight(*args.mills)) + "\n"
    if args.tchitcherin:
        try:
            weight, n = float(args.tchitcherin[0]), int(args.tchitcherin[1])
        except ValueError as err:
            raise InputError(messages.BAD_OPTIONS.format(reason=err))
        return formats.real(tchitcherin_volume(weight, n)) + "\n"
    return formats.sequences_csv(sequence_table(args.max_n))
