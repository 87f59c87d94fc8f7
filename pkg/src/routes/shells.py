import argparse

from src.services import formats
from src.services.shell_orders import (aufbau_configuration, enumerate_shells, order_transitions, parse_order,
                                       period_lengths)


def register(subparsers) -> None:
    parser = subparsers.add_parser("shells", help="Enumerate shells under a filling order")
    parser.add_argument("--order", default="madelung", help="madelung, hydrogenic or ray:K with K <= -1")
    parser.add_argument("--count", type=int, default=14, help="Number of shells (default: %(default)s)")
    parser.add_argument("--transitions", action="store_true",
                        help="Emit the slopes where the ray-family enumeration changes, as CSV")
    parser.set_defaults(handler=shells)

    parser = subparsers.add_parser("aufbau", help="Idealized electron configuration of Z electrons")
    parser.add_argument("--z", type=int, required=True, help="Number of electrons")
    parser.add_argument("--order", default="madelung", help="madelung, hydrogenic or ray:K with K <= -1")
    parser.add_argument("--periods", type=int, metavar="P",
                        help="Print the lengths of the first P periods implied by the order as well")
    parser.set_defaults(handler=aufbau)


def shells(args: argparse.Namespace) -> str:
    """
    Space-separated shell labels, e.g. ``1s 2s 2p 3s 3p 4s``, or the transition table.
    """
    if args.transitions:
        return formats.transitions_csv(order_transitions(args.count))
    return formats.shells_text(enumerate_shells(parse_order(args.order), args.count))


def aufbau(args: argparse.Namespace) -> str:
    order = parse_order(args.order)
    lines = [aufbau_configuration(args.z, order).label]
    if args.periods is not None:
        lines.append(",".join(str(length) for length in period_lengths(order, args.periods)))
    return "\n".join(lines) + "\n"
