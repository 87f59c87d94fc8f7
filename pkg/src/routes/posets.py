import argparse

from src.database.db import get_layout, open_input
from src.repository.elements import load_element_set, load_table
from src.services import formats
from src.services.posets import (dominance_poset, hasse, linear_extension_count, monotonicity_report,
                                 positional_poset)


def register(subparsers) -> None:
    parser = subparsers.add_parser("poset", help="Dominance or positional order on the elements")
    parser.add_argument("--table", help="Property table CSV (default: bundled table)")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--props", nargs="+", metavar="NAME", help="Order by dominance in these properties")
    source.add_argument("--positional", action="store_true", help="Order by (group, period) in the table")
    parser.add_argument("--descending", nargs="+", default=[], metavar="NAME",
                        help="Properties compared in descending direction")
    parser.add_argument("--set", dest="members", help="Element-set CSV restricting the positional order")
    parser.add_argument("--format", dest="output_format", choices=["dot", "json"], default="json")
    parser.add_argument("--extensions", action="store_true", help="Count linear extensions (json only)")
    parser.add_argument("--monotone", metavar="NAME",
                        help="Report how often NAME follows the positional order (json only)")
    parser.add_argument("--orientation", choices=["ascending", "descending"], default="ascending")
    parser.set_defaults(handler=poset)


def poset(args: argparse.Namespace) -> str:
    """
    Emit the Hasse diagram of the requested order as DOT, or as JSON with optional extras.

    Args:
        args (argparse.Namespace): Parsed ``poset`` arguments.

    Returns:
        str: DOT text, or JSON with ``ground``, ``covers`` and, when asked, ``linear_extensions`` and
        ``monotonicity``.
    """
    with open_input(args.table, "elements.csv") as stream:
        table = load_table(stream)
    layout = get_layout()
    if args.positional:
        members = table.symbols
        if args.members:
            with open_input(args.members, "metals.csv") as stream:
                members = load_element_set(stream)
        order = positional_poset(layout, members)
    else:
        orientations = {name: "descending" for name in args.descending}
        order = dominance_poset(table, args.props, orientations)
    diagram = hasse(order)
    if args.output_format == "dot":
        return formats.hasse_to_dot(diagram)

    report = {"ground": list(diagram.ground), "covers": [list(pair) for pair in diagram.covers]}
    if args.extensions:
        report["linear_extensions"] = linear_extension_count(order)
    if args.monotone:
        report["monotonicity"] = monotonicity_report(table, args.monotone, args.orientation, layout).model_dump()
    return formats.dump_json(report)
