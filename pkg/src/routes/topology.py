import argparse
import csv
import io

from src.database.db import open_input
from src.repository.elements import load_element_set
from src.services.chemotopology import (boundary, branch_basis, closure, derived_set, interior,
                                        minimal_neighborhoods)
from src.routes.cluster import add_pipeline_arguments, build_dendrogram, run_config

OPERATORS = {
    "closure": closure,
    "interior": interior,
    "boundary": boundary,
    "derived": derived_set,
}


def register(subparsers) -> None:
    parser = subparsers.add_parser("topology", help="Closure-type operators of the dendrogram topology")
    add_pipeline_arguments(parser)
    parser.add_argument("--set", dest="members", required=True, help="Element-set CSV (header symbol)")
    parser.add_argument("--op", choices=sorted(OPERATORS), required=True)
    parser.add_argument("--basis-singletons", action="store_true",
                        help="Add every singleton to the basis (the topology becomes discrete)")
    parser.set_defaults(handler=topology)


def topology(args: argparse.Namespace) -> str:
    """
    Apply one operator to a named element set in the space built from the clustering of the table.

    Returns:
        str: The resulting set as an element-set CSV, members in leaf order.

    Raises:
        PreconditionError: If the set names elements that are not leaves of the tree.
    """
    run = run_config(args, basis_singletons=args.basis_singletons, sets=(args.members,))
    with open_input(args.members, "metals.csv") as stream:
        subset = load_element_set(stream)
    space = minimal_neighborhoods(branch_basis(build_dendrogram(run), run.basis_singletons))
    result = OPERATORS[args.op](space, subset)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["symbol"])
    writer.writerows([symbol] for symbol in result)
    return buffer.getvalue()
