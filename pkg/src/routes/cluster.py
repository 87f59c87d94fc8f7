import argparse
import logging

from pydantic import ValidationError

from src.conf import messages
from src.conf.config import config
from src.database.db import open_input
from src.exceptions import InputError, PreconditionError
from src.repository.elements import load_reference_groups, load_table, raw_matrix, standardize
from src.schemas.cluster import Dendrogram
from src.schemas.element import PropertyTable
from src.schemas.run import RunConfig
from src.services import formats
from src.services.chemotopology import (agglomerative_cluster, cut, distance_matrix, group_recovery,
                                        select_cut)

logger = logging.getLogger(__name__)


def add_pipeline_arguments(parser: argparse.ArgumentParser) -> None:
    """
    Options shared by every subcommand that builds a dendrogram from a property table.
    """
    parser.add_argument("--table", help="Property table CSV (default: bundled table)")
    parser.add_argument("--props", nargs="+", default=[], metavar="NAME",
                        help="Properties to use (default: the configured selection on the bundled table, "
                             "every declared property on --table)")
    parser.add_argument("--metric", choices=["euclidean", "manhattan"], default=config.DEFAULT_METRIC)
    parser.add_argument("--linkage", choices=["single", "complete", "average"], default=config.DEFAULT_LINKAGE)
    parser.add_argument("--raw", action="store_true", help="Skip column standardization")


def run_config(args: argparse.Namespace, **extra) -> RunConfig:
    options = {"command": args.command, "table": args.table, "properties": tuple(args.props),
               "metric": args.metric, "linkage": args.linkage, "standardize": not args.raw}
    options.update(extra)
    try:
        return RunConfig(**options)
    except ValidationError as err:
        raise InputError(messages.BAD_OPTIONS.format(reason=err.errors()[0]["msg"]))


def load(run: RunConfig) -> PropertyTable:
    with open_input(run.table, "elements.csv") as stream:
        return load_table(stream)


def default_properties(run: RunConfig, table: PropertyTable) -> tuple[str, ...]:
    """
    Properties clustered when none are given: ``config.DEFAULT_PROPERTIES`` for the bundled table,
    every declared property of a user table.
    """
    if run.table is None:
        return config.DEFAULT_PROPERTIES
    return table.property_names


def build_dendrogram(run: RunConfig, table: PropertyTable | None = None) -> Dendrogram:
    """
    Property table to dendrogram: select, (standardize), measure distances, cluster.

    Args:
        run (RunConfig): Table, property selection, metric and linkage.
        table (PropertyTable | None): Already loaded table; read from ``run.table`` otherwise.

    Returns:
        Dendrogram: Leaves are the elements with all selected values present.
    """
    table = table or load(run)
    selected = run.properties or default_properties(run, table)
    matrix = standardize(table, selected) if run.standardize else raw_matrix(table, selected)
    distances = distance_matrix(matrix, run.metric)
    logger.debug("Clustering %d elements on %d properties", len(distances.labels), len(selected))
    return agglomerative_cluster(distances, run.linkage)


def register(subparsers) -> None:
    parser = subparsers.add_parser("cluster", help="Hierarchical clustering of the elements")
    add_pipeline_arguments(parser)
    parser.add_argument("--format", dest="output_format", choices=["newick", "dot", "json"], default="newick")
    selection = parser.add_mutually_exclusive_group()
    selection.add_argument("--k", type=int, help="Report the partition into K clusters (json only)")
    selection.add_argument("--height", type=float, help="Report the partition at this height (json only)")
    parser.add_argument("--groups", help="Reference groups CSV (source,group) to check for recovery (json only)")
    parser.set_defaults(handler=cluster)


def cluster(args: argparse.Namespace) -> str:
    """
    Emit the dendrogram as Newick, DOT or JSON.

    The JSON form also carries the excluded elements, the chosen partition (``--k``, ``--height``, or
    the population-product rule by default) and, with ``--groups``, which reference groups the tree recovers.
    """
    cut_policy = "k" if args.k is not None else "height" if args.height is not None else "auto"
    run = run_config(args, cut=cut_policy, k=args.k, height=args.height, output_format=args.output_format)
    table = load(run)
    dendrogram = build_dendrogram(run, table)
    if run.output_format == "newick":
        return formats.to_newick(dendrogram)
    if run.output_format == "dot":
        return formats.dendrogram_to_dot(dendrogram)

    included = set(dendrogram.labels)
    report = {"linkage": dendrogram.linkage, "metric": run.metric, "labels": list(dendrogram.labels),
              "excluded": [symbol for symbol in table.symbols if symbol not in included],
              "merges": [merge.model_dump() for merge in dendrogram.merges],
              "newick": formats.to_newick(dendrogram).strip()}
    if run.cut == "auto":
        try:
            report["cut"] = select_cut(dendrogram).model_dump()
        except PreconditionError as err:
            logger.warning(err.detail)
            report["cut"] = None
    else:
        clusters = cut(dendrogram, k=run.k, height=run.height)
        report["cut"] = {"k": len(clusters), "clusters": clusters}
    if args.groups:
        with open_input(args.groups, "reference_groups.csv") as stream:
            groups = load_reference_groups(stream)
        recovered = group_recovery(dendrogram, [members for _, members in groups])
        report["recovery"] = [{"source": source, "group": list(members), "recovered": found}
                              for (source, _), (members, found) in zip(groups, recovered)]
    return formats.dump_json(report)
