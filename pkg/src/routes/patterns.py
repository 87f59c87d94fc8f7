import argparse
import csv
import io
import logging

from src.conf.config import config
from src.database.db import get_layout, open_input
from src.repository.compounds import load_compounds
from src.repository.elements import load_element_set
from src.routes.cluster import add_pipeline_arguments, build_dendrogram, load, run_config
from src.services import formats
from src.services.patterns import (inert_pair_candidates, pattern_pairs, pattern_score, pettifor_rank,
                                   pettifor_scale, singularity_flags, structure_map)

logger = logging.getLogger(__name__)

PAIR_KINDS = ("diagonal", "knights_move", "secondary_periodicity")
FLAG_KINDS = ("singularity", "inert_pair")


def register(subparsers) -> None:
    parser = subparsers.add_parser("patterns", help="Element pairs and flags predicted by positional patterns")
    add_pipeline_arguments(parser)
    parser.add_argument("--kind", choices=PAIR_KINDS + FLAG_KINDS, required=True)
    parser.add_argument("--set", dest="members", help="Element-set CSV (default: every element of the table)")
    parser.add_argument("--widen", action="store_true", help="Diagonal pairs from every period and group")
    parser.add_argument("--score", action="store_true", help="Score the pairs against the dendrogram (json)")
    parser.add_argument("--quantile", type=float, default=config.DEFAULT_QUANTILE)
    parser.add_argument("--predicate", choices=["cophenetic", "cut"], default="cophenetic")
    parser.set_defaults(handler=patterns)

    parser = subparsers.add_parser("pettifor", help="The Pettifor scale and structure-map points")
    parser.add_argument("--map", dest="compounds", help="Compounds CSV (elementA,elementB,label) to place on the map")
    parser.add_argument("--symbol", help="Print the rank of one symbol")
    parser.set_defaults(handler=pettifor)


def _csv(header: list[str], rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def patterns(args: argparse.Namespace) -> str:
    """
    List pattern pairs (CSV), flagged elements (element-set CSV) or, with ``--score``, a JSON score.

    When scoring, only pairs whose members are leaves of the dendrogram are considered; members
    dropped from the tree for missing values are logged.
    """
    run = run_config(args)
    table = load(run)
    members = table.symbols
    if args.members:
        with open_input(args.members, "metals.csv") as stream:
            members = load_element_set(stream)
    layout = get_layout()

    if args.kind in FLAG_KINDS:
        flag = singularity_flags if args.kind == "singularity" else inert_pair_candidates
        return _csv(["symbol"], ([symbol] for symbol in flag(layout, members)))

    if not args.score:
        pairs = pattern_pairs(layout, members, args.kind, widen=args.widen)
        return _csv(["kind", "first", "second", "first_group", "first_period", "second_group", "second_period"],
                    ([p.kind, p.first, p.second, *p.first_cell, *p.second_cell] for p in pairs))

    dendrogram = build_dendrogram(run, table)
    leaves = set(dendrogram.labels)
    dropped = [symbol for symbol in members if symbol not in leaves]
    if dropped:
        logger.warning("Not in the dendrogram, left out of the score: %s", ", ".join(dropped))
    pairs = pattern_pairs(layout, [symbol for symbol in members if symbol in leaves], args.kind, widen=args.widen)
    return formats.dump_json(pattern_score(pairs, dendrogram, args.quantile, args.predicate))


def pettifor(args: argparse.Namespace) -> str:
    """
    Emit the scale as ``rank,symbol`` CSV, a single rank, or structure-map points as ``x,y,label`` CSV.

    Malformed compound rows and rows naming symbols off the scale are reported on standard error;
    the remaining rows are still emitted.
    """
    if args.symbol:
        return f"{pettifor_rank(args.symbol)}\n"
    if not args.compounds:
        return _csv(["rank", "symbol"], enumerate(pettifor_scale().order, start=1))
    with open_input(args.compounds, "compounds.csv") as stream:
        rows, errors = load_compounds(stream)
    points, unplaced = structure_map(rows)
    for error in sorted(errors + unplaced, key=lambda e: e.row):
        logger.warning(str(error))
    return formats.structure_map_csv(points)
