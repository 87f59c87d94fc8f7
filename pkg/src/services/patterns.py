"""
Positional similarity patterns of the table and the Pettifor phenomenological order.
"""
import logging
from typing import Iterable

import numpy as np

from src.conf import messages
from src.conf.config import config
from src.exceptions import LookupFailure, PreconditionError
from src.schemas.cluster import Dendrogram
from src.schemas.element import LayoutFixture
from src.schemas.pattern import (SHORT_PERIOD_GAP, CompoundRow, PairVerdict, PatternPair, PatternScore,
                                 PettiforScale, Predicate, RowError, StructureMapPoint)
from src.services.chemotopology import cophenetic_matrix, select_cut
from src.services.posets import positional_members

logger = logging.getLogger(__name__)

# rank 1 first; Y is not placed on the scale
PETTIFOR_ORDER = (
    "He", "Ne", "Ar", "Kr", "Xe", "Rn", "Fr", "Cs", "Rb", "K", "Na", "Li", "Ra", "Ba", "Sr", "Ca", "Yb", "Eu",
    "Sc", "Lu", "Tm", "Er", "Ho", "Dy", "Tb", "Gd", "Sm", "Pm", "Nd", "Pr", "Ce", "La", "Lr", "No", "Md", "Fm",
    "Es", "Cf", "Bk", "Cm", "Am", "Pu", "Np", "U", "Pa", "Th", "Ac", "Zr", "Hf", "Ti", "Ta", "Nb", "V", "W",
    "Mo", "Cr", "Re", "Tc", "Mn", "Fe", "Ru", "Os", "Co", "Rh", "Ir", "Ni", "Pt", "Pd", "Au", "Ag", "Cu", "Mg",
    "Hg", "Cd", "Zn", "Be", "Tl", "In", "Al", "Ga", "Pb", "Sn", "Ge", "Si", "B", "Bi", "Sb", "As", "P", "Po",
    "Te", "Se", "S", "C", "At", "I", "Br", "Cl", "N", "O", "F", "H",
)

CLASSICAL_DIAGONAL_PERIOD = 2
CLASSICAL_DIAGONAL_GROUPS = (1, 2, 13)
INERT_PAIR_GROUPS = range(13, 17)
INERT_PAIR_MIN_PERIOD = 5
SINGULAR_PERIOD = 2

KNIGHTS_MOVE_QUALIFIER = "same oxidation state"


def _member_cells(layout: LayoutFixture, members: Iterable[str]) -> list[tuple[str, int, int]]:
    # grouped members as (symbol, group, period), in atomic-number order
    cells = positional_members(layout, members)
    ordered = sorted(cells, key=lambda symbol: layout.find(symbol)[0])
    return [(symbol, *cells[symbol]) for symbol in ordered]


def _diagonal_partner(layout: LayoutFixture, group: int, period: int) -> tuple[str, int] | None:
    start, end = SHORT_PERIOD_GAP
    target = end if (group, period) == start else (group + 1, period + 1)
    symbol = layout.at(*target)
    return None if symbol is None else (symbol, target[0])


def diagonal_pairs(layout: LayoutFixture, members: Iterable[str], widen: bool = False) -> list[PatternPair]:
    """
    Pairs of an element with its lower-right neighbour.

    Args:
        layout (LayoutFixture): Table layout.
        members (Iterable[str]): Candidate elements; f-block members are dropped with a warning.
        widen (bool): Look at every period and group instead of the classical Li-Mg, Be-Al and B-Si cases.

    Returns:
        list[PatternPair]: Pairs with both members present, ordered by the first member's atomic number.

    Note:
        The lower-right neighbour of ``(g, m)`` is ``(g + 1, m + 1)``. Be is the one exception and pairs
        with Al across the empty cells of period 3.
    """
    cells = _member_cells(layout, members)
    present = {symbol for symbol, _, _ in cells}
    pairs = []
    for symbol, group, period in cells:
        if not widen and (period != CLASSICAL_DIAGONAL_PERIOD or group not in CLASSICAL_DIAGONAL_GROUPS):
            continue
        partner = _diagonal_partner(layout, group, period)
        if partner is None or partner[0] not in present:
            continue
        pairs.append(PatternPair(kind="diagonal", first=symbol, second=partner[0], first_cell=(group, period),
                                 second_cell=(partner[1], period + 1)))
    return pairs


def _offset_pairs(layout: LayoutFixture, members: Iterable[str], kind: str, group_step: int, period_step: int,
                  qualifier: str | None = None) -> list[PatternPair]:
    cells = _member_cells(layout, members)
    by_cell = {(group, period): symbol for symbol, group, period in cells}
    pairs = []
    for symbol, group, period in cells:
        target = (group + group_step, period + period_step)
        partner = by_cell.get(target)
        if partner is not None:
            pairs.append(PatternPair(kind=kind, first=symbol, second=partner, first_cell=(group, period),
                                     second_cell=target, qualifier=qualifier))
    return pairs


def knights_move_pairs(layout: LayoutFixture, members: Iterable[str]) -> list[PatternPair]:
    """
    Pairs ``(g, m)`` and ``(g + 2, m + 1)``, e.g. Zn and Sn.

    The same-oxidation-state condition is recorded as the pair's qualifier and not checked.
    """
    return _offset_pairs(layout, members, "knights_move", 2, 1, KNIGHTS_MOVE_QUALIFIER)


def secondary_periodicity_pairs(layout: LayoutFixture, members: Iterable[str]) -> list[PatternPair]:
    """
    Same-group pairs two periods apart, e.g. P and Sb.
    """
    return _offset_pairs(layout, members, "secondary_periodicity", 0, 2)


def singularity_flags(layout: LayoutFixture, members: Iterable[str]) -> tuple[str, ...]:
    """
    Second-period members, expected to stand apart from the rest of their group.
    """
    return tuple(symbol for symbol, _, period in _member_cells(layout, members) if period == SINGULAR_PERIOD)


def inert_pair_candidates(layout: LayoutFixture, members: Iterable[str]) -> tuple[str, ...]:
    """
    Members of groups 13-16 in period 5 or later.

    Only a candidate filter: oxidation states are not modelled, so the effect itself is not tested.
    """
    return tuple(symbol for symbol, group, period in _member_cells(layout, members)
                 if group in INERT_PAIR_GROUPS and period >= INERT_PAIR_MIN_PERIOD)


def pattern_pairs(layout: LayoutFixture, members: Iterable[str], kind: str, widen: bool = False) -> list[PatternPair]:
    members = tuple(members)
    if kind == "diagonal":
        return diagonal_pairs(layout, members, widen=widen)
    if kind == "knights_move":
        return knights_move_pairs(layout, members)
    if kind == "secondary_periodicity":
        return secondary_periodicity_pairs(layout, members)
    raise PreconditionError(messages.BAD_PATTERN.format(kind=kind))


def pattern_score(pairs: Iterable[PatternPair], dendrogram: Dendrogram, q: float | None = None,
                  predicate: Predicate = "cophenetic") -> PatternScore:
    """
    Score pattern pairs against a dendrogram.

    Args:
        pairs (Iterable[PatternPair]): Pairs to check.
        dendrogram (Dendrogram): Similarity structure; every pair member must be one of its leaves.
        q (float | None): Quantile in ``(0, 1]``; defaults to ``config.DEFAULT_QUANTILE``.
        predicate (Predicate): ``cophenetic`` confirms a pair whose cophenetic distance is at most the
            ``q``-quantile of all pairwise cophenetic distances; ``cut`` confirms a pair that shares a
            cluster at the selected cut.

    Returns:
        PatternScore: Confirmed fraction plus one verdict per pair.

    Raises:
        PreconditionError: If ``q`` is out of range or a pair member is not a leaf.
    """
    q = config.DEFAULT_QUANTILE if q is None else q
    if not 0 < q <= 1:
        raise PreconditionError(messages.BAD_QUANTILE.format(q=q))
    pairs = list(pairs)
    leaves = set(dendrogram.labels)
    missing = sorted({symbol for pair in pairs for symbol in pair.symbols} - leaves)
    if missing:
        raise PreconditionError(messages.NOT_A_LEAF.format(items=missing))

    cophenetic = cophenetic_matrix(dendrogram)
    upper = np.triu_indices(dendrogram.size, k=1)
    # nearest-rank quantile: always one of the observed distances
    threshold = float(np.quantile(np.array(cophenetic.values)[upper], q, method="inverted_cdf"))
    membership = {}
    if predicate == "cut":
        for index, cluster in enumerate(select_cut(dendrogram).clusters):
            membership.update({symbol: index for symbol in cluster})

    verdicts = []
    for pair in pairs:
        distance = cophenetic.distance(pair.first, pair.second)
        if predicate == "cut":
            confirmed = membership[pair.first] == membership[pair.second]
        else:
            confirmed = distance <= threshold
        verdicts.append(PairVerdict(pair=pair, distance=distance, confirmed=confirmed))
    fraction = sum(v.confirmed for v in verdicts) / len(verdicts) if verdicts else 0.0
    logger.info("%d of %d pairs confirmed (%s)", sum(v.confirmed for v in verdicts), len(verdicts), predicate)
    return PatternScore(fraction=fraction, threshold=threshold if predicate == "cophenetic" else None,
                        predicate=predicate, verdicts=tuple(verdicts))


def pettifor_scale() -> PettiforScale:
    return PettiforScale(order=PETTIFOR_ORDER)


def pettifor_rank(symbol: str, scale: PettiforScale | None = None) -> int:
    """
    1-based position of ``symbol`` on the Pettifor scale.

    >>> pettifor_rank("He"), pettifor_rank("H")
    (1, 102)

    Raises:
        LookupFailure: If the symbol is not on the scale.
    """
    ranks = (scale or pettifor_scale()).ranks
    if symbol not in ranks:
        raise LookupFailure(messages.PETTIFOR_UNKNOWN.format(symbol=symbol))
    return ranks[symbol]


def structure_map(rows: Iterable[CompoundRow],
                  scale: PettiforScale | None = None) -> tuple[list[StructureMapPoint], list[RowError]]:
    """
    Place binary compounds on Pettifor axes.

    Args:
        rows (Iterable[CompoundRow]): Compounds ``(A, B, label)``.
        scale (PettiforScale | None): Axis order; the bundled scale by default.

    Returns:
        tuple[list[StructureMapPoint], list[RowError]]: Points ``(rank A, rank B, label)`` for the valid
        rows, and one error per row naming a symbol missing from the scale.
    """
    scale = scale or pettifor_scale()
    points, errors = [], []
    for compound in rows:
        try:
            x = pettifor_rank(compound.first, scale)
            y = pettifor_rank(compound.second, scale)
        except LookupFailure as err:
            errors.append(RowError(row=compound.row, reason=err.detail))
            continue
        points.append(StructureMapPoint(x=x, y=y, label=compound.label))
    if errors:
        logger.warning("%d compound rows skipped", len(errors))
    return points, errors
