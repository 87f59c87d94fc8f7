import logging
from typing import Iterable, Mapping

import networkx as nx
from pydantic import ValidationError

from src.conf import messages
from src.conf.config import config
from src.exceptions import InvariantError, LookupFailure, PreconditionError
from src.repository.elements import check_properties
from src.schemas.element import LayoutFixture, PropertyTable
from src.schemas.poset import HasseDiagram, MonotonicityReport, OrderCheck, Orientation, Poset

logger = logging.getLogger(__name__)


def verify_partial_order(ground: Iterable[str], relation: Iterable[tuple[str, str]]) -> OrderCheck:
    """
    Check reflexivity, antisymmetry and transitivity of a relation on ``ground``.

    Args:
        ground (Iterable[str]): The items.
        relation (Iterable[tuple[str, str]]): Pairs ``(a, b)`` read as ``a <= b``.

    Returns:
        OrderCheck: ``holds`` is True iff all three axioms hold; otherwise the first failing axiom
        (in that order) with a witness.

    Raises:
        PreconditionError: If a pair uses an item outside ``ground``.
    """
    ground = list(ground)
    relation = set(relation)
    items = set(ground)
    for pair in sorted(relation):
        if pair[0] not in items or pair[1] not in items:
            raise PreconditionError(messages.PAIR_OUTSIDE_GROUND.format(pair=pair))
    for a in ground:
        if (a, a) not in relation:
            return OrderCheck(holds=False, axiom="reflexivity", witness=(a,))
    for a, b in sorted(relation):
        if a != b and (b, a) in relation:
            return OrderCheck(holds=False, axiom="antisymmetry", witness=(a, b))
    successors: dict[str, set[str]] = {item: set() for item in ground}
    for a, b in relation:
        successors[a].add(b)
    for a in ground:
        for b in sorted(successors[a]):
            for c in sorted(successors[b]):
                if c not in successors[a]:
                    return OrderCheck(holds=False, axiom="transitivity", witness=(a, b, c))
    return OrderCheck(holds=True)


def _poset(ground: Iterable[str], leq: Iterable[tuple[str, str]]) -> Poset:
    try:
        return Poset(ground=tuple(ground), leq=frozenset(leq))
    except ValidationError as err:
        raise InvariantError(messages.INTERNAL_ERROR.format(reason=err.errors()[0]["msg"]))


def dominance_poset(table: PropertyTable, selected: Iterable[str],
                    orientations: Mapping[str, Orientation] | None = None) -> Poset:
    """
    Order elements by simultaneous dominance in the selected properties.

    Args:
        table (PropertyTable): Source table; every element joins the ground set.
        selected (Iterable[str]): Property names, at least one.
        orientations (Mapping[str, Orientation] | None): Per-property direction; ``descending`` flips
            the comparison. Defaults to ascending.

    Returns:
        Poset: ``a <= b`` iff ``a`` is not above ``b`` in every selected property. A missing value makes a
        pair incomparable, and distinct elements tied in every property are left incomparable.

    Raises:
        LookupFailure: If a property is unknown.
    """
    selected = check_properties(table, selected)
    orientations = dict(orientations or {})
    for name in orientations:
        if name not in selected:
            raise LookupFailure(messages.UNKNOWN_PROPERTY.format(name=name))
    signs = [(-1.0 if orientations.get(name, "ascending") == "descending" else 1.0) for name in selected]
    vectors = {}
    for element in table.elements:
        values = [element.value(name) for name in selected]
        vectors[element.symbol] = None if None in values else tuple(s * v for s, v in zip(signs, values))
    leq = {(symbol, symbol) for symbol in table.symbols}
    for a in table.symbols:
        va = vectors[a]
        if va is None:
            continue
        for b in table.symbols:
            vb = vectors[b]
            if a == b or vb is None or va == vb:
                continue
            if all(x <= y for x, y in zip(va, vb)):
                leq.add((a, b))
    return _poset(table.symbols, leq)


def positional_members(layout: LayoutFixture, members: Iterable[str]) -> dict[str, tuple[int, int]]:
    """
    Resolve members to their (group, period) cells, dropping (with a warning) those without a group.

    Raises:
        LookupFailure: If a member is not in the layout.
    """
    cells, excluded = {}, []
    for symbol in members:
        found = layout.find(symbol)
        if found is None:
            raise LookupFailure(messages.UNKNOWN_SYMBOL.format(symbol=symbol))
        cell = found[1]
        if cell.group is None:
            excluded.append(symbol)
            continue
        cells[symbol] = (cell.group, cell.period)
    if excluded:
        logger.warning(messages.NO_GROUP_EXCLUDED.format(symbols=", ".join(excluded)))
    return cells


def positional_poset(layout: LayoutFixture, members: Iterable[str]) -> Poset:
    """
    Product order on table coordinates: ``a <= b`` iff ``group(a) <= group(b)`` and ``period(a) <= period(b)``.

    Args:
        layout (LayoutFixture): Table layout.
        members (Iterable[str]): Element symbols; f-block members are excluded with a warning.

    Returns:
        Poset: Order on the members that carry a group.
    """
    cells = positional_members(layout, members)
    leq = {(a, b) for a, (ga, pa) in cells.items() for b, (gb, pb) in cells.items() if ga <= gb and pa <= pb}
    return _poset(cells, leq)


def _strict_graph(poset: Poset) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(poset.ground)
    graph.add_edges_from(poset.strict_pairs())
    return graph


def hasse(poset: Poset) -> HasseDiagram:
    """
    Cover relation (transitive reduction of the strict order).

    Args:
        poset (Poset): A valid poset.

    Returns:
        HasseDiagram: Covers ordered by the ground presentation order.
    """
    reduction = nx.transitive_reduction(_strict_graph(poset))
    position = {item: index for index, item in enumerate(poset.ground)}
    covers = sorted(reduction.edges(), key=lambda p: (position[p[0]], position[p[1]]))
    return HasseDiagram(ground=poset.ground, covers=tuple(covers))


def reflexive_transitive_closure(diagram: HasseDiagram) -> frozenset[tuple[str, str]]:
    """
    Rebuild the full order relation from its covers.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(diagram.ground)
    graph.add_edges_from(diagram.covers)
    closure = nx.transitive_closure(graph, reflexive=True)
    return frozenset(closure.edges())


def monotonicity_report(table: PropertyTable, name: str, orientation: Orientation,
                        layout: LayoutFixture) -> MonotonicityReport:
    """
    Measure how generally a property follows the positional order of the table.

    Args:
        table (PropertyTable): Source of the property values.
        name (str): Property to check.
        orientation (Orientation): ``ascending`` expects ``value(a) <= value(b)`` for every cover ``a < b``;
            ``descending`` expects ``value(a) >= value(b)``.
        layout (LayoutFixture): Table layout used for the positional order.

    Returns:
        MonotonicityReport: Fraction of cover pairs (with both values present) that are monotone, and
        the violating pairs. The report does not judge the fraction.
    """
    check_properties(table, [name])
    poset = positional_poset(layout, table.symbols)
    if not poset.ground:
        raise PreconditionError(messages.EMPTY_POSITIONAL)
    checked, violations = 0, []
    for a, b in hasse(poset).covers:
        va, vb = table.element(a).value(name), table.element(b).value(name)
        if va is None or vb is None:
            continue
        checked += 1
        monotone = va <= vb if orientation == "ascending" else va >= vb
        if not monotone:
            violations.append((a, b))
    fraction = 1.0 if checked == 0 else (checked - len(violations)) / checked
    return MonotonicityReport(property=name, orientation=orientation, fraction=fraction, checked=checked,
                              violations=tuple(violations))


def linear_extension_count(poset: Poset) -> int:
    """
    Number of total orders extending the poset, by exhaustive enumeration.

    Raises:
        PreconditionError: If the ground set has more than ``config.MAX_LINEAR_EXTENSION_GROUND`` items.
    """
    limit = config.MAX_LINEAR_EXTENSION_GROUND
    if len(poset.ground) > limit:
        raise PreconditionError(messages.GROUND_TOO_LARGE.format(limit=limit, size=len(poset.ground)))
    if not poset.ground:
        return 1
    graph = nx.DiGraph()
    graph.add_nodes_from(poset.ground)
    graph.add_edges_from(hasse(poset).covers)
    return sum(1 for _ in nx.all_topological_sorts(graph))
