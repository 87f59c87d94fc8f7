"""
Text emitters (and, where a format has one, parsers) for results: CSV series, Newick, DOT and JSON.
"""
import csv
import io
import re
from fractions import Fraction
from typing import Iterable

from dendropy import Tree
from dendropy.utility.error import DataParseError
from pydantic import BaseModel, ValidationError
from pydantic_core import to_json

from src.conf import messages
from src.conf.config import config
from src.exceptions import InputError
from src.schemas.cluster import Dendrogram, Merge
from src.schemas.pattern import StructureMapPoint
from src.schemas.poset import HasseDiagram
from src.schemas.sequence import SequenceRow
from src.schemas.shell import Shell

PLAIN_LABEL = re.compile(r"^[A-Za-z0-9_.\-]+$")


def _writer() -> tuple[io.StringIO, csv.writer]:
    buffer = io.StringIO()
    return buffer, csv.writer(buffer, lineterminator="\n")


def real(value: float) -> str:
    """
    Fixed-precision text for a real, ``config.FLOAT_DIGITS`` significant digits.

    >>> real(0.1 + 0.2)
    '0.3'
    """
    return f"{value:.{config.FLOAT_DIGITS}g}"


def sequences_csv(rows: Iterable[SequenceRow]) -> str:
    buffer, writer = _writer()
    writer.writerow(list(SequenceRow.model_fields))
    for row in rows:
        writer.writerow(row.model_dump().values())
    return buffer.getvalue()


def shells_text(shells: Iterable[Shell]) -> str:
    return " ".join(shell.label for shell in shells) + "\n"


def transitions_csv(transitions: Iterable[tuple[Fraction, tuple[Shell, ...]]]) -> str:
    """
    One row per breakpoint of the ray family: approximate slope, exact slope, enumeration below it.
    """
    buffer, writer = _writer()
    writer.writerow(["k", "k_exact", "order"])
    for k, shells in transitions:
        writer.writerow([real(float(k)), str(k), " ".join(shell.label for shell in shells)])
    return buffer.getvalue()


def structure_map_csv(points: Iterable[StructureMapPoint]) -> str:
    buffer, writer = _writer()
    writer.writerow(["x", "y", "label"])
    for point in points:
        writer.writerow([point.x, point.y, point.label])
    return buffer.getvalue()


def dump_json(value) -> str:
    """
    Pretty JSON for models and plain containers, newline-terminated.
    """
    if isinstance(value, BaseModel):
        return value.model_dump_json(indent=2) + "\n"
    return to_json(value, indent=2).decode() + "\n"


def _label(text: str) -> str:
    if PLAIN_LABEL.match(text):
        return text
    return "'" + text.replace("'", "''") + "'"


def to_newick(dendrogram: Dendrogram) -> str:
    """
    Newick text of a dendrogram.

    Every edge carries its length (parent height minus child height) and every internal node is
    labelled with its own height, so heights survive the round trip exactly.

    Args:
        dendrogram (Dendrogram): The tree.

    Returns:
        str: One line, terminated by ``;`` and a newline.
    """
    size = dendrogram.size
    if size == 1:
        return _label(dendrogram.labels[0]) + ";\n"

    def render(node: int) -> str:
        if node < size:
            return _label(dendrogram.labels[node])
        merge = dendrogram.merges[node - size]
        children = []
        for child in (merge.left, merge.right):
            length = merge.height - dendrogram.node_height(child)
            children.append(f"{render(child)}:{length!r}")
        return f"({','.join(children)}){merge.height!r}"

    return render(2 * size - 2) + ";\n"


def parse_newick(text: str, labels: Iterable[str] | None = None, linkage: str | None = None) -> Dendrogram:
    """
    Read a binary Newick tree back into a dendrogram.

    Args:
        text (str): Newick text. Internal labels, when numeric, are read as node heights; otherwise
            heights are accumulated from branch lengths.
        labels (Iterable[str] | None): Leaf order of the result; leaf order of appearance by default.
        linkage (str | None): Linkage recorded on the result.

    Returns:
        Dendrogram: Merges ordered by height; equal heights keep the clustering tie-break order.

    Raises:
        InputError: If the text does not parse, a node is not binary, or a height cannot be determined.
    """
    try:
        tree = Tree.get(data=text, schema="newick", preserve_underscores=True,
                        suppress_leaf_node_taxa=True, suppress_internal_node_taxa=True)
    except (DataParseError, ValueError) as err:
        raise InputError(messages.BAD_NEWICK.format(reason=err))

    found = [node.label for node in tree.seed_node.leaf_iter()]
    if any(label is None for label in found) or len(set(found)) != len(found):
        raise InputError(messages.BAD_NEWICK.format(reason="leaves need unique labels"))
    labels = tuple(found) if labels is None else tuple(labels)
    if set(labels) != set(found) or len(labels) != len(found):
        raise InputError(messages.BAD_NEWICK.format(reason="leaf labels do not match"))

    # per node: (height, leaves, key) with key the smallest leaf label
    info = {}
    internal = []
    for node in tree.postorder_node_iter():
        children = node.child_nodes()
        if not children:
            info[node] = (0.0, (node.label,), node.label)
            continue
        if len(children) != 2:
            raise InputError(messages.BAD_NEWICK.format(reason=f"node with {len(children)} children"))
        left, right = children
        height = _node_height(node, [info[child][0] for child in children], children)
        info[node] = (height, info[left][1] + info[right][1], min(info[left][2], info[right][2]))
        internal.append(node)

    size = len(labels)
    ids = {node: labels.index(node.label) for node in tree.seed_node.leaf_iter()}
    pending = list(internal)
    merges = []
    while pending:
        ready = [node for node in pending if all(child in ids for child in node.child_nodes())]
        node = min(ready, key=lambda n: (info[n][0], *sorted(info[child][2] for child in n.child_nodes())))
        left, right = node.child_nodes()
        merges.append(Merge(left=ids[left], right=ids[right], height=info[node][0], leaves=info[node][1]))
        ids[node] = size + len(merges) - 1
        pending.remove(node)
    try:
        return Dendrogram(labels=labels, merges=tuple(merges), linkage=linkage)
    except ValidationError as err:
        raise InputError(messages.BAD_NEWICK.format(reason=err.errors()[0]["msg"]))


def _node_height(node, child_heights: list[float], children) -> float:
    if node.label is not None:
        try:
            return float(node.label)
        except ValueError:
            pass
    lengths = [child.edge.length for child in children]
    if any(length is None for length in lengths):
        raise InputError(messages.BAD_NEWICK.format(reason="internal node without height or branch lengths"))
    return max(h + length for h, length in zip(child_heights, lengths))


def _quoted(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dendrogram_to_dot(dendrogram: Dendrogram) -> str:
    """
    Graphviz digraph of a dendrogram, edges from parent to child; internal nodes show their height.
    """
    size = dendrogram.size
    lines = ["digraph dendrogram {", "  rankdir=TB;"]
    for index, label in enumerate(dendrogram.labels):
        lines.append(f"  n{index} [label={_quoted(label)}, shape=box];")
    for index, merge in enumerate(dendrogram.merges):
        lines.append(f"  n{size + index} [label={_quoted(real(merge.height))}, shape=ellipse];")
    for index, merge in enumerate(dendrogram.merges):
        for child in (merge.left, merge.right):
            lines.append(f"  n{size + index} -> n{child};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_to_dot(diagram: HasseDiagram) -> str:
    """
    Graphviz digraph of a Hasse diagram, drawn bottom to top.
    """
    lines = ["digraph hasse {", "  rankdir=BT;"]
    lines.extend(f"  {_quoted(item)};" for item in diagram.ground)
    lines.extend(f"  {_quoted(a)} -> {_quoted(b)};" for a, b in diagram.covers)
    lines.append("}")
    return "\n".join(lines) + "\n"
