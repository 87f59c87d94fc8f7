"""
From property vectors to a finite topology on the element set: distances, agglomerative
clustering, dendrogram cuts, the branch basis and the closure-type operators of the
resulting space.
"""
import logging
import math
from typing import Iterable, Literal

import numpy as np
from scipy.spatial.distance import pdist, squareform

from src.conf import messages
from src.exceptions import PreconditionError
from src.schemas.cluster import CutSelection, Dendrogram, DistanceMatrix, Merge, StandardizedMatrix
from src.schemas.topology import Basis, MinimalNeighborhoods

logger = logging.getLogger(__name__)

Metric = Literal["euclidean", "manhattan"]
Linkage = Literal["single", "complete", "average"]

SCIPY_METRICS = {"euclidean": "euclidean", "manhattan": "cityblock"}
LINKAGES = ("single", "complete", "average")


def distance_matrix(matrix: StandardizedMatrix, metric: Metric = "euclidean") -> DistanceMatrix:
    """
    Pairwise distances between the rows of a (standardized) property matrix.

    Args:
        matrix (StandardizedMatrix): Rows are items, columns the selected properties.
        metric (Metric): ``euclidean`` or ``manhattan``.

    Returns:
        DistanceMatrix: Distances between the complete rows; rows with a missing value are listed in
        ``excluded``.

    Raises:
        PreconditionError: If the metric is unknown or fewer than two rows are complete.
    """
    if metric not in SCIPY_METRICS:
        raise PreconditionError(messages.BAD_METRIC.format(metric=metric))
    usable = [index for index, row in enumerate(matrix.values) if None not in row]
    excluded = tuple(label for index, label in enumerate(matrix.labels) if None in matrix.values[index])
    if excluded:
        logger.warning(messages.MISSING_EXCLUDED.format(symbols=", ".join(excluded)))
    if len(usable) < 2:
        raise PreconditionError(messages.TOO_FEW_ITEMS.format(needed=2, found=len(usable)))
    points = np.array([matrix.values[index] for index in usable], dtype=float)
    square = squareform(pdist(points, metric=SCIPY_METRICS[metric]))
    return DistanceMatrix(labels=tuple(matrix.labels[index] for index in usable),
                          values=tuple(tuple(float(v) for v in row) for row in square),
                          excluded=excluded)


def agglomerative_cluster(distances: DistanceMatrix, linkage: Linkage = "average") -> Dendrogram:
    """
    Agglomerative hierarchical clustering with Lance-Williams distance updates.

    Args:
        distances (DistanceMatrix): At least two items.
        linkage (Linkage): ``single`` (minimum), ``complete`` (maximum) or ``average`` (group mean).

    Returns:
        Dendrogram: Merge heights are the inter-cluster distances at merge time.

    Note:
        Each step merges the closest pair of clusters. Ties go to the pair whose identifiers (the
        smallest leaf label of each cluster) are lexicographically smallest, so the tree does not depend
        on the input row order. Average linkage carries unnormalised distance totals between clusters,
        which keeps its heights exact whenever the input distances are exactly representable.
    """
    if linkage not in LINKAGES:
        raise PreconditionError(messages.BAD_LINKAGE.format(linkage=linkage))
    labels = distances.labels
    size = len(labels)
    if size < 2:
        raise PreconditionError(messages.TOO_FEW_ITEMS.format(needed=2, found=size))

    work = np.array(distances.values, dtype=float)
    totals = work.copy()
    np.fill_diagonal(work, np.inf)
    keys = list(labels)
    counts = [1] * size
    nodes = list(range(size))
    members = [(label,) for label in labels]
    heights = [0.0] * size
    merges = []

    for step in range(size - 1):
        lowest = work.min()
        rows, cols = np.nonzero(work == lowest)
        i, j = min(((r, c) for r, c in zip(rows.tolist(), cols.tolist()) if keys[r] < keys[c]),
                   key=lambda p: (keys[p[0]], keys[p[1]]))
        height = max(float(lowest), heights[i], heights[j])
        merges.append(Merge(left=nodes[i], right=nodes[j], height=height, leaves=members[i] + members[j]))

        active = [k for k in range(size) if counts[k] and k not in (i, j)]
        for k in active:
            if linkage == "single":
                updated = min(work[i, k], work[j, k])
            elif linkage == "complete":
                updated = max(work[i, k], work[j, k])
            else:
                totals[i, k] = totals[k, i] = totals[i, k] + totals[j, k]
                updated = totals[i, k] / ((counts[i] + counts[j]) * counts[k])
            work[i, k] = work[k, i] = updated
        work[j, :] = np.inf
        work[:, j] = np.inf
        counts[i] += counts[j]
        counts[j] = 0
        nodes[i] = size + step
        members[i] = members[i] + members[j]
        heights[i] = height
        keys[i] = min(keys[i], keys[j])
    return Dendrogram(labels=labels, merges=tuple(merges), linkage=linkage)


def _ordered_clusters(dendrogram: Dendrogram, applied: Iterable[Merge]) -> tuple[tuple[str, ...], ...]:
    parent = {label: label for label in dendrogram.labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for merge in applied:
        first = find(merge.leaves[0])
        for label in merge.leaves[1:]:
            parent[find(label)] = first
    groups: dict[str, list[str]] = {}
    for label in dendrogram.labels:
        groups.setdefault(find(label), []).append(label)
    return tuple(tuple(group) for group in groups.values())


def attainable_cluster_counts(dendrogram: Dendrogram) -> list[int]:
    """
    Numbers of clusters reachable by a single horizontal cut, in decreasing order.
    """
    size = dendrogram.size
    counts = {size}
    for height in sorted({merge.height for merge in dendrogram.merges}):
        counts.add(size - sum(1 for merge in dendrogram.merges if merge.height <= height))
    return sorted(counts, reverse=True)


def cut(dendrogram: Dendrogram, k: int | None = None, height: float | None = None) -> tuple[tuple[str, ...], ...]:
    """
    Partition Q by cutting the dendrogram at a height or into ``k`` clusters.

    Args:
        dendrogram (Dendrogram): The tree.
        k (int | None): Requested number of clusters, ``1 <= k <= N``.
        height (float | None): Cut height; merges at or below it are kept.

    Returns:
        tuple[tuple[str, ...], ...]: Clusters, each in label order, ordered by their first member.

    Raises:
        PreconditionError: If neither or both of ``k`` and ``height`` are given, the height is negative,
            or ``k`` is not attainable because of tied heights (the attainable values are listed).
    """
    if (k is None) == (height is None):
        raise PreconditionError(messages.CUT_ARGUMENTS)
    if height is not None:
        if height < 0:
            raise PreconditionError(messages.BAD_HEIGHT.format(height=height))
        return _ordered_clusters(dendrogram, [m for m in dendrogram.merges if m.height <= height])
    attainable = attainable_cluster_counts(dendrogram)
    if k not in attainable:
        raise PreconditionError(messages.UNREACHABLE_K.format(k=k, attainable=attainable))
    if k == dendrogram.size:
        return _ordered_clusters(dendrogram, [])
    for level in sorted({merge.height for merge in dendrogram.merges}):
        applied = [m for m in dendrogram.merges if m.height <= level]
        if dendrogram.size - len(applied) == k:
            return _ordered_clusters(dendrogram, applied)
    raise PreconditionError(messages.UNREACHABLE_K.format(k=k, attainable=attainable))


def select_cut(dendrogram: Dendrogram) -> CutSelection:
    """
    Choose the cut with ``1 < k < N`` clusters maximising the product of cluster populations.

    Ties are resolved toward fewer clusters.

    Raises:
        PreconditionError: If ``N < 3`` or no attainable cut has ``1 < k < N``.
    """
    size = dendrogram.size
    if size < 3:
        raise PreconditionError(messages.TOO_FEW_ITEMS.format(needed=3, found=size))
    attainable = attainable_cluster_counts(dendrogram)
    best = None
    for k in sorted(attainable):
        if not 1 < k < size:
            continue
        clusters = cut(dendrogram, k=k)
        populations = tuple(len(cluster) for cluster in clusters)
        score = math.prod(populations)
        if best is None or score > best.score:
            best = CutSelection(k=k, populations=populations, score=score, clusters=clusters)
    if best is None:
        raise PreconditionError(messages.NO_INTERIOR_CUT.format(attainable=attainable))
    logger.info("Selected cut k=%d with population product %d", best.k, best.score)
    return best


def cophenetic_matrix(dendrogram: Dendrogram) -> DistanceMatrix:
    """
    Height of the lowest common ancestor for every pair of leaves.
    """
    index = {label: position for position, label in enumerate(dendrogram.labels)}
    size = dendrogram.size
    values = [[0.0] * size for _ in range(size)]
    for merge in dendrogram.merges:
        left = dendrogram.node_leaves(merge.left)
        right = dendrogram.node_leaves(merge.right)
        for x in left:
            for y in right:
                values[index[x]][index[y]] = values[index[y]][index[x]] = merge.height
    return DistanceMatrix(labels=dendrogram.labels, values=tuple(tuple(row) for row in values))


def group_recovery(dendrogram: Dendrogram, groups: Iterable[Iterable[str]]) -> list[tuple[tuple[str, ...], bool]]:
    """
    For each reference group, whether it is exactly the leaf set of some node of the tree.
    """
    node_sets = {frozenset([label]) for label in dendrogram.labels}
    node_sets |= {frozenset(merge.leaves) for merge in dendrogram.merges}
    return [(tuple(group), frozenset(group) in node_sets) for group in map(tuple, groups)]


def branch_basis(dendrogram: Dendrogram, include_singletons: bool = False) -> Basis:
    """
    Basis formed by the branches of the dendrogram.

    Args:
        dendrogram (Dendrogram): The tree.
        include_singletons (bool): Add every ``{x}``; the generated topology is then discrete.

    Returns:
        Basis: Leaf sets of all internal nodes (plus singletons when requested) and Q.
    """
    sets: list[tuple[str, ...]] = []
    if include_singletons:
        sets.extend((label,) for label in dendrogram.labels)
    sets.extend(merge.leaves for merge in dendrogram.merges)
    sets.append(dendrogram.labels)
    unique, seen = [], set()
    for members in sets:
        key = frozenset(members)
        if key not in seen:
            seen.add(key)
            unique.append(members)
    return Basis(ground=dendrogram.labels, sets=tuple(unique))


def minimal_neighborhoods(basis: Basis) -> MinimalNeighborhoods:
    """
    ``U_x``: the intersection of all basis sets containing ``x``.
    """
    order = {item: index for index, item in enumerate(basis.ground)}
    families = [frozenset(members) for members in basis.sets]
    neighborhoods = {}
    for point in basis.ground:
        meet = frozenset(basis.ground)
        for members in families:
            if point in members:
                meet &= members
        neighborhoods[point] = tuple(sorted(meet, key=order.__getitem__))
    return MinimalNeighborhoods(ground=basis.ground, neighborhoods=neighborhoods)


def _subset(space: MinimalNeighborhoods, subset: Iterable[str]) -> frozenset[str]:
    subset = frozenset(subset)
    outside = subset - set(space.ground)
    if outside:
        raise PreconditionError(messages.NOT_SUBSET.format(items=sorted(outside)))
    return subset


def _in_order(space: MinimalNeighborhoods, points: Iterable[str]) -> tuple[str, ...]:
    points = set(points)
    return tuple(point for point in space.ground if point in points)


def closure(space: MinimalNeighborhoods, subset: Iterable[str]) -> tuple[str, ...]:
    """
    Points whose minimal neighbourhood meets the subset.
    """
    subset = _subset(space, subset)
    return _in_order(space, (x for x in space.ground if space.of(x) & subset))


def interior(space: MinimalNeighborhoods, subset: Iterable[str]) -> tuple[str, ...]:
    """
    Points of the subset whose minimal neighbourhood stays inside it.
    """
    subset = _subset(space, subset)
    return _in_order(space, (x for x in subset if space.of(x) <= subset))


def boundary(space: MinimalNeighborhoods, subset: Iterable[str]) -> tuple[str, ...]:
    """
    Closure minus interior.
    """
    subset = _subset(space, subset)
    inner = set(interior(space, subset))
    return tuple(x for x in closure(space, subset) if x not in inner)


def derived_set(space: MinimalNeighborhoods, subset: Iterable[str]) -> tuple[str, ...]:
    """
    Accumulation points: ``x`` whose minimal neighbourhood meets the subset outside ``x`` itself.
    """
    subset = _subset(space, subset)
    return _in_order(space, (x for x in space.ground if space.of(x) & (subset - {x})))
