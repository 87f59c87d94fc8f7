from pydantic import BaseModel, ConfigDict, Field, model_validator


class StandardizedMatrix(BaseModel):
    """
    Schema representing a column-standardized elements x properties matrix.

    Attributes:
        labels (tuple[str, ...]): Row identifiers (element symbols) in table order.
        properties (tuple[str, ...]): Column names in selection order.
        values (tuple[tuple[float | None, ...], ...]): Standardized values; ``None`` flags a missing entry.
        means (tuple[float, ...]): Column means used for centring.
        scales (tuple[float, ...]): Column sample standard deviations used for scaling.
    """
    labels: tuple[str, ...]
    properties: tuple[str, ...]
    values: tuple[tuple[float | None, ...], ...]
    means: tuple[float, ...] = ()
    scales: tuple[float, ...] = ()
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_shape(self):
        if len(self.values) != len(self.labels):
            raise ValueError("one row of values per label is required")
        width = len(self.properties)
        if any(len(row) != width for row in self.values):
            raise ValueError("every row needs one value per property")
        return self


class DistanceMatrix(BaseModel):
    """
    Schema representing a symmetric, non-negative distance matrix with zero diagonal.

    Attributes:
        labels (tuple[str, ...]): Item identifiers.
        values (tuple[tuple[float, ...], ...]): Square matrix indexed like ``labels``.
        excluded (tuple[str, ...]): Items left out because of missing values.
    """
    labels: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]
    excluded: tuple[str, ...] = ()
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_metric(self):
        size = len(self.labels)
        if len(set(self.labels)) != size:
            raise ValueError("labels must be unique")
        if len(self.values) != size or any(len(row) != size for row in self.values):
            raise ValueError("matrix must be square and match the labels")
        for i in range(size):
            if self.values[i][i] != 0:
                raise ValueError(f"diagonal entry for {self.labels[i]!r} must be 0")
            for j in range(i + 1, size):
                if self.values[i][j] < 0:
                    raise ValueError("distances must be non-negative")
                if self.values[i][j] != self.values[j][i]:
                    raise ValueError("matrix must be symmetric")
        return self

    def distance(self, a: str, b: str) -> float:
        return self.values[self.labels.index(a)][self.labels.index(b)]


class Merge(BaseModel):
    """
    One internal node of a dendrogram.

    Node ids follow the usual linkage-matrix convention: leaves are ``0..N-1`` in label order,
    the i-th merge creates node ``N + i``.
    """
    left: int = Field(ge=0)
    right: int = Field(ge=0)
    height: float = Field(ge=0)
    leaves: tuple[str, ...]
    model_config = ConfigDict(frozen=True)  # noqa


class Dendrogram(BaseModel):
    """
    Schema representing a binary merge tree with merge heights.

    Attributes:
        labels (tuple[str, ...]): Leaf identifiers.
        merges (tuple[Merge, ...]): Internal nodes in merge order; the last one is the root.
        linkage (str | None): Linkage criterion that produced the tree, when known.

    Note:
        Heights never decrease from leaves to root and the leaf sets of a node's children
        partition the node's leaf set.
    """
    labels: tuple[str, ...]
    merges: tuple[Merge, ...]
    linkage: str | None = None
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_tree(self):
        size = len(self.labels)
        if size < 1 or len(set(self.labels)) != size:
            raise ValueError("a dendrogram needs unique leaf labels")
        if len(self.merges) != size - 1:
            raise ValueError(f"{size} leaves need {size - 1} merges, got {len(self.merges)}")
        leaf_sets = [frozenset([label]) for label in self.labels]
        heights = [0.0] * size
        used = set()
        for index, merge in enumerate(self.merges):
            node = size + index
            for child in (merge.left, merge.right):
                if child >= node or child in used:
                    raise ValueError(f"merge {index} uses an unavailable node {child}")
                used.add(child)
            if merge.left == merge.right:
                raise ValueError(f"merge {index} joins a node with itself")
            if merge.height < max(heights[merge.left], heights[merge.right]):
                raise ValueError(f"merge {index} is lower than one of its children")
            joined = leaf_sets[merge.left] | leaf_sets[merge.right]
            if frozenset(merge.leaves) != joined or len(merge.leaves) != len(joined):
                raise ValueError(f"merge {index} leaf set does not match its children")
            leaf_sets.append(joined)
            heights.append(merge.height)
        return self

    @property
    def size(self) -> int:
        return len(self.labels)

    def node_leaves(self, node: int) -> tuple[str, ...]:
        if node < self.size:
            return (self.labels[node],)
        return self.merges[node - self.size].leaves

    def node_height(self, node: int) -> float:
        return 0.0 if node < self.size else self.merges[node - self.size].height


class CutSelection(BaseModel):
    """
    Schema representing the cut chosen by the population-product criterion.

    Attributes:
        k (int): Number of clusters, ``1 < k < N``.
        populations (tuple[int, ...]): Cluster sizes in partition order.
        score (int): Product of the populations.
        clusters (tuple[tuple[str, ...], ...]): The clusters themselves.
    """
    k: int
    populations: tuple[int, ...]
    score: int
    clusters: tuple[tuple[str, ...], ...]
    model_config = ConfigDict(frozen=True)  # noqa

    @model_validator(mode="after")
    def check_selection(self):
        total = sum(self.populations)
        if not 1 < self.k < total:
            raise ValueError(f"k must satisfy 1 < k < N, got k={self.k}, N={total}")
        if len(self.populations) != self.k:
            raise ValueError("one population per cluster is required")
        return self
