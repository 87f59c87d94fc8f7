import itertools
import math
import random
import unittest

from src.conf import messages
from src.database.db import datasets, get_fixture_table
from src.exceptions import PreconditionError
from src.repository.elements import load_reference_groups, standardize
from src.routes.cluster import build_dendrogram
from src.schemas.cluster import DistanceMatrix, StandardizedMatrix
from src.schemas.run import RunConfig
from src.schemas.topology import Basis
from src.services.chemotopology import (agglomerative_cluster, attainable_cluster_counts, boundary, branch_basis,
                                        closure, cophenetic_matrix, cut, derived_set, distance_matrix,
                                        group_recovery, interior, minimal_neighborhoods, select_cut)
from src.services.formats import to_newick
from tests.conftest import FOUR_POINT_DISTANCES

FIXTURE_PROPERTIES = ["atomic_mass", "ionization_energy", "electron_affinity", "covalent_radius", "melting_point",
                      "boiling_point", "density"]


def matrix_of(rows: dict[str, tuple]) -> StandardizedMatrix:
    width = len(next(iter(rows.values())))
    return StandardizedMatrix(labels=tuple(rows), properties=tuple(f"p{i}" for i in range(width)),
                              values=tuple(rows.values()))


def integer_distances(rng: random.Random, size: int, high: int = 12) -> DistanceMatrix:
    values = [[0.0] * size for _ in range(size)]
    for i, j in itertools.combinations(range(size), 2):
        values[i][j] = values[j][i] = float(rng.randint(1, high))
    return DistanceMatrix(labels=tuple(f"e{i:02d}" for i in range(size)), values=tuple(map(tuple, values)))


def point_distances(rng: random.Random, size: int) -> DistanceMatrix:
    rows = {f"e{i:02d}": (rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)) for i in range(size)}
    return distance_matrix(matrix_of(rows))


def naive_cluster(distances: DistanceMatrix, linkage: str) -> list[tuple[float, frozenset]]:
    """
    Recompute every inter-cluster distance from the raw matrix at every step.
    """
    index = {label: i for i, label in enumerate(distances.labels)}
    clusters = [(label,) for label in distances.labels]
    merges = []
    while len(clusters) > 1:
        best = None
        for a, b in itertools.combinations(clusters, 2):
            pairs = [distances.values[index[x]][index[y]] for x in a for y in b]
            if linkage == "single":
                value = min(pairs)
            elif linkage == "complete":
                value = max(pairs)
            else:
                value = sum(pairs) / (len(a) * len(b))
            key = (value, *sorted((min(a), min(b))))
            if best is None or key < best[0]:
                best = (key, a, b)
        (value, _, _), a, b = best
        clusters = [c for c in clusters if c not in (a, b)] + [a + b]
        merges.append((value, frozenset(a + b)))
    return merges


def tree_signature(dendrogram) -> list[tuple[float, frozenset]]:
    return [(merge.height, frozenset(merge.leaves)) for merge in dendrogram.merges]


def all_masks(size: int):
    return range(1 << size)


def enumerate_topology(size: int, basis_masks: list[int]) -> set[int]:
    opens = set(basis_masks)
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(list(opens), 2):
            meet = a & b
            if meet and meet not in opens:
                opens.add(meet)
                changed = True
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(list(opens), 2):
            if a | b not in opens:
                opens.add(a | b)
                changed = True
    return opens | {0}


def random_basis(rng: random.Random) -> tuple[Basis, list[int]]:
    size = rng.randint(1, 8)
    ground = tuple(f"q{i}" for i in range(size))
    masks = {(1 << size) - 1}
    for _ in range(rng.randint(0, 6)):
        mask = rng.randint(1, (1 << size) - 1)
        masks.add(mask)
    masks = sorted(masks)
    sets = tuple(tuple(ground[i] for i in range(size) if mask >> i & 1) for mask in masks)
    return Basis(ground=ground, sets=sets), masks


def to_mask(ground: tuple[str, ...], members) -> int:
    members = set(members)
    return sum(1 << i for i, item in enumerate(ground) if item in members)


def from_mask(ground: tuple[str, ...], mask: int) -> tuple[str, ...]:
    return tuple(item for i, item in enumerate(ground) if mask >> i & 1)


class TestDistances(unittest.TestCase):
    def test_identical_rows(self):
        result = distance_matrix(matrix_of({"a": (1.0, 2.0), "b": (1.0, 2.0)}))
        self.assertEqual(result.distance("a", "b"), 0.0)

    def test_three_four_five(self):
        result = distance_matrix(matrix_of({"a": (0.0, 0.0), "b": (3.0, 4.0)}))
        self.assertEqual(result.distance("a", "b"), 5.0)
        manhattan = distance_matrix(matrix_of({"a": (0.0, 0.0), "b": (3.0, 4.0)}), "manhattan")
        self.assertEqual(manhattan.distance("a", "b"), 7.0)

    def test_missing_rows_excluded(self):
        result = distance_matrix(matrix_of({"a": (0.0,), "b": (None,), "c": (1.0,)}))
        self.assertEqual(result.labels, ("a", "c"))
        self.assertEqual(result.excluded, ("b",))

    def test_too_few_rows(self):
        with self.assertRaises(PreconditionError):
            distance_matrix(matrix_of({"a": (0.0,), "b": (None,)}))

    def test_unknown_metric(self):
        with self.assertRaises(PreconditionError):
            distance_matrix(matrix_of({"a": (0.0,), "b": (1.0,)}), "cosine")

    def test_fixture_matches_double_loop(self):
        matrix = standardize(get_fixture_table(), FIXTURE_PROPERTIES)
        result = distance_matrix(matrix)
        for i, row_i in enumerate(matrix.values):
            for j, row_j in enumerate(matrix.values):
                expected = math.sqrt(sum((x - y) ** 2 for x, y in zip(row_i, row_j)))
                self.assertAlmostEqual(result.values[i][j], expected, places=12)


class TestClustering(unittest.TestCase):
    def test_points_on_a_line(self):
        for linkage in ("single", "complete", "average"):
            tree = agglomerative_cluster(distance_matrix(matrix_of({"p": (0.0,), "q": (1.0,), "r": (10.0,)})),
                                         linkage)
            self.assertEqual(tree.merges[0].leaves, ("p", "q"))
            self.assertEqual(tree.merges[0].height, 1.0)

    def test_equidistant_points_merge_in_label_order(self):
        labels = ("d", "b", "a", "c")
        values = tuple(tuple(0.0 if i == j else 1.0 for j in range(4)) for i in range(4))
        tree = agglomerative_cluster(DistanceMatrix(labels=labels, values=values), "single")
        self.assertEqual([merge.leaves for merge in tree.merges], [("a", "b"), ("a", "b", "c"), ("a", "b", "c", "d")])

    def test_four_points(self):
        tree = agglomerative_cluster(FOUR_POINT_DISTANCES, "average")
        self.assertEqual([(m.left, m.right, m.height) for m in tree.merges], [(0, 1, 1.0), (4, 2, 2.0), (5, 3, 3.0)])

    def test_matches_naive_reference(self):
        rng = random.Random(7)
        for trial in range(100):
            distances = integer_distances(rng, rng.randint(2, 20))
            for linkage in ("single", "complete", "average"):
                tree = agglomerative_cluster(distances, linkage)
                self.assertEqual(tree_signature(tree), naive_cluster(distances, linkage), (trial, linkage))

    def test_row_order_does_not_matter(self):
        rng = random.Random(11)
        for _ in range(20):
            distances = integer_distances(rng, 9, high=4)
            order = list(range(9))
            rng.shuffle(order)
            shuffled = DistanceMatrix(labels=tuple(distances.labels[i] for i in order),
                                      values=tuple(tuple(distances.values[i][j] for j in order) for i in order))
            for linkage in ("single", "complete", "average"):
                self.assertEqual(tree_signature(agglomerative_cluster(distances, linkage)),
                                 tree_signature(agglomerative_cluster(shuffled, linkage)))

    def test_ultrametric(self):
        rng = random.Random(3)
        for size in range(3, 13):
            distances = point_distances(rng, size)
            for linkage in ("single", "complete"):
                coph = cophenetic_matrix(agglomerative_cluster(distances, linkage)).values
                for x, y, z in itertools.permutations(range(size), 3):
                    self.assertLessEqual(coph[x][z], max(coph[x][y], coph[y][z]))

    def test_bad_linkage(self):
        with self.assertRaises(PreconditionError):
            agglomerative_cluster(FOUR_POINT_DISTANCES, "ward")


class TestCuts(unittest.TestCase):
    def setUp(self) -> None:
        self.tree = agglomerative_cluster(FOUR_POINT_DISTANCES, "average")

    def test_extremes(self):
        self.assertEqual(cut(self.tree, k=1), (("a", "b", "c", "d"),))
        self.assertEqual(cut(self.tree, k=4), (("a",), ("b",), ("c",), ("d",)))

    def test_two_clusters(self):
        self.assertEqual(cut(self.tree, k=2), (("a", "b", "c"), ("d",)))

    def test_height(self):
        self.assertEqual(cut(self.tree, height=1.5), (("a", "b"), ("c",), ("d",)))
        self.assertEqual(cut(self.tree, height=2.0), (("a", "b", "c"), ("d",)))
        with self.assertRaises(PreconditionError):
            cut(self.tree, height=-1.0)

    def test_exactly_one_of_k_and_height(self):
        with self.assertRaises(PreconditionError) as ctx:
            cut(self.tree)
        self.assertEqual(ctx.exception.detail, messages.CUT_ARGUMENTS)
        with self.assertRaises(PreconditionError) as ctx:
            cut(self.tree, k=2, height=1.0)
        self.assertEqual(ctx.exception.detail, messages.CUT_ARGUMENTS)

    def test_unreachable_k_lists_attainable(self):
        values = tuple(tuple(0.0 if i == j else 1.0 for j in range(4)) for i in range(4))
        tree = agglomerative_cluster(DistanceMatrix(labels=tuple("abcd"), values=values), "single")
        self.assertEqual(attainable_cluster_counts(tree), [4, 1])
        with self.assertRaises(PreconditionError) as ctx:
            cut(tree, k=2)
        self.assertIn("[4, 1]", ctx.exception.detail)

    def test_select_four_points(self):
        selection = select_cut(self.tree)
        self.assertEqual((selection.k, selection.populations, selection.score), (2, (3, 1), 3))

    def test_select_balanced(self):
        values = ((0.0, 1.0, 5.0, 5.0), (1.0, 0.0, 5.0, 5.0), (5.0, 5.0, 0.0, 1.0), (5.0, 5.0, 1.0, 0.0))
        tree = agglomerative_cluster(DistanceMatrix(labels=tuple("abcd"), values=values), "average")
        selection = select_cut(tree)
        self.assertEqual((selection.k, selection.populations, selection.score), (2, (2, 2), 4))

    def test_select_needs_three_leaves(self):
        tree = agglomerative_cluster(distance_matrix(matrix_of({"x": (0.0,), "y": (1.0,)})))
        with self.assertRaises(PreconditionError):
            select_cut(tree)

    def test_select_matches_exhaustive_search(self):
        rng = random.Random(5)
        for _ in range(50):
            tree = agglomerative_cluster(integer_distances(rng, 8, high=6), "average")
            candidates = []
            for height in sorted({0.0} | {merge.height for merge in tree.merges}):
                clusters = cut(tree, height=height)
                if 1 < len(clusters) < 8:
                    candidates.append((-math.prod(map(len, clusters)), len(clusters)))
            if not candidates:
                with self.assertRaises(PreconditionError):
                    select_cut(tree)
                continue
            best_score, best_k = min(candidates)
            selection = select_cut(tree)
            self.assertEqual((selection.score, selection.k), (-best_score, best_k))


class TestTreeQueries(unittest.TestCase):
    def setUp(self) -> None:
        self.tree = agglomerative_cluster(FOUR_POINT_DISTANCES, "average")

    def test_cophenetic(self):
        coph = cophenetic_matrix(self.tree)
        self.assertEqual(coph.distance("a", "b"), 1.0)
        self.assertEqual(coph.distance("b", "c"), 2.0)
        self.assertEqual(coph.distance("a", "d"), 3.0)

    def test_group_recovery(self):
        result = group_recovery(self.tree, [("a", "b"), ("c", "d"), ("d",)])
        self.assertEqual(result, [(("a", "b"), True), (("c", "d"), False), (("d",), True)])


class TestTopology(unittest.TestCase):
    def setUp(self) -> None:
        self.tree = agglomerative_cluster(FOUR_POINT_DISTANCES, "average")
        self.space = minimal_neighborhoods(branch_basis(self.tree))

    def test_branch_basis(self):
        self.assertEqual(branch_basis(self.tree).sets, (("a", "b"), ("a", "b", "c"), ("a", "b", "c", "d")))

    def test_branch_basis_two_leaves(self):
        tree = agglomerative_cluster(distance_matrix(matrix_of({"x": (0.0,), "y": (1.0,)})))
        self.assertEqual(branch_basis(tree).sets, (("x", "y"),))

    def test_singletons_make_space_discrete(self):
        basis = branch_basis(self.tree, include_singletons=True)
        self.assertEqual(len(basis.sets), 7)
        space = minimal_neighborhoods(basis)
        self.assertEqual({x: space.neighborhoods[x] for x in "abcd"}, {x: (x,) for x in "abcd"})

    def test_minimal_neighborhoods(self):
        self.assertEqual(self.space.neighborhoods,
                         {"a": ("a", "b"), "b": ("a", "b"), "c": ("a", "b", "c"), "d": ("a", "b", "c", "d")})

    def test_indiscrete(self):
        space = minimal_neighborhoods(Basis(ground=("x", "y"), sets=(("x", "y"),)))
        self.assertEqual(space.neighborhoods, {"x": ("x", "y"), "y": ("x", "y")})

    def test_operators(self):
        self.assertEqual(closure(self.space, ["a"]), ("a", "b", "c", "d"))
        self.assertEqual(interior(self.space, ["a", "b"]), ("a", "b"))
        self.assertEqual(boundary(self.space, ["a", "b"]), ("c", "d"))
        self.assertEqual(derived_set(self.space, ["a"]), ("b", "c", "d"))

    def test_trivial_cases(self):
        self.assertEqual(closure(self.space, []), ())
        self.assertEqual(interior(self.space, "abcd"), ("a", "b", "c", "d"))

    def test_not_a_subset(self):
        with self.assertRaises(PreconditionError):
            closure(self.space, ["a", "z"])

    def test_basis_must_contain_ground(self):
        with self.assertRaises(ValueError):
            Basis(ground=("x", "y"), sets=(("x",),))

    def test_matches_enumerated_topology(self):
        rng = random.Random(2024)
        for _ in range(500):
            basis, masks = random_basis(rng)
            ground = basis.ground
            size = len(ground)
            full = (1 << size) - 1
            opens = enumerate_topology(size, masks)
            space = minimal_neighborhoods(basis)
            for subset in all_masks(size):
                members = from_mask(ground, subset)
                inner = 0
                for o in opens:
                    if o & ~subset == 0:
                        inner |= o
                outer = 0
                for o in opens:
                    if o & subset == 0:
                        outer |= o
                closed = full & ~outer
                derived = 0
                for i in range(size):
                    rest = subset & ~(1 << i)
                    if all(o & rest for o in opens if o >> i & 1):
                        derived |= 1 << i
                self.assertEqual(to_mask(ground, interior(space, members)), inner)
                self.assertEqual(to_mask(ground, closure(space, members)), closed)
                self.assertEqual(to_mask(ground, boundary(space, members)), closed & ~inner)
                self.assertEqual(to_mask(ground, derived_set(space, members)), derived)

    def test_kuratowski_axioms(self):
        rng = random.Random(99)
        for _ in range(1000):
            basis, _ = random_basis(rng)
            ground = basis.ground
            space = minimal_neighborhoods(basis)
            a = {x for x in ground if rng.random() < 0.5}
            b = {x for x in ground if rng.random() < 0.5}
            complement = set(ground) - a
            cl_a = set(closure(space, a))
            self.assertEqual(closure(space, []), ())
            self.assertLessEqual(a, cl_a)
            self.assertEqual(set(closure(space, cl_a)), cl_a)
            self.assertEqual(set(closure(space, a | b)), cl_a | set(closure(space, b)))
            self.assertEqual(set(interior(space, a)), set(ground) - set(closure(space, complement)))
            self.assertEqual(boundary(space, a), boundary(space, complement))


def test_defaults_recover_alkali_metals_and_noble_gases():
    tree = build_dendrogram(RunConfig(command="cluster"))
    with datasets.open("reference_groups.csv") as stream:
        groups = [members for source, members in load_reference_groups(stream)
                  if source in ("alkali_metals", "noble_gases")]
    assert tree.labels == get_fixture_table().symbols
    recovered = group_recovery(tree, groups)
    assert all(found for _, found in recovered), f"{recovered}\n{to_newick(tree)}"
