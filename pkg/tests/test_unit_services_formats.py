import json
import random
import unittest
from fractions import Fraction

from src.exceptions import InputError
from src.schemas.cluster import DistanceMatrix, StandardizedMatrix
from src.schemas.pattern import CompoundRow
from src.services.chemotopology import agglomerative_cluster, distance_matrix
from src.services.formats import (dendrogram_to_dot, dump_json, parse_newick, real, sequences_csv, shells_text,
                                  structure_map_csv, to_newick, transitions_csv)
from src.services.patterns import structure_map
from src.services.sequences import sequence_table
from src.services.shell_orders import MADELUNG, enumerate_shells, order_transitions
from tests.conftest import FOUR_POINT_DISTANCES

FOUR_POINT_NEWICK = "(((a:1.0,b:1.0)1.0:1.0,c:2.0)2.0:1.0,d:3.0)3.0;\n"


def random_tree(rng: random.Random, size: int, linkage: str):
    if rng.random() < 0.5:
        values = [[0.0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                values[i][j] = values[j][i] = float(rng.randint(1, 4))
        distances = DistanceMatrix(labels=tuple(f"E_{i}" for i in range(size)), values=tuple(map(tuple, values)))
    else:
        rows = tuple((rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(size))
        distances = distance_matrix(StandardizedMatrix(labels=tuple(f"E_{i}" for i in range(size)),
                                                       properties=("x", "y"), values=rows))
    return agglomerative_cluster(distances, linkage)


class TestNewick(unittest.TestCase):
    def test_four_points(self):
        tree = agglomerative_cluster(FOUR_POINT_DISTANCES, "average")
        self.assertEqual(to_newick(tree), FOUR_POINT_NEWICK)

    def test_round_trip(self):
        rng = random.Random(31)
        for _ in range(60):
            for linkage in ("single", "complete", "average"):
                tree = random_tree(rng, rng.randint(2, 12), linkage)
                again = parse_newick(to_newick(tree), labels=tree.labels, linkage=linkage)
                self.assertEqual(again, tree)

    def test_quoted_labels(self):
        values = ((0.0, 1.0), (1.0, 0.0))
        tree = agglomerative_cluster(DistanceMatrix(labels=("Na Cl", "it's"), values=values))
        text = to_newick(tree)
        self.assertIn("'Na Cl'", text)
        self.assertEqual(parse_newick(text, labels=tree.labels, linkage="average"), tree)

    def test_heights_from_branch_lengths(self):
        tree = parse_newick("((a:1,b:1):1.5,c:2.5);")
        self.assertEqual([merge.height for merge in tree.merges], [1.0, 2.5])
        self.assertEqual(tree.labels, ("a", "b", "c"))

    def test_tied_heights_keep_label_order(self):
        tree = parse_newick("((c:1,d:1)1,(a:1,b:1)1)2;")
        self.assertEqual([merge.leaves for merge in tree.merges], [("a", "b"), ("c", "d"), ("c", "d", "a", "b")])

    def test_invalid_text(self):
        for text in ("((a,b);", "(a:1,b:1,c:1)1;", "(a:1,a:1)1;", "(a,b);", "((a:1,b:1)2:0,c:1)1;"):
            with self.assertRaises(InputError, msg=text):
                parse_newick(text)

    def test_labels_must_match(self):
        with self.assertRaises(InputError):
            parse_newick(FOUR_POINT_NEWICK, labels=("a", "b", "c", "x"))


class TestTextFormats(unittest.TestCase):
    def test_real(self):
        self.assertEqual(real(2.0), "2")
        self.assertEqual(real(15.9375), "15.9375")

    def test_sequences_csv(self):
        lines = sequences_csv(sequence_table(2)).splitlines()
        self.assertEqual(lines[0], "n,cardinality,halved,accumulated,shell_capacity,triangular,weise")
        self.assertEqual(lines[1].split(",")[:4], ["1", "2", "1", "2"])
        self.assertEqual(len(lines), 3)

    def test_shells_text(self):
        self.assertEqual(shells_text(enumerate_shells(MADELUNG, 3)), "1s 2s 2p\n")

    def test_transitions_csv(self):
        lines = transitions_csv(order_transitions(6)).splitlines()
        self.assertEqual(lines[0], "k,k_exact,order")
        self.assertEqual(lines[1].split(",")[:2], ["-1", "-1"])

    def test_transition_fraction(self):
        text = transitions_csv([(Fraction(-3, 2), tuple(enumerate_shells(MADELUNG, 2)))])
        self.assertEqual(text.splitlines()[1], "-1.5,-3/2,1s 2s")

    def test_structure_map_csv(self):
        points, _ = structure_map([CompoundRow(row=2, first="He", second="Ne", label="L")])
        self.assertEqual(structure_map_csv(points), "x,y,label\n1,2,L\n")

    def test_dump_json(self):
        text = dump_json({"k": 2, "clusters": [["a", "b"]]})
        self.assertTrue(text.endswith("}\n"))
        self.assertEqual(json.loads(text), {"k": 2, "clusters": [["a", "b"]]})

    def test_dendrogram_dot(self):
        text = dendrogram_to_dot(agglomerative_cluster(FOUR_POINT_DISTANCES, "average"))
        self.assertTrue(text.startswith("digraph dendrogram {"))
        self.assertIn("n4 -> n0;", text)
        self.assertIn("n6 -> n3;", text)
