import unittest

import pytest

from src.database.db import get_fixture_table, get_layout
from src.exceptions import LookupFailure, PreconditionError
from src.schemas.pattern import CompoundRow, PatternPair, PettiforScale
from src.services.chemotopology import agglomerative_cluster
from src.services.patterns import (PETTIFOR_ORDER, diagonal_pairs, inert_pair_candidates, knights_move_pairs,
                                   pattern_pairs, pattern_score, pettifor_rank, pettifor_scale,
                                   secondary_periodicity_pairs, singularity_flags, structure_map)
from tests.conftest import FOUR_POINT_DISTANCES


def symbols(pairs) -> list[tuple[str, str]]:
    return [pair.symbols for pair in pairs]


def synthetic_pair(first: str, second: str) -> PatternPair:
    return PatternPair(kind="secondary_periodicity", first=first, second=second, first_cell=(1, 1),
                       second_cell=(1, 3))


class TestPositionalPatterns(unittest.TestCase):
    def setUp(self) -> None:
        self.layout = get_layout()
        self.everything = [cell.symbol for cell in self.layout.cells.values()]

    def test_classical_diagonals(self):
        members = ["Li", "Be", "B", "C", "Mg", "Al", "Si", "P"]
        self.assertEqual(symbols(diagonal_pairs(self.layout, members)), [("Li", "Mg"), ("Be", "Al"), ("B", "Si")])

    def test_diagonal_across_the_gap(self):
        pair = diagonal_pairs(self.layout, ["Be", "Al"])[0]
        self.assertEqual((pair.first_cell, pair.second_cell), ((2, 2), (13, 3)))

    def test_widened_diagonals(self):
        self.assertIn(("C", "P"), symbols(diagonal_pairs(self.layout, ["C", "P"], widen=True)))
        self.assertEqual(diagonal_pairs(self.layout, ["C", "P"]), [])

    def test_widened_diagonals_step_one_column(self):
        pairs = diagonal_pairs(self.layout, self.everything, widen=True)
        self.assertNotIn(("Sr", "Hf"), symbols(pairs))
        self.assertIn(("Y", "Hf"), symbols(pairs))
        offsets = {(pair.second_cell[0] - pair.first_cell[0], pair.second_cell[1] - pair.first_cell[1])
                   for pair in pairs}
        self.assertEqual(offsets, {(1, 1), (11, 1)})

    def test_diagonal_and_knights_move_are_disjoint(self):
        diagonals = set(symbols(diagonal_pairs(self.layout, self.everything, widen=True)))
        knights = set(symbols(knights_move_pairs(self.layout, self.everything)))
        self.assertTrue(diagonals)
        self.assertTrue(knights)
        self.assertEqual(diagonals & knights, set())

    def test_no_partner(self):
        self.assertEqual(diagonal_pairs(self.layout, ["H"]), [])
        self.assertEqual(diagonal_pairs(self.layout, ["Li"]), [])

    def test_knights_move(self):
        pairs = knights_move_pairs(self.layout, ["Zn", "Cd", "Sn", "Pb"])
        self.assertEqual(symbols(pairs), [("Zn", "Sn"), ("Cd", "Pb")])
        self.assertTrue(all(pair.qualifier for pair in pairs))

    def test_secondary_periodicity(self):
        pairs = secondary_periodicity_pairs(self.layout, ["O", "P", "Se", "Sb"])
        self.assertEqual(symbols(pairs), [("O", "Se"), ("P", "Sb")])

    def test_singularity(self):
        self.assertEqual(singularity_flags(self.layout, ["F"]), ("F",))
        table = get_fixture_table()
        self.assertEqual(singularity_flags(self.layout, table.symbols), ("Li", "Be", "B", "C", "N", "O", "F", "Ne"))

    def test_inert_pair(self):
        self.assertEqual(inert_pair_candidates(self.layout, ["Ga", "In", "Sn", "Tl", "Pb", "Bi"]),
                         ("In", "Sn", "Tl", "Pb", "Bi"))

    def test_pairs_match_layout_cells(self):
        for kind in ("diagonal", "knights_move", "secondary_periodicity"):
            pairs = pattern_pairs(self.layout, self.everything, kind, widen=True)
            self.assertTrue(pairs, kind)
            for pair in pairs:
                for symbol, (group, period) in zip(pair.symbols, (pair.first_cell, pair.second_cell)):
                    cell = self.layout.find(symbol)[1]
                    self.assertEqual((cell.group, cell.period), (group, period))

    def test_unknown_kind(self):
        with self.assertRaises(PreconditionError):
            pattern_pairs(self.layout, ["Li"], "triad")

    def test_unknown_member(self):
        with self.assertRaises(LookupFailure):
            diagonal_pairs(self.layout, ["Xx"])

    def test_offset_is_validated(self):
        with self.assertRaises(ValueError):
            PatternPair(kind="knights_move", first="Zn", second="Ge", first_cell=(12, 4), second_cell=(14, 4))
        with self.assertRaises(ValueError):
            PatternPair(kind="diagonal", first="Sr", second="Hf", first_cell=(2, 5), second_cell=(4, 6))
        with self.assertRaises(ValueError):
            PatternPair(kind="diagonal", first="Mg", second="Ga", first_cell=(2, 3), second_cell=(13, 4))
        pair = PatternPair(kind="diagonal", first="Be", second="Al", first_cell=(2, 2), second_cell=(13, 3))
        self.assertEqual(pair.symbols, ("Be", "Al"))


class TestPatternScore(unittest.TestCase):
    def setUp(self) -> None:
        self.tree = agglomerative_cluster(FOUR_POINT_DISTANCES, "average")

    def test_first_merged_pair_is_confirmed(self):
        score = pattern_score([synthetic_pair("a", "b")], self.tree)
        self.assertEqual(score.fraction, 1.0)
        self.assertEqual(score.threshold, 2.0)

    def test_whole_range_confirms_everything(self):
        pairs = [synthetic_pair("a", "d"), synthetic_pair("c", "d")]
        self.assertEqual(pattern_score(pairs, self.tree, q=1).fraction, 1.0)

    def test_distant_pair_rejected(self):
        score = pattern_score([synthetic_pair("a", "d")], self.tree, q=0.5)
        self.assertEqual(score.threshold, 2.0)
        self.assertFalse(score.verdicts[0].confirmed)
        self.assertEqual(score.verdicts[0].distance, 3.0)

    def test_monotone_in_quantile(self):
        pairs = [synthetic_pair(x, y) for x, y in (("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"))]
        fractions = [pattern_score(pairs, self.tree, q=q / 20).fraction for q in range(1, 21)]
        self.assertEqual(fractions, sorted(fractions))

    def test_no_pairs(self):
        self.assertEqual(pattern_score([], self.tree).fraction, 0.0)

    def test_cut_predicate(self):
        score = pattern_score([synthetic_pair("a", "c"), synthetic_pair("c", "d")], self.tree, predicate="cut")
        self.assertEqual([v.confirmed for v in score.verdicts], [True, False])
        self.assertIsNone(score.threshold)

    def test_member_not_a_leaf(self):
        with self.assertRaises(PreconditionError):
            pattern_score([synthetic_pair("a", "z")], self.tree)

    def test_bad_quantile(self):
        for q in (0, -0.5, 1.5):
            with self.assertRaises(PreconditionError):
                pattern_score([synthetic_pair("a", "b")], self.tree, q=q)


class TestPettifor(unittest.TestCase):
    def test_bijection(self):
        scale = pettifor_scale()
        self.assertEqual(len(set(scale.order)), len(PETTIFOR_ORDER))
        for rank, symbol in enumerate(scale.order, start=1):
            self.assertEqual(pettifor_rank(symbol), rank)
            self.assertEqual(scale.symbol_at(rank), symbol)

    def test_ends_of_the_scale(self):
        self.assertEqual(PETTIFOR_ORDER[:8], ("He", "Ne", "Ar", "Kr", "Xe", "Rn", "Fr", "Cs"))
        self.assertEqual(PETTIFOR_ORDER[-4:], ("N", "O", "F", "H"))
        self.assertLess(pettifor_rank("Cs"), pettifor_rank("K"))

    def test_unknown_symbol(self):
        with self.assertRaises(LookupFailure):
            pettifor_rank("Y")

    def test_scale_must_be_unique(self):
        with self.assertRaises(ValueError):
            PettiforScale(order=("He", "He"))


class TestStructureMap(unittest.TestCase):
    def test_empty(self):
        self.assertEqual(structure_map([]), ([], []))

    def test_point(self):
        points, errors = structure_map([CompoundRow(row=2, first="He", second="Ne", label="L")])
        self.assertEqual([(p.x, p.y, p.label) for p in points], [(1, 2, "L")])
        self.assertEqual(errors, [])

    def test_unknown_symbol_becomes_row_error(self):
        rows = [CompoundRow(row=2, first="Na", second="Cl", label="B1"),
                CompoundRow(row=3, first="Y", second="Cl", label="x")]
        points, errors = structure_map(rows)
        self.assertEqual(len(points), 1)
        self.assertEqual([error.row for error in errors], [3])
        self.assertIn("3", str(errors[0]))

    def test_custom_scale(self):
        points, _ = structure_map([CompoundRow(row=2, first="B", second="A", label="AB")],
                                  PettiforScale(order=("A", "B")))
        self.assertEqual((points[0].x, points[0].y), (2, 1))


@pytest.mark.parametrize("kind", ["diagonal", "knights_move", "secondary_periodicity"])
def test_f_block_members_are_dropped(kind, caplog):
    pairs = pattern_pairs(get_layout(), ["Ce", "Li", "Mg", "Zn", "Sn", "P", "Sb"], kind)
    assert "Ce" not in {symbol for pair in pairs for symbol in pair.symbols}
    assert "Ce" in caplog.text
