#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import os
import sys
import unittest

RELAY_DIR = os.path.abspath(
    os.path.join(os.path.dirname(os.path.realpath(__file__)), os.pardir, os.pardir)
)
sys.path.append(RELAY_DIR)
from annotation.utterance import AnnotatedUtterance
from datagen.fixtures import foodFixtures, gamingFixtures, stocksFixtures
from extractors.heuristic.heuristic_extractor import (
    HeuristicExtractor,
    heuristicExtract,
    spanDistance,
)
from schemas.schema import loadSchema
from utils.utilities import UnknownSlotTypeException


class HeuristicExtractorTest(unittest.TestCase):
    def setUp(self):
        self.stocks = HeuristicExtractor(loadSchema("stocks"))
        self.fixtures = stocksFixtures()

    def test_span_distance(self):
        slots = self.fixtures[0].slots
        self.assertEqual(spanDistance(slots[1], slots[0]), 0)
        self.assertEqual(spanDistance(slots[1], slots[2]), 1)
        self.assertEqual(spanDistance(slots[2], slots[0]), 2)

    def test_food(self):
        u = foodFixtures()[0]
        extractor = HeuristicExtractor(loadSchema("food"))
        self.assertEqual(
            extractor.extractUtterance(u).relations,
            {(0, 2): "numeric", (1, 2): "size", (3, 4): "numeric"},
        )

    def test_total_assignment(self):
        assignment = self.stocks.extract(self.fixtures[1])
        self.assertEqual(len(assignment), 21)
        self.assertEqual(
            {pair: label for pair, label in assignment.items() if label},
            self.fixtures[1].relations,
        )

    def test_nearest_location_is_chosen(self):
        # the negation is next to the location before it
        self.assertEqual(
            self.stocks.extractUtterance(self.fixtures[0]).relations,
            {(0, 1): "negation_relation"},
        )
        self.assertEqual(
            self.stocks.extractUtterance(self.fixtures[2]).relations,
            {(1, 2): "negation_relation"},
        )

    def test_dates_and_filters(self):
        u = self.fixtures[3]
        self.assertEqual(self.stocks.extractUtterance(u).relations, u.relations)

    def test_values_are_ignored(self):
        extractor = HeuristicExtractor(loadSchema("gaming"))
        first, second = gamingFixtures()
        expected = {(0, 1): "enchantment", (0, 2): None, (1, 2): None}
        self.assertEqual(extractor.extract(first), expected)
        self.assertEqual(extractor.extract(second), expected)
        renamed = AnnotatedUtterance(
            "renamed",
            "gaming",
            "I would like to see your ice axes and helmets.",
            [(s.label, s.start, s.end) for s in first.slots],
        )
        self.assertEqual(extractor.extract(renamed), expected)

    def test_tie_goes_to_the_right(self):
        u = AnnotatedUtterance(
            "tie",
            "food",
            "fries large burgers",
            [("plus", 0, 1), ("size", 1, 2), ("plus", 2, 3)],
        )
        assignment = heuristicExtract(u.slots, loadSchema("food"))
        self.assertEqual(assignment[(1, 2)], "size")
        self.assertIsNone(assignment[(0, 1)])

    def test_unknown_slot_type(self):
        u = AnnotatedUtterance("x", "stocks", "two fries", [("plus", 1, 2)])
        with self.assertRaises(UnknownSlotTypeException):
            self.stocks.extract(u)

    def test_dump(self):
        self.assertEqual(
            self.stocks.dump(), {"version": 1, "kind": "heuristic", "schema": "stocks"}
        )


if __name__ == "__main__":
    unittest.main()
