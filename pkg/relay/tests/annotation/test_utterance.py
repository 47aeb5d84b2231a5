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
from annotation.utterance import (
    BEGIN_SLOT,
    END_SLOT,
    AnnotatedUtterance,
    SlotPattern,
    checkUtterance,
    encodePair,
    enumerateSlotPairs,
    makeSlot,
    slotPattern,
    stripMarkers,
    validate,
)
from datagen.fixtures import foodFixtures, getFixtures
from schemas.schema import loadSchema
from utils.utilities import AnnotationException


class UtteranceTest(unittest.TestCase):
    def setUp(self):
        self.food = loadSchema("food")
        self.burgers = foodFixtures()[0]

    def test_slot_values_come_from_tokens(self):
        self.assertEqual(
            [s.value for s in self.burgers.slots],
            ["three", "large", "burgers", "two", "fries"],
        )

    def test_relations_are_canonical(self):
        u = AnnotatedUtterance(
            "u1",
            "food",
            "two large fries",
            [("quantity", 0, 1), ("size", 1, 2), ("plus", 2, 3)],
            {(2, 0): "numeric", (1, 2): "size", (0, 1): None},
        )
        self.assertEqual(u.relations, {(0, 2): "numeric", (1, 2): "size"})
        self.assertEqual(u.relation_list, [(0, 2, "numeric"), (1, 2, "size")])

    def test_with_relations_keeps_slots(self):
        u = self.burgers.withRelations({(0, 2): "numeric"})
        self.assertEqual(u.slots, self.burgers.slots)
        self.assertEqual(u.relations, {(0, 2): "numeric"})
        self.assertNotEqual(u, self.burgers)
        self.assertEqual(u.withRelations(self.burgers.relations), self.burgers)

    def test_make_slot(self):
        tokens = ["two", "fries"]
        self.assertEqual(makeSlot(tokens, "plus", 1, 2).value, "fries")
        with self.assertRaises(AnnotationException):
            makeSlot(tokens, "plus", 1, 3)
        with self.assertRaises(AnnotationException):
            makeSlot(tokens, "plus", 1, 1)

    def test_enumerate_pairs(self):
        pairs = enumerateSlotPairs(self.burgers)
        self.assertEqual(len(pairs), 10)
        self.assertEqual(pairs[0], (0, 1))
        self.assertTrue(all(i < j for i, j in pairs))

    def test_encode_pair(self):
        enc = encodePair(self.burgers, (0, 2))
        self.assertEqual(
            list(enc.tokens),
            [
                "give",
                "me",
                "quantity",
                BEGIN_SLOT,
                "three",
                END_SLOT,
                "quantity",
                "large",
                "plus",
                BEGIN_SLOT,
                "burgers",
                END_SLOT,
                "plus",
                "and",
                "two",
                "fries",
                ".",
            ],
        )
        self.assertEqual(enc.pair, (0, 2))
        self.assertEqual(stripMarkers(enc), self.burgers.tokens)

    def test_encode_invalid_pair(self):
        with self.assertRaises(AnnotationException):
            encodePair(self.burgers, (2, 0))
        with self.assertRaises(AnnotationException):
            encodePair(self.burgers, (0, 5))

    def test_slot_pattern(self):
        self.assertEqual(
            slotPattern(self.burgers),
            SlotPattern(("quantity", "size", "plus", "quantity", "plus")),
        )

    def test_fixtures_are_valid(self):
        for domain in ("food", "gaming", "stocks", "stocks_slot_based"):
            schema = loadSchema(domain)
            for u in getFixtures(domain):
                self.assertEqual(validate(u, schema), [])

    def test_violations(self):
        u = self.burgers.withRelations({(0, 2): "size", (0, 1): "numeric"})
        violations = validate(u, self.food)
        self.assertEqual(len(violations), 2)
        self.assertIn("size should be numeric", violations[0] + violations[1])
        self.assertTrue(any("not in schema" in v for v in violations))

    def test_overlap_and_unknown_type(self):
        u = AnnotatedUtterance(
            "u2", "food", "two large fries", [("quantity", 0, 2), ("drink", 1, 3)]
        )
        violations = validate(u, self.food)
        self.assertTrue(any("unknown slot type drink" in v for v in violations))
        self.assertTrue(any("overlaps" in v for v in violations))
        with self.assertRaises(AnnotationException):
            checkUtterance(u, self.food)

    def test_domain_and_range(self):
        u = AnnotatedUtterance("u3", "gaming", "two fries", [("plus", 1, 4)])
        violations = validate(u, self.food)
        self.assertTrue(any("does not match schema" in v for v in violations))
        self.assertTrue(any("out of range" in v for v in violations))


if __name__ == "__main__":
    unittest.main()
