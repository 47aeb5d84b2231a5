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
from compilers.operations import loadLexicon
from datagen.templates import (
    Hole,
    TemplateInventory,
    checkTemplates,
    loadTemplates,
    parseChunk,
)
from schemas.schema import loadSchema
from utils.utilities import RelayException

CONTENT = {
    "domain": "food",
    "sections": [
        {"name": "items", "min": 1, "max": 2, "joiners": ["and"]},
    ],
    "chunks": [
        {"name": "item", "section": "items", "text": "a {plus@one}"},
        {
            "name": "quantity_item",
            "section": "items",
            "text": "{quantity} {plus}",
            "relations": [[0, 1]],
            "ambiguous": True,
        },
    ],
}
GAZETTEERS = {"plus": ["fries"], "plus@one": ["burger"], "quantity": ["two"]}


class TemplatesTest(unittest.TestCase):
    def test_holes(self):
        chunk = parseChunk(
            {
                "name": "negated",
                "section": "scope",
                "text": "in {location:location_inside} {negation_modifier@loc:} x",
                "relations": [[0, 1]],
                "constructs": ["negated_location"],
            }
        )
        self.assertEqual(chunk.pieces, ("in", 0, 1, "x"))
        self.assertEqual(
            chunk.holes,
            (
                Hole("location", "location", "location_inside"),
                Hole("negation_modifier", "negation_modifier@loc", ""),
            ),
        )
        self.assertEqual(chunk.relations, ((0, 1),))
        self.assertFalse(chunk.ambiguous)
        self.assertEqual(chunk.constructs, frozenset(["negated_location"]))

    def test_relation_to_missing_hole(self):
        with self.assertRaises(RelayException):
            parseChunk(
                {"name": "bad", "section": "s", "text": "{plus}", "relations": [[0, 1]]}
            )

    def test_sequences(self):
        inventory = TemplateInventory(CONTENT, GAZETTEERS)
        sequences = list(inventory.sequences())
        # one or two chunks out of two
        self.assertEqual(len(sequences), 6)
        self.assertIn((1, 0), sequences)
        self.assertEqual(inventory.slotCount((1, 1)), 4)
        self.assertEqual(inventory.pattern((0, 1)), ("plus", "quantity", "plus"))
        self.assertTrue(inventory.isAmbiguous((0, 1)))
        self.assertFalse(inventory.isAmbiguous((0, 0)))

    def test_fingerprint_follows_content(self):
        first = TemplateInventory(CONTENT, GAZETTEERS)
        second = TemplateInventory(CONTENT, dict(GAZETTEERS, plus=["cokes"]))
        again = TemplateInventory(CONTENT, GAZETTEERS)
        self.assertEqual(first.fingerprint(), again.fingerprint())
        self.assertNotEqual(first.fingerprint(), second.fingerprint())

    def test_missing_gazetteer(self):
        with self.assertRaises(RelayException):
            TemplateInventory(CONTENT, {"plus": ["fries"], "quantity": ["two"]})

    def test_repetition_needs_joiners(self):
        content = dict(CONTENT, sections=[{"name": "items", "min": 1, "max": 2}])
        with self.assertRaises(RelayException):
            TemplateInventory(content, GAZETTEERS)

    def test_check_against_schema(self):
        inventory = TemplateInventory(CONTENT, GAZETTEERS)
        self.assertIs(checkTemplates(inventory, loadSchema("food")), inventory)
        with self.assertRaises(RelayException):
            checkTemplates(inventory, loadSchema("gaming"))

    def test_bundled_templates_are_valid(self):
        for domain in ("food", "gaming", "stocks"):
            inventory = loadTemplates(domain)
            parallel = None
            if inventory.parallel_schema:
                parallel = loadSchema(inventory.parallel_schema)
            checkTemplates(inventory, loadSchema(domain), parallel, loadLexicon())


if __name__ == "__main__":
    unittest.main()
