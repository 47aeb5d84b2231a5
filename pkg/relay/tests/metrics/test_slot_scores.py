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
from datagen.fixtures import foodFixtures
from metrics.slot_scores import slotScores, slotSpans


class SlotScoresTest(unittest.TestCase):
    def setUp(self):
        self.burgers = foodFixtures()[0]

    def test_spans(self):
        self.assertIn(("size", 3, 4), slotSpans(self.burgers))
        self.assertEqual(len(slotSpans(self.burgers)), 5)

    def test_boundaries_must_match(self):
        slots = [(s.label, s.start, s.end) for s in self.burgers.slots]
        # "large burgers" as one item, and the fries missed
        pred = self.burgers.withSlots(
            [slots[0], ("plus", 3, 5), slots[3]]
        )
        report = slotScores([self.burgers], [pred], meta={"kind": "slots"})
        self.assertEqual(report.counts.correct(), 2)
        self.assertEqual(report.counts.predicted(), 3)
        self.assertEqual(report.counts.gold(), 5)
        self.assertAlmostEqual(report.f1, 0.5)
        self.assertEqual(report.exact_match, 0.0)
        self.assertEqual(report.perLabel()["plus"]["support"], 2)

    def test_perfect(self):
        report = slotScores([self.burgers], [self.burgers.withRelations({})])
        self.assertEqual(report.f1, 1.0)
        self.assertEqual(report.exact_match, 1.0)


if __name__ == "__main__":
    unittest.main()
