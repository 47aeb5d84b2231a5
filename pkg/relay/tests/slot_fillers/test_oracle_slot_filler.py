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
from datagen.fixtures import gamingFixtures
from slot_fillers.oracle.oracle_slot_filler import oracleTag
from slot_fillers.slot_fillers import getSlotFiller, getSlotFillers


class OracleSlotFillerTest(unittest.TestCase):
    def test_registry(self):
        self.assertEqual(
            sorted(getSlotFillers().keys()), ["oracle", "perceptron_tagger"]
        )

    def test_gold_slots_pass_through(self):
        filler = getSlotFillers()["oracle"]()
        self.assertEqual(filler.getName(), "oracle")
        for u in gamingFixtures():
            self.assertEqual(filler.fillSlots(u), u.slots)
            self.assertEqual(oracleTag(u), u.slots)
            self.assertIs(filler.fillUtterance(u), u)
        self.assertIs(filler.train([], 0, 1), filler)

    def test_get_slot_filler_by_name(self):
        self.assertEqual(getSlotFiller("oracle").getName(), "oracle")
        self.assertEqual(
            getSlotFiller("perceptron_tagger").getName(), "perceptron_tagger"
        )
        with self.assertRaises(AssertionError):
            getSlotFiller("crf")


if __name__ == "__main__":
    unittest.main()
