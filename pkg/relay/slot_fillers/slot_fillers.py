#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

from .oracle.oracle_slot_filler import OracleSlotFiller
from .perceptron_tagger.perceptron_tagger import PerceptronTaggerSlotFiller

slot_fillers = {
    "oracle": OracleSlotFiller,
    "perceptron_tagger": PerceptronTaggerSlotFiller,
}


def getSlotFillers():
    global slot_fillers
    return slot_fillers


def getSlotFiller(name):
    assert name in slot_fillers, "Slot filler {} is not one of {}".format(
        name, sorted(slot_fillers)
    )
    return getSlotFillers()[name]()
