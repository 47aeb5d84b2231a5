#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import random

from splitters.splitter_base import Split, SplitterBase, sortedById
from utils.utilities import SplitException

DEFAULT_TEST_FRACTION = 0.3


class RandomSplitter(SplitterBase):
    def getName(self):
        return "random"

    def split(self, corpus):
        fraction = self.spec.parameters.get("test_fraction", DEFAULT_TEST_FRACTION)
        utterances = sortedById(corpus.allUtterances())
        if len(utterances) < 2:
            raise SplitException("Cannot split fewer than 2 utterances")
        random.Random(self.spec.seed).shuffle(utterances)
        size = min(max(int(round(fraction * len(utterances))), 1), len(utterances) - 1)
        return Split(utterances[size:], [], utterances[:size])
