#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Query split by slot pattern.

Utterances are grouped by the ordered sequence of their slot labels and
whole groups are placed on one side, so no test pattern is seen in training.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import collections
import random

from annotation.utterance import slotPattern
from splitters.splitter_base import Split, SplitterBase, sortedById
from utils.utilities import SplitException

DEFAULT_TEST_FRACTION = 0.3


def patternSplit(utterances, seed, test_fraction=DEFAULT_TEST_FRACTION):
    groups = collections.OrderedDict()
    for u in sortedById(utterances):
        groups.setdefault(slotPattern(u), []).append(u)
    if len(groups) < 2:
        raise SplitException(
            "A pattern split needs at least 2 slot patterns, got {}".format(len(groups))
        )
    keys = sorted(groups)
    random.Random(seed).shuffle(keys)
    target = test_fraction * len(utterances)
    test_keys = []
    train_keys = []
    test_size = 0
    for key in keys:
        size = len(groups[key])
        if not test_keys or test_size + size <= target:
            test_keys.append(key)
            test_size += size
        else:
            train_keys.append(key)
    if not train_keys:
        train_keys.append(test_keys.pop())
    train = [u for key in train_keys for u in groups[key]]
    test = [u for key in test_keys for u in groups[key]]
    return train, test


class PatternSplitter(SplitterBase):
    def getName(self):
        return "pattern"

    def split(self, corpus):
        train, test = patternSplit(
            corpus.allUtterances(),
            self.spec.seed,
            self.spec.parameters.get("test_fraction", DEFAULT_TEST_FRACTION),
        )
        return Split(train, [], test)
