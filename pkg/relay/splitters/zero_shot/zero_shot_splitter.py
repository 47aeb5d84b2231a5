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

from six import string_types
from splitters.splitter_base import Split, SplitterBase, sortedById
from utils.custom_logger import getLogger
from utils.utilities import CapacityException, SplitException

DEFAULT_SLOT_TEST_SIZE = 90
DEFAULT_PAIR_TEST_SIZE = 50


def exhibits(u, held_out):
    """held_out is a slot label, or a pair of slot labels joined by a gold
    relation."""
    if isinstance(held_out, string_types):
        return any(s.label == held_out for s in u.slots)
    wanted = sorted(held_out)
    for (i, j) in u.relations:
        if sorted([u.slots[i].label, u.slots[j].label]) == wanted:
            return True
    return False


def makeZeroShotSplit(corpus, held_out, k, seed, test_size):
    """Test is the first test_size shuffled utterances exhibiting the held-out
    construct; training keeps only k of the remaining ones. For one seed the
    test set is the same for every k and the k extras are nested."""
    if k < 0:
        raise SplitException("k must be non negative, got {}".format(k))
    constructs = sortedById(u for u in corpus.allUtterances() if exhibits(u, held_out))
    if len(constructs) < test_size + k:
        raise CapacityException(
            "Corpus {} has {} utterances with {}, {} needed".format(
                corpus.domain, len(constructs), held_out, test_size + k
            )
        )
    random.Random(seed).shuffle(constructs)
    test = constructs[:test_size]
    extra = constructs[test_size : test_size + k]
    train = [u for u in corpus.train if not exhibits(u, held_out)] + extra
    dev = [u for u in corpus.dev if not exhibits(u, held_out)]
    getLogger().info(
        "Zero-shot split on {}: k={}, train {}, dev {}, test {}".format(
            held_out, k, len(train), len(dev), len(test)
        )
    )
    return Split(train, dev, test)


class ZeroShotSplitterBase(SplitterBase):
    default_test_size = 0

    def heldOut(self):
        return self.spec.parameters["held_out"]

    def split(self, corpus):
        assert "held_out" in self.spec.parameters, "Zero-shot split needs held_out"
        return makeZeroShotSplit(
            corpus,
            self.heldOut(),
            int(self.spec.parameters.get("k", 0)),
            self.spec.seed,
            int(self.spec.parameters.get("test_size", self.default_test_size)),
        )


class ZeroShotSlotSplitter(ZeroShotSplitterBase):
    default_test_size = DEFAULT_SLOT_TEST_SIZE

    def getName(self):
        return "zero_shot_slot"

    def heldOut(self):
        held_out = self.spec.parameters["held_out"]
        assert isinstance(held_out, string_types), "held_out must be a slot label"
        return held_out


class ZeroShotPairSplitter(ZeroShotSplitterBase):
    default_test_size = DEFAULT_PAIR_TEST_SIZE

    def getName(self):
        return "zero_shot_pair"

    def heldOut(self):
        held_out = self.spec.parameters["held_out"]
        assert (
            not isinstance(held_out, string_types) and len(held_out) == 2
        ), "held_out must be a pair of slot labels"
        return tuple(held_out)
