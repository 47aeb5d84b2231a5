#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

from .given.given_splitter import GivenSplitter
from .pattern.pattern_splitter import PatternSplitter
from .random_split.random_splitter import RandomSplitter
from .zero_shot.zero_shot_splitter import ZeroShotPairSplitter, ZeroShotSlotSplitter

splitters = {
    "given": GivenSplitter,
    "random": RandomSplitter,
    "pattern": PatternSplitter,
    "zero_shot_slot": ZeroShotSlotSplitter,
    "zero_shot_pair": ZeroShotPairSplitter,
}


def getSplitters():
    global splitters
    return splitters


def getSplitter(spec):
    return getSplitters()[spec.strategy](spec)


def splitCorpus(corpus, spec):
    return getSplitter(spec).split(corpus)
