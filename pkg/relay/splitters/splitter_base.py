#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import abc
import collections
import copy

from annotation.utterance import slotPattern

Split = collections.namedtuple("Split", ["train", "dev", "test"])

STRATEGIES = ("given", "random", "pattern", "zero_shot_slot", "zero_shot_pair")


class SplitSpec(object):
    def __init__(self, strategy, seed=0, parameters=None):
        assert strategy in STRATEGIES, "Split strategy {} is not one of {}".format(
            strategy, STRATEGIES
        )
        self.strategy = strategy
        self.seed = int(seed)
        self.parameters = copy.deepcopy(parameters or {})

    def withSeed(self, seed):
        return SplitSpec(self.strategy, seed, self.parameters)

    def withParameters(self, **parameters):
        merged = copy.deepcopy(self.parameters)
        merged.update(parameters)
        return SplitSpec(self.strategy, self.seed, merged)

    def dump(self):
        parameters = {}
        for key, value in self.parameters.items():
            parameters[key] = list(value) if isinstance(value, tuple) else value
        return {"strategy": self.strategy, "seed": self.seed, "parameters": parameters}

    @staticmethod
    def load(content):
        return SplitSpec(
            content["strategy"], content.get("seed", 0), content.get("parameters", {})
        )

    def __eq__(self, other):
        return isinstance(other, SplitSpec) and self.dump() == other.dump()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "SplitSpec({}, seed={}, {})".format(
            self.strategy, self.seed, self.parameters
        )


class SplitterBase(object):
    def __init__(self, spec):
        self.spec = spec

    @abc.abstractmethod
    def getName(self):
        return "Error"

    @abc.abstractmethod
    def split(self, corpus):
        return Split([], [], [])


def sortedById(utterances):
    return sorted(utterances, key=lambda u: u.id)


def patternSet(utterances):
    return set(slotPattern(u) for u in utterances)


def describeSplit(spec, split):
    train_patterns = patternSet(split.train)
    test_patterns = patternSet(split.test)
    return {
        "spec": spec.dump(),
        "sizes": {
            "train": len(split.train),
            "dev": len(split.dev),
            "test": len(split.test),
        },
        "patterns": {
            "train": len(train_patterns),
            "test": len(test_patterns),
            "shared": len(train_patterns & test_patterns),
        },
    }
