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

from annotation.utterance import enumerateSlotPairs


class ExtractorBase(object):
    """Maps the slots of an utterance to a relation assignment that is total
    over its slot pairs: every (i, j), i < j, is present, None included."""

    def __init__(self, schema, model=None, **kwargs):
        self.schema = schema
        self.model = model

    @abc.abstractmethod
    def getName(self):
        return "Error"

    @abc.abstractmethod
    def extract(self, u):
        return {pair: None for pair in enumerateSlotPairs(u)}

    def train(self, corpus, seed, epochs, dev=None):
        return self

    def extractUtterance(self, u):
        return u.withRelations(self.extract(u))

    def extractCorpus(self, utterances):
        return [self.extractUtterance(u) for u in utterances]

    @abc.abstractmethod
    def dump(self):
        return {}
