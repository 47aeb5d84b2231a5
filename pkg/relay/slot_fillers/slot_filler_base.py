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


class SlotFillerBase(object):
    def __init__(self, model=None):
        self.model = model

    @abc.abstractmethod
    def getName(self):
        return "Error"

    @abc.abstractmethod
    def fillSlots(self, u):
        """Slot spans for an utterance, sorted and non-overlapping."""
        return []

    def fillUtterance(self, u):
        # relations of u refer to its own slots and are dropped
        return u.withSlots([(s.label, s.start, s.end) for s in self.fillSlots(u)])

    def train(self, corpus, seed, epochs, dev=None):
        return self

    def save(self, filename):
        pass
