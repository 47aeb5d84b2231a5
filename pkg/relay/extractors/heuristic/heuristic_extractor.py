#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Nearest-candidate rule baseline.

Every slot whose type is a modifier in the schema rules looks for the slots it
may modify and links to the nearest one. Only labels and positions are used,
so the slot values never change the outcome.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import itertools

from extractors.extractor_base import ExtractorBase

MODEL_KIND = "heuristic"


def spanDistance(a, b):
    """Number of tokens strictly between two non-overlapping spans."""
    if a.end <= b.start:
        return b.start - a.end
    return a.start - b.end


def heuristicExtract(slots, schema):
    for slot in slots:
        schema.checkSlotType(slot.label)
    assignment = {pair: None for pair in itertools.combinations(range(len(slots)), 2)}
    for index, modifier in enumerate(slots):
        targets = schema.modifierTargets(modifier.label)
        candidates = [
            k
            for k, slot in enumerate(slots)
            if k != index and slot.label in targets
        ]
        if not candidates:
            continue
        # equidistant candidates: the one after the modifier wins
        nearest = min(
            candidates,
            key=lambda k: (spanDistance(modifier, slots[k]), 0 if k > index else 1),
        )
        pair = (min(index, nearest), max(index, nearest))
        assignment[pair] = targets[slots[nearest].label]
    return assignment


class HeuristicExtractor(ExtractorBase):
    def getName(self):
        return MODEL_KIND

    def extract(self, u):
        return heuristicExtract(u.slots, self.schema)

    def dump(self):
        # the rules live in the schema, only a reference is kept
        return {"version": 1, "kind": MODEL_KIND, "schema": self.schema.domain}
