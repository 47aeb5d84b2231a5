#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Multiclass averaged perceptron shared by the tagger and the pair classifier.

Averaging is lazy: every weight remembers the update step it last changed at,
so the running totals only have to be touched for features that fire.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import collections


class AveragedPerceptron(object):
    def __init__(self, labels):
        # the label order breaks argmax ties
        self.labels = list(labels)
        assert len(set(self.labels)) == len(self.labels), "Labels {} repeat".format(
            self.labels
        )
        self.weights = {}
        self._totals = collections.defaultdict(float)
        self._tstamps = collections.defaultdict(int)
        self.step = 0

    def scores(self, features, weights=None):
        weights = self.weights if weights is None else weights
        scores = dict.fromkeys(self.labels, 0.0)
        for feature in features:
            row = weights.get(feature)
            if not row:
                continue
            for label, weight in row.items():
                if label in scores:
                    scores[label] += weight
        return scores

    def predict(self, features, allowed=None, weights=None):
        scores = self.scores(features, weights)
        best = None
        for label in self.labels:
            if allowed is not None and label not in allowed:
                continue
            if best is None or scores[label] > scores[best]:
                best = label
        assert best is not None, "No label is allowed among {}".format(self.labels)
        return best

    def update(self, truth, guess, features):
        self.step += 1
        if truth == guess:
            return False
        for feature in features:
            row = self.weights.setdefault(feature, {})
            self._bump(feature, row, truth, 1.0)
            self._bump(feature, row, guess, -1.0)
        return True

    def _bump(self, feature, row, label, delta):
        key = (feature, label)
        weight = row.get(label, 0.0)
        self._totals[key] += (self.step - self._tstamps[key]) * weight
        self._tstamps[key] = self.step
        row[label] = weight + delta

    def averagedWeights(self):
        if self.step == 0:
            return {}
        averaged = {}
        for feature, row in self.weights.items():
            for label, weight in row.items():
                key = (feature, label)
                total = self._totals[key] + (self.step - self._tstamps[key]) * weight
                value = total / self.step
                if value != 0.0:
                    averaged.setdefault(feature, {})[label] = value
        return averaged

    def finalize(self, weights=None):
        """Replace the live weights by the averaged (or the given) ones."""
        self.weights = self.averagedWeights() if weights is None else weights
        self._totals.clear()
        self._tstamps.clear()
        self.step = 0


def dumpWeights(weights):
    rows = []
    for feature in sorted(weights):
        for label in sorted(weights[feature]):
            rows.append([feature, label, weights[feature][label]])
    return rows


def loadWeights(rows):
    weights = {}
    for feature, label, weight in rows:
        weights.setdefault(feature, {})[label] = float(weight)
    return weights
