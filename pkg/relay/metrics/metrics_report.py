#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import collections

import numpy as np

SCORE_NAMES = ("p", "r", "f1", "em")


def calcMetrics(tp, predicted, gold):
    """precision, recall and F1 from integer counts, 0.0 when undefined"""
    precision = tp / predicted if predicted else 0.0
    recall = tp / gold if gold else 0.0
    f1 = (
        2 * precision * recall / (precision + recall) if precision + recall else 0.0
    )
    return precision, recall, f1


class ConfusionCounts(object):
    def __init__(self):
        self.tp = collections.Counter()
        self.fp = collections.Counter()
        self.fn = collections.Counter()

    def observe(self, gold, pred):
        """One classified item; None is the negative class."""
        if pred is not None:
            if pred == gold:
                self.tp[pred] += 1
            else:
                self.fp[pred] += 1
        if gold is not None and pred != gold:
            self.fn[gold] += 1

    def observeSets(self, gold, pred, labelOf):
        gold = set(gold)
        pred = set(pred)
        for item in pred:
            if item in gold:
                self.tp[labelOf(item)] += 1
            else:
                self.fp[labelOf(item)] += 1
        for item in gold - pred:
            self.fn[labelOf(item)] += 1

    def merge(self, other):
        self.tp.update(other.tp)
        self.fp.update(other.fp)
        self.fn.update(other.fn)
        return self

    def labels(self):
        return sorted(set(self.tp) | set(self.fp) | set(self.fn))

    def gold(self, label=None):
        if label is None:
            return sum(self.tp.values()) + sum(self.fn.values())
        return self.tp[label] + self.fn[label]

    def predicted(self, label=None):
        if label is None:
            return sum(self.tp.values()) + sum(self.fp.values())
        return self.tp[label] + self.fp[label]

    def correct(self, label=None):
        if label is None:
            return sum(self.tp.values())
        return self.tp[label]

    def scores(self, label=None):
        return calcMetrics(
            self.correct(label), self.predicted(label), self.gold(label)
        )


class MetricsReport(object):
    """Micro scores, exact match and a per-label breakdown of one scoring
    pass. `matched` utterances out of `total` were entirely correct."""

    def __init__(self, counts, matched, total, buckets=None, meta=None):
        self.counts = counts
        self.matched = matched
        self.total = total
        self.buckets = buckets or {}
        self.meta = meta or {}
        # named scalar scores computed next to the main ones
        self.scores = {}
        self.precision, self.recall, self.f1 = counts.scores()

    @property
    def exact_match(self):
        return self.matched / self.total if self.total else 0.0

    def overall(self):
        return {
            "p": self.precision,
            "r": self.recall,
            "f1": self.f1,
            "em": self.exact_match,
        }

    def perLabel(self):
        per_label = {}
        for label in self.counts.labels():
            p, r, f1 = self.counts.scores(label)
            per_label[label] = {
                "p": p,
                "r": r,
                "f1": f1,
                "support": self.counts.gold(label),
            }
        return per_label

    def labelF1(self, label):
        return self.counts.scores(label)[2]

    def dump(self):
        return {
            "spec": self.meta,
            "overall": self.overall(),
            "per_label": self.perLabel(),
            "buckets": {
                str(key): report.dump() for key, report in sorted(self.buckets.items())
            },
            "scores": dict(self.scores),
            "counts": {
                "utterances": self.total,
                "exact": self.matched,
                "gold": self.counts.gold(),
                "predicted": self.counts.predicted(),
                "correct": self.counts.correct(),
            },
        }


def aggregateRuns(reports):
    """mean, min and max of every overall score over repeated runs"""
    assert len(reports) > 0, "No run to aggregate"
    summary = {}
    for name in SCORE_NAMES:
        values = np.array(
            [report.overall()[name] for report in reports], dtype=np.float64
        )
        summary[name] = {
            "mean": float(np.mean(values)),
            "min": float(np.min(values)),
            "max": float(np.max(values)),
            "dispersion": float(np.max(values) - np.min(values)),
            "values": values.tolist(),
        }
    return summary
