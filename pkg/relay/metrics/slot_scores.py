#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

from metrics.metrics_report import ConfusionCounts, MetricsReport
from metrics.relation_scores import alignById


def slotSpans(u):
    return set((s.label, s.start, s.end) for s in u.slots)


def slotScores(gold, pred, meta=None):
    # a span counts only with exact boundaries and label
    counts = ConfusionCounts()
    matched = 0
    aligned = alignById(gold, pred)
    for g, p in aligned:
        gold_spans = slotSpans(g)
        pred_spans = slotSpans(p)
        counts.observeSets(gold_spans, pred_spans, lambda span: span[0])
        if gold_spans == pred_spans:
            matched += 1
    return MetricsReport(counts, matched, len(aligned), meta=meta)
