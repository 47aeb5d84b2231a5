#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

from compilers.operations import operationsExactMatch
from metrics.metrics_report import ConfusionCounts, MetricsReport
from utils.utilities import CorpusException


def operationScores(gold_rows, pred_rows, meta=None):
    """Set based scores over (utterance id, operation set) rows. Per-label
    scores are grouped by operation kind."""
    pred_index = dict(pred_rows)
    if len(pred_index) != len(pred_rows) or set(pred_index) != set(
        uid for uid, _ in gold_rows
    ):
        raise CorpusException("Gold and predicted operations have different ids")
    counts = ConfusionCounts()
    matched = 0
    for uid, gold_ops in gold_rows:
        pred_ops = pred_index[uid]
        counts.observeSets(gold_ops, pred_ops, lambda op: op.KIND)
        if operationsExactMatch(gold_ops, pred_ops):
            matched += 1
    return MetricsReport(counts, matched, len(gold_rows), meta=meta)


def exactMatchWhere(gold_rows, pred_rows, predicate):
    """Exact match restricted to the gold rows whose operations satisfy
    predicate; None when no row does."""
    pred_index = dict(pred_rows)
    selected = [(uid, ops) for uid, ops in gold_rows if predicate(ops)]
    if not selected:
        return None
    matched = sum(
        1 for uid, ops in selected if operationsExactMatch(ops, pred_index[uid])
    )
    return matched / len(selected)
