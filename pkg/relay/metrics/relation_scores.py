#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Relation scores over aligned gold and predicted utterances.

With shared slots every slot pair is one classification item: a non-None
prediction is correct iff it equals the gold label, None is the negative
class, and an utterance is an exact match when its whole assignment,
Nones included, equals gold. With predicted slots the items are relation
triples over slot spans instead.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import collections

from annotation.corpus import alignCorpora
from annotation.utterance import enumerateSlotPairs
from metrics.metrics_report import ConfusionCounts, MetricsReport
from utils.utilities import CorpusException


def _checkPairs(u, pairs):
    for pair in u.relations:
        if pair not in pairs:
            raise CorpusException(
                "Utterance {} has a relation on {} which is not a slot pair".format(
                    u.id, pair
                )
            )


def _selected(u, pair, slot_labels):
    if slot_labels is None:
        return True
    i, j = pair
    return sorted([u.slots[i].label, u.slots[j].label]) == sorted(slot_labels)


def _scorePairs(aligned, slot_labels=None):
    counts = ConfusionCounts()
    matched = 0
    for gold, pred in aligned:
        pairs = set(enumerateSlotPairs(gold))
        _checkPairs(gold, pairs)
        _checkPairs(pred, pairs)
        gold_relations = gold.relations
        pred_relations = pred.relations
        exact = True
        for pair in sorted(pairs):
            if not _selected(gold, pair, slot_labels):
                continue
            gold_label = gold_relations.get(pair)
            pred_label = pred_relations.get(pair)
            counts.observe(gold_label, pred_label)
            exact = exact and gold_label == pred_label
        if exact:
            matched += 1
    return counts, matched


def relationScores(gold, pred, meta=None, slot_labels=None):
    """slot_labels restricts scoring to the pairs joining these two slot
    types."""
    aligned = alignCorpora(gold, pred)
    counts, matched = _scorePairs(aligned, slot_labels)
    return MetricsReport(counts, matched, len(aligned), meta=meta)


def bucketBySlotCount(gold, pred):
    """One report per slot count; empty buckets are absent."""
    groups = collections.defaultdict(list)
    for g, p in alignCorpora(gold, pred):
        groups[len(g.slots)].append((g, p))
    buckets = {}
    for count, aligned in sorted(groups.items()):
        counts, matched = _scorePairs(aligned)
        buckets[count] = MetricsReport(counts, matched, len(aligned))
    return buckets


def relationTriples(u):
    slots = u.slots
    return set(
        (
            (slots[i].label, slots[i].start, slots[i].end),
            (slots[j].label, slots[j].start, slots[j].end),
            label,
        )
        for (i, j), label in u.relations.items()
    )


def alignById(gold, pred):
    pred_index = {u.id: u for u in pred}
    if len(pred_index) != len(pred) or set(pred_index) != set(u.id for u in gold):
        raise CorpusException("Gold and predicted corpora have different ids")
    return [(g, pred_index[g.id]) for g in gold]


def relationTripleScores(gold, pred, meta=None):
    """End-to-end relation scores when predicted slots may differ from
    gold: a relation is correct when both spans and the label match."""
    counts = ConfusionCounts()
    matched = 0
    aligned = alignById(gold, pred)
    for g, p in aligned:
        gold_triples = relationTriples(g)
        pred_triples = relationTriples(p)
        counts.observeSets(gold_triples, pred_triples, lambda item: item[2])
        if gold_triples == pred_triples and g.slots == p.slots:
            matched += 1
    return MetricsReport(counts, matched, len(aligned), meta=meta)
