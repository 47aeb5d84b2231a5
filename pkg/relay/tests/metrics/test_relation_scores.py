#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import os
import random
import sys
import unittest

RELAY_DIR = os.path.abspath(
    os.path.join(os.path.dirname(os.path.realpath(__file__)), os.pardir, os.pardir)
)
sys.path.append(RELAY_DIR)
from annotation.utterance import AnnotatedUtterance, enumerateSlotPairs
from datagen.fixtures import foodFixtures, gamingFixtures, stocksFixtures
from metrics.relation_scores import (
    bucketBySlotCount,
    relationScores,
    relationTripleScores,
    relationTriples,
)
from utils.utilities import CorpusException

LABELS = {
    "food": [None, None, "numeric", "size", "add_topping"],
    "gaming": [None, None, "enchantment"],
    "stocks": [
        None,
        None,
        "negation_relation",
        "filter_metric_relation",
        "filter_amount_relation",
        "date_relation",
    ],
}


def bruteForce(gold, pred):
    counts = {"correct": 0, "predicted": 0, "gold": 0, "exact": 0}
    for g, p in zip(gold, pred):
        same = True
        for pair in enumerateSlotPairs(g):
            gold_label = g.relations.get(pair)
            pred_label = p.relations.get(pair)
            counts["predicted"] += pred_label is not None
            counts["gold"] += gold_label is not None
            counts["correct"] += pred_label is not None and pred_label == gold_label
            same = same and pred_label == gold_label
        counts["exact"] += same
    tp = counts["correct"]
    precision = tp / counts["predicted"] if counts["predicted"] else 0.0
    recall = tp / counts["gold"] if counts["gold"] else 0.0
    f1 = 2 * precision * recall / (precision + recall) if tp else 0.0
    return counts, (precision, recall, f1, counts["exact"] / len(gold))


def renamed(u, k):
    return AnnotatedUtterance(
        "{}-{}".format(u.id, k), u.domain, u.text, u.slots, u.relations, u.intent
    )


def handCases():
    """(gold, predicted assignments, expected correct/predicted/gold/exact)"""
    burgers = foodFixtures()[0]
    shields, shield = gamingFixtures()
    europe, filters, sector, dated = stocksFixtures()
    neg = "negation_relation"
    fm = "filter_metric_relation"
    fa = "filter_amount_relation"
    date = "date_relation"
    extra = dict(burgers.relations)
    extra[(0, 4)] = "numeric"
    return [
        ([burgers], [{(0, 2): "numeric", (1, 2): "size"}], (2, 2, 3, 0)),
        ([burgers], [burgers.relations], (3, 3, 3, 1)),
        ([burgers], [{}], (0, 0, 3, 0)),
        (
            [burgers],
            [{(0, 2): "size", (1, 2): "numeric", (3, 4): "size"}],
            (0, 3, 3, 0),
        ),
        ([burgers], [extra], (3, 4, 3, 0)),
        (
            [burgers],
            [{(0, 2): "numeric", (1, 2): "size", (2, 3): "numeric"}],
            (2, 3, 3, 0),
        ),
        ([shields], [shields.relations], (2, 2, 2, 1)),
        ([shields], [shield.relations], (1, 1, 2, 0)),
        ([shield], [shields.relations], (1, 2, 1, 0)),
        ([shield], [{}], (0, 0, 1, 0)),
        ([europe], [europe.relations], (1, 1, 1, 1)),
        ([europe], [{(0, 1): neg}], (0, 1, 1, 0)),
        ([europe], [{(0, 1): neg, (1, 2): neg}], (1, 2, 1, 0)),
        ([filters], [filters.relations], (4, 4, 4, 1)),
        (
            [filters],
            [{(1, 2): fm, (2, 3): fa, (4, 5): fm, (2, 6): fa}],
            (3, 4, 4, 0),
        ),
        (
            [filters],
            [{(1, 2): fa, (2, 3): fm, (4, 5): fm, (5, 6): fa}],
            (2, 4, 4, 0),
        ),
        ([dated], [{(1, 2): fm, (2, 3): fa, (5, 6): fm, (6, 7): fa}], (4, 4, 6, 0)),
        (
            [dated],
            [
                {
                    (0, 5): date,
                    (1, 4): date,
                    (1, 2): fm,
                    (2, 3): fa,
                    (5, 6): fm,
                    (6, 7): fa,
                }
            ],
            (4, 6, 6, 0),
        ),
        (
            [burgers, shields, europe],
            [{(0, 2): "numeric", (1, 2): "size"}, shields.relations, {}],
            (4, 4, 6, 1),
        ),
        (stocksFixtures(), [{}, {}, {}, {}], (0, 0, 12, 0)),
        ([sector], [{(2, 3): neg, (0, 1): None}], (1, 1, 1, 1)),
    ]


class RelationScoresTest(unittest.TestCase):
    def setUp(self):
        self.burgers = foodFixtures()[0]

    def test_one_missed_relation(self):
        pred = self.burgers.withRelations({(0, 2): "numeric", (1, 2): "size"})
        report = relationScores([self.burgers], [pred])
        self.assertEqual(report.precision, 1.0)
        self.assertAlmostEqual(report.recall, 2 / 3)
        self.assertAlmostEqual(report.f1, 0.8)
        self.assertEqual(report.exact_match, 0.0)

    def test_perfect(self):
        report = relationScores(gamingFixtures(), gamingFixtures(), meta={"k": 0})
        self.assertEqual(report.overall(), {"p": 1.0, "r": 1.0, "f1": 1.0, "em": 1.0})
        self.assertEqual(report.meta, {"k": 0})

    def test_wrong_label_counts_twice(self):
        pred = self.burgers.withRelations(
            {(0, 2): "size", (1, 2): "size", (3, 4): "numeric"}
        )
        report = relationScores([self.burgers], [pred])
        self.assertEqual(report.counts.fp["size"], 1)
        self.assertEqual(report.counts.fn["numeric"], 1)
        self.assertAlmostEqual(report.f1, 2 / 3)

    def assertMatchesBruteForce(self, gold, pred):
        report = relationScores(gold, pred)
        counts, scores = bruteForce(gold, pred)
        self.assertEqual(
            {
                "correct": report.counts.correct(),
                "predicted": report.counts.predicted(),
                "gold": report.counts.gold(),
                "exact": report.matched,
            },
            counts,
        )
        self.assertEqual(report.total, len(gold))
        overall = report.overall()
        for name, expected in zip(("p", "r", "f1", "em"), scores):
            self.assertAlmostEqual(overall[name], expected, delta=1e-12)
        return counts

    def test_hand_crafted_cases(self):
        cases = handCases()
        self.assertGreaterEqual(len(cases), 20)
        for gold, assignments, expected in cases:
            pred = [u.withRelations(a) for u, a in zip(gold, assignments)]
            counts = self.assertMatchesBruteForce(gold, pred)
            names = ("correct", "predicted", "gold", "exact")
            self.assertEqual(tuple(counts[name] for name in names), expected)

    def test_against_brute_force(self):
        rng = random.Random(0)
        fixtures = foodFixtures() + gamingFixtures() + stocksFixtures()
        for trial in range(1000):
            gold = [
                renamed(u, trial)
                for u in rng.sample(fixtures, rng.randint(1, len(fixtures)))
            ]
            pred = []
            for u in gold:
                assignment = {}
                keep = rng.random()
                for pair in enumerateSlotPairs(u):
                    if rng.random() < keep:
                        assignment[pair] = u.relations.get(pair)
                    else:
                        assignment[pair] = rng.choice(LABELS[u.domain])
                pred.append(u.withRelations(assignment))
            self.assertMatchesBruteForce(gold, pred)

    def test_held_out_pair_only(self):
        first, second = gamingFixtures()
        pred = [first.withRelations({}), second]
        report = relationScores(
            [first, second], pred, slot_labels=("item", "enchantment")
        )
        self.assertEqual(report.counts.gold(), 3)
        self.assertEqual(report.counts.correct(), 1)
        self.assertEqual(report.exact_match, 0.5)
        report = relationScores([first, second], pred, slot_labels=("item", "item"))
        self.assertEqual(report.counts.gold(), 0)
        self.assertEqual(report.exact_match, 1.0)

    def test_relation_on_missing_pair(self):
        bad = self.burgers.withRelations({(0, 7): "numeric"})
        with self.assertRaises(CorpusException):
            relationScores([self.burgers], [bad])

    def test_different_slots(self):
        pred = self.burgers.withSlots(self.burgers.slots[:4])
        with self.assertRaises(CorpusException):
            relationScores([self.burgers], [pred])

    def test_buckets_partition_the_corpus(self):
        gold = foodFixtures() + gamingFixtures() + stocksFixtures()
        pred = [u.withRelations({}) for u in gold]
        buckets = bucketBySlotCount(gold, pred)
        self.assertEqual(sorted(buckets), [3, 4, 5, 7, 8])
        self.assertEqual(buckets[3].total, 3)
        overall = relationScores(gold, pred)
        self.assertEqual(sum(b.total for b in buckets.values()), overall.total)
        self.assertEqual(
            sum(b.counts.gold() for b in buckets.values()), overall.counts.gold()
        )


class RelationTripleScoresTest(unittest.TestCase):
    def setUp(self):
        self.fixtures = stocksFixtures()

    def test_triples(self):
        self.assertEqual(
            relationTriples(self.fixtures[0]),
            {(("negation_modifier", 7, 8), ("location", 9, 10), "negation_relation")},
        )

    def test_shifted_span(self):
        u = self.fixtures[0]
        slots = [(s.label, s.start, s.end) for s in u.slots]
        slots[2] = ("location", 8, 10)
        pred = u.withSlots(slots, u.relations)
        report = relationTripleScores([u], [pred])
        self.assertEqual(report.f1, 0.0)
        self.assertEqual(report.exact_match, 0.0)
        self.assertEqual(relationTripleScores([u], [u]).f1, 1.0)

    def test_missing_slot(self):
        u = self.fixtures[2]
        pred = u.withSlots(u.slots[1:], {(1, 2): "negation_relation"})
        report = relationTripleScores([u], [pred])
        # the relation is found but the sector slot is missing
        self.assertEqual(report.f1, 1.0)
        self.assertEqual(report.exact_match, 0.0)

    def test_ids(self):
        with self.assertRaises(CorpusException):
            relationTripleScores(self.fixtures, self.fixtures[:3])


if __name__ == "__main__":
    unittest.main()
