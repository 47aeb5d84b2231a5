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
import sys
import unittest

RELAY_DIR = os.path.abspath(
    os.path.join(os.path.dirname(os.path.realpath(__file__)), os.pardir, os.pardir)
)
sys.path.append(RELAY_DIR)
from annotation.tokenizer import TOKENIZER_VERSION
from annotation.utterance import encodePair, enumerateSlotPairs
from datagen.fixtures import gamingFixtures, stocksFixtures
from extractors.pair_classifier.pair_classifier import (
    PairClassifierExtractor,
    PairClassifierModel,
    allowedFor,
    extractLearned,
    modelLabels,
    trainPairClassifier,
)
from extractors.pair_classifier.pair_features import (
    countBucket,
    distanceBucket,
    pairFeatures,
)
from schemas.schema import NONE_LABEL, loadSchema
from utils.utilities import TrainingException


def pairAccuracy(extractor, utterances):
    correct = 0
    total = 0
    for u in utterances:
        assignment = extractor.extract(u)
        gold = u.relations
        for pair in enumerateSlotPairs(u):
            correct += assignment[pair] == gold.get(pair)
            total += 1
    return correct / total


class PairFeaturesTest(unittest.TestCase):
    def setUp(self):
        self.gaming = loadSchema("gaming")
        self.first, self.second = gamingFixtures()

    def test_buckets(self):
        self.assertEqual(
            [distanceBucket(d) for d in (0, 2, 3, 4, 5, 9)],
            ["0", "2", "3-4", "3-4", "5+", "5+"],
        )
        self.assertEqual([countBucket(c) for c in (0, 2, 3, 7)], ["0", "2", "3+", "3+"])

    def test_adjacent_pair(self):
        features = pairFeatures(encodePair(self.first, (0, 1)), self.gaming)
        self.assertIn("pair=enchantment|item", features)
        self.assertIn("btw_empty", features)
        self.assertIn("cand=enchantment|side=left", features)
        self.assertIn("l_prev=your", features)

    def test_article_between(self):
        with_article = pairFeatures(encodePair(self.second, (0, 2)), self.gaming)
        without = pairFeatures(encodePair(self.first, (0, 2)), self.gaming)
        self.assertIn("art=1", with_article)
        self.assertIn("art=0", without)
        self.assertIn("btw=a", with_article)
        self.assertIn("conj=1", without)

    def test_features_do_not_name_values_of_slots(self):
        features = pairFeatures(encodePair(self.first, (1, 2)), self.gaming)
        self.assertIn("cand=None", features)
        self.assertIn("cand=None|side=none", features)


class PairClassifierTest(unittest.TestCase):
    def setUp(self):
        self.schema = loadSchema("stocks")
        self.fixtures = stocksFixtures()

    def test_labels(self):
        labels = modelLabels(self.schema)
        self.assertEqual(labels[-1], NONE_LABEL)
        self.assertEqual(labels[:-1], sorted(self.schema.relation_types))

    def test_allowed(self):
        u = self.fixtures[0]
        self.assertEqual(
            allowedFor(self.schema, u, (0, 1)), {"negation_relation", NONE_LABEL}
        )
        self.assertEqual(allowedFor(self.schema, u, (0, 2)), {NONE_LABEL})

    def test_untrained(self):
        extractor = PairClassifierExtractor(self.schema)
        with self.assertRaises(TrainingException):
            extractor.extract(self.fixtures[0])
        with self.assertRaises(TrainingException):
            extractor.dump()
        with self.assertRaises(TrainingException):
            trainPairClassifier([], self.schema)

    def test_mask_keeps_schema_labels(self):
        extractor = PairClassifierExtractor(self.schema, mask=True)
        extractor.train(self.fixtures[:2], 0, 2)
        for u in self.fixtures:
            for (i, j), label in extractor.extract(u).items():
                allowed = self.schema.allowedLabels(u.slots[i].label, u.slots[j].label)
                self.assertIn(label, allowed)

    def test_learns_training_data(self):
        extractor = PairClassifierExtractor(self.schema).train(
            self.fixtures * 3, 0, 10
        )
        self.assertGreaterEqual(pairAccuracy(extractor, self.fixtures), 0.9)
        for u in self.fixtures:
            self.assertEqual(
                extractLearned(extractor.model, u, self.schema), extractor.extract(u)
            )
        self.assertEqual(extractor.getName(), "pair_classifier")

    def test_without_mask(self):
        extractor = PairClassifierExtractor(self.schema, mask=False)
        self.assertFalse(extractor.mask)
        extractor.train(self.fixtures * 3, 0, 10)
        self.assertEqual(len(extractor.extract(self.fixtures[1])), 21)

    def test_zero_epochs(self):
        model = trainPairClassifier(self.fixtures, self.schema, epochs=0)
        self.assertEqual(model.weights, {})
        self.assertEqual(model.domain, "stocks")

    def test_same_seed_same_model(self):
        first = trainPairClassifier(
            self.fixtures, self.schema, seed=4, epochs=3, dev=self.fixtures[:2]
        )
        second = trainPairClassifier(
            self.fixtures, self.schema, seed=4, epochs=3, dev=self.fixtures[:2]
        )
        self.assertEqual(first.dump(), second.dump())

    def test_tokenizer_version_is_checked(self):
        content = trainPairClassifier(self.fixtures, self.schema, epochs=1).dump()
        self.assertEqual(content["tokenizer"], TOKENIZER_VERSION)
        content["tokenizer"] = TOKENIZER_VERSION + 1
        with self.assertRaises(TrainingException):
            PairClassifierModel.load(content)
        del content["tokenizer"]
        self.assertEqual(PairClassifierModel.load(content).domain, "stocks")


if __name__ == "__main__":
    unittest.main()
