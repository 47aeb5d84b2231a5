#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import random

from annotation.tokenizer import TOKENIZER_VERSION, checkTokenizerVersion
from annotation.utterance import encodePair, enumerateSlotPairs
from extractors.extractor_base import ExtractorBase
from extractors.pair_classifier.pair_features import pairFeatures
from learners.averaged_perceptron import AveragedPerceptron, dumpWeights, loadWeights
from schemas.schema import NONE_LABEL
from utils.custom_logger import getLogger
from utils.utilities import TrainingException

MODEL_VERSION = 1
MODEL_KIND = "pair_classifier"


class PairClassifierModel(object):
    def __init__(self, labels, seed=0, weights=None, domain=None):
        self.perceptron = AveragedPerceptron(labels)
        if weights is not None:
            self.perceptron.weights = weights
        self.seed = seed
        self.domain = domain

    @property
    def labels(self):
        return self.perceptron.labels

    @property
    def weights(self):
        return self.perceptron.weights

    def dump(self):
        return {
            "version": MODEL_VERSION,
            "kind": MODEL_KIND,
            "tokenizer": TOKENIZER_VERSION,
            "domain": self.domain,
            "seed": self.seed,
            "labels": self.labels,
            "weights": dumpWeights(self.weights),
        }

    @staticmethod
    def load(content):
        if content.get("version") != MODEL_VERSION:
            raise TrainingException(
                "Pair classifier version {} is not supported".format(
                    content.get("version")
                )
            )
        checkTokenizerVersion(content, "Pair classifier model", TrainingException)
        return PairClassifierModel(
            content["labels"],
            content["seed"],
            loadWeights(content["weights"]),
            content.get("domain"),
        )


def modelLabels(schema):
    # None last: it loses every tie
    return schema.sortedRelationTypes() + [NONE_LABEL]


def allowedFor(schema, u, pair):
    i, j = pair
    slots = u.slots
    return set(
        label or NONE_LABEL
        for label in schema.allowedLabels(slots[i].label, slots[j].label)
    )


def _instances(corpus, schema, mask):
    instances = []
    for u in corpus:
        relations = u.relations
        for pair in enumerateSlotPairs(u):
            features = pairFeatures(encodePair(u, pair), schema)
            allowed = allowedFor(schema, u, pair) if mask else None
            instances.append((features, relations.get(pair, NONE_LABEL), allowed))
    return instances


def _accuracy(perceptron, instances, weights=None):
    if not instances:
        return 1.0
    correct = sum(
        1
        for features, gold, allowed in instances
        if perceptron.predict(features, allowed, weights) == gold
    )
    return correct / len(instances)


def trainPairClassifier(corpus, schema, seed=0, epochs=10, dev=None, mask=True):
    """One instance per slot pair of every utterance, labelled with the gold
    relation or None. With a dev corpus the best epoch by dev pair accuracy
    is kept."""
    if not corpus:
        raise TrainingException("Cannot train a pair classifier on an empty corpus")
    model = PairClassifierModel(modelLabels(schema), seed, domain=schema.domain)
    instances = _instances(corpus, schema, mask)
    dev_instances = _instances(dev, schema, mask) if dev else None
    getLogger().info(
        "Training pair classifier on {} pairs from {} utterances".format(
            len(instances), len(corpus)
        )
    )
    if epochs == 0:
        return model

    perceptron = model.perceptron
    rng = random.Random(seed)
    order = list(range(len(instances)))
    best = None
    for epoch in range(epochs):
        rng.shuffle(order)
        mistakes = 0
        for index in order:
            features, gold, allowed = instances[index]
            guess = perceptron.predict(features, allowed)
            mistakes += perceptron.update(gold, guess, features)
        getLogger().info(
            "Pair classifier epoch {}: {} mistakes on {} pairs".format(
                epoch, mistakes, len(instances)
            )
        )
        if dev_instances:
            averaged = perceptron.averagedWeights()
            accuracy = _accuracy(perceptron, dev_instances, averaged)
            getLogger().info(
                "Pair classifier epoch {}: dev pair accuracy {:.4f}".format(
                    epoch, accuracy
                )
            )
            if best is None or accuracy > best[0]:
                best = (accuracy, epoch, averaged)
    if best is not None:
        getLogger().info("Keeping pair classifier weights of epoch {}".format(best[1]))
        perceptron.finalize(best[2])
    else:
        perceptron.finalize()
    return model


def extractLearned(model, u, schema, mask=True):
    if model is None:
        raise TrainingException("The pair classifier is used before training")
    assignment = {}
    for pair in enumerateSlotPairs(u):
        features = pairFeatures(encodePair(u, pair), schema)
        allowed = allowedFor(schema, u, pair) if mask else None
        label = model.perceptron.predict(features, allowed)
        assignment[pair] = None if label == NONE_LABEL else label
    return assignment


class PairClassifierExtractor(ExtractorBase):
    def __init__(self, schema, model=None, **kwargs):
        super(PairClassifierExtractor, self).__init__(schema, model, **kwargs)
        self.mask = kwargs.get("mask", True)

    def getName(self):
        return MODEL_KIND

    def train(self, corpus, seed, epochs, dev=None):
        self.model = trainPairClassifier(
            corpus, self.schema, seed, epochs, dev, self.mask
        )
        return self

    def extract(self, u):
        return extractLearned(self.model, u, self.schema, self.mask)

    def dump(self):
        if self.model is None:
            raise TrainingException("The pair classifier is used before training")
        return self.model.dump()
