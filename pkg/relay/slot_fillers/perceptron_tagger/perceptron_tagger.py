#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Greedy BIO slot tagger trained with the averaged perceptron.

Decoding is left to right; the previous predicted tag is a feature and the
BIO constraint (``I-x`` only after ``B-x`` or ``I-x``) is applied at every
step, both while training and while tagging.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import random

from annotation.tokenizer import TOKENIZER_VERSION, checkTokenizerVersion, tokenize
from annotation.utterance import makeSlot
from learners.averaged_perceptron import AveragedPerceptron, dumpWeights, loadWeights
from slot_fillers.perceptron_tagger.tagger_features import (
    FEATURE_TEMPLATES,
    START,
    tokenFeatures,
)
from slot_fillers.slot_filler_base import SlotFillerBase
from utils.custom_logger import getLogger
from utils.utilities import TrainingException, loadJson, writeJson

MODEL_VERSION = 1
MODEL_KIND = "perceptron_tagger"
OUTSIDE = "O"


def slotsToTags(u):
    tags = [OUTSIDE] * len(u.tokens)
    for slot in u.slots:
        tags[slot.start] = "B-" + slot.label
        for k in range(slot.start + 1, slot.end):
            tags[k] = "I-" + slot.label
    return tags


def tagsToSlots(tokens, tags):
    slots = []
    start = None
    label = None
    for k, tag in enumerate(tags + [OUTSIDE]):
        inside = tag.startswith("I-") and label == tag[2:]
        if start is not None and not inside:
            slots.append(makeSlot(tokens, label, start, k))
            start = None
            label = None
        if tag.startswith("B-") or (tag.startswith("I-") and start is None):
            start = k
            label = tag[2:]
    return slots


def allowedTags(labels, prev_tag):
    allowed = set()
    for tag in labels:
        if tag.startswith("I-") and prev_tag[2:] != tag[2:]:
            continue
        allowed.add(tag)
    return allowed


class TaggerModel(object):
    def __init__(self, labels, seed=0, templates=None, weights=None):
        self.perceptron = AveragedPerceptron(labels)
        if weights is not None:
            self.perceptron.weights = weights
        self.seed = seed
        self.templates = list(FEATURE_TEMPLATES if templates is None else templates)

    @property
    def labels(self):
        return self.perceptron.labels

    @property
    def weights(self):
        return self.perceptron.weights

    def predictTags(self, tokens, weights=None, gold=None):
        """Greedy decode. With gold tags, also updates the perceptron after
        each position and returns the number of correct tags."""
        tags = []
        correct = 0
        prev_tag = START
        for position in range(len(tokens)):
            features = tokenFeatures(tokens, position, prev_tag, self.templates)
            guess = self.perceptron.predict(
                features, allowedTags(self.labels, prev_tag), weights
            )
            if gold is not None:
                self.perceptron.update(gold[position], guess, features)
                correct += guess == gold[position]
            tags.append(guess)
            prev_tag = guess
        return tags if gold is None else correct

    def dump(self):
        return {
            "version": MODEL_VERSION,
            "kind": MODEL_KIND,
            "tokenizer": TOKENIZER_VERSION,
            "seed": self.seed,
            "labels": self.labels,
            "templates": self.templates,
            "weights": dumpWeights(self.weights),
        }


def trainTagger(corpus, seed=0, epochs=10, dev=None):
    """Train a tagger on annotated utterances. With a dev corpus, the averaged
    weights of the epoch with the best dev tag accuracy are kept."""
    if not corpus:
        raise TrainingException("Cannot train a slot tagger on an empty corpus")
    gold = [(u.tokens, slotsToTags(u)) for u in corpus]
    labels = set()
    for _, tags in gold:
        labels.update(t for t in tags if t != OUTSIDE)
    model = TaggerModel([OUTSIDE] + sorted(labels), seed)
    if epochs == 0:
        return model

    rng = random.Random(seed)
    order = list(range(len(gold)))
    best = None
    for epoch in range(epochs):
        rng.shuffle(order)
        correct = 0
        total = 0
        for index in order:
            tokens, tags = gold[index]
            correct += model.predictTags(tokens, gold=tags)
            total += len(tags)
        getLogger().info(
            "Tagger epoch {}: train tag accuracy {:.4f}".format(
                epoch, correct / max(total, 1)
            )
        )
        if dev:
            averaged = model.perceptron.averagedWeights()
            accuracy = tagAccuracy(model, dev, averaged)
            getLogger().info(
                "Tagger epoch {}: dev tag accuracy {:.4f}".format(epoch, accuracy)
            )
            if best is None or accuracy > best[0]:
                best = (accuracy, epoch, averaged)
    if best is not None:
        getLogger().info("Keeping tagger weights of epoch {}".format(best[1]))
        model.perceptron.finalize(best[2])
    else:
        model.perceptron.finalize()
    getLogger().info(
        "Tagger held-in tag accuracy {:.4f}".format(tagAccuracy(model, corpus))
    )
    return model


def tagAccuracy(model, corpus, weights=None):
    correct = 0
    total = 0
    for u in corpus:
        gold = slotsToTags(u)
        predicted = model.predictTags(u.tokens, weights)
        correct += sum(1 for g, p in zip(gold, predicted) if g == p)
        total += len(gold)
    return correct / total if total else 1.0


def tagTokens(model, tokens):
    return tagsToSlots(tokens, model.predictTags(tokens))


def tag(model, text):
    return tagTokens(model, tokenize(text))


def saveTagger(model, filename):
    writeJson(filename, model.dump())


def loadTagger(source):
    content = loadJson(source)
    if content.get("kind") != MODEL_KIND:
        raise TrainingException(
            "{} does not hold a {} model".format(source, MODEL_KIND)
        )
    if content.get("version") != MODEL_VERSION:
        raise TrainingException(
            "Tagger model version {} is not supported".format(content.get("version"))
        )
    checkTokenizerVersion(content, source, TrainingException)
    return TaggerModel(
        content["labels"],
        content["seed"],
        content["templates"],
        loadWeights(content["weights"]),
    )


class PerceptronTaggerSlotFiller(SlotFillerBase):
    def getName(self):
        return MODEL_KIND

    def train(self, corpus, seed, epochs, dev=None):
        self.model = trainTagger(corpus, seed, epochs, dev)
        return self

    def fillSlots(self, u):
        if self.model is None:
            raise TrainingException("The slot tagger is used before training")
        return tagTokens(self.model, u.tokens)

    def save(self, filename):
        saveTagger(self.model, filename)

    @staticmethod
    def load(source):
        return PerceptronTaggerSlotFiller(loadTagger(source))
