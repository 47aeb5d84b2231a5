#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

from utils.utilities import TrainingException, loadJson, writeJson

from .heuristic.heuristic_extractor import HeuristicExtractor
from .pair_classifier.pair_classifier import (
    PairClassifierExtractor,
    PairClassifierModel,
)

extractors = {
    "heuristic": HeuristicExtractor,
    "pair_classifier": PairClassifierExtractor,
}


def getExtractors():
    global extractors
    return extractors


def getExtractor(name, schema, **kwargs):
    registry = getExtractors()
    assert name in registry, "Extractor {} is not supported, use one of {}".format(
        name, sorted(registry)
    )
    return registry[name](schema, **kwargs)


def saveExtractor(extractor, filename):
    writeJson(filename, extractor.dump())


def loadExtractor(source, schema, **kwargs):
    content = loadJson(source)
    kind = content.get("kind")
    registry = getExtractors()
    if kind not in registry:
        raise TrainingException("{} does not hold an extractor model".format(source))
    if content.get("domain", content.get("schema")) not in (None, schema.domain):
        raise TrainingException(
            "Model {} was trained for another domain than {}".format(
                source, schema.domain
            )
        )
    if kind == "heuristic":
        return registry[kind](schema, **kwargs)
    return registry[kind](schema, PairClassifierModel.load(content), **kwargs)
