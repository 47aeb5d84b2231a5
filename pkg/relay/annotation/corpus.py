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

from annotation.utterance import AnnotatedUtterance
from utils.custom_logger import getLogger
from utils.utilities import CorpusException, readJsonLines, writeJsonLines

SPLIT_NAMES = ("train", "dev", "test")
SLOT_BASED_DIR = "slot_based"


def utteranceToRow(u):
    return {
        "id": u.id,
        "domain": u.domain,
        "text": u.text,
        "intent": u.intent,
        "slots": [
            {"label": s.label, "start": s.start, "end": s.end} for s in u.slots
        ],
        "relations": [
            {"a": a, "b": b, "label": label} for a, b, label in u.relation_list
        ],
    }


def utteranceFromRow(row):
    for field in ("id", "domain", "text"):
        if field not in row:
            raise CorpusException("Field {} is missing in {}".format(field, row))
    try:
        slots = [
            (s["label"], int(s["start"]), int(s["end"])) for s in row.get("slots", [])
        ]
        relations = [
            (int(r["a"]), int(r["b"]), r["label"]) for r in row.get("relations", [])
        ]
    except (KeyError, TypeError, ValueError) as e:
        raise CorpusException("Malformed utterance {}: {}".format(row["id"], e))
    return AnnotatedUtterance(
        row["id"], row["domain"], row["text"], slots, relations, row.get("intent")
    )


def readUtterances(filename):
    return [utteranceFromRow(row) for row in readJsonLines(filename)]


def writeUtterances(filename, utterances):
    writeJsonLines(filename, [utteranceToRow(u) for u in utterances])


class Corpus(object):
    def __init__(self, domain, train=(), dev=(), test=()):
        self.domain = domain
        # slot-based annotation of the same texts, when there is one
        self.parallel = None
        self.manifest = None
        self.splits = {
            "train": list(train),
            "dev": list(dev),
            "test": list(test),
        }
        ids = [u.id for u in self.allUtterances()]
        if len(ids) != len(set(ids)):
            raise CorpusException("Corpus {} has duplicated ids".format(domain))

    @property
    def train(self):
        return self.splits["train"]

    @property
    def dev(self):
        return self.splits["dev"]

    @property
    def test(self):
        return self.splits["test"]

    def allUtterances(self):
        return self.train + self.dev + self.test

    def sizes(self):
        return {name: len(self.splits[name]) for name in SPLIT_NAMES}

    def selectByIds(self, ids):
        index = {u.id: u for u in self.allUtterances()}
        missing = [i for i in ids if i not in index]
        if missing:
            raise CorpusException(
                "{} ids are not in corpus {}, e.g. {}".format(
                    len(missing), self.domain, missing[0]
                )
            )
        return [index[i] for i in ids]


def loadCorpus(directory, domain=None):
    """Read train/dev/test jsonl files from a directory. Absent splits are
    empty, but at least one must exist."""
    files = {name: os.path.join(directory, name + ".jsonl") for name in SPLIT_NAMES}
    if not any(os.path.isfile(f) for f in files.values()):
        raise CorpusException("No corpus split found in {}".format(directory))
    splits = {
        name: readUtterances(f) if os.path.isfile(f) else []
        for name, f in files.items()
    }
    if domain is None:
        first = next((u for name in SPLIT_NAMES for u in splits[name]), None)
        domain = first.domain if first is not None else None
    getLogger().info(
        "Loaded corpus {} from {}: {}".format(
            domain, directory, {k: len(v) for k, v in splits.items()}
        )
    )
    return Corpus(domain, splits["train"], splits["dev"], splits["test"])


def saveCorpus(corpus, directory):
    for name in SPLIT_NAMES:
        writeUtterances(os.path.join(directory, name + ".jsonl"), corpus.splits[name])


def alignCorpora(gold, pred):
    """Pair gold and predicted utterances by id. Both sides must carry the
    same ids and the same slot count per utterance."""
    pred_index = {u.id: u for u in pred}
    gold_ids = [u.id for u in gold]
    if len(pred_index) != len(pred) or set(gold_ids) != set(pred_index):
        raise CorpusException("Gold and predicted corpora have different ids")
    pairs = []
    for g in gold:
        p = pred_index[g.id]
        if len(g.slots) != len(p.slots):
            raise CorpusException(
                "Utterance {} has {} gold slots but {} predicted slots".format(
                    g.id, len(g.slots), len(p.slots)
                )
            )
        pairs.append((g, p))
    return pairs
