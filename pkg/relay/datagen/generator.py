#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Seeded synthetic corpus generator.

Every split gets exact quotas: the number of utterances per slot count, the
number of ambiguous utterances (those the nearest-candidate rules get wrong)
and the number of utterances per configured construct. Each utterance is
drawn pattern first, then a chunk sequence with that pattern, then the
gazetteer values. A draw is kept only if the rules agree with the gold
annotation exactly when the plan says they should, its text is new, and for
stocks both annotation schemes compile to the same operations.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import collections
import copy
import os
import random

from annotation.corpus import (
    SLOT_BASED_DIR,
    SPLIT_NAMES,
    Corpus,
    loadCorpus,
    saveCorpus,
)
from annotation.tokenizer import TOKENIZER_VERSION, checkTokenizerVersion, tokenize
from annotation.utterance import (
    AnnotatedUtterance,
    enumerateSlotPairs,
    slotPattern,
    validate,
)
from compilers.operations import loadLexicon
from compilers.relation_based.relation_based_compiler import compileRelationBased
from compilers.slot_based.slot_based_compiler import compileSlotBased
from datagen.templates import FILTER_AMOUNT, checkTemplates, loadTemplates
from extractors.heuristic.heuristic_extractor import heuristicExtract
from schemas.schema import loadSchema
from utils.custom_logger import getLogger
from utils.utilities import (
    CapacityException,
    CorpusException,
    RelayException,
    getSeed,
    loadJson,
    resolveDocument,
    writeJson,
)

DEFAULT_FRACTIONS = {"train": 0.70, "dev": 0.15, "test": 0.15}
NO_SPACE_BEFORE = (",", ".", "?", "!", ";", ":")

Plan = collections.namedtuple("Plan", ["slot_count", "ambiguous", "construct"])


def largestRemainder(total, weights):
    """Integer allocation of total proportional to weights; leftover units
    go to the largest remainders, earlier keys first on ties."""
    keys = list(weights)
    mass = float(sum(weights[k] for k in keys))
    if total <= 0 or mass <= 0:
        return {k: 0 for k in keys}
    exact = {k: total * weights[k] / mass for k in keys}
    counts = {k: int(exact[k]) for k in keys}
    leftover = total - sum(counts.values())
    order = sorted(keys, key=lambda k: (-(exact[k] - counts[k]), keys.index(k)))
    for k in order[:leftover]:
        counts[k] += 1
    return counts


class GeneratorConfig(object):
    def __init__(
        self,
        domain,
        counts=None,
        seed=0,
        slot_count_distribution=None,
        ambiguity_rate=0.15,
        ambiguous_slot_weights=None,
        construct_rates=None,
        templates=None,
        gazetteers=None,
        max_attempts=500,
        total=None,
    ):
        self.domain = domain
        if counts is None:
            assert total is not None, "Either counts or total must be given"
            counts = largestRemainder(int(total), DEFAULT_FRACTIONS)
        self.counts = {name: int(counts.get(name, 0)) for name in SPLIT_NAMES}
        self.seed = int(seed)
        distribution = slot_count_distribution or {str(n): 1.0 for n in range(2, 7)}
        self.slot_count_distribution = {
            int(n): float(p)
            for n, p in sorted(distribution.items(), key=lambda x: int(x[0]))
        }
        self.ambiguity_rate = float(ambiguity_rate)
        weights = ambiguous_slot_weights or {"3": 1, "4": 2, "5": 3, "6": 3}
        self.ambiguous_slot_weights = {int(n): float(w) for n, w in weights.items()}
        self.construct_rates = {
            name: float(rate) for name, rate in (construct_rates or {}).items()
        }
        self.templates = templates or domain
        self.gazetteers = gazetteers or domain
        self.max_attempts = int(max_attempts)
        self._check()

    def _check(self):
        assert (
            0.0 <= self.ambiguity_rate <= 1.0
        ), "ambiguity_rate {} not in [0, 1]".format(self.ambiguity_rate)
        for n, p in self.slot_count_distribution.items():
            assert 1 <= n <= 6, "Slot count {} is outside 1..6".format(n)
            assert p >= 0, "Slot count {} has a negative probability".format(n)
        assert sum(self.slot_count_distribution.values()) > 0, (
            "The slot count distribution is empty"
        )
        for name, rate in self.construct_rates.items():
            assert 0.0 <= rate <= 1.0, "Rate of {} is not in [0, 1]".format(name)
        assert all(c >= 0 for c in self.counts.values()), "Negative split size"

    def dump(self):
        return {
            "domain": self.domain,
            "counts": dict(self.counts),
            "seed": self.seed,
            "slot_count_distribution": {
                str(n): p for n, p in self.slot_count_distribution.items()
            },
            "ambiguity_rate": self.ambiguity_rate,
            "ambiguous_slot_weights": {
                str(n): w for n, w in self.ambiguous_slot_weights.items()
            },
            "construct_rates": dict(self.construct_rates),
            "templates": self.templates,
            "gazetteers": self.gazetteers,
            "max_attempts": self.max_attempts,
        }

    @staticmethod
    def load(source, overrides=None):
        """Bundled defaults for a domain name, or a config document. Keys of
        overrides that are not None replace the loaded values."""
        content = copy.deepcopy(loadJson(resolveDocument("generators", source)))
        for key, value in (overrides or {}).items():
            if value is not None:
                content[key] = value
        return GeneratorConfig(**content)


class CorpusGenerator(object):
    def __init__(self, config, schema, inventory=None, lexicon=None):
        assert config.domain == schema.domain, "Config is for {}, schema for {}".format(
            config.domain, schema.domain
        )
        self.config = config
        self.schema = schema
        self.inventory = inventory or loadTemplates(config.templates, config.gazetteers)
        self.parallel_schema = None
        self.lexicon = lexicon
        if self.inventory.parallel_schema:
            self.parallel_schema = loadSchema(self.inventory.parallel_schema)
            self.lexicon = lexicon or loadLexicon()
        checkTemplates(self.inventory, schema, self.parallel_schema, self.lexicon)
        self.rng = random.Random(config.seed)
        self.texts = set()
        self.index = self._buildIndex()

    def _buildIndex(self):
        configured = set(self.config.construct_rates)
        index = collections.defaultdict(lambda: collections.defaultdict(list))
        for sequence in self.inventory.sequences():
            n = self.inventory.slotCount(sequence)
            if n not in self.config.slot_count_distribution:
                continue
            present = self.inventory.constructs(sequence) & configured
            if len(present) > 1:
                continue
            construct = next(iter(present)) if present else None
            plan = Plan(n, self.inventory.isAmbiguous(sequence), construct)
            index[plan][self.inventory.pattern(sequence)].append(sequence)
        getLogger().info(
            "{} plans over {} slot patterns for {}".format(
                len(index),
                len(set(p for patterns in index.values() for p in patterns)),
                self.config.domain,
            )
        )
        return index

    def _plans(self, size):
        config = self.config
        buckets = largestRemainder(size, config.slot_count_distribution)
        ambiguous_total = int(round(config.ambiguity_rate * size))
        weights = {
            n: config.ambiguous_slot_weights.get(n, 0.0) * buckets[n] for n in buckets
        }
        if ambiguous_total > sum(buckets[n] for n in buckets if weights[n] > 0):
            raise CapacityException(
                "Cannot make {} of {} utterances ambiguous".format(
                    ambiguous_total, size
                )
            )
        ambiguous = largestRemainder(ambiguous_total, weights)
        # a bucket cannot hold more ambiguous utterances than utterances
        overflow = 0
        for n in sorted(buckets):
            if ambiguous[n] > buckets[n]:
                overflow += ambiguous[n] - buckets[n]
                ambiguous[n] = buckets[n]
        for n in sorted(buckets, reverse=True):
            room = buckets[n] - ambiguous[n] if weights[n] > 0 else 0
            moved = min(room, overflow)
            ambiguous[n] += moved
            overflow -= moved

        plans = []
        for n in sorted(buckets):
            plans.extend([Plan(n, True, None)] * ambiguous[n])
            plans.extend([Plan(n, False, None)] * (buckets[n] - ambiguous[n]))
        self.rng.shuffle(plans)

        for construct in sorted(config.construct_rates):
            quota = int(round(config.construct_rates[construct] * size))
            for k, plan in enumerate(plans):
                if quota == 0:
                    break
                candidate = plan._replace(construct=construct)
                if plan.construct is None and candidate in self.index:
                    plans[k] = candidate
                    quota -= 1
            if quota > 0:
                raise CapacityException(
                    "Not enough room for construct {} in {} utterances".format(
                        construct, size
                    )
                )
        for plan in plans:
            if plan not in self.index:
                raise CapacityException(
                    "No template can realize {} for {}".format(plan, config.domain)
                )
        return plans

    def _fill(self, sequence, uid):
        inventory = self.inventory
        tokens = []
        parts = []
        slots = []
        parallel_slots = []
        relations = []

        def emit(piece):
            if not piece:
                return
            tokens.extend(tokenize(piece))
            parts.append(piece)

        emit(self.rng.choice(inventory.prefixes))
        for section in inventory.sections:
            members = [
                k for k in sequence if inventory.chunks[k].section == section.name
            ]
            for position, k in enumerate(members):
                if position > 0:
                    emit(self.rng.choice(section.joiners))
                chunk = inventory.chunks[k]
                values = [self.rng.choice(inventory.values(h)) for h in chunk.holes]
                base = len(slots)
                for piece in chunk.pieces:
                    if not isinstance(piece, int):
                        emit(piece)
                        continue
                    hole = chunk.holes[piece]
                    start = len(tokens)
                    emit(values[piece])
                    span = (start, len(tokens))
                    slots.append((hole.label,) + span)
                    label = hole.parallel_label
                    if label == FILTER_AMOUNT:
                        label = self._amountLabel(chunk, values)
                    if label:
                        parallel_slots.append((label,) + span)
                for a, b in chunk.relations:
                    relation = self.schema.relationForPair(
                        chunk.holes[a].label, chunk.holes[b].label
                    )
                    relations.append((base + a, base + b, relation))
        emit(self.rng.choice(inventory.suffixes))

        text = ""
        for piece in parts:
            if text and not piece.startswith(NO_SPACE_BEFORE):
                text += " "
            text += piece
        text = text[:1].upper() + text[1:]
        assert tokenize(text) == tokens, "Text {} does not tokenize back".format(text)

        u = AnnotatedUtterance(
            uid, self.schema.domain, text, slots, relations, inventory.intent
        )
        parallel = None
        if self.parallel_schema is not None:
            parallel = AnnotatedUtterance(
                uid,
                self.parallel_schema.domain,
                text,
                parallel_slots,
                (),
                inventory.intent,
            )
        return u, parallel

    def _amountLabel(self, chunk, values):
        for k, hole in enumerate(chunk.holes):
            if hole.label == "filter_modifier":
                return FILTER_AMOUNT + "_" + self.lexicon.comparatorFor(values[k])
        raise RelayException(
            "Chunk {} has an amount but no filter modifier".format(chunk.name)
        )

    def _accept(self, plan, u, parallel):
        violations = validate(u, self.schema)
        if violations:
            raise RelayException(
                "Templates produced an invalid utterance {}: {}".format(
                    u.text, violations
                )
            )
        gold = u.relations
        expected = {pair: gold.get(pair) for pair in enumerateSlotPairs(u)}
        if (heuristicExtract(u.slots, self.schema) != expected) != plan.ambiguous:
            return False
        if parallel is not None:
            violations = validate(parallel, self.parallel_schema)
            if violations:
                raise RelayException(
                    "Templates produced an invalid slot-based utterance {}: {}".format(
                        u.text, violations
                    )
                )
            if compileSlotBased(parallel) != compileRelationBased(
                u, gold, self.lexicon, self.schema
            ):
                return False
        return True

    def _draw(self, plan, uid):
        patterns = self.index[plan]
        keys = sorted(patterns)
        for _ in range(self.config.max_attempts):
            pattern = self.rng.choice(keys)
            sequence = self.rng.choice(patterns[pattern])
            u, parallel = self._fill(sequence, uid)
            if u.text.lower() in self.texts:
                continue
            if self._accept(plan, u, parallel):
                self.texts.add(u.text.lower())
                return u, parallel
        raise CapacityException(
            "No new utterance for {} after {} attempts".format(
                plan, self.config.max_attempts
            )
        )

    def generate(self):
        splits = {}
        parallel_splits = {}
        realized = {}
        for name in SPLIT_NAMES:
            size = self.config.counts[name]
            utterances = []
            parallels = []
            plans = self._plans(size)
            for k, plan in enumerate(plans):
                uid = "{}-{}-{:05d}".format(self.config.domain, name, k)
                u, parallel = self._draw(plan, uid)
                utterances.append(u)
                if parallel is not None:
                    parallels.append(parallel)
            splits[name] = utterances
            parallel_splits[name] = parallels
            realized[name] = self._statistics(utterances, plans)
            getLogger().info(
                "Generated {} {} utterances for {}".format(
                    size, name, self.config.domain
                )
            )

        corpus = Corpus(
            self.schema.domain, splits["train"], splits["dev"], splits["test"]
        )
        if self.parallel_schema is not None:
            corpus.parallel = Corpus(
                self.parallel_schema.domain,
                parallel_splits["train"],
                parallel_splits["dev"],
                parallel_splits["test"],
            )
        corpus.manifest = {
            "config": self.config.dump(),
            "seed": self.config.seed,
            "template_fingerprint": self.inventory.fingerprint(),
            "tokenizer": TOKENIZER_VERSION,
            "statistics": realized,
        }
        return corpus

    def _statistics(self, utterances, plans):
        slot_counts = collections.Counter(len(u.slots) for u in utterances)
        constructs = collections.Counter(p.construct for p in plans if p.construct)
        ambiguous = 0
        for u in utterances:
            gold = u.relations
            expected = {pair: gold.get(pair) for pair in enumerateSlotPairs(u)}
            ambiguous += heuristicExtract(u.slots, self.schema) != expected
        return {
            "size": len(utterances),
            "slot_counts": {str(n): c for n, c in sorted(slot_counts.items())},
            "ambiguous": ambiguous,
            "ambiguity_rate": ambiguous / len(utterances) if utterances else 0.0,
            "constructs": dict(constructs),
            "relations": sum(len(u.relation_list) for u in utterances),
            "patterns": len(set(slotPattern(u) for u in utterances)),
        }


def generate(config, schema):
    return CorpusGenerator(config, schema).generate()


def defaultConfig(domain, seed=None, **overrides):
    overrides["seed"] = getSeed(seed)
    return GeneratorConfig.load(domain, overrides)


def writeGenerated(corpus, directory):
    saveCorpus(corpus, directory)
    if corpus.parallel is not None:
        saveCorpus(corpus.parallel, os.path.join(directory, SLOT_BASED_DIR))
    if corpus.manifest is not None:
        writeJson(os.path.join(directory, "manifest.json"), corpus.manifest)


def loadGenerated(directory):
    corpus = loadCorpus(directory)
    slot_based = os.path.join(directory, SLOT_BASED_DIR)
    if os.path.isdir(slot_based):
        corpus.parallel = loadCorpus(slot_based)
    manifest = os.path.join(directory, "manifest.json")
    if os.path.isfile(manifest):
        corpus.manifest = loadJson(manifest)
        checkTokenizerVersion(corpus.manifest, directory, CorpusException)
    return corpus
