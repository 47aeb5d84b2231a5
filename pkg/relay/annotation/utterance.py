#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Annotated utterances, slot pairs and pair encodings.

Slots are token ranges ``[start, end)`` over the fixed tokenizer output.
Relations are non-directional and keyed by the slot index pair ``(i, j)`` with
``i < j``; only non-None labels are stored.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import collections
import itertools

from annotation.tokenizer import tokenize
from utils.utilities import AnnotationException

BEGIN_SLOT = "BEGIN_SLOT"
END_SLOT = "END_SLOT"

SlotSpan = collections.namedtuple("SlotSpan", ["label", "start", "end", "value"])
SlotPattern = collections.namedtuple("SlotPattern", ["labels"])
# slots are carried along so features can look at the rest of the utterance
PairEncoding = collections.namedtuple("PairEncoding", ["tokens", "pair", "slots"])


def makeSlot(tokens, label, start, end):
    if start < 0 or end > len(tokens) or start >= end:
        raise AnnotationException(
            "Span [{}, {}) of slot {} is out of range for {} tokens".format(
                start, end, label, len(tokens)
            )
        )
    return SlotSpan(label, start, end, " ".join(tokens[start:end]))


class AnnotatedUtterance(object):
    def __init__(self, uid, domain, text, slots=(), relations=(), intent=None):
        self._id = uid
        self._domain = domain
        self._text = text
        self._intent = intent
        self._tokens = tuple(tokenize(text))
        self._slots = tuple(self._toSlot(s) for s in slots)
        if isinstance(relations, dict):
            relations = [(a, b, label) for (a, b), label in relations.items()]
        triples = []
        for a, b, label in relations:
            if label is None:
                continue
            triples.append((min(a, b), max(a, b), label))
        self._relations = tuple(sorted(triples))

    def _toSlot(self, slot):
        label, start, end = slot[0], slot[1], slot[2]
        # out of range spans are kept so that validate can report them
        value = " ".join(self._tokens[max(start, 0) : max(end, 0)])
        return SlotSpan(label, start, end, value)

    @property
    def id(self):
        return self._id

    @property
    def domain(self):
        return self._domain

    @property
    def text(self):
        return self._text

    @property
    def intent(self):
        return self._intent

    @property
    def tokens(self):
        return list(self._tokens)

    @property
    def slots(self):
        return list(self._slots)

    @property
    def relations(self):
        return {(a, b): label for a, b, label in self._relations}

    @property
    def relation_list(self):
        return list(self._relations)

    def withSlots(self, slots, relations=()):
        return AnnotatedUtterance(
            self._id, self._domain, self._text, slots, relations, self._intent
        )

    def withRelations(self, assignment):
        return AnnotatedUtterance(
            self._id, self._domain, self._text, self._slots, assignment, self._intent
        )

    def __eq__(self, other):
        if not isinstance(other, AnnotatedUtterance):
            return False
        return (
            self._id == other._id
            and self._domain == other._domain
            and self._text == other._text
            and self._intent == other._intent
            and self._slots == other._slots
            and self._relations == other._relations
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._id, self._text, self._slots))

    def __repr__(self):
        return "AnnotatedUtterance({}, {!r}, {} slots, {} relations)".format(
            self._id, self._text, len(self._slots), len(self._relations)
        )


def enumerateSlotPairs(u):
    return list(itertools.combinations(range(len(u.slots)), 2))


def encodePair(u, pair):
    i, j = pair
    slots = u.slots
    if not (0 <= i < j < len(slots)):
        raise AnnotationException(
            "Pair {} is not a valid slot pair of {}".format(pair, u.id)
        )
    selected = (slots[i], slots[j])
    tokens = []
    for position, token in enumerate(u.tokens):
        for slot in selected:
            if position == slot.start:
                tokens.extend([slot.label, BEGIN_SLOT])
        tokens.append(token)
        for slot in selected:
            if position == slot.end - 1:
                tokens.extend([END_SLOT, slot.label])
    return PairEncoding(tuple(tokens), (i, j), tuple(slots))


def stripMarkers(enc):
    """Original tokens of a pair encoding."""
    dropped = set()
    for k, token in enumerate(enc.tokens):
        if token == BEGIN_SLOT:
            dropped.update((k - 1, k))
        elif token == END_SLOT:
            dropped.update((k, k + 1))
    return [t for k, t in enumerate(enc.tokens) if k not in dropped]


def slotPattern(u):
    return SlotPattern(tuple(s.label for s in u.slots))


def validate(u, schema):
    violations = []
    tokens = u.tokens
    slots = u.slots
    if u.domain != schema.domain:
        violations.append(
            "domain {} does not match schema {}".format(u.domain, schema.domain)
        )
    previous = None
    for index, slot in enumerate(slots):
        if slot.label not in schema.slot_types:
            violations.append("slot {}: unknown slot type {}".format(index, slot.label))
        if slot.start < 0 or slot.end > len(tokens) or slot.start >= slot.end:
            violations.append(
                "slot {}: span [{}, {}) out of range".format(
                    index, slot.start, slot.end
                )
            )
        elif slot.value != " ".join(tokens[slot.start : slot.end]):
            violations.append("slot {}: value does not match its tokens".format(index))
        if previous is not None:
            if slot.start < previous.start:
                violations.append("slot {}: slots are not sorted".format(index))
            elif slot.start < previous.end:
                violations.append("slot {}: overlaps slot {}".format(index, index - 1))
        previous = slot

    counts = collections.Counter((a, b) for a, b, _ in u.relation_list)
    for (a, b), count in sorted(counts.items()):
        if count > 1:
            violations.append("pair ({}, {}): duplicate relation".format(a, b))
    for a, b, label in u.relation_list:
        if not (0 <= a < b < len(slots)):
            violations.append("pair ({}, {}): slot index out of range".format(a, b))
            continue
        left, right = slots[a].label, slots[b].label
        if left not in schema.slot_types or right not in schema.slot_types:
            continue
        expected = schema.relationForPair(left, right)
        if expected is None:
            violations.append(
                "pair ({}, {}): pair {}/{} not in schema".format(a, b, left, right)
            )
        elif expected != label:
            violations.append(
                "pair ({}, {}): {} should be {}".format(a, b, label, expected)
            )
    return violations


def checkUtterance(u, schema):
    violations = validate(u, schema)
    if violations:
        raise AnnotationException(
            "Utterance {} is invalid: {}".format(u.id, "; ".join(violations))
        )
    return u
