#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Chunk grammar for the corpus generator.

A template document lists sections (in utterance order) and chunks. A chunk
is a text with typed holes and the gold relations between its holes. A hole
is written ``{label}``, ``{label@variant}`` to draw from another gazetteer
entry, and ``{label:parallel_label}`` to give the label of the slot in the
slot-based annotation of the same text (an empty parallel label means the
hole is not a slot there). The parallel label ``filter_amount`` is completed
with the comparator of the chunk's filter modifier.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import collections
import itertools
import re

from utils.utilities import (
    RelayException,
    fingerprint,
    loadJson,
    resolveDocument,
)

HOLE_RE = re.compile(r"\{([a-z_]+)(?:@([a-z_]+))?(?::([a-z_]*))?\}")
FILTER_AMOUNT = "filter_amount"

Hole = collections.namedtuple("Hole", ["label", "gazetteer", "parallel_label"])
Chunk = collections.namedtuple(
    "Chunk",
    ["name", "section", "pieces", "holes", "relations", "ambiguous", "constructs"],
)
Section = collections.namedtuple("Section", ["name", "min", "max", "joiners"])


def parseChunk(entry):
    text = entry["text"]
    pieces = []
    holes = []
    position = 0
    for match in HOLE_RE.finditer(text):
        literal = text[position : match.start()].strip()
        if literal:
            pieces.append(literal)
        label, variant, parallel = match.groups()
        gazetteer = label + "@" + variant if variant else label
        holes.append(Hole(label, gazetteer, label if parallel is None else parallel))
        pieces.append(len(holes) - 1)
        position = match.end()
    literal = text[position:].strip()
    if literal:
        pieces.append(literal)
    relations = [tuple(r) for r in entry.get("relations", [])]
    for a, b in relations:
        if not (0 <= a < b < len(holes)):
            raise RelayException(
                "Chunk {} relates holes ({}, {}) it does not have".format(
                    entry["name"], a, b
                )
            )
    return Chunk(
        entry["name"],
        entry["section"],
        tuple(pieces),
        tuple(holes),
        tuple(relations),
        bool(entry.get("ambiguous", False)),
        frozenset(entry.get("constructs", [])),
    )


class TemplateInventory(object):
    def __init__(self, content, gazetteers):
        self.domain = content["domain"]
        self.intent = content.get("intent")
        self.parallel_schema = content.get("parallel_schema")
        self.prefixes = content.get("prefixes", [""])
        self.suffixes = content.get("suffixes", [""])
        self.sections = [
            Section(s["name"], s.get("min", 0), s.get("max", 1), s.get("joiners", []))
            for s in content["sections"]
        ]
        self.chunks = [parseChunk(entry) for entry in content["chunks"]]
        self.gazetteers = gazetteers
        self._fingerprint = fingerprint(
            {"templates": content, "gazetteers": gazetteers}
        )
        names = set(s.name for s in self.sections)
        for chunk in self.chunks:
            if chunk.section not in names:
                raise RelayException(
                    "Chunk {} is in unknown section {}".format(
                        chunk.name, chunk.section
                    )
                )
            for hole in chunk.holes:
                if not self.gazetteers.get(hole.gazetteer):
                    raise RelayException(
                        "Gazetteer {} is missing or empty".format(hole.gazetteer)
                    )
        for section in self.sections:
            if section.max > 1 and not section.joiners:
                raise RelayException(
                    "Section {} repeats chunks without joiners".format(section.name)
                )

    def fingerprint(self):
        return self._fingerprint

    def values(self, hole):
        return self.gazetteers[hole.gazetteer]

    def sectionOptions(self, section):
        members = [k for k, c in enumerate(self.chunks) if c.section == section.name]
        options = []
        for length in range(section.min, section.max + 1):
            options.extend(itertools.product(members, repeat=length))
        return options

    def sequences(self):
        """Every chunk sequence the sections allow, as tuples of chunk
        indices in utterance order."""
        per_section = [self.sectionOptions(s) for s in self.sections]
        for combination in itertools.product(*per_section):
            yield tuple(k for part in combination for k in part)

    def slotCount(self, sequence):
        return sum(len(self.chunks[k].holes) for k in sequence)

    def pattern(self, sequence):
        return tuple(h.label for k in sequence for h in self.chunks[k].holes)

    def isAmbiguous(self, sequence):
        return any(self.chunks[k].ambiguous for k in sequence)

    def constructs(self, sequence):
        found = set()
        for k in sequence:
            found.update(self.chunks[k].constructs)
        return found


def checkTemplates(inventory, schema, parallel_schema=None, lexicon=None):
    """Static check that every instantiation is schema-valid."""
    errors = []
    for chunk in inventory.chunks:
        for hole in chunk.holes:
            if hole.label not in schema.slot_types:
                errors.append("{}: unknown slot type {}".format(chunk.name, hole.label))
            if parallel_schema is None or hole.parallel_label in ("", FILTER_AMOUNT):
                continue
            if hole.parallel_label not in parallel_schema.slot_types:
                errors.append(
                    "{}: unknown slot-based label {}".format(
                        chunk.name, hole.parallel_label
                    )
                )
        for a, b in chunk.relations:
            left, right = chunk.holes[a].label, chunk.holes[b].label
            if (
                left in schema.slot_types
                and right in schema.slot_types
                and schema.relationForPair(left, right) is None
            ):
                errors.append(
                    "{}: {} and {} cannot be related".format(chunk.name, left, right)
                )
        if lexicon is not None:
            for hole in chunk.holes:
                if hole.label != "filter_modifier":
                    continue
                for value in inventory.values(hole):
                    if value not in lexicon:
                        errors.append(
                            "{}: {} is not in the comparator lexicon".format(
                                chunk.name, value
                            )
                        )
    if errors:
        raise RelayException(
            "Templates of {} are invalid: {}".format(
                inventory.domain, "; ".join(errors)
            )
        )
    return inventory


def loadTemplates(templates="food", gazetteers=None):
    content = loadJson(resolveDocument("templates", templates))
    gazetteer_doc = loadJson(
        resolveDocument("gazetteers", gazetteers or content["domain"])
    )
    return TemplateInventory(content, gazetteer_doc["values"])
