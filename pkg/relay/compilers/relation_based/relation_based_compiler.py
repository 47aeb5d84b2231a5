#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Slots are operands and relations operators.

A location or sector negated by a modifier becomes an exclude constraint; a
metric reached from an amount through a filter modifier becomes a filter; a
date linked to a metric is attached to whatever the metric compiles to.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import collections

from compilers.compiler_base import CompilerBase
from compilers.operations import (
    EXCLUDE,
    INCLUDE,
    Filter,
    LocationConstraint,
    MetricQuery,
    SectorConstraint,
    loadLexicon,
)
from schemas.schema import loadSchema
from utils.utilities import CompilationException

NEGATION = "negation_relation"
FILTER_METRIC = "filter_metric_relation"
FILTER_AMOUNT = "filter_amount_relation"
DATE = "date_relation"


def _links(u, assignment, schema):
    slots = u.slots
    links = collections.defaultdict(list)
    for (i, j), label in sorted(assignment.items()):
        if label is None:
            continue
        if not (0 <= i < len(slots) and 0 <= j < len(slots)) or i == j:
            raise CompilationException(
                "Relation ({}, {}) of {} refers to a missing slot".format(i, j, u.id)
            )
        if schema.relationForPair(slots[i].label, slots[j].label) != label:
            raise CompilationException(
                "Relation {} between {} and {} is not allowed".format(
                    label, slots[i].label, slots[j].label
                )
            )
        links[i].append((j, label))
        links[j].append((i, label))
    return links


def _linked(links, slots, index, relation, label):
    return [k for k, r in links[index] if r == relation and slots[k].label == label]


def compileRelationBased(u, assignment, lexicon, schema):
    slots = u.slots
    links = _links(u, assignment, schema)
    ops = set()
    for index, slot in enumerate(slots):
        if slot.label in ("location", "sector_name"):
            negated = _linked(links, slots, index, NEGATION, "negation_modifier")
            polarity = EXCLUDE if negated else INCLUDE
            if slot.label == "location":
                ops.add(LocationConstraint(slot.value, polarity))
            else:
                ops.add(SectorConstraint(slot.value, polarity))
        elif slot.label == "metric_name":
            dates = _linked(links, slots, index, DATE, "date_metric")
            date = slots[dates[0]].value if dates else None
            filters = []
            modifiers = _linked(links, slots, index, FILTER_METRIC, "filter_modifier")
            for modifier in modifiers:
                for amount in _linked(links, slots, modifier, FILTER_AMOUNT, "amount"):
                    comparator = lexicon.comparatorFor(slots[modifier].value)
                    filters.append(
                        Filter(slot.value, comparator, slots[amount].value, date)
                    )
            if filters:
                ops.update(filters)
            else:
                ops.add(MetricQuery(slot.value, date))
    return ops


class RelationBasedCompiler(CompilerBase):
    def __init__(self, lexicon=None, schema=None):
        # the bundled comparator words and stocks schema unless given
        super(RelationBasedCompiler, self).__init__(
            lexicon if lexicon is not None else loadLexicon(),
            schema if schema is not None else loadSchema("stocks"),
        )

    def getName(self):
        return "relation_based"

    def compile(self, u, assignment=None):
        if assignment is None:
            assignment = u.relations
        return compileRelationBased(u, assignment, self.lexicon, self.schema)
