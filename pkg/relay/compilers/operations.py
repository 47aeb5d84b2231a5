#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Back-end operations compiled from slots and relations.

Operations are value objects. Two operations are equal when they are of the
same kind and carry the same fields, so an utterance's operations compare as
a set.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import collections

from six import string_types
from utils.custom_logger import getLogger
from utils.utilities import (
    CompilationException,
    loadJson,
    readJsonLines,
    resolveDocument,
    writeJsonLines,
)

COMPARATORS = ("above", "below", "equal", "at_least", "at_most")
INCLUDE = "include"
EXCLUDE = "exclude"
POLARITIES = (INCLUDE, EXCLUDE)


class _Operation(object):
    __slots__ = ()
    KIND = None

    def __eq__(self, other):
        return type(self) is type(other) and tuple.__eq__(self, other)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.KIND,) + tuple(self))

    def sortKey(self):
        return (self.KIND,) + tuple("" if v is None else v for v in self)

    def toJson(self):
        row = dict(self._asdict())
        row["kind"] = self.KIND
        return row


class MetricQuery(
    _Operation, collections.namedtuple("MetricQuery", ["metric", "date"])
):
    __slots__ = ()
    KIND = "metric_query"

    def __new__(cls, metric, date=None):
        return super(MetricQuery, cls).__new__(cls, metric, date)


class Filter(
    _Operation,
    collections.namedtuple("Filter", ["metric", "comparator", "amount", "date"]),
):
    __slots__ = ()
    KIND = "filter"

    def __new__(cls, metric, comparator, amount, date=None):
        assert comparator in COMPARATORS, "Unknown comparator {}".format(comparator)
        return super(Filter, cls).__new__(cls, metric, comparator, amount, date)


class LocationConstraint(
    _Operation,
    collections.namedtuple("LocationConstraint", ["location", "polarity"]),
):
    __slots__ = ()
    KIND = "location_constraint"

    def __new__(cls, location, polarity=INCLUDE):
        assert polarity in POLARITIES, "Unknown polarity {}".format(polarity)
        return super(LocationConstraint, cls).__new__(cls, location, polarity)


class SectorConstraint(
    _Operation, collections.namedtuple("SectorConstraint", ["sector", "polarity"])
):
    __slots__ = ()
    KIND = "sector_constraint"

    def __new__(cls, sector, polarity=INCLUDE):
        assert polarity in POLARITIES, "Unknown polarity {}".format(polarity)
        return super(SectorConstraint, cls).__new__(cls, sector, polarity)


OPERATION_KINDS = {
    op.KIND: op for op in (MetricQuery, Filter, LocationConstraint, SectorConstraint)
}


def operationFromJson(row):
    row = dict(row)
    kind = row.pop("kind", None)
    if kind not in OPERATION_KINDS:
        raise CompilationException("Unknown operation kind {}".format(kind))
    try:
        return OPERATION_KINDS[kind](**row)
    except (TypeError, AssertionError) as e:
        raise CompilationException("Malformed {} operation: {}".format(kind, e))


def sortOperations(ops):
    return sorted(ops, key=lambda op: op.sortKey())


def operationsExactMatch(gold, pred):
    return set(gold) == set(pred)


def operationsToRow(uid, ops):
    return {"id": uid, "ops": [op.toJson() for op in sortOperations(ops)]}


def writeOperations(filename, rows):
    """rows: (utterance id, operation set) pairs."""
    writeJsonLines(filename, [operationsToRow(uid, ops) for uid, ops in rows])


def readOperations(filename):
    return [
        (row["id"], set(operationFromJson(op) for op in row.get("ops", [])))
        for row in readJsonLines(filename)
    ]


class ComparatorLexicon(object):
    def __init__(self, mapping):
        self._mapping = {}
        self.extend(mapping)

    def extend(self, mapping):
        for surface, comparator in mapping.items():
            if comparator not in COMPARATORS:
                raise CompilationException(
                    "Surface form {} maps to unknown comparator {}".format(
                        surface, comparator
                    )
                )
            self._mapping[surface.lower()] = comparator

    def comparatorFor(self, surface):
        comparator = self._mapping.get(surface.lower())
        if comparator is None:
            raise CompilationException(
                "Filter modifier '{}' is not in the comparator lexicon".format(surface)
            )
        return comparator

    def surfaces(self, comparator=None):
        return sorted(
            s for s, c in self._mapping.items() if comparator is None or c == comparator
        )

    def __contains__(self, surface):
        return isinstance(surface, string_types) and surface.lower() in self._mapping


def loadLexicon(source="comparators", extra=None):
    """The bundled lexicon by default; ``extra`` documents extend it."""
    content = loadJson(resolveDocument("lexicons", source))
    lexicon = ComparatorLexicon(content.get("comparators", {}))
    for document in extra or []:
        content = loadJson(resolveDocument("lexicons", document))
        lexicon.extend(content["comparators"])
    getLogger().debug(
        "Comparator lexicon has {} entries".format(len(lexicon.surfaces()))
    )
    return lexicon
