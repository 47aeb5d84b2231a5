#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Per-domain relation schemas.

A schema declares the slot types of a domain, the relation labels, which
unordered slot-type pair may carry which label, and the modifier rules the
rule-based extractor works from. Pairs not listed carry no relation.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import collections

from six import string_types
from utils.custom_logger import getLogger
from utils.utilities import (
    SchemaParseException,
    SchemaValidationException,
    UnknownSlotTypeException,
    loadJson,
    resolveDocument,
)

NONE_LABEL = "None"
# misspellings found in published relation tables
RELATION_ALIASES = {"loation": "location"}

HeuristicRule = collections.namedtuple("HeuristicRule", ["modifier", "targets"])


def pairKey(a, b):
    return (a, b) if a <= b else (b, a)


class DomainSchema(object):
    def __init__(self, domain, slot_types, relation_types, pair_rules, heuristic_rules):
        self._domain = domain
        self._slot_types = frozenset(slot_types)
        self._relation_types = frozenset(relation_types)
        self._pair_rules = dict(pair_rules)
        self._heuristic_rules = tuple(heuristic_rules)
        self._modifiers = {}
        for rule in self._heuristic_rules:
            targets = self._modifiers.setdefault(rule.modifier, {})
            for modified, relation in rule.targets:
                targets[modified] = relation

    @property
    def domain(self):
        return self._domain

    @property
    def slot_types(self):
        return self._slot_types

    @property
    def relation_types(self):
        return self._relation_types

    @property
    def pair_rules(self):
        return dict(self._pair_rules)

    @property
    def heuristic_rules(self):
        return self._heuristic_rules

    def checkSlotType(self, label):
        if label not in self._slot_types:
            raise UnknownSlotTypeException(
                "Slot type {} is not declared in schema {}".format(label, self._domain)
            )

    def relationForPair(self, a, b):
        self.checkSlotType(a)
        self.checkSlotType(b)
        return self._pair_rules.get(pairKey(a, b))

    def allowedLabels(self, a, b):
        relation = self.relationForPair(a, b)
        return [relation, None] if relation is not None else [None]

    def modifierTargets(self, label):
        """Modified slot types (and the relation) a modifier slot may link to."""
        self.checkSlotType(label)
        return dict(self._modifiers.get(label, {}))

    def modifierSide(self, a, b):
        # which side of the pair, if any, the rules treat as the modifier
        if b in self._modifiers.get(a, {}):
            return "left"
        if a in self._modifiers.get(b, {}):
            return "right"
        return "none"

    def sortedRelationTypes(self):
        return sorted(self._relation_types)

    def __eq__(self, other):
        if not isinstance(other, DomainSchema):
            return False
        return (
            self._domain == other._domain
            and self._slot_types == other._slot_types
            and self._relation_types == other._relation_types
            and self._pair_rules == other._pair_rules
            and self._heuristic_rules == other._heuristic_rules
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._domain, self._slot_types, self._relation_types))

    def __repr__(self):
        return "DomainSchema({}, {} slots, {} pair rules)".format(
            self._domain, len(self._slot_types), len(self._pair_rules)
        )


def relationForPair(schema, a, b):
    return schema.relationForPair(a, b)


def loadSchema(source):
    """Load and validate a schema from a dict, a json string, a path or a
    bundled domain name (``food``, ``gaming``, ``stocks``)."""
    if isinstance(source, dict):
        content = source
    else:
        try:
            content = loadJson(resolveDocument("schemas", source))
        except ValueError as e:
            raise SchemaParseException("Cannot parse schema {}: {}".format(source, e))
        except Exception as e:
            raise SchemaParseException("Cannot load schema {}: {}".format(source, e))
    schema = _parseSchema(content)
    getLogger().debug("Loaded {}".format(schema))
    return schema


def dumpSchema(schema):
    pair_relations = [
        {"slots": [a, b], "relation": relation}
        for (a, b), relation in sorted(schema.pair_rules.items())
    ]
    heuristic = [
        {
            "modifier": rule.modifier,
            "targets": [
                {"modified": modified, "relation": relation}
                for modified, relation in rule.targets
            ],
        }
        for rule in schema.heuristic_rules
    ]
    return {
        "domain": schema.domain,
        "slot_types": sorted(schema.slot_types),
        "relation_types": sorted(schema.relation_types),
        "pair_relations": pair_relations,
        "heuristic": heuristic,
    }


def _parseSchema(content):
    if not isinstance(content, dict):
        raise SchemaParseException("Schema document must be a json object")
    for field in ("domain", "slot_types", "relation_types", "pair_relations"):
        if field not in content:
            raise SchemaParseException("Field {} is missing in schema".format(field))
    domain = content["domain"]
    if not isinstance(domain, string_types):
        raise SchemaParseException("Field domain must be a string")
    slot_types = _stringList(content, "slot_types")
    relation_types = [
        _normalizeRelation(r) for r in _stringList(content, "relation_types")
    ]
    errors = []
    if NONE_LABEL in relation_types:
        errors.append("{} is reserved and cannot be a relation type".format(NONE_LABEL))

    pair_rules = {}
    for entry in content["pair_relations"]:
        if (
            not isinstance(entry, dict)
            or "slots" not in entry
            or "relation" not in entry
            or len(entry["slots"]) != 2
        ):
            raise SchemaParseException("Malformed pair relation {}".format(entry))
        a, b = entry["slots"]
        relation = _normalizeRelation(entry["relation"])
        for label in (a, b):
            if label not in slot_types:
                errors.append("Pair relation uses undeclared slot {}".format(label))
        if relation not in relation_types:
            errors.append("Pair relation uses undeclared relation {}".format(relation))
        key = pairKey(a, b)
        if key in pair_rules:
            errors.append(
                "Pair ({}, {}) is declared more than once".format(key[0], key[1])
            )
        pair_rules[key] = relation

    heuristic_rules = []
    for entry in content.get("heuristic", []):
        if not isinstance(entry, dict) or "modifier" not in entry:
            raise SchemaParseException("Malformed heuristic rule {}".format(entry))
        modifier = entry["modifier"]
        if modifier not in slot_types:
            errors.append("Heuristic rule uses undeclared slot {}".format(modifier))
        targets = []
        for target in entry.get("targets", []):
            if "modified" not in target or "relation" not in target:
                raise SchemaParseException(
                    "Malformed heuristic target {}".format(target)
                )
            modified = target["modified"]
            relation = _normalizeRelation(target["relation"])
            if modified not in slot_types:
                errors.append("Heuristic rule uses undeclared slot {}".format(modified))
            elif pair_rules.get(pairKey(modifier, modified)) != relation:
                errors.append(
                    "Heuristic rule ({}, {}, {}) disagrees with the pair "
                    "relations".format(
                        modifier, modified, relation
                    )
                )
            targets.append((modified, relation))
        heuristic_rules.append(HeuristicRule(modifier, tuple(targets)))

    if errors:
        raise SchemaValidationException(
            "Schema {} is invalid: {}".format(domain, "; ".join(errors))
        )
    return DomainSchema(domain, slot_types, relation_types, pair_rules, heuristic_rules)


def _normalizeRelation(relation):
    if relation in RELATION_ALIASES:
        getLogger().warning(
            "Relation {} is read as {}".format(relation, RELATION_ALIASES[relation])
        )
        return RELATION_ALIASES[relation]
    return relation


def _stringList(content, field):
    values = content[field]
    if not isinstance(values, list) or not all(
        isinstance(v, string_types) for v in values
    ):
        raise SchemaParseException("Field {} must be a list of strings".format(field))
    return values
