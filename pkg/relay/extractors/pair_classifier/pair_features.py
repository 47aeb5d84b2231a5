#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Features of one slot pair, read off its pair encoding.

Besides the lexical features, a group of features is keyed by the relation
the schema allows for the pair and by which side the schema rules treat as
modifier. Those do not name the slot types, so what is learned for one pair
carries over to another pair with the same relation.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

from annotation.utterance import stripMarkers
from schemas.schema import NONE_LABEL

CONJUNCTIONS = frozenset(["and", "or", ",", "&", "plus"])
ARTICLES = frozenset(["a", "an", "the", "some", "another"])
START = "<s>"
END = "</s>"


def distanceBucket(distance):
    if distance <= 2:
        return str(distance)
    if distance <= 4:
        return "3-4"
    return "5+"


def countBucket(count):
    return str(count) if count < 3 else "3+"


def pairFeatures(enc, schema):
    tokens = stripMarkers(enc)
    slots = enc.slots
    i, j = enc.pair
    left, right = slots[i], slots[j]

    def token(k):
        if k < 0:
            return START
        if k >= len(tokens):
            return END
        return tokens[k]

    between = tokens[left.end : right.start]
    distance = distanceBucket(len(between))
    has_conj = int(any(t in CONJUNCTIONS for t in between))
    has_art = int(any(t in ARTICLES for t in between))
    slots_between = [
        s for s in slots if s.start >= left.end and s.end <= right.start
    ]
    n_between = countBucket(len(slots_between))
    pair = "{}|{}".format(left.label, right.label)
    l_next = token(left.end)

    features = [
        "bias",
        "pair=" + pair,
        "l=" + left.label,
        "r=" + right.label,
        "dist=" + distance,
        "l_prev=" + token(left.start - 1),
        "l_next=" + l_next,
        "r_prev=" + token(right.start - 1),
        "r_next=" + token(right.end),
        "conj={}".format(has_conj),
        "art={}".format(has_art),
        "pattern=" + "-".join(s.label for s in slots),
        "pair={}|l_next={}".format(pair, l_next),
    ]
    if between:
        features.extend("btw=" + t for t in between)
    else:
        features.append("btw_empty")

    relation = schema.relationForPair(left.label, right.label)
    side = schema.modifierSide(left.label, right.label)
    if side == "left":
        modifier, modified = left, right
    elif side == "right":
        modifier, modified = right, left
    else:
        modifier, modified = None, None
    same_modifier = int(
        modifier is not None and any(s.label == modifier.label for s in slots_between)
    )
    same_modified = int(
        modified is not None and any(s.label == modified.label for s in slots_between)
    )
    cand = "cand={}|side={}".format(relation or NONE_LABEL, side)
    features.extend(
        [
            "cand={}".format(relation or NONE_LABEL),
            cand,
            cand + "|dist=" + distance,
            cand + "|nbtw=" + n_between,
            cand + "|art={}".format(has_art),
            cand + "|conj={}".format(has_conj),
            cand + "|same_mod={}".format(same_modifier),
            cand + "|same_head={}".format(same_modified),
            cand
            + "|nbtw={}|art={}|conj={}|same_head={}".format(
                n_between, has_art, has_conj, same_modified
            ),
            cand + "|l_next=" + l_next,
        ]
    )
    return features
