#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import re

FEATURE_TEMPLATES = [
    "bias",
    "w",
    "w-2",
    "w-1",
    "w+1",
    "w+2",
    "shape",
    "suf3",
    "prev_tag",
    "prev_tag|w",
]

START = "<s>"
END = "</s>"


def wordShape(token):
    shape = re.sub(r"[0-9]", "d", token)
    shape = re.sub(r"[^\W\d_]", "x", shape, flags=re.UNICODE)
    # collapse runs: "million" -> "x", "2.5" -> "d.d"
    return re.sub(r"(.)\1+", r"\1", shape)


def tokenFeatures(tokens, position, prev_tag, templates=FEATURE_TEMPLATES):
    def at(offset):
        k = position + offset
        if k < 0:
            return START
        if k >= len(tokens):
            return END
        return tokens[k]

    token = tokens[position]
    values = {
        "bias": "",
        "w": token,
        "w-2": at(-2),
        "w-1": at(-1),
        "w+1": at(1),
        "w+2": at(2),
        "shape": wordShape(token),
        "suf3": token[-3:],
        "prev_tag": prev_tag,
        "prev_tag|w": prev_tag + "|" + token,
    }
    return ["{}={}".format(name, values[name]) for name in templates]
