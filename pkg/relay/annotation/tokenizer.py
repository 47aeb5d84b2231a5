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

# Spans in corpus files are token offsets under this tokenizer. Changing the
# rules below invalidates every stored corpus, bump the version if you do.
TOKENIZER_VERSION = 1
PUNCTUATION = ".,?!';:"

_TOKEN_RE = re.compile(r"[^\s{0}]+|[{0}]".format(re.escape(PUNCTUATION)))


def tokenize(text):
    if not text:
        return []
    return _TOKEN_RE.findall(text.lower())


def checkTokenizerVersion(content, source, exception):
    """Stored content without a tokenizer field predates versioning and is
    read as the current version."""
    version = content.get("tokenizer", TOKENIZER_VERSION)
    if version != TOKENIZER_VERSION:
        raise exception(
            "{} was tokenized with tokenizer version {}, this is version {}".format(
                source, version, TOKENIZER_VERSION
            )
        )
