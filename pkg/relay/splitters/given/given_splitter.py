#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

from splitters.splitter_base import Split, SplitterBase
from utils.utilities import SplitException


class GivenSplitter(SplitterBase):
    def getName(self):
        return "given"

    def split(self, corpus):
        if not corpus.test:
            raise SplitException("Corpus {} has no test split".format(corpus.domain))
        return Split(list(corpus.train), list(corpus.dev), list(corpus.test))
