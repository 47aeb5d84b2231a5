#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import abc


class CompilerBase(object):
    def __init__(self, lexicon=None, schema=None):
        self.lexicon = lexicon
        self.schema = schema

    @abc.abstractmethod
    def getName(self):
        return "Error"

    @abc.abstractmethod
    def compile(self, u, assignment=None):
        """Operation set of one utterance. Without an assignment the
        relations annotated on the utterance are used."""
        return set()

    def compileCorpus(self, utterances):
        return [(u.id, self.compile(u)) for u in utterances]
