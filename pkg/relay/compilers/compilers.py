#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

from .relation_based.relation_based_compiler import RelationBasedCompiler
from .slot_based.slot_based_compiler import SlotBasedCompiler

compilers = {
    "relation_based": RelationBasedCompiler,
    "slot_based": SlotBasedCompiler,
}


def getCompilers():
    global compilers
    return compilers
