#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

from slot_fillers.slot_filler_base import SlotFillerBase


def oracleTag(u):
    return u.slots


class OracleSlotFiller(SlotFillerBase):
    def getName(self):
        return "oracle"

    def fillSlots(self, u):
        return oracleTag(u)

    def fillUtterance(self, u):
        return u
