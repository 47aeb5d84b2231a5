#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals


class ReporterBase(object):
    DATA = "data"
    META = "meta"

    def __init__(self):
        pass

    def report(self, content):
        pass


def reportRows(data):
    """An experiment carries a list of rows, a single evaluation is one row."""
    if "rows" in data:
        return data["rows"]
    row = dict(data)
    row.setdefault("name", "eval")
    return [row]
