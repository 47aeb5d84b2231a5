#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

from reporters.reporter_base import ReporterBase
from utils.utilities import dumpJson


class SimpleScreenReporter(ReporterBase):
    def __init__(self):
        super(SimpleScreenReporter, self).__init__()

    def report(self, content):
        print(dumpJson(content[self.DATA], indent=2))
