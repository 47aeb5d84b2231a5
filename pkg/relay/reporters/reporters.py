#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

from .local_reporter.local_reporter import LocalReporter
from .screen_reporter.screen_reporter import ScreenReporter
from .simple_screen_reporter.simple_screen_reporter import SimpleScreenReporter


def getReporters(args):
    # json on standard output is always produced
    reporters = [SimpleScreenReporter()]
    if getattr(args, "screen_reporter", False):
        reporters.append(ScreenReporter())
    if getattr(args, "local_reporter", None):
        reporters.append(LocalReporter(args.local_reporter))
    if getattr(args, "plot_reporter", None):
        # matplotlib is only imported when charts are asked for
        from .plot_reporter.plot_reporter import PlotReporter

        reporters.append(PlotReporter(args.plot_reporter))
    return reporters
