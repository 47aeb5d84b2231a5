#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import os
import sys

LOGFILE_ENV = "RELAY_LOGFILE"
FORMAT = "%(levelname)s %(asctime)s %(filename)s:%(lineno)4d: %(message)s"
LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
}


def _configure():
    target = {"filename": os.getenv(LOGFILE_ENV)}
    if target["filename"] is None:
        # stdout carries the json results
        target = {"stream": sys.stderr}
    logging.basicConfig(
        level=logging.DEBUG, format=FORMAT, datefmt="%Y-%m-%d %H:%M:%S", **target
    )
    logging.getLogger("matplotlib").setLevel(logging.WARNING)
    return logging.getLogger("relay")


logger = _configure()


def getLogger():
    return logger


def setLoggerLevel(level):
    assert level in LEVELS, "Logger level {} is not one of {}".format(
        level, sorted(LEVELS)
    )
    logger.setLevel(LEVELS[level])
