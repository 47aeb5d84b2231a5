#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################


from __future__ import absolute_import, division, print_function, unicode_literals

import argparse


def non_negative_int(value):
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("{} is not an integer".format(value))
    if number < 0:
        raise argparse.ArgumentTypeError("{} must be >= 0".format(value))
    return number


def positive_int(value):
    number = non_negative_int(value)
    if number == 0:
        raise argparse.ArgumentTypeError("{} must be > 0".format(value))
    return number


def fraction_type(value):
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError("{} is not a number".format(value))
    if number < 0.0 or number > 1.0:
        raise argparse.ArgumentTypeError("{} must be within [0, 1]".format(value))
    return number


def schedule_type(value):
    # "0,8,16,32,64"
    try:
        schedule = [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "The schedule should be a comma separated list of integers"
        )
    if not schedule or any(k < 0 for k in schedule):
        raise argparse.ArgumentTypeError("{} is not a valid schedule".format(value))
    return schedule


def held_out_type(value):
    # a slot type, or a slot type pair written as "a,b"
    parts = [v.strip() for v in value.split(",") if v.strip()]
    if len(parts) == 1:
        return parts[0]
    if len(parts) == 2:
        return tuple(parts)
    raise argparse.ArgumentTypeError(
        "Held out construct must be a slot type or a pair of slot types"
    )
