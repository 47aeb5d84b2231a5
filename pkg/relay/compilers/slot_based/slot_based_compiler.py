#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Direct mapping of the contextual slot labels to operations.

Which metric an amount or a date belongs to is decided by position only.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

from compilers.compiler_base import CompilerBase
from compilers.operations import (
    COMPARATORS,
    EXCLUDE,
    INCLUDE,
    Filter,
    LocationConstraint,
    MetricQuery,
    SectorConstraint,
)
from utils.utilities import CompilationException

AMOUNT_PREFIX = "filter_amount_"
METRICS = ("query_metric", "filter_metric")
CONSTRAINTS = {
    "location_inside": (LocationConstraint, INCLUDE),
    "location_outside": (LocationConstraint, EXCLUDE),
    "sector": (SectorConstraint, INCLUDE),
    "sector_outside": (SectorConstraint, EXCLUDE),
}


def _amountMetric(slots, index):
    # nearest filter_metric before the amount, else the nearest one after
    for k in range(index - 1, -1, -1):
        if slots[k].label == "filter_metric":
            return k
    for k in range(index + 1, len(slots)):
        if slots[k].label == "filter_metric":
            return k
    return None


def _dateMetric(slots, index):
    best = None
    for k, slot in enumerate(slots):
        if slot.label not in METRICS:
            continue
        if slot.end <= slots[index].start:
            distance = slots[index].start - slot.end
        else:
            distance = slot.start - slots[index].end
        # ties go to the metric after the date
        key = (distance, 0 if k > index else 1)
        if best is None or key < best[0]:
            best = (key, k)
    return best[1] if best is not None else None


def compileSlotBased(u):
    slots = u.slots
    amounts = {}
    dates = {}
    for index, slot in enumerate(slots):
        if slot.label.startswith(AMOUNT_PREFIX):
            metric = _amountMetric(slots, index)
            if metric is None:
                raise CompilationException(
                    "Amount '{}' of {} has no metric to attach to".format(
                        slot.value, u.id
                    )
                )
            amounts.setdefault(metric, []).append(index)
        elif slot.label == "date":
            metric = _dateMetric(slots, index)
            if metric is not None:
                dates.setdefault(metric, index)

    ops = set()
    for index, slot in enumerate(slots):
        if slot.label in CONSTRAINTS:
            kind, polarity = CONSTRAINTS[slot.label]
            ops.add(kind(slot.value, polarity))
        elif slot.label in METRICS:
            date = slots[dates[index]].value if index in dates else None
            if index in amounts:
                for amount in amounts[index]:
                    comparator = slots[amount].label[len(AMOUNT_PREFIX) :]
                    if comparator not in COMPARATORS:
                        raise CompilationException(
                            "Unknown amount label {}".format(slots[amount].label)
                        )
                    ops.add(Filter(slot.value, comparator, slots[amount].value, date))
            else:
                ops.add(MetricQuery(slot.value, date))
    return ops


class SlotBasedCompiler(CompilerBase):
    def getName(self):
        return "slot_based"

    def compile(self, u, assignment=None):
        return compileSlotBased(u)
