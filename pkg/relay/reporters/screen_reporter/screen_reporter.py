#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import sys

from reporters.reporter_base import ReporterBase, reportRows
from tabulate import tabulate
from utils.custom_logger import getLogger

SCORE_HEADERS = ["p", "r", "f1", "em"]


def _cell(value):
    if value is None:
        return "-"
    if isinstance(value, float):
        return "{:.4f}".format(value)
    return value


class ScreenReporter(ReporterBase):
    """Human readable tables on standard error."""

    def __init__(self, stream=None):
        super(ScreenReporter, self).__init__()
        self.stream = stream

    def report(self, content):
        data = content[self.DATA]
        if data is None or len(data) == 0:
            getLogger().info("No data to write")
            return
        rows = reportRows(data)
        self._print(self._overallTable(rows))
        for row in rows:
            if row.get("per_label"):
                self._print(self._perLabelTable(row), row["name"])
            if row.get("buckets"):
                self._print(self._bucketTable(row), row["name"] + " by slot count")

    def _print(self, table, title=None):
        stream = self.stream or sys.stderr
        if title:
            print(title, file=stream)
        print("\n{}\n".format(table), file=stream)

    def _overallTable(self, rows):
        extra = sorted(set(name for row in rows for name in row.get("scores", {})))
        with_summary = any("summary" in row for row in rows)
        headers = ["name"] + SCORE_HEADERS + extra
        if with_summary:
            headers.append("f1 max-min")
        table = []
        for row in rows:
            line = [row["name"]]
            line += [_cell(row["overall"].get(key)) for key in SCORE_HEADERS]
            line += [_cell(row.get("scores", {}).get(key)) for key in extra]
            if with_summary:
                summary = row.get("summary")
                line.append(_cell(summary["f1"]["dispersion"] if summary else None))
            table.append(line)
        return tabulate(
            table, headers=headers, tablefmt="orgtbl", disable_numparse=True
        )

    def _perLabelTable(self, row):
        table = [
            [label, _cell(s["p"]), _cell(s["r"]), _cell(s["f1"]), s["support"]]
            for label, s in sorted(row["per_label"].items())
        ]
        return tabulate(
            table,
            headers=["label", "p", "r", "f1", "support"],
            tablefmt="orgtbl",
            disable_numparse=True,
        )

    def _bucketTable(self, row):
        table = []
        for key, bucket in sorted(row["buckets"].items(), key=lambda kv: int(kv[0])):
            table.append(
                [
                    key,
                    bucket["counts"]["utterances"],
                    _cell(bucket["overall"]["f1"]),
                    _cell(bucket["overall"]["em"]),
                ]
            )
        return tabulate(
            table,
            headers=["slots", "utterances", "f1", "em"],
            tablefmt="orgtbl",
            disable_numparse=True,
        )
