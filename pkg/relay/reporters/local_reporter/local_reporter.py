#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import csv
import io
import os

from reporters.reporter_base import ReporterBase, reportRows
from utils.custom_logger import getLogger
from utils.utilities import writeJson

BUCKET_COLUMNS = ["name", "slots", "utterances", "f1", "em"]


class LocalReporter(ReporterBase):
    """Writes report.json, buckets.csv and, for repeated runs, runs.json
    into one directory. Nothing time dependent is written."""

    def __init__(self, local_reporter):
        self.local_reporter = local_reporter
        super(LocalReporter, self).__init__()

    def report(self, content):
        data = content[self.DATA]
        if data is None or len(data) == 0:
            getLogger().info("No data to write")
            return
        dirname = self.local_reporter
        if not os.path.isdir(dirname):
            os.makedirs(dirname)
        writeJson(os.path.join(dirname, "report.json"), content)
        rows = reportRows(data)
        self._writeBuckets(os.path.join(dirname, "buckets.csv"), rows)
        runs = {row["name"]: row["runs"] for row in rows if "runs" in row}
        if runs:
            writeJson(os.path.join(dirname, "runs.json"), runs)
        getLogger().info("Writing report to {}".format(dirname))

    def _writeBuckets(self, filename, rows):
        lines = []
        for row in rows:
            buckets = row.get("buckets") or {}
            for key in sorted(buckets, key=int):
                bucket = buckets[key]
                lines.append(
                    [
                        row["name"],
                        key,
                        bucket["counts"]["utterances"],
                        bucket["overall"]["f1"],
                        bucket["overall"]["em"],
                    ]
                )
        if not lines:
            return
        with io.open(filename, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(BUCKET_COLUMNS)
            writer.writerows(lines)
