#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from reporters.reporter_base import ReporterBase, reportRows  # noqa: E402
from utils.custom_logger import getLogger  # noqa: E402

SLOT_COUNT_CHART = "slot_count.png"
DISPERSION_CHART = "dispersion.png"


class PlotReporter(ReporterBase):
    """F1 and exact match against slot count, one line per row, and the
    per-seed F1 of repeated runs."""

    def __init__(self, plot_reporter):
        self.plot_reporter = plot_reporter
        super(PlotReporter, self).__init__()

    def report(self, content):
        data = content[self.DATA]
        if data is None or len(data) == 0:
            getLogger().info("No data to plot")
            return
        if not os.path.isdir(self.plot_reporter):
            os.makedirs(self.plot_reporter)
        rows = reportRows(data)
        written = []
        bucketed = [row for row in rows if row.get("buckets")]
        if bucketed:
            written.append(self._plotSlotCounts(bucketed))
        repeated = [row for row in rows if row.get("runs")]
        if repeated:
            written.append(self._plotDispersion(repeated))
        for filename in written:
            getLogger().info("Writing chart {}".format(filename))
        return written

    def _plotSlotCounts(self, rows):
        fig, axes = plt.subplots(1, 2, figsize=(10, 3.6))
        for ax, (key, title) in zip(axes, [("f1", "F1"), ("em", "Exact match")]):
            for row in rows:
                counts = sorted(row["buckets"], key=int)
                xs = [int(c) for c in counts]
                ys = [row["buckets"][c]["overall"][key] for c in counts]
                ax.plot(xs, ys, marker="o", label=row["name"])
            ax.set_title(title)
            ax.set_xlabel("Slots per utterance")
            ax.set_ylim(0.0, 1.05)
            ax.grid(True, alpha=0.3)
        axes[-1].legend(loc="best", fontsize=8)
        filename = os.path.join(self.plot_reporter, SLOT_COUNT_CHART)
        fig.savefig(filename, dpi=100)
        plt.close(fig)
        return filename

    def _plotDispersion(self, rows):
        fig, ax = plt.subplots(figsize=(6, 3.6))
        for position, row in enumerate(rows):
            values = [run["overall"]["f1"] for run in row["runs"]]
            ax.scatter([position] * len(values), values, alpha=0.7)
            ax.plot(
                [position - 0.2, position + 0.2],
                [row["overall"]["f1"]] * 2,
                color="black",
            )
        ax.set_xticks(range(len(rows)))
        ax.set_xticklabels([row["name"] for row in rows], rotation=20, fontsize=8)
        ax.set_ylabel("F1 per seed")
        ax.set_ylim(0.0, 1.05)
        ax.grid(True, axis="y", alpha=0.3)
        fig.tight_layout()
        filename = os.path.join(self.plot_reporter, DISPERSION_CHART)
        fig.savefig(filename, dpi=100)
        plt.close(fig)
        return filename
