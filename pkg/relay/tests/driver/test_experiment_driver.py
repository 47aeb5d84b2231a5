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
import sys
import unittest

from mock import patch

RELAY_DIR = os.path.abspath(
    os.path.join(os.path.dirname(os.path.realpath(__file__)), os.pardir, os.pardir)
)
sys.path.append(RELAY_DIR)
from annotation.corpus import Corpus
from compilers.operations import (
    EXCLUDE,
    INCLUDE,
    MetricQuery,
    SectorConstraint,
    loadLexicon,
)
from datagen.fixtures import stocksFixtures
from datagen.generator import GeneratorConfig, generate
from driver.experiment_driver import (
    _meanOf,
    _safeCompile,
    averageScores,
    compareExtractors,
    excludesSector,
    logEffectiveConfig,
    projectSplit,
    reportRow,
    runExperiment,
    runRepeated,
    runZeroShotPair,
    runZeroShotSlot,
)
from metrics.metrics_report import ConfusionCounts, MetricsReport
from schemas.schema import loadSchema
from slot_fillers.slot_fillers import getSlotFiller
from splitters.splitter_base import SplitSpec
from splitters.splitters import splitCorpus
from utils.utilities import CompilationException, CorpusException

SMALL = {"train": 40, "dev": 10, "test": 10}


def smallCorpus(domain):
    config = GeneratorConfig.load(domain, {"counts": SMALL, "seed": 0})
    return generate(config, loadSchema(domain))


def emptyReport(matched=0, total=1):
    return MetricsReport(ConfusionCounts(), matched, total)


class ExperimentDriverTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.food = smallCorpus("food")
        cls.schema = loadSchema("food")

    def test_heuristic_misses_exactly_the_ambiguous_utterances(self):
        report = runExperiment(
            SplitSpec("given"), "heuristic", self.food, self.schema, by_slot_count=True
        )
        ambiguous = self.food.manifest["statistics"]["test"]["ambiguous"]
        self.assertAlmostEqual(report.exact_match, 1 - ambiguous / 10.0)
        self.assertEqual(sum(b.total for b in report.buckets.values()), 10)
        self.assertEqual(report.meta["extractor"], "heuristic")
        self.assertEqual(report.meta["slot_filler"], "oracle")
        self.assertEqual(report.meta["sizes"], SMALL)

    def test_slot_filler_comes_from_the_registry(self):
        with patch(
            "driver.experiment_driver.getSlotFiller", wraps=getSlotFiller
        ) as selected:
            runExperiment(SplitSpec("given"), "heuristic", self.food, self.schema)
        selected.assert_called_once_with("oracle")

    def test_repeated_runs_move_the_seed(self):
        reports = runRepeated(
            SplitSpec("random", 3), "heuristic", self.food, self.schema, runs=3
        )
        self.assertEqual([r.meta["seed"] for r in reports], [3, 4, 5])
        self.assertEqual([r.meta["sizes"]["test"] for r in reports], [18, 18, 18])

    def test_compare(self):
        rows = compareExtractors(
            SplitSpec("pattern", 1),
            ["heuristic", "pair_classifier"],
            self.food,
            self.schema,
            runs=2,
            epochs=2,
        )
        self.assertEqual(
            [row["name"] for row in rows], ["heuristic", "pair_classifier"]
        )
        for row in rows:
            self.assertEqual(len(row["runs"]), 2)
            self.assertEqual(row["overall"]["f1"], row["summary"]["f1"]["mean"])
            self.assertGreaterEqual(row["overall"]["f1"], 0.0)
            self.assertLessEqual(row["overall"]["f1"], 1.0)

    def test_end_to_end(self):
        report = runExperiment(
            SplitSpec("given"),
            "pair_classifier",
            self.food,
            self.schema,
            end_to_end=True,
            epochs=2,
        )
        self.assertIn("slot_f1", report.scores)
        self.assertTrue(report.meta["end_to_end"])
        self.assertEqual(report.meta["slot_filler"], "perceptron_tagger")
        self.assertEqual(report.total, 10)

    def test_effective_config_is_logged(self):
        with patch("driver.experiment_driver.getLogger") as logger:
            logEffectiveConfig({"seed": 1, "command": "experiment"})
        logger.return_value.info.assert_called_once_with(
            'Effective config: {"command": "experiment", "seed": 1}'
        )


class ReportRowTest(unittest.TestCase):
    def test_single_run(self):
        row = reportRow("heuristic", [emptyReport(1, 1)])
        self.assertEqual(row["name"], "heuristic")
        self.assertEqual(row["overall"]["em"], 1.0)
        self.assertNotIn("runs", row)

    def test_several_runs(self):
        first, second = emptyReport(0, 2), emptyReport(2, 2)
        first.scores["slot_f1"] = 0.5
        second.scores["slot_f1"] = 1.0
        second.scores["only_here"] = None
        row = reportRow("k=8", [first, second])
        self.assertEqual(row["overall"]["em"], 0.5)
        self.assertEqual(row["summary"]["em"]["dispersion"], 1.0)
        self.assertEqual(row["scores"], {"only_here": None, "slot_f1": 0.75})
        self.assertEqual(len(row["runs"]), 2)

    def test_mean_of_missing_values(self):
        self.assertIsNone(_meanOf([None, None]))
        self.assertEqual(_meanOf([None, 1.0, 0.0]), 0.5)
        self.assertEqual(averageScores([emptyReport()]), {})


class ZeroShotPairTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.gaming = smallCorpus("gaming")
        cls.schema = loadSchema("gaming")

    def test_schedule(self):
        rows = runZeroShotPair(
            self.gaming,
            self.schema,
            ("enchantment", "monster"),
            schedule=(0, 2),
            runs=2,
            test_size=4,
            epochs=1,
        )
        self.assertEqual([row["name"] for row in rows], ["k=0", "k=2"])
        for row in rows:
            self.assertIn("all_pairs_f1", row["scores"])
            self.assertEqual([r["spec"]["seed"] for r in row["runs"]], [0, 1])
            self.assertEqual(row["runs"][0]["spec"]["sizes"]["test"], 4)


class ZeroShotSlotTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.stocks = smallCorpus("stocks")
        cls.schema = loadSchema("stocks")
        cls.lexicon = loadLexicon()

    def test_both_pipelines(self):
        rows = runZeroShotSlot(
            self.stocks,
            self.schema,
            self.lexicon,
            schedule=(0, 2),
            test_size=4,
            epochs=1,
        )
        self.assertEqual(
            [row["name"] for row in rows],
            [
                "slot_based k=0",
                "relation_based k=0",
                "slot_based k=2",
                "relation_based k=2",
            ],
        )
        self.assertIn("sector_outside_f1", rows[0]["scores"])
        self.assertIn("negation_relation_f1", rows[1]["scores"])
        self.assertEqual(rows[1]["spec"]["scheme"], "relation_based")
        # every test utterance excludes a sector
        self.assertIsNotNone(rows[0]["scores"]["exclude_sector_em"])

    def test_projection_keeps_ids(self):
        spec = SplitSpec(
            "zero_shot_slot", 0, {"held_out": "sector_outside", "test_size": 4}
        )
        sb_split = splitCorpus(self.stocks.parallel, spec)
        rb_split = projectSplit(sb_split, self.stocks)
        for sb_part, rb_part in zip(sb_split, rb_split):
            self.assertEqual([u.id for u in sb_part], [u.id for u in rb_part])
        self.assertTrue(all(u.domain == "stocks" for u in rb_split.test))

    def test_needs_slot_based_annotation(self):
        corpus = Corpus("stocks", self.stocks.train, [], self.stocks.test)
        with self.assertRaises(CorpusException):
            runZeroShotSlot(corpus, self.schema, self.lexicon)


class OperationHelpersTest(unittest.TestCase):
    def test_excludes_sector(self):
        self.assertTrue(excludesSector({SectorConstraint("energy", EXCLUDE)}))
        self.assertFalse(excludesSector({SectorConstraint("energy", INCLUDE)}))
        self.assertFalse(excludesSector({MetricQuery("revenue")}))

    def test_failed_compilation_is_empty(self):
        def failing(u):
            raise CompilationException("no metric")

        with patch("driver.experiment_driver.getLogger") as logger:
            ops = _safeCompile(failing, stocksFixtures()[0])
        self.assertEqual(ops, set())
        self.assertTrue(logger.return_value.warning.called)


if __name__ == "__main__":
    unittest.main()
