#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import collections

import numpy as np
from compilers.operations import EXCLUDE, SectorConstraint
from compilers.relation_based.relation_based_compiler import compileRelationBased
from compilers.slot_based.slot_based_compiler import compileSlotBased
from extractors.extractors import getExtractor
from metrics.metrics_report import SCORE_NAMES, aggregateRuns
from metrics.operation_scores import exactMatchWhere, operationScores
from metrics.relation_scores import (
    bucketBySlotCount,
    relationScores,
    relationTripleScores,
)
from metrics.slot_scores import slotScores
from slot_fillers.slot_fillers import getSlotFiller
from splitters.splitter_base import Split, SplitSpec
from splitters.splitters import splitCorpus
from splitters.zero_shot.zero_shot_splitter import (
    DEFAULT_PAIR_TEST_SIZE,
    DEFAULT_SLOT_TEST_SIZE,
)
from utils.custom_logger import getLogger
from utils.utilities import CompilationException, CorpusException, dumpJson

DEFAULT_EPOCHS = 10
ZERO_SHOT_SCHEDULE = (0, 8, 16, 32, 64)
GOLD_SLOTS = "oracle"
TAGGED_SLOTS = "perceptron_tagger"


def logEffectiveConfig(config):
    getLogger().info("Effective config: {}".format(dumpJson(config)))


def trainSlotFiller(train, seed, epochs, dev=None, name=TAGGED_SLOTS):
    return getSlotFiller(name).train(train, seed, epochs, dev or None)


def trainExtractor(name, schema, train, seed, epochs, dev=None, mask=True):
    extractor = getExtractor(name, schema, mask=mask)
    return extractor.train(train, seed, epochs, dev or None)


def _splitMeta(spec, split, **kwargs):
    meta = {
        "split": spec.dump(),
        "seed": spec.seed,
        "sizes": {
            "train": len(split.train),
            "dev": len(split.dev),
            "test": len(split.test),
        },
    }
    meta.update(kwargs)
    return meta


def runExperiment(
    spec,
    extractor_name,
    corpus,
    schema,
    end_to_end=False,
    epochs=DEFAULT_EPOCHS,
    mask=True,
    by_slot_count=False,
):
    """Split, train, predict and score once. Relations are predicted on the
    gold slots unless end_to_end is set, in which case a tagger trained on
    the same split provides the slots."""
    split = splitCorpus(corpus, spec)
    getLogger().info(
        "Running {} on {} with {}".format(extractor_name, schema.domain, spec)
    )
    slot_filler = TAGGED_SLOTS if end_to_end else GOLD_SLOTS
    meta = _splitMeta(
        spec,
        split,
        extractor=extractor_name,
        slot_filler=slot_filler,
        domain=schema.domain,
        end_to_end=end_to_end,
        epochs=epochs,
        mask=mask,
    )
    extractor = trainExtractor(
        extractor_name, schema, split.train, spec.seed, epochs, split.dev, mask
    )
    filler = trainSlotFiller(split.train, spec.seed, epochs, split.dev, slot_filler)
    tagged = [filler.fillUtterance(u) for u in split.test]
    pred = extractor.extractCorpus(tagged)
    if not end_to_end:
        report = relationScores(split.test, pred, meta)
        if by_slot_count:
            report.buckets = bucketBySlotCount(split.test, pred)
        return report

    report = relationTripleScores(split.test, pred, meta)
    report.scores["slot_f1"] = slotScores(split.test, tagged).f1
    return report


def runRepeated(spec, extractor_name, corpus, schema, runs=1, **kwargs):
    """Split seed and model seed move together: run r uses seed + r."""
    assert runs > 0, "runs must be positive, got {}".format(runs)
    return [
        runExperiment(
            spec.withSeed(spec.seed + offset), extractor_name, corpus, schema, **kwargs
        )
        for offset in range(runs)
    ]


def _meanOf(values):
    values = [v for v in values if v is not None]
    if not values:
        return None
    return float(np.mean(np.array(values, dtype=np.float64)))


def averageBuckets(reports):
    groups = collections.defaultdict(list)
    for report in reports:
        for key, bucket in report.buckets.items():
            groups[key].append(bucket)
    averaged = {}
    for key, buckets in sorted(groups.items()):
        averaged[str(key)] = {
            "overall": {
                name: _meanOf([b.overall()[name] for b in buckets])
                for name in SCORE_NAMES
            },
            "counts": {"utterances": sum(b.total for b in buckets)},
        }
    return averaged


def averageScores(reports):
    names = sorted(set(name for report in reports for name in report.scores))
    return {name: _meanOf([r.scores.get(name) for r in reports]) for name in names}


def reportRow(name, reports):
    """One table row; several runs are summarised by their mean and range."""
    if len(reports) == 1:
        row = reports[0].dump()
    else:
        summary = aggregateRuns(reports)
        row = {
            "spec": reports[0].meta,
            "overall": {key: summary[key]["mean"] for key in SCORE_NAMES},
            "summary": summary,
            "buckets": averageBuckets(reports),
            "scores": averageScores(reports),
            "runs": [report.dump() for report in reports],
        }
    row["name"] = name
    return row


def compareExtractors(spec, extractor_names, corpus, schema, runs=1, **kwargs):
    return [
        reportRow(name, runRepeated(spec, name, corpus, schema, runs, **kwargs))
        for name in extractor_names
    ]


def runZeroShotPair(
    corpus,
    schema,
    held_out,
    schedule=ZERO_SHOT_SCHEDULE,
    seed=0,
    runs=5,
    test_size=DEFAULT_PAIR_TEST_SIZE,
    epochs=DEFAULT_EPOCHS,
    extractor_name="pair_classifier",
    mask=True,
):
    """Relation transfer to an unseen slot-type pair. Rows are scored on the
    held-out pair only; all_pairs_f1 covers every pair of the test set."""
    rows = []
    for k in schedule:
        reports = []
        for offset in range(runs):
            spec = SplitSpec(
                "zero_shot_pair",
                seed + offset,
                {"held_out": list(held_out), "k": k, "test_size": test_size},
            )
            split = splitCorpus(corpus, spec)
            meta = _splitMeta(
                spec, split, extractor=extractor_name, domain=schema.domain, k=k
            )
            extractor = trainExtractor(
                extractor_name, schema, split.train, spec.seed, epochs, split.dev, mask
            )
            pred = extractor.extractCorpus(split.test)
            report = relationScores(split.test, pred, meta, slot_labels=held_out)
            report.scores["all_pairs_f1"] = relationScores(split.test, pred).f1
            reports.append(report)
        rows.append(reportRow("k={}".format(k), reports))
    return rows


def projectSplit(split, corpus):
    """The same utterance ids taken from another annotation of the corpus."""
    return Split(*[corpus.selectByIds([u.id for u in part]) for part in split])


def excludesSector(ops):
    return any(
        isinstance(op, SectorConstraint) and op.polarity == EXCLUDE for op in ops
    )


def _safeCompile(compiler, u):
    try:
        return compiler(u)
    except CompilationException as e:
        getLogger().warning("No operations for {}: {}".format(u.id, e))
        return set()


def _slotBasedPipeline(split, gold_ops, seed, epochs, held_out, meta):
    filler = trainSlotFiller(split.train, seed, epochs, split.dev)
    tagged = [filler.fillUtterance(u) for u in split.test]
    pred_ops = [(u.id, _safeCompile(compileSlotBased, u)) for u in tagged]
    report = operationScores(gold_ops, pred_ops, meta)
    slots = slotScores(split.test, tagged)
    report.scores["sf_f1"] = slots.f1
    report.scores["{}_f1".format(held_out)] = slots.labelF1(held_out)
    report.scores["exclude_sector_em"] = exactMatchWhere(
        gold_ops, pred_ops, excludesSector
    )
    return report


def _relationBasedPipeline(split, gold_ops, schema, lexicon, seed, epochs, meta):
    filler = trainSlotFiller(split.train, seed, epochs, split.dev)
    extractor = trainExtractor(
        "pair_classifier", schema, split.train, seed, epochs, split.dev
    )
    tagged = [filler.fillUtterance(u) for u in split.test]
    predicted = extractor.extractCorpus(tagged)
    pred_ops = [
        (
            u.id,
            _safeCompile(
                lambda x: compileRelationBased(x, x.relations, lexicon, schema), u
            ),
        )
        for u in predicted
    ]
    report = operationScores(gold_ops, pred_ops, meta)
    slots = slotScores(split.test, tagged)
    relations = relationScores(split.test, extractor.extractCorpus(split.test))
    report.scores["sf_f1"] = slots.f1
    report.scores["sector_name_f1"] = slots.labelF1("sector_name")
    report.scores["negation_modifier_f1"] = slots.labelF1("negation_modifier")
    report.scores["re_f1"] = relations.f1
    report.scores["negation_relation_f1"] = relations.labelF1("negation_relation")
    report.scores["exclude_sector_em"] = exactMatchWhere(
        gold_ops, pred_ops, excludesSector
    )
    return report


def runZeroShotSlot(
    corpus,
    schema,
    lexicon,
    held_out="sector_outside",
    schedule=ZERO_SHOT_SCHEDULE,
    seed=0,
    runs=1,
    test_size=DEFAULT_SLOT_TEST_SIZE,
    epochs=DEFAULT_EPOCHS,
):
    """Slot-based against relation-based stocks pipelines on a category the
    slot-based tagger never sees. The split is made on the slot-based
    annotation and projected by id onto the relation-based one. Both
    pipelines are scored end to end on operations; relation scores of the
    relation-based pipeline use gold slots."""
    if corpus.parallel is None:
        raise CorpusException(
            "Corpus {} has no slot-based annotation".format(corpus.domain)
        )
    rows = []
    for k in schedule:
        slot_based = []
        relation_based = []
        for offset in range(runs):
            spec = SplitSpec(
                "zero_shot_slot",
                seed + offset,
                {"held_out": held_out, "k": k, "test_size": test_size},
            )
            sb_split = splitCorpus(corpus.parallel, spec)
            rb_split = projectSplit(sb_split, corpus)
            gold_ops = [
                (u.id, compileRelationBased(u, u.relations, lexicon, schema))
                for u in rb_split.test
            ]
            meta = _splitMeta(spec, rb_split, domain=schema.domain, k=k)
            slot_based.append(
                _slotBasedPipeline(
                    sb_split,
                    gold_ops,
                    spec.seed,
                    epochs,
                    held_out,
                    dict(meta, scheme="slot_based"),
                )
            )
            relation_based.append(
                _relationBasedPipeline(
                    rb_split,
                    gold_ops,
                    schema,
                    lexicon,
                    spec.seed,
                    epochs,
                    dict(meta, scheme="relation_based"),
                )
            )
        rows.append(reportRow("slot_based k={}".format(k), slot_based))
        rows.append(reportRow("relation_based k={}".format(k), relation_based))
    return rows
