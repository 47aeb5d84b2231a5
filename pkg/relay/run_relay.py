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
import os
import sys
import traceback

import six
from annotation.corpus import (
    SLOT_BASED_DIR,
    loadCorpus,
    readUtterances,
    utteranceToRow,
    writeUtterances,
)
from annotation.utterance import AnnotatedUtterance, checkUtterance
from compilers.operations import (
    loadLexicon,
    readOperations,
    sortOperations,
    writeOperations,
)
from compilers.relation_based.relation_based_compiler import RelationBasedCompiler
from compilers.slot_based.slot_based_compiler import SlotBasedCompiler
from datagen.fixtures import FIXTURES, getFixtures
from datagen.generator import (
    DEFAULT_FRACTIONS,
    GeneratorConfig,
    generate,
    largestRemainder,
    loadGenerated,
    writeGenerated,
)
from driver.experiment_driver import (
    DEFAULT_EPOCHS,
    GOLD_SLOTS,
    TAGGED_SLOTS,
    ZERO_SHOT_SCHEDULE,
    compareExtractors,
    logEffectiveConfig,
    runZeroShotPair,
    runZeroShotSlot,
    trainExtractor,
    trainSlotFiller,
)
from extractors.extractors import getExtractor, loadExtractor, saveExtractor
from metrics.operation_scores import operationScores
from metrics.relation_scores import (
    bucketBySlotCount,
    relationScores,
    relationTripleScores,
)
from metrics.slot_scores import slotScores
from reporters.reporters import getReporters
from schemas.schema import dumpSchema, loadSchema
from slot_fillers.slot_fillers import getSlotFiller, getSlotFillers
from splitters.splitter_base import STRATEGIES, SplitSpec, describeSplit
from splitters.splitters import splitCorpus
from utils.check_argparse import (
    fraction_type,
    held_out_type,
    non_negative_int,
    positive_int,
    schedule_type,
)
from utils.custom_logger import getLogger, setLoggerLevel
from utils.utilities import (
    HARNESS_ERROR_FLAG,
    SUCCESS_FLAG,
    USAGE_ERROR_FLAG,
    USER_ERROR_FLAG,
    RelayException,
    dumpJson,
    getSeed,
    loadJson,
    resolveDocument,
    writeJson,
)

DOMAINS = ("food", "gaming", "stocks")
PROTOCOLS = ("compare", "zero_shot_slot", "zero_shot_pair")

common = argparse.ArgumentParser(add_help=False)
common.add_argument(
    "--config_file",
    help="A json document of flag defaults, e.g. {\"--seed\": 3}. "
    "Flags given on the command line take precedence.",
)
common.add_argument(
    "--seed",
    type=non_negative_int,
    help="The seed of every random choice. Falls back to RELAY_SEED, then 0.",
)
common.add_argument(
    "--logger_level",
    default="info",
    choices=["debug", "info", "warning", "error"],
    help="Specify the logger level",
)

reporting = argparse.ArgumentParser(add_help=False)
reporting.add_argument(
    "--screen_reporter",
    action="store_true",
    help="Also print the report as tables to standard error.",
)
reporting.add_argument(
    "--local_reporter", help="Write report.json and buckets.csv into this directory."
)
reporting.add_argument(
    "--plot_reporter", help="Write the report charts into this directory."
)

parser = argparse.ArgumentParser(
    description="Relation extraction for task-oriented dialogue"
)
subparsers = parser.add_subparsers(dest="command")

generate_parser = subparsers.add_parser(
    "generate", parents=[common], help="Generate a synthetic corpus."
)
generate_parser.add_argument(
    "--domain",
    required=True,
    help="A bundled domain (food, gaming, stocks) or a generator config file.",
)
generate_parser.add_argument(
    "--output_dir", required=True, help="Directory of the generated corpus."
)
generate_parser.add_argument(
    "--ambiguity_rate",
    type=fraction_type,
    help="Fraction of utterances the nearest-slot heuristic gets wrong.",
)
generate_parser.add_argument(
    "--total",
    type=positive_int,
    help="Generate this many utterances in a 70/15/15 split "
    "instead of the configured split sizes.",
)

train_sf_parser = subparsers.add_parser(
    "train-sf", parents=[common], help="Train the slot tagger."
)
train_sf_parser.add_argument(
    "--train", required=True, help="A corpus directory or a jsonl file."
)
train_sf_parser.add_argument("--dev", help="A corpus directory or a jsonl file.")
train_sf_parser.add_argument(
    "--output", required=True, help="The file the model is written to."
)
train_sf_parser.add_argument(
    "--epochs", type=non_negative_int, default=DEFAULT_EPOCHS, help="Training epochs."
)

train_re_parser = subparsers.add_parser(
    "train-re", parents=[common], help="Train a relation extractor."
)
train_re_parser.add_argument(
    "--schema", required=True, help="A bundled domain name or a schema file."
)
train_re_parser.add_argument(
    "--train", required=True, help="A corpus directory or a jsonl file."
)
train_re_parser.add_argument("--dev", help="A corpus directory or a jsonl file.")
train_re_parser.add_argument(
    "--output", required=True, help="The file the model is written to."
)
train_re_parser.add_argument(
    "--extractor",
    default="pair_classifier",
    choices=["heuristic", "pair_classifier"],
    help="The extractor to train.",
)
train_re_parser.add_argument(
    "--epochs", type=non_negative_int, default=DEFAULT_EPOCHS, help="Training epochs."
)
train_re_parser.add_argument(
    "--no_schema_mask",
    action="store_true",
    help="Let the pair classifier predict labels the schema does not allow.",
)

extract_parser = subparsers.add_parser(
    "extract", parents=[common], help="Predict the relations of a corpus."
)
extract_parser.add_argument(
    "--schema", required=True, help="A bundled domain name or a schema file."
)
extract_parser.add_argument("--input", required=True, help="A jsonl corpus file.")
extract_parser.add_argument(
    "--output", required=True, help="The jsonl file predictions are written to."
)
extract_parser.add_argument(
    "--model",
    help="A model written by train-re. Without it the heuristic is used.",
)
extract_parser.add_argument(
    "--slot_model",
    help="A tagger written by train-sf. Without it the gold slots are used.",
)
extract_parser.add_argument(
    "--no_schema_mask",
    action="store_true",
    help="Let the pair classifier predict labels the schema does not allow.",
)

compile_parser = subparsers.add_parser(
    "compile-ops", parents=[common], help="Compile annotations into operations."
)
compile_parser.add_argument("--input", required=True, help="A jsonl corpus file.")
compile_parser.add_argument(
    "--output", required=True, help="The jsonl file operations are written to."
)
compile_parser.add_argument(
    "--scheme",
    default="relation_based",
    choices=["relation_based", "slot_based"],
    help="The labeling scheme of the input.",
)
compile_parser.add_argument(
    "--schema", default="stocks", help="The relation-based schema."
)
compile_parser.add_argument(
    "--lexicon", default="comparators", help="The comparator lexicon."
)
compile_parser.add_argument(
    "--extra_lexicon",
    action="append",
    help="A lexicon document extending the comparator lexicon.",
)

split_parser = subparsers.add_parser(
    "split", parents=[common], help="Split a corpus."
)
split_parser.add_argument("--corpus", required=True, help="A corpus directory.")
split_parser.add_argument(
    "--output_dir", required=True, help="Directory of the split files."
)
split_parser.add_argument(
    "--strategy", default="pattern", choices=STRATEGIES, help="The split strategy."
)
split_parser.add_argument(
    "--test_fraction",
    type=fraction_type,
    help="Target test share of the random and pattern strategies.",
)
split_parser.add_argument(
    "--held_out",
    type=held_out_type,
    help="The held-out slot type, or two slot types as a,b.",
)
split_parser.add_argument(
    "--k",
    type=non_negative_int,
    default=0,
    help="Held-out examples kept in training.",
)
split_parser.add_argument(
    "--test_size", type=positive_int, help="Size of the zero-shot test set."
)

eval_parser = subparsers.add_parser(
    "eval", parents=[common, reporting], help="Score predictions against gold."
)
eval_parser.add_argument("--gold", required=True, help="The gold jsonl file.")
eval_parser.add_argument("--pred", required=True, help="The predicted jsonl file.")
eval_parser.add_argument(
    "--kind",
    default="relations",
    choices=["relations", "slots", "operations"],
    help="What the files hold and how they are scored.",
)
eval_parser.add_argument(
    "--by_slot_count",
    action="store_true",
    help="Add one score bucket per slot count.",
)
eval_parser.add_argument(
    "--end_to_end",
    action="store_true",
    help="Predicted slots may differ from gold, score relation triples.",
)

parse_parser = subparsers.add_parser(
    "parse", parents=[common], help="Parse utterances given as text."
)
parse_parser.add_argument(
    "text", nargs="*", help="Utterances. Read from standard input when absent."
)
parse_parser.add_argument(
    "--domain", required=True, choices=DOMAINS, help="The domain of the utterances."
)
parse_parser.add_argument(
    "--slot_model",
    help="A tagger written by train-sf. Without it one is trained "
    "on a generated corpus.",
)
parse_parser.add_argument(
    "--model",
    help="An extractor written by train-re. Without it one is trained "
    "on a generated corpus.",
)
parse_parser.add_argument(
    "--epochs", type=non_negative_int, default=DEFAULT_EPOCHS, help="Training epochs."
)

experiment_parser = subparsers.add_parser(
    "experiment", parents=[common, reporting], help="Run an experiment protocol."
)
experiment_parser.add_argument(
    "--experiment_file",
    help="A bundled experiment name or an experiment file. "
    "Flags given on the command line take precedence.",
)
experiment_parser.add_argument("--protocol", choices=PROTOCOLS, help="The protocol.")
experiment_parser.add_argument("--domain", choices=DOMAINS, help="The domain.")
experiment_parser.add_argument(
    "--corpus",
    help="A corpus directory. Without it the default corpus of the domain "
    "is generated.",
)
experiment_parser.add_argument(
    "--strategy", choices=STRATEGIES, help="Split strategy of the compare protocol."
)
experiment_parser.add_argument(
    "--test_fraction", type=fraction_type, help="Target test share."
)
experiment_parser.add_argument(
    "--extractor",
    action="append",
    choices=["heuristic", "pair_classifier"],
    help="Extractors to compare, one row each.",
)
experiment_parser.add_argument(
    "--runs", type=positive_int, help="Repeat with seeds seed..seed+runs-1."
)
experiment_parser.add_argument(
    "--by_slot_count", action="store_true", default=None, help="Bucket by slot count."
)
experiment_parser.add_argument(
    "--end_to_end",
    action="store_true",
    default=None,
    help="Predict on tagged slots instead of gold slots.",
)
experiment_parser.add_argument(
    "--no_schema_mask",
    action="store_true",
    default=None,
    help="Let the pair classifier predict labels the schema does not allow.",
)
experiment_parser.add_argument(
    "--held_out",
    type=held_out_type,
    help="The held-out slot type, or two slot types as a,b.",
)
experiment_parser.add_argument(
    "--schedule", type=schedule_type, help="Zero-shot k values, e.g. 0,8,16,32,64."
)
experiment_parser.add_argument(
    "--test_size", type=positive_int, help="Size of the zero-shot test set."
)
experiment_parser.add_argument(
    "--epochs", type=non_negative_int, help="Training epochs."
)

fixtures_parser = subparsers.add_parser(
    "fixtures", parents=[common], help="Print the bundled example utterances."
)
fixtures_parser.add_argument(
    "--domain", required=True, choices=sorted(FIXTURES), help="The domain."
)


def _dest(flag):
    return flag.lstrip("-").replace("-", "_")


def _readUtterancesArg(path, split=None):
    """A jsonl file, or one split of a corpus directory when split is given."""
    if path is None:
        return []
    if os.path.isdir(path):
        if split is None:
            raise RelayException(
                "{} is a corpus directory, expected a jsonl file".format(path)
            )
        return loadCorpus(path).splits[split]
    if not os.path.isfile(path):
        raise RelayException("File {} doesn't exist".format(path))
    return readUtterances(path)


class RelayRunner(object):
    def __init__(self, raw_args=None):
        raw_args = list(sys.argv[1:] if raw_args is None else raw_args)
        self.args = self._parse(raw_args)
        setLoggerLevel(self.args.logger_level)
        self.seed = getSeed(self.args.seed)

    def _parse(self, raw_args):
        args = parser.parse_args(raw_args)
        if args.command is None:
            parser.error("A subcommand is required")
        if args.config_file:
            # config values become defaults of the chosen subcommand
            config = loadJson(args.config_file)
            subparser = subparsers.choices[args.command]
            known = set(action.dest for action in subparser._actions)
            defaults = {}
            for flag, value in config.items():
                if _dest(flag) not in known:
                    subparser.error(
                        "Unknown flag {} in {}".format(flag, args.config_file)
                    )
                defaults[_dest(flag)] = value
            previous = {dest: subparser.get_default(dest) for dest in defaults}
            subparser.set_defaults(**defaults)
            try:
                args = parser.parse_args(raw_args)
            finally:
                subparser.set_defaults(**previous)
        return args

    def run(self):
        config = dict(vars(self.args), seed=self.seed)
        config.pop("config_file", None)
        logEffectiveConfig(config)
        command = {
            "generate": self.generate,
            "train-sf": self.trainSlotFiller,
            "train-re": self.trainExtractor,
            "extract": self.extract,
            "compile-ops": self.compileOperations,
            "split": self.split,
            "eval": self.evaluate,
            "parse": self.parse,
            "experiment": self.experiment,
            "fixtures": self.fixtures,
        }[self.args.command]
        command()
        return SUCCESS_FLAG

    def _print(self, content):
        print(dumpJson(content))

    def _report(self, data, meta):
        content = {"meta": meta, "data": data}
        for reporter in getReporters(self.args):
            reporter.report(content)

    def generate(self):
        config = GeneratorConfig.load(
            self.args.domain,
            {"seed": self.seed, "ambiguity_rate": self.args.ambiguity_rate},
        )
        if self.args.total is not None:
            config.counts = largestRemainder(self.args.total, DEFAULT_FRACTIONS)
        corpus = generate(config, loadSchema(config.domain))
        writeGenerated(corpus, self.args.output_dir)
        self._print(corpus.manifest)

    def trainSlotFiller(self):
        train = _readUtterancesArg(self.args.train, "train")
        dev = _readUtterancesArg(self.args.dev, "dev")
        filler = trainSlotFiller(train, self.seed, self.args.epochs, dev)
        filler.save(self.args.output)
        self._print({"model": self.args.output, "labels": filler.model.labels})

    def trainExtractor(self):
        schema = loadSchema(self.args.schema)
        train = _readUtterancesArg(self.args.train, "train")
        dev = _readUtterancesArg(self.args.dev, "dev")
        for u in train:
            checkUtterance(u, schema)
        extractor = trainExtractor(
            self.args.extractor,
            schema,
            train,
            self.seed,
            self.args.epochs,
            dev,
            not self.args.no_schema_mask,
        )
        saveExtractor(extractor, self.args.output)
        self._print({"model": self.args.output, "kind": extractor.getName()})

    def extract(self):
        schema = loadSchema(self.args.schema)
        mask = not self.args.no_schema_mask
        if self.args.model:
            extractor = loadExtractor(self.args.model, schema, mask=mask)
        else:
            extractor = getExtractor("heuristic", schema)
        if self.args.slot_model:
            filler = getSlotFillers()[TAGGED_SLOTS].load(self.args.slot_model)
        else:
            filler = getSlotFiller(GOLD_SLOTS)
        filled = [filler.fillUtterance(u) for u in _readUtterancesArg(self.args.input)]
        predicted = extractor.extractCorpus(filled)
        writeUtterances(self.args.output, predicted)
        self._print(
            {
                "output": self.args.output,
                "utterances": len(predicted),
                "slot_filler": filler.getName(),
            }
        )

    def compileOperations(self):
        if self.args.scheme == "slot_based":
            compiler = SlotBasedCompiler()
        else:
            compiler = RelationBasedCompiler(
                loadLexicon(self.args.lexicon, self.args.extra_lexicon),
                loadSchema(self.args.schema),
            )
        rows = compiler.compileCorpus(_readUtterancesArg(self.args.input))
        writeOperations(self.args.output, rows)
        self._print({"output": self.args.output, "utterances": len(rows)})

    def split(self):
        parameters = {}
        if self.args.test_fraction is not None:
            parameters["test_fraction"] = self.args.test_fraction
        if self.args.strategy.startswith("zero_shot"):
            if self.args.held_out is None:
                raise RelayException("--held_out is required by zero-shot splits")
            parameters["held_out"] = self.args.held_out
            parameters["k"] = self.args.k
            if self.args.test_size is not None:
                parameters["test_size"] = self.args.test_size
        spec = SplitSpec(self.args.strategy, self.seed, parameters)
        split = splitCorpus(loadCorpus(self.args.corpus), spec)
        directory = self.args.output_dir
        writeUtterances(os.path.join(directory, "train.jsonl"), split.train)
        if split.dev:
            writeUtterances(os.path.join(directory, "dev.jsonl"), split.dev)
        writeUtterances(os.path.join(directory, "test.jsonl"), split.test)
        manifest = describeSplit(spec, split)
        manifest["corpus"] = self.args.corpus
        writeJson(os.path.join(directory, "split_manifest.json"), manifest)
        self._print(manifest)

    def evaluate(self):
        meta = {"gold": self.args.gold, "pred": self.args.pred, "kind": self.args.kind}
        if self.args.kind == "operations":
            report = operationScores(
                readOperations(self.args.gold), readOperations(self.args.pred), meta
            )
        else:
            gold = _readUtterancesArg(self.args.gold)
            pred = _readUtterancesArg(self.args.pred)
            if self.args.kind == "slots":
                report = slotScores(gold, pred, meta)
            elif self.args.end_to_end:
                report = relationTripleScores(gold, pred, meta)
            else:
                report = relationScores(gold, pred, meta)
                if self.args.by_slot_count:
                    report.buckets = bucketBySlotCount(gold, pred)
        self._report(report.dump(), meta)

    def _defaultCorpus(self, domain):
        config = GeneratorConfig.load(domain, {"seed": self.seed})
        return generate(config, loadSchema(domain))

    def parse(self):
        schema = loadSchema(self.args.domain)
        texts = self.args.text or [
            line.strip() for line in sys.stdin if line.strip()
        ]
        corpus = None
        if not (self.args.slot_model and self.args.model):
            getLogger().warning(
                "Training on a generated {} corpus".format(self.args.domain)
            )
            corpus = self._defaultCorpus(self.args.domain)
        if self.args.slot_model:
            filler = getSlotFillers()[TAGGED_SLOTS].load(self.args.slot_model)
        else:
            filler = trainSlotFiller(
                corpus.train, self.seed, self.args.epochs, corpus.dev
            )
        if self.args.model:
            extractor = loadExtractor(self.args.model, schema)
        else:
            extractor = trainExtractor(
                "pair_classifier",
                schema,
                corpus.train,
                self.seed,
                self.args.epochs,
                corpus.dev,
            )
        compiler = None
        if self.args.domain == "stocks":
            compiler = RelationBasedCompiler(loadLexicon(), schema)
        for k, text in enumerate(texts):
            u = AnnotatedUtterance("input-{}".format(k), schema.domain, text)
            predicted = extractor.extractUtterance(filler.fillUtterance(u))
            row = utteranceToRow(predicted)
            row["slots"] = [
                {"label": s.label, "start": s.start, "end": s.end, "value": s.value}
                for s in predicted.slots
            ]
            if compiler is not None:
                row["operations"] = [
                    op.toJson() for op in sortOperations(compiler.compile(predicted))
                ]
            self._print(row)

    def _experimentValue(self, document, name, default=None):
        value = getattr(self.args, name)
        if value is not None:
            return value
        return document.get(name, default)

    def experiment(self):
        document = {}
        if self.args.experiment_file:
            document = loadJson(
                resolveDocument("experiments", self.args.experiment_file)
            )
        value = lambda name, default=None: self._experimentValue(  # noqa: E731
            document, name, default
        )
        protocol = value("protocol", "compare")
        domain = value("domain")
        if domain is None:
            raise RelayException("The experiment needs a --domain")
        epochs = value("epochs", DEFAULT_EPOCHS)
        schema = loadSchema(domain)
        if value("corpus"):
            corpus = loadGenerated(value("corpus"))
        else:
            corpus = self._defaultCorpus(domain)
        effective = {
            "protocol": protocol,
            "domain": domain,
            "seed": self.seed,
            "epochs": epochs,
            "document": document,
            "schema": dumpSchema(schema),
        }
        if protocol == "compare":
            parameters = {}
            if value("test_fraction") is not None:
                parameters["test_fraction"] = value("test_fraction")
            spec = SplitSpec(value("strategy", "given"), self.seed, parameters)
            extractors = value("extractor", ["heuristic", "pair_classifier"])
            effective.update(split=spec.dump(), extractors=extractors)
            logEffectiveConfig(effective)
            rows = compareExtractors(
                spec,
                extractors,
                corpus,
                schema,
                runs=value("runs", 1),
                end_to_end=bool(value("end_to_end", False)),
                epochs=epochs,
                mask=not value("no_schema_mask", False),
                by_slot_count=bool(value("by_slot_count", False)),
            )
        elif protocol == "zero_shot_pair":
            held_out = value("held_out")
            if held_out is None or isinstance(held_out, six.string_types):
                raise RelayException("zero_shot_pair needs two --held_out slot types")
            logEffectiveConfig(effective)
            rows = runZeroShotPair(
                corpus,
                schema,
                tuple(held_out),
                schedule=value("schedule", list(ZERO_SHOT_SCHEDULE)),
                seed=self.seed,
                runs=value("runs", 5),
                test_size=value("test_size", 50),
                epochs=epochs,
                mask=not value("no_schema_mask", False),
            )
        else:
            if corpus.parallel is None and value("corpus"):
                raise RelayException(
                    "{} has no {} directory".format(value("corpus"), SLOT_BASED_DIR)
                )
            logEffectiveConfig(effective)
            rows = runZeroShotSlot(
                corpus,
                schema,
                loadLexicon(),
                held_out=value("held_out", "sector_outside"),
                schedule=value("schedule", list(ZERO_SHOT_SCHEDULE)),
                seed=self.seed,
                runs=value("runs", 1),
                test_size=value("test_size", 90),
                epochs=epochs,
            )
        self._report({"rows": rows}, effective)

    def fixtures(self):
        for u in getFixtures(self.args.domain):
            self._print(utteranceToRow(u))


def main(raw_args=None):
    try:
        app = RelayRunner(raw_args=raw_args)
        return app.run()
    except SystemExit as e:
        # argparse reports usage errors this way
        return USAGE_ERROR_FLAG if e.code else SUCCESS_FLAG
    except (RelayException, AssertionError, IOError, OSError) as e:
        getLogger().error("{}: {}".format(type(e).__name__, e))
        return USER_ERROR_FLAG
    except Exception:
        getLogger().error(traceback.format_exc())
        return HARNESS_ERROR_FLAG


if __name__ == "__main__":
    sys.exit(main())
