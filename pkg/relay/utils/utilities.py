#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

from __future__ import absolute_import, division, print_function, unicode_literals

import hashlib
import io
import json
import os

from six import string_types

# Exit status of the command line driver
SUCCESS_FLAG = 0
USER_ERROR_FLAG = 1
USAGE_ERROR_FLAG = 2
HARNESS_ERROR_FLAG = 3

SEED_ENV = "RELAY_SEED"


class RelayException(Exception):
    """Root of all errors raised on purpose by relay."""

    pass


class SchemaParseException(RelayException):
    """Raised when a schema document is not well-formed."""

    pass


class SchemaValidationException(RelayException):
    """Raised when a schema document violates the schema invariants."""

    pass


class UnknownSlotTypeException(RelayException):
    """Raised when a slot type is not declared in the domain schema."""

    pass


class AnnotationException(RelayException):
    """Raised when slot indices or spans are out of range."""

    pass


class CorpusException(RelayException):
    """Raised when a corpus file or a pair of corpora cannot be used together."""

    pass


class TrainingException(RelayException):
    """Raised when a model cannot be trained or is used before training."""

    pass


class CompilationException(RelayException):
    """Raised when slots and relations cannot be compiled into operations."""

    pass


class CapacityException(RelayException):
    """Raised when a generator or a split cannot produce the requested data."""

    pass


class SplitException(RelayException):
    """Raised when a corpus cannot be split with the requested strategy."""

    pass


def getRelayRoot():
    dir_path = os.path.dirname(os.path.realpath(__file__))
    root_dir = os.path.join(dir_path, "../../")
    return os.path.abspath(root_dir)


def getSpecification(kind, name):
    """Path of a bundled declarative document, e.g. ("schemas", "food")."""
    return os.path.join(getRelayRoot(), "specifications", kind, name + ".json")


def resolveDocument(kind, source):
    # a bundled name, a path, or an inline json string
    if os.path.isfile(source):
        return source
    bundled = getSpecification(kind, source)
    if os.path.isfile(bundled):
        return bundled
    return source


def check_is_json(json_str):
    try:
        json.loads(json_str)
        return True
    except ValueError:
        return False


def loadJson(source):
    if os.path.isfile(source):
        with io.open(source, "r", encoding="utf-8") as f:
            return json.load(f)
    if isinstance(source, string_types) and check_is_json(source):
        return json.loads(source)
    raise RelayException("File {} doesn't exist".format(source))


def dumpJson(content, indent=None):
    # sorted keys keep every artifact byte-stable across reruns
    return json.dumps(content, indent=indent, sort_keys=True, ensure_ascii=False)


def writeJson(filename, content):
    _makeParent(filename)
    with io.open(filename, "w", encoding="utf-8") as f:
        f.write(dumpJson(content, indent=2))
        f.write("\n")


def writeJsonLines(filename, rows):
    _makeParent(filename)
    with io.open(filename, "w", encoding="utf-8") as f:
        for row in rows:
            f.write(dumpJson(row))
            f.write("\n")


def readJsonLines(filename):
    if not os.path.isfile(filename):
        raise CorpusException("File {} doesn't exist".format(filename))
    rows = []
    with io.open(filename, "r", encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            try:
                rows.append(json.loads(line))
            except ValueError as e:
                raise CorpusException(
                    "{}:{}: cannot decode json {}".format(filename, lineno, e)
                )
    return rows


def fingerprint(content):
    return hashlib.sha1(dumpJson(content).encode("utf-8")).hexdigest()


def getSeed(seed=None):
    if seed is not None:
        return int(seed)
    env_seed = os.getenv(SEED_ENV)
    if env_seed:
        return int(env_seed)
    return 0


def _makeParent(filename):
    parent = os.path.dirname(os.path.abspath(filename))
    if not os.path.isdir(parent):
        os.makedirs(parent)
