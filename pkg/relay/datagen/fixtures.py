#!/usr/bin/env python

##############################################################################
# Copyright 2026-present, relay contributors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
##############################################################################

"""Published example utterances with their gold annotations.

Stocks examples come in both annotation schemes, with the same ids.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

from annotation.utterance import AnnotatedUtterance


def foodFixtures():
    return [
        AnnotatedUtterance(
            "food-example-1",
            "food",
            "Give me three large burgers and two fries.",
            [
                ("quantity", 2, 3),
                ("size", 3, 4),
                ("plus", 4, 5),
                ("quantity", 6, 7),
                ("plus", 7, 8),
            ],
            [(0, 2, "numeric"), (1, 2, "size"), (3, 4, "numeric")],
            "order_food",
        )
    ]


def gamingFixtures():
    # the pair differs in one article and in one relation
    return [
        AnnotatedUtterance(
            "gaming-example-1",
            "gaming",
            "I would like to see your fire swords and shields.",
            [("enchantment", 6, 7), ("item", 7, 8), ("item", 9, 10)],
            [(0, 1, "enchantment"), (0, 2, "enchantment")],
            "shop_items",
        ),
        AnnotatedUtterance(
            "gaming-example-2",
            "gaming",
            "I would like to see your fire swords and a shield.",
            [("enchantment", 6, 7), ("item", 7, 8), ("item", 10, 11)],
            [(0, 1, "enchantment")],
            "shop_items",
        ),
    ]


def stocksFixtures():
    return [
        AnnotatedUtterance(
            "stocks-example-1",
            "stocks",
            "Show me all the companies in Europe outside of Germany.",
            [("location", 6, 7), ("negation_modifier", 7, 8), ("location", 9, 10)],
            [(1, 2, "negation_relation")],
            "search_stocks",
        ),
        AnnotatedUtterance(
            "stocks-example-2",
            "stocks",
            "Show me the EBITDA of companies that have a market cap over a million "
            "dollars and revenue less than 2 million?",
            [
                ("metric_name", 3, 4),
                ("metric_name", 9, 11),
                ("filter_modifier", 11, 12),
                ("amount", 13, 14),
                ("metric_name", 16, 17),
                ("filter_modifier", 17, 18),
                ("amount", 19, 21),
            ],
            [
                (1, 2, "filter_metric_relation"),
                (2, 3, "filter_amount_relation"),
                (4, 5, "filter_metric_relation"),
                (5, 6, "filter_amount_relation"),
            ],
            "search_stocks",
        ),
        AnnotatedUtterance(
            "stocks-example-3",
            "stocks",
            "Show me all the healthcare sector companies in Europe outside of Germany.",
            [
                ("sector_name", 4, 5),
                ("location", 8, 9),
                ("negation_modifier", 9, 10),
                ("location", 11, 12),
            ],
            [(2, 3, "negation_relation")],
            "search_stocks",
        ),
        AnnotatedUtterance(
            "stocks-example-4",
            "stocks",
            "Which companies have a 2018 market cap over a million dollars and 2019 "
            "revenue less than 2 million?",
            [
                ("date_metric", 4, 5),
                ("metric_name", 5, 7),
                ("filter_modifier", 7, 8),
                ("amount", 9, 10),
                ("date_metric", 12, 13),
                ("metric_name", 13, 14),
                ("filter_modifier", 14, 15),
                ("amount", 16, 18),
            ],
            [
                (0, 1, "date_relation"),
                (1, 2, "filter_metric_relation"),
                (2, 3, "filter_amount_relation"),
                (4, 5, "date_relation"),
                (5, 6, "filter_metric_relation"),
                (6, 7, "filter_amount_relation"),
            ],
            "search_stocks",
        ),
    ]


def stocksSlotBasedFixtures():
    return [
        AnnotatedUtterance(
            "stocks-example-1",
            "stocks_slot_based",
            "Show me all the companies in Europe outside of Germany.",
            [("location_inside", 6, 7), ("location_outside", 9, 10)],
            intent="search_stocks",
        ),
        AnnotatedUtterance(
            "stocks-example-2",
            "stocks_slot_based",
            "Show me the EBITDA of companies that have a market cap over a million "
            "dollars and revenue less than 2 million?",
            [
                ("query_metric", 3, 4),
                ("filter_metric", 9, 11),
                ("filter_amount_above", 13, 14),
                ("filter_metric", 16, 17),
                ("filter_amount_below", 19, 21),
            ],
            intent="search_stocks",
        ),
        AnnotatedUtterance(
            "stocks-example-3",
            "stocks_slot_based",
            "Show me all the healthcare sector companies in Europe outside of Germany.",
            [
                ("sector", 4, 5),
                ("location_inside", 8, 9),
                ("location_outside", 11, 12),
            ],
            intent="search_stocks",
        ),
        AnnotatedUtterance(
            "stocks-example-4",
            "stocks_slot_based",
            "Which companies have a 2018 market cap over a million dollars and 2019 "
            "revenue less than 2 million?",
            [
                ("date", 4, 5),
                ("filter_metric", 5, 7),
                ("filter_amount_above", 9, 10),
                ("date", 12, 13),
                ("filter_metric", 13, 14),
                ("filter_amount_below", 16, 18),
            ],
            intent="search_stocks",
        ),
    ]


FIXTURES = {
    "food": foodFixtures,
    "gaming": gamingFixtures,
    "stocks": stocksFixtures,
    "stocks_slot_based": stocksSlotBasedFixtures,
}


def getFixtures(domain):
    assert domain in FIXTURES, "No fixtures for domain {}".format(domain)
    return FIXTURES[domain]()
