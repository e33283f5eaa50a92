# -*- coding: utf-8 -*-
"""Affix inventory tests, checked against a brute-force slot-grammar oracle."""

import pytest

from hebtok import inventory

from oracles import oracle_combinations as brute_force_combinations


def test_base_prefixes():
    prefixes = inventory.base_prefixes()
    assert len(prefixes) == 9
    assert [a.surface for a in prefixes] == ["מש", "כש", "ב", "ל", "כ", "ו", "ה", "ש", "מ"]
    by_surface = {a.surface: a for a in prefixes}
    assert by_surface["ו"].gloss == "and"
    assert by_surface["מש"].decomposition == ("מ", "ש")
    assert by_surface["כש"].decomposition == ("כ", "ש")
    for a in prefixes:
        assert a.kind is inventory.AffixKind.PREFIX
        if a.surface not in ("מש", "כש"):
            assert a.decomposition == (a.surface,)


def test_base_suffixes():
    suffixes = inventory.base_suffixes()
    assert len(suffixes) == 11
    assert [a.surface for a in suffixes] == ["י", "ך", "ה", "ו", "נו", "כן", "כם", "ן", "הן", "ם", "הם"]
    by_surface = {a.surface: a for a in suffixes}
    assert by_surface["ה"].gloss == "her/s"
    assert by_surface["נו"].decomposition == ("נ", "ו")
    for a in suffixes:
        assert a.kind is inventory.AffixKind.SUFFIX
        if a.surface != "נו":
            assert a.decomposition == (a.surface,)


def test_combination_table_matches_brute_force():
    oracle = brute_force_combinations()
    combos = inventory.enumerate_prefix_combinations()
    assert len(combos) == 55
    assert len(oracle) == 55
    assert {c.surface for c in combos} == set(oracle)
    for c in combos:
        assert c.emitted_morphemes == oracle[c.surface]


def test_combination_membership():
    surfaces = {c.surface for c in inventory.enumerate_prefix_combinations()}
    assert "וש" in surfaces
    assert "וכש" in surfaces
    assert "שמה" in surfaces
    assert "שש" not in surfaces
    assert "כשש" not in surfaces
    index = {c.surface: c for c in inventory.enumerate_prefix_combinations()}
    assert index["שמה"].emitted_morphemes == ("ש", "מ", "ה")
    assert index["וכש"].emitted_morphemes == ("ו", "כ", "ש")


def test_combination_invariants():
    combos = inventory.enumerate_prefix_combinations()
    alphabet = set("ושכמבלה")
    surfaces = [c.surface for c in combos]
    assert surfaces == sorted(surfaces), "iteration must be sorted by surface"
    assert len(set(surfaces)) == len(surfaces)
    for c in combos:
        assert set(c.surface) <= alphabet
        assert "שש" not in c.surface
        assert c.filled_slots()
        if c.preposition in {"ב", "ל", "כ"}:
            assert c.article is None
        assert "".join(c.emitted_morphemes) == c.surface
    # repeated calls give identical objects (pure)
    assert inventory.enumerate_prefix_combinations() == combos


def oracle_prefix_match(word, min_host):
    best = None
    for c in inventory.enumerate_prefix_combinations():
        if word.startswith(c.surface) and len(word) - len(c.surface) >= min_host:
            if best is None or len(c.surface) > len(best.surface):
                best = c
    return best


def oracle_suffix_match(word, min_host):
    best = None
    for a in inventory.base_suffixes():
        if word.endswith(a.surface) and len(word) - len(a.surface) >= min_host:
            if best is None or len(a.surface) > len(best.surface):
                best = a
    return best


def test_longest_prefix_match_golden():
    match = inventory.longest_prefix_match("וכשחרורנו", 2)
    assert match is not None and match.surface == "וכש"
    assert inventory.longest_prefix_match("דבר", 2) is None
    match = inventory.longest_prefix_match("ששחרור", 2)
    assert match is not None and match.surface == "ש"


def test_longest_suffix_match_golden():
    match = inventory.longest_suffix_match("חרורנו", 2)
    assert match is not None and match.surface == "נו"
    assert inventory.longest_suffix_match("חרור", 2) is None
    match = inventory.longest_suffix_match("ספריהם", 2)
    assert match is not None and match.surface == "הם"


def test_matchers_agree_with_oracle():
    import random

    rng = random.Random(20240817)
    letters = "אבגדהוזחטיכלמנסעפצקרשת"
    words = ["".join(rng.choice(letters) for _ in range(rng.randint(1, 8))) for _ in range(2000)]
    words += ["וכשחרורנו", "ששחרור", "ומשמה", "בבית", "להם", "כשלנו"]
    for word in words:
        for min_host in (1, 2, 3):
            got = inventory.longest_prefix_match(word, min_host)
            want = oracle_prefix_match(word, min_host)
            assert (got is None) == (want is None)
            if got is not None:
                assert got.surface == want.surface
            got_s = inventory.longest_suffix_match(word, min_host)
            want_s = oracle_suffix_match(word, min_host)
            assert (got_s is None) == (want_s is None)
            if got_s is not None:
                assert got_s.surface == want_s.surface


def test_match_preconditions():
    with pytest.raises(ValueError):
        inventory.longest_prefix_match("", 2)
    with pytest.raises(ValueError):
        inventory.longest_prefix_match("דבר", 0)
    with pytest.raises(ValueError):
        inventory.longest_suffix_match("", 2)
