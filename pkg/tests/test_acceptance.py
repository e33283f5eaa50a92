# -*- coding: utf-8 -*-
"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.  The corpus-scale criteria draw from the deterministic
synthetic corpus generator (>= 10 MB of Hebrew-like text).
"""

import contextlib
import io
import random
import sys
import time

import pytest

from hebtok import synth
from hebtok.analysis import ParadigmSpec, fertility, full_paradigm, generate_paradigm, host_overlap, unk_rate
from hebtok.letters import normalize
from hebtok.pipelines import pipeline_pretokenize
from hebtok.pretokenize import baseline_pretokenize, detokenize, prefsuf_pretokenize
from hebtok.segmentation import (
    ParseError,
    fallback_segment,
    morphseg_pretokenize,
    parse_segmentation_file,
    serialize_segmentation,
)
from hebtok.wordpiece import TrainerConfig, save, train_from_counts

from oracles import (
    composition_safe_hosts,
    naive_encode,
    oracle_combinations,
    oracle_split,
)


@contextlib.contextmanager
def criterion(number, description, limit_seconds):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number} [FAIL] {description}", file=sys.stderr)
        raise
    elapsed = time.perf_counter() - start
    assert elapsed < limit_seconds, (
        f"criterion {number} took {elapsed:.1f}s, limit {limit_seconds}s"
    )
    print(f"ACCEPTANCE {number} [PASS] {description} ({elapsed:.2f}s)")


@pytest.fixture(scope="module")
def sample():
    """>= 10 MB synthetic sample plus 10K held-out lines (seeded split)."""
    lines = list(synth.sample_corpus(105_000, seed=20_240_811))
    indices = list(range(len(lines)))
    random.Random(0).shuffle(indices)
    held = set(indices[:10_000])
    train_lines = [line for i, line in enumerate(lines) if i not in held]
    holdout_lines = [line for i, line in enumerate(lines) if i in held]
    return train_lines, holdout_lines


def pretoken_counts(lines, pipeline):
    from collections import Counter

    counts = Counter()
    for line in lines:
        for token in pipeline_pretokenize(line, pipeline):
            counts[token.marked()] += 1
    return counts


# --------------------------------------------------------------- criterion 1

GOLDEN_CASES = [
    # word, gold segmentation morphemes, morphseg stream, prefsuf stream
    ("שחרור", "h:שחרור", ["שחרור"], ["ש+", "חרור"]),
    ("ששחרור", "p:ש|h:שחרור", ["ש+", "שחרור"], ["ש+", "שחרור"]),
    ("ושחרורה", "p:ו|h:שחרור|s:ה", ["ו+", "שחרור", "+ה"], ["ו+", "ש+", "חרור", "+ה"]),
    (
        "וכשחרורנו",
        "p:ו|p:כ|h:שחרור|s:נו",
        ["ו+", "כ+", "שחרור", "+נו"],
        ["ו+", "כ+", "ש+", "חרור", "+נ", "+ו"],
    ),
]


def test_criterion_1_golden_suite():
    with criterion(1, "golden tokenization suite for the שחרור form family", 1.0):
        for word, seg, morphseg_expected, prefsuf_expected in GOLDEN_CASES:
            got = [t.marked() for t in prefsuf_pretokenize(word)]
            assert got == prefsuf_expected, f"{word}: {got}"
            [records] = parse_segmentation_file(io.StringIO(f"{word}\t{seg}\n"))
            got = [t.marked() for t in morphseg_pretokenize(records)]
            assert got == morphseg_expected, f"{word}: {got}"


# --------------------------------------------------------------- criterion 2


def test_criterion_2_combination_table():
    with criterion(2, "55 valid prefix combinations, verified by brute force", 1.0):
        from hebtok.inventory import enumerate_prefix_combinations

        combos = enumerate_prefix_combinations()
        oracle = oracle_combinations()
        assert len(combos) == 55
        assert {c.surface for c in combos} == set(oracle)
        assert all(c.emitted_morphemes == oracle[c.surface] for c in combos)
        surfaces = {c.surface for c in combos}
        assert {"וש", "וכש", "שמה"} <= surfaces
        assert "שש" not in surfaces


# --------------------------------------------------------------- criterion 3


def test_criterion_3_composition_property(sample):
    with criterion(3, "prefix-suffix composition: full host overlap on safe hosts", 10.0):
        rng = random.Random(31_337)
        hosts = composition_safe_hosts(rng, 3, lengths=(3, 4, 5))
        train_lines, _ = sample
        counts = pretoken_counts(train_lines[:3000], "prefsuf")
        vocab = train_from_counts(counts, TrainerConfig(vocab_size=2000))
        total_forms = 0
        for host in hosts:
            spec = full_paradigm(host)
            forms = generate_paradigm(spec)
            total_forms += len(forms)
            for form in forms:
                prefixes, got_host, suffixes = oracle_split(form)
                assert got_host == host, form
                tokens = prefsuf_pretokenize(form)
                assert [t.text for t in tokens] == [*prefixes, host, *suffixes], form
            assert host_overlap(spec, "prefsuf", vocab) == 1.0, host
        assert total_forms >= 1000


# --------------------------------------------------------------- criterion 4


def test_criterion_4_round_trip(sample):
    with criterion(4, "detokenize inverts pre-tokenization on 10K held-out lines", 30.0):
        _, holdout_lines = sample
        assert len(holdout_lines) == 10_000
        for line in holdout_lines:
            expected = normalize(" ".join(line.split()))
            assert detokenize(baseline_pretokenize(line)) == expected
            assert detokenize(prefsuf_pretokenize(line)) == expected


# --------------------------------------------------------------- criterion 5


def test_criterion_5_wordpiece(sample, tmp_path):
    with criterion(5, "trainer determinism, encode parity, size monotonicity", 600.0):
        train_lines, holdout_lines = sample
        sample_bytes = sum(len(line.encode("utf-8")) + 1 for line in train_lines)
        assert sample_bytes >= 10 * 1024 * 1024, f"sample only {sample_bytes} bytes"

        # (a) determinism: two full runs, byte-identical files
        paths = []
        for run in (1, 2):
            counts = pretoken_counts(train_lines, "prefsuf")
            vocab = train_from_counts(counts, TrainerConfig(vocab_size=32_000))
            path = tmp_path / f"run{run}.vocab"
            save(vocab, str(path))
            paths.append(path)
        assert paths[0].read_bytes() == paths[1].read_bytes()

        # (c) fertility and UNK rate non-increasing through 16K -> 32K -> 64K
        counts = pretoken_counts(train_lines, "prefsuf")
        fertilities = []
        unk_rates = []
        vocabs = {}
        for size in (16_000, 32_000, 64_000):
            vocab = train_from_counts(counts, TrainerConfig(vocab_size=size))
            vocabs[size] = vocab
            fertilities.append(fertility(holdout_lines, "prefsuf", vocab))
            unk_rates.append(unk_rate(holdout_lines, "prefsuf", vocab))
        assert fertilities[0] >= fertilities[1] >= fertilities[2], fertilities
        assert unk_rates[0] >= unk_rates[1] >= unk_rates[2], unk_rates

        # (b) greedy encoder equals the naive exhaustive reference
        from hebtok._kernel import encode_word

        vocab = vocabs[16_000]
        by_first: dict[tuple[bool, str], list[str]] = {}
        for token in vocab.tokens:
            body = token[2:] if token.startswith("##") else token
            if body:
                by_first.setdefault((token.startswith("##"), body[0]), []).append(token)

        def bucketed_naive(word):
            # same exhaustive scan as naive_encode, bucketed by first letter
            if len(word) > 100:
                return ["[UNK]"]
            pieces = []
            start = 0
            while start < len(word):
                bucket = by_first.get((start > 0, word[start]), [])
                best, best_len = None, 0
                for token in bucket:
                    body = token[2:] if start > 0 else token
                    if len(body) > best_len and word.startswith(body, start):
                        best, best_len = token, len(body)
                if best is None:
                    return ["[UNK]"]
                pieces.append(best)
                start += best_len
            return pieces

        rng = random.Random(5_555)
        letters = "אבגדהוזחטיכלמנסעפצקרשת"
        words = ["".join(rng.choice(letters) for _ in range(rng.randint(1, 12))) for _ in range(9_000)]
        words += [w for w, _ in zip(counts, range(1_000))]
        assert len(words) >= 10_000
        mismatches = [
            w
            for w in words
            if encode_word(w, vocab._index, "##", "[UNK]", 100) != bucketed_naive(w)
        ]
        assert not mismatches, mismatches[:5]
        # spot-check the bucketing against the plain exhaustive scan
        for w in words[:50]:
            assert bucketed_naive(w) == naive_encode(w, vocab.tokens, "##", "[UNK]", 100)


# --------------------------------------------------------------- criterion 6


def test_criterion_6_pipeline_equality(sample):
    with criterion(6, "morphseg with fallback + decomposition equals prefsuf", 60.0):
        train_lines, _ = sample
        for line in train_lines[:2000]:
            via_morphseg = pipeline_pretokenize(line, "morphseg", decompose_overlapping=True)
            via_prefsuf = pipeline_pretokenize(line, "prefsuf")
            assert [t.marked() for t in via_morphseg] == [t.marked() for t in via_prefsuf]


# --------------------------------------------------------------- criterion 7


def test_criterion_7_segmentation_format(sample):
    with criterion(7, "segmentation file round trip and malformed-line errors", 10.0):
        train_lines, _ = sample
        words = []
        for line in train_lines:
            words.extend(w for w in line.split() if w.isalpha())
            if len(words) >= 1000:
                break
        records = [fallback_segment(w) for w in words[:1000]]
        assert len(records) == 1000
        sentences = [records[i : i + 8] for i in range(0, 1000, 8)]
        text = "\n".join(serialize_segmentation(sentences)) + "\n"
        again = list(parse_segmentation_file(io.StringIO(text)))
        assert again == sentences

        fixtures = [
            ("ok\th:ok\n\nbad line\n", 3),
            ("x\tp:ו|p:ה\n", 1),
            ("ok\th:ok\nok\th:ok\nx\ts:ה|h:א\n", 3),
            ("a\tb\tc\n", 1),
            ("x\tq:א\n", 1),
        ]
        for text, expected_line in fixtures:
            with pytest.raises(ParseError) as exc_info:
                list(parse_segmentation_file(io.StringIO(text)))
            assert exc_info.value.line == expected_line, text
