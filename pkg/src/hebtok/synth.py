"""Deterministic synthetic Hebrew-like corpus generation.

Real corpora cannot ship with the package, so tests, benchmarks and the
documentation examples draw sentences from this generator instead: hosts
sampled from a Zipf-weighted random lexicon, joined with valid prefix
combinations and suffixes, plus punctuation and occasional Latin/digit
tokens.  Output is fully determined by the seed.
"""

import random
from typing import Iterator

from .inventory import base_suffixes, enumerate_prefix_combinations
from .letters import MEDIAL_TO_FINAL, medialize

# Rough letter frequencies; enough to give merges a realistic skew.
_LETTERS = "יוהלמרתשאבנדקספעכגחזטצ"
_LETTER_WEIGHTS = [220, 200, 180, 130, 120, 110, 100, 95, 90, 80, 75, 50, 45, 40, 38, 35, 30, 25, 22, 18, 12, 10]

_ASCII = "abcdefghijklmnopqrstuvwxyz"


def _cumulative(weights: list[float]) -> list[float]:
    total = 0.0
    out = []
    for w in weights:
        total += w
        out.append(total)
    return out


def _pick(rng: random.Random, items, cum) -> str:
    import bisect

    x = rng.random() * cum[-1]
    return items[bisect.bisect_right(cum, x)]


def make_lexicon(size: int, seed: int = 0) -> list[str]:
    """Random host lexicon; word-final letters use their final glyph."""
    rng = random.Random(seed)
    cum = _cumulative(_LETTER_WEIGHTS)
    lengths = [2, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 7, 8]
    lexicon: set[str] = set()
    while len(lexicon) < size:
        n = rng.choice(lengths)
        chars = [medialize(_pick(rng, _LETTERS, cum)) for _ in range(n)]
        chars[-1] = MEDIAL_TO_FINAL.get(chars[-1], chars[-1])
        lexicon.add("".join(chars))
    return sorted(lexicon)


def sample_corpus(
    n_lines: int,
    seed: int = 0,
    *,
    lexicon_size: int = 30000,
    combo_rate: float = 0.35,
    suffix_rate: float = 0.25,
    latin_rate: float = 0.02,
) -> Iterator[str]:
    """Yield ``n_lines`` synthetic sentences, one per line."""
    rng = random.Random(seed)
    hosts = make_lexicon(lexicon_size, seed=seed + 1)
    rng.shuffle(hosts)
    host_cum = _cumulative([1.0 / (rank + 20.0) for rank in range(len(hosts))])
    combos = [c.surface for c in enumerate_prefix_combinations()]
    combo_cum = _cumulative([1.0 / len(s) ** 2 for s in combos])
    suffixes = [a.surface for a in base_suffixes()]
    suffix_cum = _cumulative([1.0] * len(suffixes))

    for _ in range(n_lines):
        words = []
        for _ in range(rng.randint(4, 14)):
            if rng.random() < latin_rate:
                if rng.random() < 0.5:
                    word = str(rng.randint(1, 2100))
                else:
                    word = "".join(rng.choice(_ASCII) for _ in range(rng.randint(2, 8)))
            else:
                word = _pick(rng, hosts, host_cum)
                if rng.random() < suffix_rate:
                    word = word[:-1] + medialize(word[-1]) + _pick(rng, suffixes, suffix_cum)
                if rng.random() < combo_rate:
                    word = _pick(rng, combos, combo_cum) + word
            if rng.random() < 0.06:
                word += ","
            words.append(word)
        tail = rng.random()
        if tail < 0.75:
            words[-1] += "."
        elif tail < 0.85:
            words[-1] += "?"
        yield " ".join(words)


def write_corpus(path: str, n_lines: int, seed: int = 0, **kwargs) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in sample_corpus(n_lines, seed=seed, **kwargs):
            fh.write(line + "\n")
