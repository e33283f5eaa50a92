"""Corpus metrics and paradigm-based properties of the tokenization pipelines.

``fertility`` (mean subwords per whitespace word) and ``unk_rate``
(fraction of emitted subwords that are [UNK]) quantify how a vocabulary
copes with the long tail of affixed word forms.  ``host_overlap`` measures
the share of a paradigm's forms whose subword sequence still contains the
subword sequence of the bare host, i.e. whether morphologically related
forms keep a common piece.  ``compare`` evaluates the full pipeline-by-
vocabulary-size grid and reports TSV/JSON rows.
"""

import json
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .inventory import base_suffixes, enumerate_prefix_combinations
from .letters import medialize
from .pipelines import Segmenter, pipeline_pretokenize
from .pretokenize import DEFAULT_MIN_HOST
from .wordpiece import UNK, TrainerConfig, Vocabulary, encode_pretoken, train_from_counts


class EmptyCorpus(ValueError):
    """The corpus holds no whitespace-delimited words."""


@dataclass(frozen=True)
class ParadigmSpec:
    """A host crossed with prefix combinations and suffixes.

    ``combinations`` holds combination surfaces ("" for the bare form);
    ``suffixes`` holds suffix surfaces (None for no suffix).
    """

    host: str
    combinations: tuple[str, ...]
    suffixes: tuple[str | None, ...]

    def __post_init__(self) -> None:
        if len(self.host) < DEFAULT_MIN_HOST:
            raise ValueError(f"host {self.host!r} shorter than {DEFAULT_MIN_HOST} characters")
        valid_combos = {c.surface for c in enumerate_prefix_combinations()}
        for combo in self.combinations:
            if combo and combo not in valid_combos:
                raise ValueError(f"unknown prefix combination {combo!r}")
        valid_suffixes = {a.surface for a in base_suffixes()}
        for suffix in self.suffixes:
            if suffix is not None and suffix not in valid_suffixes:
                raise ValueError(f"unknown suffix {suffix!r}")


@dataclass(frozen=True)
class MetricsReport:
    """One grid cell: pipeline x vocabulary size with its corpus statistics."""

    pipeline: str
    vocab_size: int
    fertility: float
    unk_rate: float
    host_overlap: float | None
    token_count: int
    word_count: int


def full_paradigm(host: str) -> ParadigmSpec:
    """All 55 combinations (plus bare) crossed with all suffixes (plus none)."""
    combos = ("",) + tuple(c.surface for c in enumerate_prefix_combinations())
    suffixes = (None,) + tuple(a.surface for a in base_suffixes())
    return ParadigmSpec(host, combos, suffixes)


def generate_paradigm(spec: ParadigmSpec) -> list[str]:
    """Surface forms of the paradigm cross product, purely concatenative.

    The host's final letter switches to its regular form when a suffix
    attaches; spelling changes beyond that are not modelled.
    """
    forms: list[str] = []
    for combo in spec.combinations:
        for suffix in spec.suffixes:
            if suffix:
                host = spec.host[:-1] + medialize(spec.host[-1])
                forms.append(combo + host + suffix)
            else:
                forms.append(combo + spec.host)
    return forms


class _WordEncoder:
    """Per-word pipeline + encode with memoization (pipelines are word-local)."""

    def __init__(self, pipeline: str, vocab: Vocabulary, **options):
        self.pipeline = pipeline
        self.vocab = vocab
        self.options = options
        self._cache: dict[str, list[str]] = {}

    def pieces(self, word: str) -> list[str]:
        cached = self._cache.get(word)
        if cached is None:
            pretokens = pipeline_pretokenize(word, self.pipeline, **self.options)
            cached = [p for t in pretokens for p in encode_pretoken(t, self.vocab)]
            self._cache[word] = cached
        return cached


def _corpus_stats(
    corpus: Iterable[str],
    pipeline: str,
    vocab: Vocabulary,
    **options,
) -> tuple[int, int, int]:
    """(subword count, whitespace word count, UNK subword count)."""
    encoder = _WordEncoder(pipeline, vocab, **options)
    token_count = 0
    word_count = 0
    unk_count = 0
    for line in corpus:
        for word in line.split():
            word_count += 1
            pieces = encoder.pieces(word)
            token_count += len(pieces)
            unk_count += sum(1 for p in pieces if p == UNK)
    if word_count == 0:
        raise EmptyCorpus("corpus holds no words")
    return token_count, word_count, unk_count


def fertility(corpus: Iterable[str], pipeline: str, vocab: Vocabulary, **options) -> float:
    """Mean subwords per whitespace word."""
    token_count, word_count, _ = _corpus_stats(corpus, pipeline, vocab, **options)
    return token_count / word_count


def unk_rate(corpus: Iterable[str], pipeline: str, vocab: Vocabulary, **options) -> float:
    """Fraction of emitted subwords equal to [UNK]."""
    token_count, _, unk_count = _corpus_stats(corpus, pipeline, vocab, **options)
    return unk_count / token_count


def _contains_contiguous(haystack: list[str], needle: list[str]) -> bool:
    if not needle:
        return True
    n = len(needle)
    return any(haystack[i : i + n] == needle for i in range(len(haystack) - n + 1))


def host_overlap(
    spec: ParadigmSpec,
    pipeline: str,
    vocab: Vocabulary,
    *,
    forms: Sequence[str] | None = None,
    **options,
) -> float:
    """Share of paradigm forms whose pieces contain the bare host's pieces.

    Sequences are compared as contiguous subword runs, so multi-piece hosts
    are handled.  ``forms`` overrides the generated cross product when a
    paradigm lists hand-picked prefix/suffix pairings.
    """
    encoder = _WordEncoder(pipeline, vocab, **options)
    host_pieces = encoder.pieces(spec.host)
    if forms is None:
        forms = generate_paradigm(spec)
    hits = sum(1 for form in forms if _contains_contiguous(encoder.pieces(form), host_pieces))
    return hits / len(forms)


def evaluate(
    corpus: Sequence[str],
    pipeline: str,
    vocab: Vocabulary,
    vocab_size: int | None = None,
    *,
    paradigms: Sequence[ParadigmSpec] = (),
    **options,
) -> MetricsReport:
    """Metrics for one pipeline + vocabulary over a corpus."""
    token_count, word_count, unk_count = _corpus_stats(corpus, pipeline, vocab, **options)
    overlap = None
    if paradigms:
        values = [host_overlap(spec, pipeline, vocab, **options) for spec in paradigms]
        overlap = sum(values) / len(values)
    return MetricsReport(
        pipeline=pipeline,
        vocab_size=vocab_size if vocab_size is not None else len(vocab),
        fertility=token_count / word_count,
        unk_rate=unk_count / token_count,
        host_overlap=overlap,
        token_count=token_count,
        word_count=word_count,
    )


def compare(
    corpus: Sequence[str],
    pipelines: Sequence[str],
    vocab_sizes: Sequence[int],
    *,
    base_config: TrainerConfig | None = None,
    paradigms: Sequence[ParadigmSpec] = (),
    segmenter: Segmenter | None = None,
    decompose_overlapping: bool = False,
    min_host: int = DEFAULT_MIN_HOST,
    strip_diacritics: bool = False,
) -> list[MetricsReport]:
    """Evaluate the full grid: each pipeline trained and measured per size.

    Reports come out in the given pipeline order, sizes ascending within
    each pipeline; identical inputs produce identical reports.
    """
    from collections import Counter

    if base_config is None:
        base_config = TrainerConfig(vocab_size=0)
    options = dict(
        segmenter=segmenter,
        decompose_overlapping=decompose_overlapping,
        min_host=min_host,
        strip_diacritics=strip_diacritics,
    )
    reports: list[MetricsReport] = []
    for pipeline in pipelines:
        counts: Counter[str] = Counter()
        for line in corpus:
            for token in pipeline_pretokenize(line, pipeline, **options):
                counts[token.marked()] += 1
        for size in sorted(vocab_sizes):
            vocab = train_from_counts(counts, replace(base_config, vocab_size=size))
            reports.append(
                evaluate(corpus, pipeline, vocab, size, paradigms=paradigms, **options)
            )
    return reports


_TSV_COLUMNS = (
    "pipeline",
    "vocab_size",
    "fertility",
    "unk_rate",
    "host_overlap",
    "token_count",
    "word_count",
)


def reports_to_tsv(reports: Sequence[MetricsReport]) -> str:
    """One header row plus one row per grid cell."""
    lines = ["\t".join(_TSV_COLUMNS)]
    for r in reports:
        overlap = "-" if r.host_overlap is None else f"{r.host_overlap:.6f}"
        lines.append(
            f"{r.pipeline}\t{r.vocab_size}\t{r.fertility:.6f}\t{r.unk_rate:.6f}"
            f"\t{overlap}\t{r.token_count}\t{r.word_count}"
        )
    return "\n".join(lines) + "\n"


def reports_to_json(reports: Sequence[MetricsReport]) -> str:
    """Structured document: {"reports": [{column: value, ...}, ...]}."""
    payload = {
        "reports": [
            {
                "pipeline": r.pipeline,
                "vocab_size": r.vocab_size,
                "fertility": r.fertility,
                "unk_rate": r.unk_rate,
                "host_overlap": r.host_overlap,
                "token_count": r.token_count,
                "word_count": r.word_count,
            }
            for r in reports
        ]
    }
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
