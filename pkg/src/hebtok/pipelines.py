"""Dispatch between the three pre-tokenization pipelines.

``baseline`` splits words and punctuation only; ``prefsuf`` adds
deterministic affix separation; ``morphseg`` consumes a segmenter's output
per word (the deterministic fallback segmenter unless one is supplied).
"""

from typing import Callable

from .pretokenize import (
    DEFAULT_MIN_HOST,
    PreToken,
    Role,
    baseline_pretokenize,
    prefsuf_pretokenize,
)
from .segmentation import SegmentationRecord, fallback_segment, morphseg_pretokenize

PIPELINES = ("baseline", "prefsuf", "morphseg")

Segmenter = Callable[[str], SegmentationRecord]


def pipeline_pretokenize(
    text: str,
    pipeline: str,
    *,
    segmenter: Segmenter | None = None,
    decompose_overlapping: bool = False,
    min_host: int = DEFAULT_MIN_HOST,
    strip_diacritics: bool = False,
) -> list[PreToken]:
    """Pre-tokenize one sentence under the named pipeline."""
    if pipeline == "baseline":
        return baseline_pretokenize(text, strip_diacritics=strip_diacritics)
    if pipeline == "prefsuf":
        return prefsuf_pretokenize(text, min_host=min_host, strip_diacritics=strip_diacritics)
    if pipeline == "morphseg":
        if segmenter is None:
            segmenter = lambda word: fallback_segment(word, min_host=min_host)  # noqa: E731
        out: list[PreToken] = []
        for token in baseline_pretokenize(text, strip_diacritics=strip_diacritics):
            if token.role is Role.WORD:
                out.extend(
                    morphseg_pretokenize(
                        [segmenter(token.text)],
                        decompose_overlapping=decompose_overlapping,
                        origin_start=token.origin,
                    )
                )
            else:
                out.append(token)
        return out
    raise ValueError(f"unknown pipeline {pipeline!r}; expected one of {PIPELINES}")
