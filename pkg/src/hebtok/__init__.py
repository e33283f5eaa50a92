"""hebtok: morphology-aware subword tokenization toolkit for Hebrew.

Three pre-tokenization pipelines feed a from-scratch WordPiece trainer and
encoder: a plain whitespace/punctuation baseline, deterministic
prefix-suffix separation, and segmenter-driven morphological segmentation.
Corpus metrics (fertility, UNK rate, host overlap) compare the pipelines
across vocabulary sizes.
"""

__version__ = "0.1.0"

from .analysis import (
    EmptyCorpus,
    MetricsReport,
    ParadigmSpec,
    compare,
    fertility,
    full_paradigm,
    generate_paradigm,
    host_overlap,
    reports_to_json,
    reports_to_tsv,
    unk_rate,
)
from .inventory import (
    Affix,
    AffixKind,
    PrefixCombination,
    base_prefixes,
    base_suffixes,
    enumerate_prefix_combinations,
    longest_prefix_match,
    longest_suffix_match,
)
from .letters import normalize
from .pipelines import PIPELINES, pipeline_pretokenize
from .pretokenize import (
    MalformedStream,
    MorphSplit,
    PreToken,
    Role,
    baseline_pretokenize,
    detokenize,
    mark,
    marked_line,
    prefsuf_pretokenize,
    separate_prefix_suffix,
)
from .segmentation import (
    ParseError,
    SegmentationRecord,
    fallback_segment,
    morphseg_pretokenize,
    parse_segmentation_file,
    serialize_segmentation,
)
from .wordpiece import (
    ConfigError,
    DuplicateToken,
    TrainerConfig,
    Vocabulary,
    decode,
    encode_pretoken,
    encode_sentence,
    seeded_affix_atoms,
    train,
    train_from_counts,
)
from .wordpiece import load as load_vocabulary
from .wordpiece import save as save_vocabulary

__all__ = [
    "__version__",
    "Affix",
    "AffixKind",
    "ConfigError",
    "DuplicateToken",
    "EmptyCorpus",
    "MalformedStream",
    "MetricsReport",
    "MorphSplit",
    "ParadigmSpec",
    "ParseError",
    "PIPELINES",
    "PreToken",
    "PrefixCombination",
    "Role",
    "SegmentationRecord",
    "TrainerConfig",
    "Vocabulary",
    "base_prefixes",
    "base_suffixes",
    "baseline_pretokenize",
    "compare",
    "decode",
    "detokenize",
    "encode_pretoken",
    "encode_sentence",
    "enumerate_prefix_combinations",
    "fallback_segment",
    "fertility",
    "full_paradigm",
    "generate_paradigm",
    "host_overlap",
    "load_vocabulary",
    "longest_prefix_match",
    "longest_suffix_match",
    "mark",
    "marked_line",
    "morphseg_pretokenize",
    "normalize",
    "parse_segmentation_file",
    "pipeline_pretokenize",
    "prefsuf_pretokenize",
    "reports_to_json",
    "reports_to_tsv",
    "save_vocabulary",
    "seeded_affix_atoms",
    "separate_prefix_suffix",
    "serialize_segmentation",
    "train",
    "train_from_counts",
    "unk_rate",
]
