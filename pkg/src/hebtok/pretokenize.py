"""Sentence pre-tokenization and affix separation.

Two pre-tokenizers are provided:

* ``baseline_pretokenize`` splits on whitespace and isolates punctuation,
  the usual preparation for a WordPiece vocabulary.
* ``prefsuf_pretokenize`` additionally strips potential affixes from every
  Hebrew word, deterministically and without context: the longest valid
  prefix combination first, then the longest suffix, each required to
  leave a host of at least ``min_host`` characters.

Separated morphemes are marked so that a suffix can never be mistaken for
the next word's prefix once spaces are gone: a prefix מ is serialized as
``מ+`` and a suffix ה as ``+ה``.  ``detokenize`` reverses the whole
process exactly.

All functions are pure and the shared inventory is immutable, so
concurrent use needs no locking; per-sentence outputs are self-contained.
"""

import enum
import unicodedata
from dataclasses import dataclass

from . import inventory
from .letters import is_hebrew_word, normalize

#: Affix marker used in serialized pre-tokens (part of what WordPiece sees).
MARKER = "+"

DEFAULT_MIN_HOST = 2


class MalformedStream(ValueError):
    """A pre-token stream violates prefix/host/suffix ordering."""


class Role(str, enum.Enum):
    PREFIX = "prefix"
    HOST = "host"
    SUFFIX = "suffix"
    WORD = "word"
    PUNCT = "punct"


@dataclass(frozen=True)
class PreToken:
    """One whitespace-free unit of a pre-tokenized sentence.

    ``origin`` is the index of the whitespace-delimited unit the token came
    from, which lets ``detokenize`` restore spacing exactly.
    """

    text: str
    role: Role
    origin: int

    def marked(self) -> str:
        """Serialized surface: prefixes carry a trailing +, suffixes a leading +."""
        if self.role is Role.PREFIX:
            return self.text + MARKER
        if self.role is Role.SUFFIX:
            return MARKER + self.text
        return self.text


@dataclass(frozen=True)
class MorphSplit:
    """A word decomposed into prefix morphemes, host and suffix morphemes.

    Morphemes are stored post-decomposition (כש as כ,ש; נו as נ,ו), so for
    concatenative splits ``"".join(prefixes) + host + "".join(suffixes)``
    spells the original word.
    """

    prefixes: tuple[str, ...]
    host: str
    suffixes: tuple[str, ...]
    concatenative: bool = True

    @property
    def suffix(self) -> str | None:
        """Suffix morphemes joined back to written form; None when absent."""
        return "".join(self.suffixes) or None


def _is_punct(ch: str) -> bool:
    # BERT-style: all non-alphanumeric ASCII plus Unicode P* categories.
    cp = ord(ch)
    if 33 <= cp <= 47 or 58 <= cp <= 64 or 91 <= cp <= 96 or 123 <= cp <= 126:
        return True
    return unicodedata.category(ch).startswith("P")


def baseline_pretokenize(text: str, *, strip_diacritics: bool = False) -> list[PreToken]:
    """Whitespace split with per-character punctuation isolation."""
    tokens: list[PreToken] = []
    for origin, unit in enumerate(normalize(text, strip_diacritics=strip_diacritics).split()):
        run: list[str] = []
        for ch in unit:
            if _is_punct(ch):
                if run:
                    tokens.append(PreToken("".join(run), Role.WORD, origin))
                    run.clear()
                tokens.append(PreToken(ch, Role.PUNCT, origin))
            else:
                run.append(ch)
        if run:
            tokens.append(PreToken("".join(run), Role.WORD, origin))
    return tokens


def separate_prefix_suffix(word: str, *, min_host: int = DEFAULT_MIN_HOST) -> MorphSplit:
    """Single-pass affix strip: longest prefix combination, then longest suffix.

    Never recursive; each strip must leave at least ``min_host`` characters.
    Non-Hebrew or mixed-script words pass through as host-only splits, so
    this is a total function.
    """
    if not word:
        raise ValueError("word must be non-empty")
    if len(word) <= min_host or not is_hebrew_word(word):
        return MorphSplit((), word, ())
    combo = inventory.longest_prefix_match(word, min_host)
    prefixes: tuple[str, ...] = ()
    rest = word
    if combo is not None:
        prefixes = combo.emitted_morphemes
        rest = word[len(combo.surface):]
    affix = inventory.longest_suffix_match(rest, min_host)
    if affix is not None:
        return MorphSplit(prefixes, rest[: len(rest) - len(affix.surface)], affix.decomposition)
    return MorphSplit(prefixes, rest, ())


def mark(split: MorphSplit, *, origin: int = 0) -> list[PreToken]:
    """Marked pre-tokens for a split: p -> `p+`, host unmarked, s -> `+s`."""
    tokens = [PreToken(p, Role.PREFIX, origin) for p in split.prefixes]
    tokens.append(PreToken(split.host, Role.HOST, origin))
    tokens.extend(PreToken(s, Role.SUFFIX, origin) for s in split.suffixes)
    return tokens


def prefsuf_pretokenize(
    text: str,
    *,
    min_host: int = DEFAULT_MIN_HOST,
    strip_diacritics: bool = False,
) -> list[PreToken]:
    """Baseline pre-tokenization followed by affix separation of every word."""
    out: list[PreToken] = []
    for token in baseline_pretokenize(text, strip_diacritics=strip_diacritics):
        if token.role is Role.WORD:
            split = separate_prefix_suffix(token.text, min_host=min_host)
            out.extend(mark(split, origin=token.origin))
        else:
            out.append(token)
    return out


def detokenize(tokens: list[PreToken]) -> str:
    """Rebuild the sentence from a pre-token stream produced by this module.

    Inverse of both pre-tokenizers up to whitespace normalization: morpheme
    runs are rejoined per origin and words separated by single spaces.
    """
    words: list[str] = []
    parts: list[str] = []
    current_origin: int | None = None
    seen_core = False
    for token in tokens:
        if token.origin != current_origin:
            if parts:
                words.append("".join(parts))
                parts = []
            current_origin = token.origin
            seen_core = False
        if token.role is Role.SUFFIX and not seen_core:
            raise MalformedStream(f"suffix {token.text!r} before any host in its word")
        if token.role is Role.PREFIX and seen_core:
            raise MalformedStream(f"prefix {token.text!r} after the host of its word")
        if token.role is not Role.PREFIX and token.role is not Role.SUFFIX:
            seen_core = True
        parts.append(token.text)
    if parts:
        words.append("".join(parts))
    return " ".join(words)


def marked_line(tokens: list[PreToken]) -> str:
    """Space-separated serialized pre-tokens (the streaming output format)."""
    return " ".join(t.marked() for t in tokens)
