"""Adapter for externally produced morphological segmentations.

Context-sensitive segmenters disambiguate each word into its morphemes;
this module transports their output into marked pre-token streams without
correcting it.  The exchange format is one word per line:

    surface<TAB>role:text|role:text|...

with roles ``p`` (prefix), ``h`` (host) and ``s`` (suffix), exactly one
host per record and a blank line closing each sentence.  Example:

    ושחרורה	p:ו|h:שחרור|s:ה

``fallback_segment`` provides a deterministic stand-in built on the
context-free affix splitter, so every pipeline runs without an external
tool.
"""

from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .inventory import _prefixes, _suffixes
from .pretokenize import DEFAULT_MIN_HOST, PreToken, Role, separate_prefix_suffix

_ROLE_TAGS = {"p": Role.PREFIX, "h": Role.HOST, "s": Role.SUFFIX}
_TAG_FOR_ROLE = {v: k for k, v in _ROLE_TAGS.items()}


class ParseError(ValueError):
    """Malformed segmentation input; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class SegmentationRecord:
    """One word and its ordered morphemes (prefixes, one host, suffixes)."""

    surface: str
    morphemes: tuple[tuple[Role, str], ...]

    def __post_init__(self) -> None:
        if not self.surface:
            raise ValueError("empty surface")
        hosts = 0
        for role, text in self.morphemes:
            if not text:
                raise ValueError("empty morpheme text")
            if role is Role.HOST:
                hosts += 1
                if hosts > 1:
                    raise ValueError("more than one host morpheme")
            elif role is Role.PREFIX:
                if hosts:
                    raise ValueError("prefix after the host morpheme")
            elif role is Role.SUFFIX:
                if not hosts:
                    raise ValueError("suffix before the host morpheme")
            else:
                raise ValueError(f"role {role!r} not allowed in a segmentation")
        if not hosts:
            raise ValueError("missing host morpheme")

    @property
    def concatenative(self) -> bool:
        """Whether the morpheme texts spell the surface exactly."""
        return "".join(text for _, text in self.morphemes) == self.surface


def parse_segmentation_file(stream: IO[str] | Iterable[str]) -> Iterator[list[SegmentationRecord]]:
    """Yield sentences of records; blank lines terminate sentences."""
    sentence: list[SegmentationRecord] = []
    lineno = 0
    for lineno, raw in enumerate(stream, 1):
        line = raw.rstrip("\n")
        if not line.strip():
            if sentence:
                yield sentence
                sentence = []
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError(lineno, f"expected 2 tab-separated fields, got {len(fields)}")
        surface, morph_field = fields
        morphemes: list[tuple[Role, str]] = []
        for item in morph_field.split("|"):
            tag, sep, text = item.partition(":")
            if not sep or tag not in _ROLE_TAGS:
                raise ParseError(lineno, f"bad morpheme tag in {item!r}")
            morphemes.append((_ROLE_TAGS[tag], text))
        try:
            record = SegmentationRecord(surface, tuple(morphemes))
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        sentence.append(record)
    if sentence:
        yield sentence


def serialize_record(record: SegmentationRecord) -> str:
    morphs = "|".join(f"{_TAG_FOR_ROLE[role]}:{text}" for role, text in record.morphemes)
    return f"{record.surface}\t{morphs}"


def serialize_segmentation(sentences: Iterable[list[SegmentationRecord]]) -> Iterator[str]:
    """Lines of the exchange format, inverse of ``parse_segmentation_file``."""
    for sentence in sentences:
        for record in sentence:
            yield serialize_record(record)
        yield ""


def _decomposition_map() -> dict[tuple[Role, str], tuple[str, ...]]:
    table: dict[tuple[Role, str], tuple[str, ...]] = {}
    for affix in _prefixes():
        if len(affix.decomposition) > 1:
            table[(Role.PREFIX, affix.surface)] = affix.decomposition
    for affix in _suffixes():
        if len(affix.decomposition) > 1:
            table[(Role.SUFFIX, affix.surface)] = affix.decomposition
    return table


_DECOMPOSE = _decomposition_map()


def morphseg_pretokenize(
    records: Iterable[SegmentationRecord],
    *,
    decompose_overlapping: bool = False,
    origin_start: int = 0,
) -> list[PreToken]:
    """Marked pre-tokens for a sentence of segmentation records.

    With ``decompose_overlapping`` the two-letter affixes that overlap
    shorter ones (כש, מש, נו) are first broken into their parts; by default
    morphemes are emitted exactly as segmented.
    """
    out: list[PreToken] = []
    for offset, record in enumerate(records):
        origin = origin_start + offset
        for role, text in record.morphemes:
            if decompose_overlapping:
                for part in _DECOMPOSE.get((role, text), (text,)):
                    out.append(PreToken(part, role, origin))
            else:
                out.append(PreToken(text, role, origin))
    return out


def fallback_segment(word: str, *, min_host: int = DEFAULT_MIN_HOST) -> SegmentationRecord:
    """Deterministic segmentation via the context-free affix splitter."""
    split = separate_prefix_suffix(word, min_host=min_host)
    morphemes = [(Role.PREFIX, p) for p in split.prefixes]
    morphemes.append((Role.HOST, split.host))
    morphemes.extend((Role.SUFFIX, s) for s in split.suffixes)
    return SegmentationRecord(word, tuple(morphemes))
