"""Hebrew affix inventory: base prefixes, suffixes and valid prefix stacks.

Prefixes act as function words (ו "and", ה "the", ב "in", ...); suffixes
carry pronominal marking (ה "her/s", נו "our/s", ...), and at most one
suffix attaches to a word.  Stacked prefixes are restricted to the forms
generated by the slot grammar

    [conjunction ו] [subordinator ש|כש|מש] [preposition מ|ב|ל|כ] [article ה]

with at least one slot filled and the article absorbed (unwritten) after
the prepositions ב, ל and כ.  The grammar yields exactly 55 surface forms,
shipped as ``data/prefix_combinations.tsv`` so the table can be reviewed
or amended without code changes.

The two-letter affixes whose spelling overlaps shorter ones (מש, כש, נו)
carry a decomposition into single-letter parts; emitting the parts keeps
subwords shared between words that admit either reading.

Everything here is immutable after load and safe for concurrent readers.
"""

import enum
from dataclasses import dataclass
from functools import cache
from importlib import resources

from .letters import medialize


class InventoryError(ValueError):
    """Raised when the bundled combination table violates its invariants."""


class AffixKind(str, enum.Enum):
    PREFIX = "prefix"
    SUFFIX = "suffix"


@dataclass(frozen=True)
class Affix:
    """A base prefix or suffix with its gloss and decomposition rule."""

    surface: str
    kind: AffixKind
    gloss: str
    decomposition: tuple[str, ...]

    def __post_init__(self) -> None:
        joined = "".join(
            medialize(part) if i < len(self.decomposition) - 1 else part
            for i, part in enumerate(self.decomposition)
        )
        if joined != self.surface:
            raise InventoryError(
                f"decomposition {self.decomposition!r} does not spell {self.surface!r}"
            )


# Base tables. Only מש, כש and נו break into two morphemes; everything else
# is emitted as-is.
_PREFIX_ROWS = (
    ("מש", "since", ("מ", "ש")),
    ("כש", "when", ("כ", "ש")),
    ("ב", "in", ("ב",)),
    ("ל", "to", ("ל",)),
    ("כ", "as", ("כ",)),
    ("ו", "and", ("ו",)),
    ("ה", "the", ("ה",)),
    ("ש", "that", ("ש",)),
    ("מ", "from", ("מ",)),
)
_SUFFIX_ROWS = (
    ("י", "my/mine", ("י",)),
    ("ך", "your/s", ("ך",)),
    ("ה", "her/s", ("ה",)),
    ("ו", "him/his", ("ו",)),
    ("נו", "our/s", ("נ", "ו")),
    ("כן", "your/s (f.pl.)", ("כן",)),
    ("כם", "your/s (m.pl.)", ("כם",)),
    ("ן", "their/s (f.)", ("ן",)),
    ("הן", "their/s (f.)", ("הן",)),
    ("ם", "their/s (m.)", ("ם",)),
    ("הם", "their/s (m.)", ("הם",)),
)


@cache
def _prefixes() -> tuple[Affix, ...]:
    return tuple(
        Affix(s, AffixKind.PREFIX, g, d) for s, g, d in _PREFIX_ROWS
    )


@cache
def _suffixes() -> tuple[Affix, ...]:
    return tuple(
        Affix(s, AffixKind.SUFFIX, g, d) for s, g, d in _SUFFIX_ROWS
    )


def base_prefixes() -> list[Affix]:
    """The 9 base prefixes, in a stable order."""
    return list(_prefixes())


def base_suffixes() -> list[Affix]:
    """The 11 base suffixes, in a stable order."""
    return list(_suffixes())


# Slot values of the combination grammar, in surface order.
CONJUNCTIONS = ("ו",)
SUBORDINATORS = ("ש", "כש", "מש")
PREPOSITIONS = ("מ", "ב", "ל", "כ")
ARTICLES = ("ה",)

#: Prepositions after which the definite article is absorbed in writing.
ABSORBING_PREPOSITIONS = frozenset({"ב", "ל", "כ"})

_SLOT_NAMES = ("conj", "subord", "prep", "art")
_SLOT_VALUES = {
    "conj": CONJUNCTIONS,
    "subord": SUBORDINATORS,
    "prep": PREPOSITIONS,
    "art": ARTICLES,
}
_DECOMPOSED = {"כש": ("כ", "ש"), "מש": ("מ", "ש")}


@dataclass(frozen=True)
class PrefixCombination:
    """An ordered, valid stack of base prefixes and its surface spelling."""

    surface: str
    conjunction: str | None
    subordinator: str | None
    preposition: str | None
    article: str | None
    emitted_morphemes: tuple[str, ...]

    def filled_slots(self) -> tuple[tuple[str, str], ...]:
        pairs = zip(
            _SLOT_NAMES,
            (self.conjunction, self.subordinator, self.preposition, self.article),
        )
        return tuple((name, value) for name, value in pairs if value is not None)


def _check_combination(combo: PrefixCombination) -> str | None:
    """Return a problem description, or None when the row is well-formed."""
    slots = combo.filled_slots()
    if not slots:
        return "no slot filled"
    for name, value in slots:
        if value not in _SLOT_VALUES[name]:
            return f"invalid {name} value {value!r}"
    if combo.article and combo.preposition in ABSORBING_PREPOSITIONS:
        return f"article after absorbing preposition {combo.preposition!r}"
    if combo.surface != "".join(v for _, v in slots):
        return f"surface {combo.surface!r} does not spell its slots"
    emitted: list[str] = []
    for _, value in slots:
        emitted.extend(_DECOMPOSED.get(value, (value,)))
    if combo.emitted_morphemes != tuple(emitted):
        return f"emitted morphemes {combo.emitted_morphemes!r} != {tuple(emitted)!r}"
    return None


@cache
def _combinations() -> tuple[PrefixCombination, ...]:
    path = resources.files(__package__).joinpath("data/prefix_combinations.tsv")
    combos: list[PrefixCombination] = []
    seen: set[str] = set()
    with path.open("r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise InventoryError(
                    f"prefix_combinations.tsv:{lineno}: expected 3 columns, got {len(fields)}"
                )
            surface, slot_field, morph_field = fields
            slots: dict[str, str | None] = dict.fromkeys(_SLOT_NAMES)
            for item in slot_field.split():
                name, sep, value = item.partition(":")
                if not sep or name not in slots or slots[name] is not None or not value:
                    raise InventoryError(
                        f"prefix_combinations.tsv:{lineno}: bad slot field {item!r}"
                    )
                slots[name] = value
            combo = PrefixCombination(
                surface=surface,
                conjunction=slots["conj"],
                subordinator=slots["subord"],
                preposition=slots["prep"],
                article=slots["art"],
                emitted_morphemes=tuple(morph_field.split("|")),
            )
            problem = _check_combination(combo)
            if problem:
                raise InventoryError(f"prefix_combinations.tsv:{lineno}: {problem}")
            if surface in seen:
                raise InventoryError(
                    f"prefix_combinations.tsv:{lineno}: duplicate surface {surface!r}"
                )
            seen.add(surface)
            combos.append(combo)
    return tuple(sorted(combos, key=lambda c: c.surface))


def enumerate_prefix_combinations() -> tuple[PrefixCombination, ...]:
    """All valid prefix combinations, sorted by surface for stable iteration."""
    return _combinations()


@cache
def _combination_index() -> dict[str, PrefixCombination]:
    return {c.surface: c for c in _combinations()}


@cache
def _suffix_index() -> dict[str, Affix]:
    return {a.surface: a for a in _suffixes()}


@cache
def _max_combination_length() -> int:
    return max(len(c.surface) for c in _combinations())


@cache
def _max_suffix_length() -> int:
    return max(len(a.surface) for a in _suffixes())


def longest_prefix_match(word: str, min_host: int = 2) -> PrefixCombination | None:
    """Longest combination that starts `word` and leaves >= min_host characters.

    Among the candidates there is at most one per length, so the longest
    match is unique.  Returns None when nothing qualifies.
    """
    if not word:
        raise ValueError("word must be non-empty")
    if min_host < 1:
        raise ValueError("min_host must be >= 1")
    index = _combination_index()
    for length in range(min(_max_combination_length(), len(word) - min_host), 0, -1):
        combo = index.get(word[:length])
        if combo is not None:
            return combo
    return None


def longest_suffix_match(word: str, min_host: int = 2) -> Affix | None:
    """Longest suffix that ends `word` and leaves >= min_host characters."""
    if not word:
        raise ValueError("word must be non-empty")
    if min_host < 1:
        raise ValueError("min_host must be >= 1")
    index = _suffix_index()
    for length in range(min(_max_suffix_length(), len(word) - min_host), 0, -1):
        affix = index.get(word[len(word) - length :])
        if affix is not None:
            return affix
    return None
