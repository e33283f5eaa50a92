"""Hebrew script helpers: letter ranges, final forms, points."""

import unicodedata

ALEF = "א"
TAV = "ת"

#: Letters with a distinct word-final glyph, mapped to their regular form.
FINAL_TO_MEDIAL = {"ך": "כ", "ם": "מ", "ן": "נ", "ף": "פ", "ץ": "צ"}
MEDIAL_TO_FINAL = {v: k for k, v in FINAL_TO_MEDIAL.items()}

# Points and related marks, U+05B0..U+05C7; optionally stripped, never modelled.
POINT_MIN = "ְ"
POINT_MAX = "ׇ"


def is_hebrew_letter(ch: str) -> bool:
    return ALEF <= ch <= TAV


def is_hebrew_word(text: str) -> bool:
    """True when the string is non-empty and made of Hebrew letters only."""
    return bool(text) and all(is_hebrew_letter(c) for c in text)


def medialize(ch: str) -> str:
    """Regular (non-final) form of a letter; other characters pass through."""
    return FINAL_TO_MEDIAL.get(ch, ch)


def finalize(ch: str) -> str:
    """Word-final form of a letter; other characters pass through."""
    return MEDIAL_TO_FINAL.get(ch, ch)


def strip_points(text: str) -> str:
    return "".join(c for c in text if not POINT_MIN <= c <= POINT_MAX)


def normalize(text: str, *, strip_diacritics: bool = False) -> str:
    """NFC-normalize; optionally drop Hebrew points (U+05B0..U+05C7)."""
    text = unicodedata.normalize("NFC", text)
    if strip_diacritics:
        text = strip_points(text)
    return text
