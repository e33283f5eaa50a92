"""WordPiece vocabulary training and greedy encoding over pre-token streams.

Training counts pre-token surfaces (marked affixes included), initializes
the alphabet (every character both bare and with the continuation marker),
injects the marked affix atoms from the inventory, and then iteratively
merges the adjacent symbol pair with the highest likelihood score
``count(ab) / (count(a) * count(b))`` until the vocabulary budget or the
pair-frequency floor is reached.  Ties go to the lexicographically smaller
merged string.  Training is deterministic: identical stream and config
give a byte-identical vocabulary file.

Seeding the affix atoms is a deliberate strengthening over pure frequency
training: the marked affixes form a small closed class, and guaranteeing
their presence makes affix pre-tokens always encode as single pieces.
Marked affix pre-tokens are likewise treated as atomic during training
(they contribute characters to the alphabet but no merges).

The hot loops live in a compiled kernel when available (see hebtok._kernel);
encoding keeps BERT's behavior of returning ``[UNK]`` for pre-tokens longer
than 100 characters or containing unknown characters.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Iterable

from . import _kernel
from .inventory import base_prefixes, base_suffixes
from .pipelines import Segmenter, pipeline_pretokenize
from .pretokenize import DEFAULT_MIN_HOST, MARKER, PreToken

SPECIAL_TOKENS = ("[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]")
UNK = "[UNK]"

#: Pre-tokens longer than this encode to [UNK] (standard BERT behavior).
ENCODE_MAX_CHARS = 100


class ConfigError(ValueError):
    """Trainer configuration is infeasible for the given stream."""


class DuplicateToken(ValueError):
    """A vocabulary holds (or a file declares) the same token twice."""


@dataclass(frozen=True)
class TrainerConfig:
    vocab_size: int
    min_pair_frequency: int = 2
    max_word_length: int = 100
    seed: int = 0  # reserved for corpus subsampling; training itself is deterministic
    continuation_marker: str = "##"


@dataclass(frozen=True)
class Vocabulary:
    """An ordered token list (index = id) plus encoding metadata."""

    tokens: tuple[str, ...]
    continuation_marker: str = "##"
    special_tokens: tuple[str, ...] = SPECIAL_TOKENS
    seeded_affixes: frozenset[str] = frozenset()
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index: dict[str, int] = {}
        for i, token in enumerate(self.tokens):
            if token in index:
                raise DuplicateToken(f"token {token!r} appears at ids {index[token]} and {i}")
            index[token] = i
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: str) -> bool:
        return token in self._index

    def token_id(self, token: str) -> int | None:
        return self._index.get(token)

    @property
    def unk_id(self) -> int | None:
        return self._index.get(UNK)


def seeded_affix_atoms() -> tuple[str, ...]:
    """Marked affix atoms guaranteed present in every trained vocabulary."""
    atoms: list[str] = []
    seen: set[str] = set()

    def add(atom: str) -> None:
        if atom not in seen:
            seen.add(atom)
            atoms.append(atom)

    for affix in base_prefixes():
        add(affix.surface + MARKER)
    for affix in base_prefixes():
        for part in affix.decomposition:
            add(part + MARKER)
    for affix in base_suffixes():
        add(MARKER + affix.surface)
    for affix in base_suffixes():
        for part in affix.decomposition:
            add(MARKER + part)
    return tuple(atoms)


def train(pretokens: Iterable[PreToken | str], config: TrainerConfig) -> Vocabulary:
    """Train a vocabulary from a stream of pre-tokens (or marked strings)."""
    counts: Counter[str] = Counter()
    for token in pretokens:
        counts[token.marked() if isinstance(token, PreToken) else token] += 1
    if not counts:
        raise ValueError("empty pre-token stream")
    return train_from_counts(counts, config)


def train_from_counts(counts: dict[str, int], config: TrainerConfig) -> Vocabulary:
    """Train from pre-counted pre-token surfaces."""
    marker = config.continuation_marker
    atoms = seeded_affix_atoms()
    atom_set = set(atoms)

    alphabet: set[str] = set()
    trainable: dict[str, int] = {}
    for word, freq in counts.items():
        if not word or len(word) > config.max_word_length or freq <= 0:
            continue
        alphabet.update(word)
        if word not in atom_set and len(word) >= 2:
            trainable[word] = freq

    tokens: list[str] = list(SPECIAL_TOKENS)
    for ch in sorted(alphabet):
        tokens.append(ch)
    for ch in sorted(alphabet):
        tokens.append(marker + ch)
    present = set(tokens)
    for atom in atoms:
        if atom not in present:
            tokens.append(atom)
            present.add(atom)

    if config.vocab_size <= len(tokens):
        raise ConfigError(
            f"vocab_size {config.vocab_size} must exceed the "
            f"{len(tokens)} specials + alphabet + seeded affixes"
        )

    words = sorted(trainable)
    merges = _kernel.train_merges(
        words,
        [trainable[w] for w in words],
        config.vocab_size - len(tokens),
        config.min_pair_frequency,
        marker,
        present,
    )
    tokens.extend(merges)
    return Vocabulary(tuple(tokens), marker, SPECIAL_TOKENS, frozenset(atoms))


def encode_pretoken(token: PreToken | str, vocab: Vocabulary) -> list[str]:
    """Greedy longest-match pieces for one pre-token; [UNK] when impossible."""
    text = token.marked() if isinstance(token, PreToken) else token
    return _kernel.encode_word(text, vocab._index, vocab.continuation_marker, UNK, ENCODE_MAX_CHARS)


def encode_sentence(
    text: str,
    pipeline: str,
    vocab: Vocabulary,
    *,
    segmenter: Segmenter | None = None,
    decompose_overlapping: bool = False,
    min_host: int = DEFAULT_MIN_HOST,
    strip_diacritics: bool = False,
) -> list[str]:
    """Pre-tokenize a sentence under the named pipeline and encode each unit."""
    pretokens = pipeline_pretokenize(
        text,
        pipeline,
        segmenter=segmenter,
        decompose_overlapping=decompose_overlapping,
        min_host=min_host,
        strip_diacritics=strip_diacritics,
    )
    pieces: list[str] = []
    for token in pretokens:
        pieces.extend(encode_pretoken(token, vocab))
    return pieces


def decode(subwords: Iterable[str], *, continuation_marker: str = "##") -> str:
    """Strip continuation markers and rejoin pieces into words."""
    words: list[str] = []
    for piece in subwords:
        if piece.startswith(continuation_marker) and words:
            words[-1] += piece[len(continuation_marker):]
        else:
            words.append(piece)
    return " ".join(words)


def save(vocab: Vocabulary, path_or_file: str | IO[str]) -> None:
    """Write one token per line (line index = id), UTF-8, LF, no BOM."""
    if isinstance(path_or_file, str):
        with open(path_or_file, "w", encoding="utf-8", newline="\n") as fh:
            save(vocab, fh)
        return
    for token in vocab.tokens:
        path_or_file.write(token + "\n")


def load(path_or_file: str | IO[str], *, continuation_marker: str = "##") -> Vocabulary:
    """Read a vocabulary file written by ``save``; raises DuplicateToken."""
    if isinstance(path_or_file, str):
        with open(path_or_file, "r", encoding="utf-8") as fh:
            return load(fh, continuation_marker=continuation_marker)
    tokens = [line.rstrip("\n") for line in path_or_file]
    while tokens and tokens[-1] == "":
        tokens.pop()
    if any(not t for t in tokens):
        raise ValueError("vocabulary file contains an empty token line")
    atoms = set(seeded_affix_atoms())
    seeded = frozenset(t for t in tokens if t in atoms)
    return Vocabulary(tuple(tokens), continuation_marker, SPECIAL_TOKENS, seeded)
