"""Word lexicon and the three primitive similarity measures.

The lexicon file is UTF-8, line delimited. The first line must be
``#dim=<D>``; subsequent ``#`` lines are comments. Each record is
``word<TAB>pos<TAB>idf<TAB>phonetic<TAB>embedding`` where phonetic is a
space-separated token sequence (may be empty) and embedding is D
comma-separated decimals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from .errors import DegenerateInputError, FormatError, NotFoundError


class Pos(Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    ADJ = "ADJ"
    OTHER = "OTHER"


INFORMATIVE_POS = {Pos.NOUN, Pos.VERB, Pos.ADJ}


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    pos: Pos
    idf: float
    phonetic: tuple[str, ...]
    embedding: np.ndarray

    def __post_init__(self):
        if not self.word:
            raise ValueError("word must be non-empty")
        if "\t" in self.word or "\n" in self.word:
            raise ValueError("word must not contain tab or newline")
        if self.idf < 0:
            raise ValueError("idf must be non-negative")


@dataclass
class Lexicon:
    dim: int
    entries: dict[str, LexiconEntry] = field(default_factory=dict)

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, word: str) -> LexiconEntry | None:
        return self.entries.get(word)

    def require(self, word: str) -> LexiconEntry:
        entry = self.entries.get(word)
        if entry is None:
            raise NotFoundError(f"word not in lexicon: {word!r}")
        return entry

    def words(self) -> list[str]:
        """All words in lexicographic order (the canonical iteration order)."""
        return sorted(self.entries)


def load_lexicon(path: str | Path) -> Lexicon:
    """Parse a lexicon file. Duplicate words: last record wins."""
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        header = fh.readline()
        if not header.startswith("#dim="):
            raise FormatError(f"expected '#dim=<D>' header, got {header!r}", line=1)
        try:
            dim = int(header[5:].strip())
        except ValueError:
            raise FormatError(f"bad dimension in header: {header!r}", line=1) from None
        if dim < 2:
            raise FormatError(f"dimension must be >= 2, got {dim}", line=1)

        lex = Lexicon(dim=dim)
        for lineno, raw in enumerate(fh, start=2):
            line = raw.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 5:
                raise FormatError(
                    f"expected 5 tab-separated fields, got {len(fields)}", line=lineno
                )
            word, pos_s, idf_s, phon_s, emb_s = fields
            if not word:
                raise FormatError("empty word field", line=lineno)
            try:
                pos = Pos(pos_s)
            except ValueError:
                raise FormatError(f"unknown POS tag {pos_s!r}", line=lineno) from None
            try:
                idf = float(idf_s)
            except ValueError:
                raise FormatError(f"bad idf value {idf_s!r}", line=lineno) from None
            if idf < 0:
                raise FormatError(f"negative idf {idf}", line=lineno)
            phonetic = tuple(phon_s.split()) if phon_s.strip() else ()
            try:
                embedding = np.array(
                    [float(x) for x in emb_s.split(",")], dtype=np.float64
                )
            except ValueError:
                raise FormatError(f"bad embedding field {emb_s!r}", line=lineno) from None
            if embedding.shape[0] != dim:
                raise FormatError(
                    f"embedding has {embedding.shape[0]} components, expected {dim}",
                    line=lineno,
                )
            embedding.flags.writeable = False
            lex.entries[word] = LexiconEntry(word, pos, idf, phonetic, embedding)
    return lex


def semantic_similarity(a: LexiconEntry, b: LexiconEntry) -> float:
    """Cosine similarity clamped to [0, 1]; negative alignment counts as zero."""
    na = float(np.linalg.norm(a.embedding))
    nb = float(np.linalg.norm(b.embedding))
    if na == 0.0 or nb == 0.0:
        raise DegenerateInputError("zero embedding vector")
    ua = a.embedding / na
    ub = b.embedding / nb
    if np.array_equal(ua, ub):
        return 1.0  # exact 1 for positive scalar multiples
    cos = float(np.dot(ua, ub))
    return min(1.0, max(0.0, cos))


def _grams(word: str) -> frozenset[str]:
    if len(word) == 1:
        return frozenset(word)
    return frozenset(word[i : i + 2] for i in range(len(word) - 1))


def morphological_similarity(a: str, b: str) -> float:
    """Dice coefficient over character-bigram sets (unigrams for 1-char words)."""
    if not a or not b:
        raise DegenerateInputError("empty word")
    ga, gb = _grams(a), _grams(b)
    return 2.0 * len(ga & gb) / (len(ga) + len(gb))


def _levenshtein(a, b) -> int:
    # single-row dynamic programme; sequences are short phoneme lists
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, tok_a in enumerate(a, start=1):
        cur = [i]
        for j, tok_b in enumerate(b, start=1):
            cost = 0 if tok_a == tok_b else 1
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost))
        prev = cur
    return prev[-1]


def phonological_similarity(a: LexiconEntry, b: LexiconEntry) -> float:
    """Normalized phoneme edit similarity; graphemes substitute when phonetics are absent."""
    pa = a.phonetic if a.phonetic else tuple(a.word)
    pb = b.phonetic if b.phonetic else tuple(b.word)
    if not pa and not pb:
        raise DegenerateInputError("both phoneme sequences empty")
    if not pa or not pb:
        return 0.0
    dist = _levenshtein(pa, pb)
    return 1.0 - dist / max(len(pa), len(pb))


def semantic_neighbors(word: str, lexicon: Lexicon, k: int) -> list[tuple[str, float]]:
    """Top-k lexicon words by cosine to *word*, brute force, query excluded.

    Ties break lexicographically on the word string.
    """
    query = lexicon.require(word)
    if k <= 0:
        return []
    scored = []
    for other_word in lexicon.words():
        if other_word == word:
            continue
        scored.append((other_word, semantic_similarity(query, lexicon.entries[other_word])))
    scored.sort(key=lambda it: (-it[1], it[0]))
    return scored[:k]
