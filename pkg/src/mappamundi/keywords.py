"""Utterance to keywords: tokenization, POS filtering, TFIDF ranking."""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import DegenerateInputError
from .lexicon import INFORMATIVE_POS, Lexicon

MAX_UTTERANCE_CHARS = 10_000

_ALPHA_TOKEN = re.compile(r"[0-9A-Za-z]+(?:'[A-Za-z]+)?")


class LanguageHint(Enum):
    ALPHABETIC = "ALPHABETIC"
    CJK = "CJK"
    AUTO = "AUTO"


@dataclass(frozen=True)
class Utterance:
    text: str
    language_hint: LanguageHint = LanguageHint.AUTO

    def __post_init__(self):
        if not self.text:
            raise ValueError("utterance text must be non-empty")
        if len(self.text) > MAX_UTTERANCE_CHARS:
            raise ValueError("utterance exceeds 10,000 characters")


@dataclass(frozen=True)
class Keyword:
    word: str
    score: float
    first_offset: int


def _is_cjk(ch: str) -> bool:
    cp = ord(ch)
    return (
        0x3400 <= cp <= 0x4DBF  # extension A
        or 0x4E00 <= cp <= 0x9FFF  # unified ideographs
        or 0xF900 <= cp <= 0xFAFF  # compatibility ideographs
        or 0x20000 <= cp <= 0x2EBEF  # extensions B..F
    )


def _tokenize_alpha(text: str) -> list[tuple[str, int]]:
    return [(m.group(0).lower(), m.start()) for m in _ALPHA_TOKEN.finditer(text)]


def _tokenize_cjk(text: str, lexicon: Lexicon, base_offset: int) -> list[tuple[str, int]]:
    """Greedy longest-match against lexicon words; unmatched characters pass through."""
    max_len = max((len(w) for w in lexicon.entries), default=1)
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        matched = None
        for length in range(min(max_len, len(text) - i), 1, -1):
            cand = text[i : i + length]
            if cand in lexicon:
                matched = cand
                break
        if matched is None:
            matched = ch
        out.append((matched, base_offset + i))
        i += len(matched)
    return out


def tokenize(utterance: Utterance, lexicon: Lexicon) -> list[str]:
    return [w for w, _ in tokenize_with_offsets(utterance, lexicon)]


def tokenize_with_offsets(utterance: Utterance, lexicon: Lexicon) -> list[tuple[str, int]]:
    text = utterance.text
    hint = utterance.language_hint
    if hint is LanguageHint.ALPHABETIC:
        return _tokenize_alpha(text)
    if hint is LanguageHint.CJK:
        return _tokenize_cjk(text, lexicon, 0)

    # AUTO: split into contiguous same-script runs, tokenize each per its script
    tokens: list[tuple[str, int]] = []
    run_start = 0
    run_cjk = _is_cjk(text[0])
    for i in range(1, len(text) + 1):
        boundary = i == len(text) or _is_cjk(text[i]) != run_cjk
        if boundary:
            run = text[run_start:i]
            if run_cjk:
                tokens.extend(_tokenize_cjk(run, lexicon, run_start))
            else:
                tokens.extend(
                    (w, off + run_start) for w, off in _tokenize_alpha(run)
                )
            if i < len(text):
                run_start = i
                run_cjk = _is_cjk(text[i])
    return tokens


def extract_keywords(utterance: Utterance, lexicon: Lexicon, k: int) -> list[Keyword]:
    """Rank lexicon-known informative tokens by tf x idf.

    Tokens missing from the lexicon (including numerals) and tokens tagged
    OTHER drop silently. Ties break by first occurrence, then word.
    """
    if k <= 0:
        return []
    counts: Counter[str] = Counter()
    first_offset: dict[str, int] = {}
    for word, offset in tokenize_with_offsets(utterance, lexicon):
        entry = lexicon.get(word)
        if entry is None or entry.pos not in INFORMATIVE_POS:
            continue
        counts[word] += 1
        first_offset.setdefault(word, offset)
    keywords = [
        Keyword(word, count * lexicon.entries[word].idf, first_offset[word])
        for word, count in counts.items()
    ]
    keywords.sort(key=lambda kw: (-kw.score, kw.first_offset, kw.word))
    return keywords[:k]


def compute_idf(corpus: list[str]) -> dict[str, float]:
    """Smoothed idf over tokenized documents: ln((1+N)/(1+df)) + 1."""
    if not corpus:
        raise DegenerateInputError("empty corpus")
    n_docs = len(corpus)
    df: Counter[str] = Counter()
    for doc in corpus:
        seen = {m.group(0).lower() for m in _ALPHA_TOKEN.finditer(doc)}
        df.update(seen)
    return {w: math.log((1 + n_docs) / (1 + d)) + 1.0 for w, d in df.items()}


def write_idf_table(table: dict[str, float], path: str | Path) -> None:
    """Emit `word<TAB>idf` lines for merging into a lexicon file."""
    with Path(path).open("w", encoding="utf-8") as fh:
        fh.write("#idf\n")
        for word in sorted(table):
            fh.write(f"{word}\t{table[word]:.6f}\n")
