"""Candidate generation: KG priority, semantic, morph/phon, and Dadaist channels."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

from .errors import DegenerateInputError, NotFoundError
from .kg import KnowledgeGraph, covered, kg_neighbors
from .lexicon import (
    Lexicon,
    morphological_similarity,
    phonological_similarity,
    semantic_neighbors,
    semantic_similarity,
)
from .rng import chance_key

KG_SIMILARITY_FLOOR = 0.6


class Channel(Enum):
    KG = "KG"
    SEMANTIC = "SEMANTIC"
    MORPH = "MORPH"
    PHON = "PHON"
    DADA_PUN = "DADA_PUN"
    DADA_CHANCE = "DADA_CHANCE"


# fill order is fixed: artist's own associations first, chance last
CHANNEL_ORDER = (
    Channel.KG,
    Channel.SEMANTIC,
    Channel.MORPH,
    Channel.PHON,
    Channel.DADA_PUN,
    Channel.DADA_CHANCE,
)

DEFAULT_QUOTAS = {
    Channel.KG: 3,
    Channel.SEMANTIC: 3,
    Channel.MORPH: 1,
    Channel.PHON: 1,
    Channel.DADA_PUN: 1,
    Channel.DADA_CHANCE: 1,
}


@dataclass(frozen=True)
class ExpansionCandidate:
    word: str
    channel: Channel
    relation: str
    similarity: float

    def __post_init__(self):
        if not 0.0 <= self.similarity <= 1.0:
            raise ValueError(f"similarity out of range: {self.similarity}")


@dataclass(frozen=True)
class ExpansionConfig:
    quotas: dict[Channel, int] = field(default_factory=lambda: dict(DEFAULT_QUOTAS))
    tau_low: float = 0.2
    tau_high: float = 0.5
    seed: int = 0
    keyword_limit: int = 3  # keywords taken per utterance

    def __post_init__(self):
        if not 0.0 <= self.tau_low < self.tau_high <= 1.0:
            raise ValueError("need 0 <= tau_low < tau_high <= 1")
        if any(q < 0 for q in self.quotas.values()):
            raise ValueError("quotas must be non-negative")
        if sum(self.quotas.values()) < 1:
            raise ValueError("at least one channel quota must be positive")

    def quota(self, channel: Channel) -> int:
        return self.quotas.get(channel, 0)

    def with_updates(self, **changes) -> "ExpansionConfig":
        if "quotas" in changes:
            merged = dict(self.quotas)
            merged.update(changes["quotas"])
            changes["quotas"] = merged
        return replace(self, **changes)


def _semantic_to_keyword(keyword: str, word: str, lexicon: Lexicon) -> float:
    a, b = lexicon.get(keyword), lexicon.get(word)
    if a is None or b is None:
        return 0.0
    try:
        return semantic_similarity(a, b)
    except DegenerateInputError:
        return 0.0


def dada_pun_candidates(
    keyword: str, lexicon: Lexicon, config: ExpansionConfig
) -> list[ExpansionCandidate]:
    """Sound-alike or look-alike words from unrelated meaning-space.

    Qualifies iff cosine < tau_low and (phon >= tau_high or morph >= tau_high);
    reported similarity is max(phon, morph).
    """
    entry = lexicon.require(keyword)
    out = []
    for word in lexicon.words():
        if word == keyword:
            continue
        other = lexicon.entries[word]
        try:
            sem = semantic_similarity(entry, other)
        except DegenerateInputError:
            sem = 0.0
        if sem >= config.tau_low:
            continue
        phon = phonological_similarity(entry, other)
        morph = morphological_similarity(keyword, word)
        if phon >= config.tau_high or morph >= config.tau_high:
            out.append(
                ExpansionCandidate(word, Channel.DADA_PUN, "dada_pun", max(phon, morph))
            )
    out.sort(key=lambda c: (-c.similarity, c.word))
    return out


def dada_chance_candidate(
    keyword: str, lexicon: Lexicon, seed: int, draw_index: int
) -> ExpansionCandidate:
    """Seeded uniform pick over lexicon words other than the keyword."""
    if len(lexicon) < 2:
        raise DegenerateInputError("lexicon too small for a chance draw")
    candidates = [w for w in lexicon.words() if w != keyword]
    idx = chance_key(seed, keyword, draw_index) % len(candidates)
    word = candidates[idx]
    return ExpansionCandidate(
        word,
        Channel.DADA_CHANCE,
        "chance",
        _semantic_to_keyword(keyword, word, lexicon),
    )


def _ranked_by(keyword: str, lexicon: Lexicon, score_fn, tau_high: float):
    entry = lexicon.entries[keyword]
    scored = []
    for word in lexicon.words():
        if word == keyword:
            continue
        s = score_fn(entry, lexicon.entries[word])
        if s >= tau_high:
            scored.append((word, s))
    scored.sort(key=lambda it: (-it[1], it[0]))
    return scored


def expand(
    keyword: str,
    lexicon: Lexicon,
    kg: KnowledgeGraph,
    config: ExpansionConfig,
) -> list[ExpansionCandidate]:
    """Fill channels in priority order; a word already emitted earlier is skipped."""
    in_lexicon = keyword in lexicon
    if not in_lexicon and not covered(keyword, kg):
        raise NotFoundError(f"keyword unknown to lexicon and KG: {keyword!r}")

    used = {keyword}
    result: list[ExpansionCandidate] = []

    def take(channel: Channel, candidates) -> None:
        quota = config.quota(channel)
        for cand in candidates:
            if quota <= 0:
                break
            if cand.word in used:
                continue
            used.add(cand.word)
            result.append(cand)
            quota -= 1

    # KG: the artist's own associations outrank every computed channel
    kg_cands = []
    for neighbor, relation in kg_neighbors(keyword, kg):
        if neighbor in lexicon and in_lexicon:
            sim = max(KG_SIMILARITY_FLOOR, _semantic_to_keyword(keyword, neighbor, lexicon))
        else:
            sim = 1.0
        kg_cands.append(ExpansionCandidate(neighbor, Channel.KG, relation, sim))
    take(Channel.KG, kg_cands)

    if in_lexicon:
        take(
            Channel.SEMANTIC,
            (
                ExpansionCandidate(w, Channel.SEMANTIC, "semantic", s)
                for w, s in semantic_neighbors(keyword, lexicon, len(lexicon))
            ),
        )
        take(
            Channel.MORPH,
            (
                ExpansionCandidate(w, Channel.MORPH, "morph", s)
                for w, s in _ranked_by(
                    keyword,
                    lexicon,
                    lambda a, b: morphological_similarity(a.word, b.word),
                    config.tau_high,
                )
            ),
        )
        take(
            Channel.PHON,
            (
                ExpansionCandidate(w, Channel.PHON, "phon", s)
                for w, s in _ranked_by(
                    keyword, lexicon, phonological_similarity, config.tau_high
                )
            ),
        )
        take(Channel.DADA_PUN, dada_pun_candidates(keyword, lexicon, config))

        quota = config.quota(Channel.DADA_CHANCE) if len(lexicon) >= 2 else 0
        attempts = 0
        max_attempts = 64 + 16 * quota
        while quota > 0 and attempts < max_attempts and len(used) <= len(lexicon):
            cand = dada_chance_candidate(keyword, lexicon, config.seed, attempts)
            attempts += 1
            if cand.word in used:
                continue
            used.add(cand.word)
            result.append(cand)
            quota -= 1

    return result
