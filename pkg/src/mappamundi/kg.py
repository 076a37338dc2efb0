"""Concept-relation triples distilled from the artist's mind maps.

File format: UTF-8 lines ``head<TAB>relation<TAB>tail``; ``#`` comments
allowed. Edges are undirected for retrieval; the relation label is kept.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import FormatError


@dataclass(frozen=True)
class KgTriple:
    head: str
    relation: str
    tail: str

    def __post_init__(self):
        for value in (self.head, self.relation, self.tail):
            if not value or "\t" in value or "\n" in value:
                raise ValueError(f"bad triple field: {value!r}")
        if self.head == self.tail:
            raise ValueError("self-loop triple")


@dataclass
class KnowledgeGraph:
    triples: frozenset[KgTriple] = frozenset()
    skipped_self_loops: int = 0
    _adjacency: dict[str, set[tuple[str, str]]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        # symmetric closure: querying a tail yields its heads, label preserved
        for t in self.triples:
            self._adjacency.setdefault(t.head, set()).add((t.tail, t.relation))
            self._adjacency.setdefault(t.tail, set()).add((t.head, t.relation))


def load_kg(path: str | Path) -> KnowledgeGraph:
    """Parse triples; duplicates collapse, self-loops are skipped and counted."""
    triples: set[KgTriple] = set()
    skipped = 0
    with Path(path).open(encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3 or not all(fields):
                raise FormatError(
                    f"expected 'head<TAB>relation<TAB>tail', got {line!r}", line=lineno
                )
            head, relation, tail = fields
            if head == tail:
                skipped += 1
                continue
            triples.add(KgTriple(head, relation, tail))
    return KnowledgeGraph(triples=frozenset(triples), skipped_self_loops=skipped)


def save_kg(kg: KnowledgeGraph, path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for t in sorted(kg.triples, key=lambda t: (t.head, t.relation, t.tail)):
            fh.write(f"{t.head}\t{t.relation}\t{t.tail}\n")


def covered(word: str, kg: KnowledgeGraph) -> bool:
    """True iff *word* appears as head or tail of any triple."""
    return word in kg._adjacency


def kg_neighbors(word: str, kg: KnowledgeGraph) -> list[tuple[str, str]]:
    """All (neighbor, relation) pairs in the symmetric closure, sorted."""
    return sorted(kg._adjacency.get(word, ()))
