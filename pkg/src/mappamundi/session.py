"""Stateful interactive sessions over the engine, with an append-only event log.

Each session is one line-delimited JSON file: event 0 records the full
expansion config, later events record utterances, expand actions and
config deltas together with the seed that was used. Replaying a log
re-executes every event and reproduces the scene byte for byte.
"""

from __future__ import annotations

import json
import os
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigurationError, NotFoundError, ReplayError
from .expansion import Channel, ExpansionConfig, expand
from .keywords import Utterance, extract_keywords
from .kg import KnowledgeGraph, load_kg
from .lexicon import Lexicon, load_lexicon
from .projection import (
    Category,
    GlyphManifest,
    LayoutParams,
    MapEdge,
    MapNode,
    MindMapGraph,
    assign_glyph,
    classify,
    emit_scene,
    emit_svg,
    layout,
    load_category_seeds,
    load_manifest,
    scene_to_json,
    target_length,
)
from .rng import derive_seed

BUNDLED_DATA = Path(__file__).parent / "data"


def default_data_dir() -> Path:
    return Path(os.environ.get("MAPPA_DATA", str(BUNDLED_DATA)))


@dataclass
class EngineResources:
    lexicon: Lexicon
    kg: KnowledgeGraph
    seeds: dict[Category, list[str]]
    manifest: GlyphManifest

    @classmethod
    def load(cls, data_dir: str | Path | None = None) -> "EngineResources":
        d = Path(data_dir) if data_dir is not None else default_data_dir()
        return cls(
            lexicon=load_lexicon(d / "lexicon.tsv"),
            kg=load_kg(d / "kg.tsv"),
            seeds=load_category_seeds(d / "seeds.tsv"),
            manifest=load_manifest(d / "manifest.json"),
        )


def _config_to_payload(config: ExpansionConfig) -> dict:
    return {
        "quotas": {ch.value: config.quota(ch) for ch in Channel},
        "tau_low": config.tau_low,
        "tau_high": config.tau_high,
        "seed": config.seed,
        "keyword_limit": config.keyword_limit,
    }


def _config_from_payload(payload: dict) -> ExpansionConfig:
    return ExpansionConfig(
        quotas={Channel(k): int(v) for k, v in payload["quotas"].items()},
        tau_low=float(payload["tau_low"]),
        tau_high=float(payload["tau_high"]),
        seed=int(payload["seed"]),
        keyword_limit=int(payload["keyword_limit"]),
    )


def _apply_config_delta(config: ExpansionConfig, delta: dict) -> ExpansionConfig:
    changes = {}
    try:
        if "quotas" in delta:
            changes["quotas"] = {Channel(k): int(v) for k, v in delta["quotas"].items()}
        for key in ("tau_low", "tau_high", "seed", "keyword_limit"):
            if key in delta:
                changes[key] = delta[key]
        return config.with_updates(**changes)
    except ValueError as exc:
        raise ConfigurationError(str(exc)) from exc


@dataclass
class Session:
    id: str
    config: ExpansionConfig
    graph: MindMapGraph = field(default_factory=MindMapGraph)
    event_count: int = 0
    created_at: float = field(default_factory=time.time)
    log_path: Path | None = None
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def scene(self) -> dict:
        return emit_scene(self.graph)

    def scene_json(self) -> str:
        return scene_to_json(self.scene())


class Engine:
    """Shared read-only resources plus the live session table."""

    def __init__(self, resources: EngineResources, sessions_dir: str | Path):
        self.resources = resources
        self.sessions_dir = Path(sessions_dir)
        self.sessions_dir.mkdir(parents=True, exist_ok=True)
        self.sessions: dict[str, Session] = {}
        self._table_lock = threading.Lock()

    # ------------------------------------------------------------- lifecycle

    def create_session(self, config: ExpansionConfig | None = None) -> Session:
        config = config or ExpansionConfig(seed=secrets.randbits(63))
        session = Session(id=secrets.token_urlsafe(16), config=config)
        session.log_path = self.sessions_dir / f"{session.id}.log"
        self._append_event(
            session, "CONFIG", _config_to_payload(config),
            derive_seed(config.seed, 0),
        )
        session.event_count = 1
        with self._table_lock:
            self.sessions[session.id] = session
        return session

    def get_session(self, session_id: str) -> Session:
        with self._table_lock:
            session = self.sessions.get(session_id)
        if session is None:
            raise NotFoundError(f"unknown session: {session_id}")
        return session

    # ------------------------------------------------------------ operations

    def apply_utterance(self, session: Session, text: str) -> list[int]:
        with session.lock:
            seed_used = derive_seed(session.config.seed, session.event_count)
            self._append_event(session, "UTTERANCE", {"text": text}, seed_used)
            new_ids = self._do_utterance(session, text, seed_used)
            session.event_count += 1
        return new_ids

    def expand_node(
        self, session: Session, node_id: int, count: int | None = None
    ) -> list[int]:
        with session.lock:
            if session.graph.node(node_id) is None:
                raise NotFoundError(f"unknown node id: {node_id}")
            seed_used = derive_seed(session.config.seed, session.event_count)
            self._append_event(
                session, "EXPAND", {"node_id": node_id, "count": count}, seed_used
            )
            new_ids = self._do_expand(session, node_id, count, seed_used)
            session.event_count += 1
        return new_ids

    def patch_config(self, session: Session, delta: dict) -> ExpansionConfig:
        with session.lock:
            new_config = _apply_config_delta(session.config, delta)
            seed_used = derive_seed(session.config.seed, session.event_count)
            self._append_event(session, "CONFIG", delta, seed_used)
            session.config = new_config
            session.event_count += 1
        return session.config

    # --------------------------------------------------------------- innards

    def _append_event(self, session: Session, kind: str, payload: dict, seed: int):
        record = {
            "index": session.event_count,
            "kind": kind,
            "payload": payload,
            "seed_used": seed,
        }
        with session.log_path.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")

    def _attach_candidates(self, session, parent, candidates, seed_used):
        """Turn expansion candidates into nodes/edges under *parent*."""
        res = self.resources
        graph = session.graph
        params = graph.layout_params
        sibling_words = {
            graph.node(e.dst).word if e.src == parent.id else graph.node(e.src).word
            for e in graph.edges
            if parent.id in (e.src, e.dst)
        }
        new_ids = []
        for cand in candidates:
            if cand.word in sibling_words:
                continue
            existing = graph.find_word(cand.word)
            if existing is not None:
                # globally duplicate word: extra edge, no new node
                graph.edges.append(
                    MapEdge(
                        parent.id, existing.id, cand.relation, cand.similarity,
                        target_length(cand.similarity, params),
                    )
                )
            else:
                node = MapNode(
                    id=graph.next_id(),
                    word=cand.word,
                    category=classify(
                        cand.word, res.lexicon, res.seeds, parent.category
                    ),
                    depth=parent.depth + 1,
                )
                node.glyph = assign_glyph(cand.word, node.category, res.manifest)
                graph.nodes.append(node)
                graph.edges.append(
                    MapEdge(
                        parent.id, node.id, cand.relation, cand.similarity,
                        target_length(cand.similarity, params),
                    )
                )
                new_ids.append(node.id)
            sibling_words.add(cand.word)
        return new_ids

    def _do_utterance(self, session: Session, text: str, seed_used: int) -> list[int]:
        res = self.resources
        graph = session.graph
        config = session.config.with_updates(seed=seed_used)
        keywords = extract_keywords(
            Utterance(text), res.lexicon, session.config.keyword_limit
        )
        pre_existing = {n.id for n in graph.nodes}
        new_ids: list[int] = []
        roots: list[MapNode] = []
        for kw in keywords:
            if graph.find_word(kw.word) is not None:
                continue
            node = MapNode(
                id=graph.next_id(),
                word=kw.word,
                category=classify(kw.word, res.lexicon, res.seeds),
                depth=0,
            )
            node.glyph = assign_glyph(kw.word, node.category, res.manifest)
            graph.nodes.append(node)
            new_ids.append(node.id)
            roots.append(node)
        for node in roots:
            try:
                candidates = expand(node.word, res.lexicon, res.kg, config)
            except NotFoundError:
                candidates = []
            new_ids.extend(
                self._attach_candidates(session, node, candidates, seed_used)
            )
        if new_ids:
            layout(graph, pinned=pre_existing, seed=seed_used)
        return new_ids

    def _do_expand(
        self, session: Session, node_id: int, count: int | None, seed_used: int
    ) -> list[int]:
        res = self.resources
        graph = session.graph
        node = graph.node(node_id)
        if node is None:
            raise NotFoundError(f"unknown node id: {node_id}")
        config = session.config.with_updates(seed=seed_used)
        candidates = expand(node.word, res.lexicon, res.kg, config)
        if count is not None:
            candidates = candidates[: max(0, count)]
        pre_existing = {n.id for n in graph.nodes}
        new_ids = self._attach_candidates(session, node, candidates, seed_used)
        if new_ids:
            layout(graph, pinned=pre_existing, seed=seed_used)
        return new_ids

    # ----------------------------------------------------------------- replay

    def replay(self, log_path: str | Path) -> Session:
        """Rebuild a session from its event log; does not write to the log."""
        log_path = Path(log_path)
        events = []
        with log_path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh):
                line = line.strip()
                if not line:
                    continue
                try:
                    events.append(json.loads(line))
                except json.JSONDecodeError:
                    raise ReplayError("corrupt event record", index=lineno) from None
        if not events:
            raise ReplayError("empty event log", index=0)
        for expected, ev in enumerate(events):
            if ev.get("index") != expected:
                raise ReplayError(
                    f"index gap: expected {expected}, got {ev.get('index')}",
                    index=expected,
                )
        first = events[0]
        if first["kind"] != "CONFIG":
            raise ReplayError("event 0 must be a CONFIG record", index=0)
        session = Session(
            id=log_path.stem, config=_config_from_payload(first["payload"])
        )
        session.log_path = log_path
        session.event_count = 1
        for ev in events[1:]:
            kind, payload, seed_used = ev["kind"], ev["payload"], ev["seed_used"]
            if kind == "UTTERANCE":
                self._do_utterance(session, payload["text"], seed_used)
            elif kind == "EXPAND":
                self._do_expand(
                    session, payload["node_id"], payload.get("count"), seed_used
                )
            elif kind == "CONFIG":
                session.config = _apply_config_delta(session.config, payload)
            else:
                raise ReplayError(f"unknown event kind {kind!r}", index=ev["index"])
            session.event_count += 1
        return session
