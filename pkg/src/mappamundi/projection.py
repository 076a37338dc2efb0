"""Shan-shui projection: categories, glyphs, stress layout, scene JSON and SVG."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from . import kernels
from .errors import ConfigurationError, FormatError, StateError
from .lexicon import Lexicon
from .rng import derive_seed, fnv1a64


class Category(Enum):
    ARCHITECTURE = "architecture"
    MOUNTAIN = "mountain"
    RIVER = "river"
    GRASSLAND = "grassland"
    LAKE = "lake"


# tie-break and fallback order is fixed
CATEGORY_ORDER = (
    Category.ARCHITECTURE,
    Category.MOUNTAIN,
    Category.RIVER,
    Category.GRASSLAND,
    Category.LAKE,
)


@dataclass
class LayoutParams:
    l_min: float = 60.0
    l_max: float = 300.0
    collision_radius: float = 24.0
    pin_weight: float = 0.5


@dataclass
class MapNode:
    id: int
    word: str
    category: Category
    depth: int
    position: tuple[float, float] | None = None
    glyph: str = ""


@dataclass
class MapEdge:
    src: int
    dst: int
    relation: str
    similarity: float
    target_length: float


@dataclass
class MindMapGraph:
    nodes: list[MapNode] = field(default_factory=list)
    edges: list[MapEdge] = field(default_factory=list)
    layout_params: LayoutParams = field(default_factory=LayoutParams)
    last_stress_history: list[float] = field(default_factory=list, repr=False)
    stress_phases: list[list[float]] = field(default_factory=list, repr=False)

    def node(self, node_id: int) -> MapNode | None:
        for n in self.nodes:
            if n.id == node_id:
                return n
        return None

    def next_id(self) -> int:
        return max((n.id for n in self.nodes), default=-1) + 1

    def find_word(self, word: str) -> MapNode | None:
        for n in self.nodes:
            if n.word == word:
                return n
        return None

    def is_connected(self) -> bool:
        """Every node reachable (undirected) from some depth-0 node."""
        if not self.nodes:
            return True
        roots = [n.id for n in self.nodes if n.depth == 0]
        if not roots:
            return False
        adj: dict[int, list[int]] = {n.id: [] for n in self.nodes}
        for e in self.edges:
            adj[e.src].append(e.dst)
            adj[e.dst].append(e.src)
        seen = set(roots)
        stack = list(roots)
        while stack:
            for m in adj[stack.pop()]:
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        return len(seen) == len(self.nodes)


def target_length(similarity: float, params: LayoutParams) -> float:
    """Route length for a similarity score: linear, closer when more similar."""
    if not 0.0 <= similarity <= 1.0:
        raise ValueError(f"similarity out of [0,1]: {similarity}")
    return params.l_min + (1.0 - similarity) * (params.l_max - params.l_min)


# ------------------------------------------------------------------ classify

def load_category_seeds(path: str | Path) -> dict[Category, list[str]]:
    """Seed file: lines `category<TAB>word`, `#` comments allowed."""
    seeds: dict[Category, list[str]] = {c: [] for c in CATEGORY_ORDER}
    with Path(path).open(encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not all(parts):
                raise FormatError(f"expected 'category<TAB>word', got {line!r}", line=lineno)
            try:
                cat = Category(parts[0].lower())
            except ValueError:
                raise FormatError(f"unknown category {parts[0]!r}", line=lineno) from None
            seeds[cat].append(parts[1])
    return seeds


def category_centroids(
    lexicon: Lexicon, seeds: dict[Category, list[str]]
) -> dict[Category, np.ndarray]:
    """Mean of the normalized seed embeddings per category."""
    centroids = {}
    for cat in CATEGORY_ORDER:
        vecs = []
        for word in seeds.get(cat, ()):
            entry = lexicon.get(word)
            if entry is None:
                continue
            norm = float(np.linalg.norm(entry.embedding))
            if norm > 0:
                vecs.append(entry.embedding / norm)
        if not vecs:
            raise ConfigurationError(f"no usable seed words for category {cat.value}")
        centroids[cat] = np.mean(vecs, axis=0)
    return centroids


def classify(
    word: str,
    lexicon: Lexicon,
    seeds: dict[Category, list[str]],
    parent_category: Category | None = None,
) -> Category:
    """Nearest-centroid category; unknown words inherit the parent's category."""
    centroids = category_centroids(lexicon, seeds)
    entry = lexicon.get(word)
    if entry is None or float(np.linalg.norm(entry.embedding)) == 0.0:
        return parent_category if parent_category is not None else Category.MOUNTAIN
    v = entry.embedding / float(np.linalg.norm(entry.embedding))
    best, best_cos = CATEGORY_ORDER[0], -2.0
    for cat in CATEGORY_ORDER:
        c = centroids[cat]
        cn = float(np.linalg.norm(c))
        cos = float(np.dot(v, c)) / cn if cn > 0 else -1.0
        if cos > best_cos + 1e-12:
            best, best_cos = cat, cos
    return best


# -------------------------------------------------------------------- layout

def layout(
    graph: MindMapGraph,
    pinned: set[int] | None = None,
    seed: int = 0,
    max_iters: int = 2000,
    epsilon: float = 0.5,
) -> MindMapGraph:
    """Place nodes so route lengths approach their targets.

    Minimizes squared edge-length error plus a soft pull keeping pinned
    nodes near their previous positions, then separates any overlapping
    node pair. Mutates *graph* in place and returns it.
    """
    if not graph.is_connected():
        raise StateError("graph is disconnected: node unreachable from any depth-0 node")
    if not graph.nodes:
        return graph
    pinned = pinned or set()

    _initialize_positions(graph, seed)

    nodes = sorted(graph.nodes, key=lambda n: n.id)
    index = {n.id: i for i, n in enumerate(nodes)}
    pos = np.array([n.position for n in nodes], dtype=np.float64)
    prev = pos.copy()
    pin_mask = np.array([n.id in pinned for n in nodes], dtype=np.bool_)
    edges = np.array(
        [[index[e.src], index[e.dst]] for e in graph.edges], dtype=np.int64
    ).reshape(-1, 2)
    targets = np.array([e.target_length for e in graph.edges], dtype=np.float64)

    # the descent objective carries a one-sided overlap penalty so the final
    # collision pass only has residual work; re-relax briefly if it still moved
    pin_weight = graph.layout_params.pin_weight
    radius = graph.layout_params.collision_radius
    sep_min_d = 2.0 * radius * 1.02
    remaining = max_iters
    phases: list[list[float]] = []
    for _ in range(4):
        history = np.zeros(max(remaining, 1), dtype=np.float64)
        used = kernels.descend(
            pos, edges, targets, pin_mask, prev,
            pin_weight, sep_min_d, 1.0, remaining, epsilon, history,
        )
        phases.append(history[:used].tolist())
        remaining -= used
        passes = kernels.resolve_collisions(pos, radius, 500)
        if passes == 0 or remaining <= 0:
            break

    for i, n in enumerate(nodes):
        n.position = (float(pos[i, 0]), float(pos[i, 1]))
    graph.stress_phases = phases
    graph.last_stress_history = phases[-1] if phases else []
    return graph


def _initialize_positions(graph: MindMapGraph, seed: int) -> None:
    """Unpositioned nodes start at their parent plus a unit seeded-angle offset."""
    adj: dict[int, list[int]] = {n.id: [] for n in graph.nodes}
    for e in graph.edges:
        adj[e.src].append(e.dst)
        adj[e.dst].append(e.src)
    by_id = {n.id: n for n in graph.nodes}

    def offset(node_id: int) -> tuple[float, float]:
        angle = 2.0 * math.pi * (derive_seed(seed, node_id) / 2.0**64)
        return math.cos(angle), math.sin(angle)

    positioned = [n for n in graph.nodes if n.position is not None]
    if positioned:
        cx = sum(n.position[0] for n in positioned) / len(positioned)
        cy = sum(n.position[1] for n in positioned) / len(positioned)
    else:
        cx = cy = 0.0

    # breadth-first from positioned nodes and depth-0 roots, id order
    pending = sorted(
        (n.id for n in graph.nodes if n.position is None),
        key=lambda i: (by_id[i].depth, i),
    )
    for node_id in pending:
        node = by_id[node_id]
        if node.position is not None:
            continue
        parent = None
        for m in sorted(adj[node_id]):
            if by_id[m].position is not None:
                parent = by_id[m]
                break
        px, py = parent.position if parent is not None else (cx, cy)
        dx, dy = offset(node_id)
        node.position = (px + dx, py + dy)


# -------------------------------------------------------------------- glyphs

@dataclass
class GlyphManifest:
    category_counts: dict[str, int]
    directory: Path


def load_manifest(path: str | Path) -> GlyphManifest:
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        data = json.load(fh)
    counts = {str(k): int(v) for k, v in data["category_counts"].items()}
    directory = (path.parent / data["dir"]).resolve()
    return GlyphManifest(category_counts=counts, directory=directory)


def assign_glyph(word: str, category: Category, manifest: GlyphManifest) -> str:
    """Stable hash pick of a glyph id within the word's category."""
    count = manifest.category_counts.get(category.value, 0)
    if count < 1:
        raise ConfigurationError(f"no glyphs for category {category.value}")
    return f"{category.value}_{fnv1a64(word) % count}"


# --------------------------------------------------------------------- scene

def emit_scene(graph: MindMapGraph) -> dict:
    """Canonical scene document; node order is id order."""
    nodes = sorted(graph.nodes, key=lambda n: n.id)
    for n in nodes:
        if n.position is None:
            raise StateError(f"node {n.id} has no position")
    node_records = [
        {
            "id": n.id,
            "word": n.word,
            "category": n.category.value,
            "x": n.position[0],
            "y": n.position[1],
            "glyph": n.glyph,
            "depth": n.depth,
        }
        for n in nodes
    ]
    edge_records = [
        {
            "from": e.src,
            "to": e.dst,
            "relation": e.relation,
            "similarity": e.similarity,
            "target_len": e.target_length,
        }
        for e in graph.edges
    ]
    if nodes:
        xs = [n.position[0] for n in nodes]
        ys = [n.position[1] for n in nodes]
        w, h = max(xs) - min(xs), max(ys) - min(ys)
        mx, my = 0.1 * w, 0.1 * h
        viewport = {"x": min(xs) - mx, "y": min(ys) - my, "w": w + 2 * mx, "h": h + 2 * my}
    else:
        viewport = {"x": 0.0, "y": 0.0, "w": 0.0, "h": 0.0}
    return {"nodes": node_records, "edges": edge_records, "viewport": viewport}


def scene_to_json(scene: dict) -> str:
    """Byte-stable serialization used for snapshots and replay comparison."""
    return json.dumps(scene, ensure_ascii=False, separators=(",", ":"), allow_nan=False)


def parse_scene(scene: dict, layout_params: LayoutParams | None = None) -> MindMapGraph:
    graph = MindMapGraph(layout_params=layout_params or LayoutParams())
    for rec in scene["nodes"]:
        graph.nodes.append(
            MapNode(
                id=int(rec["id"]),
                word=rec["word"],
                category=Category(rec["category"]),
                depth=int(rec["depth"]),
                position=(float(rec["x"]), float(rec["y"])),
                glyph=rec["glyph"],
            )
        )
    for rec in scene["edges"]:
        graph.edges.append(
            MapEdge(
                src=int(rec["from"]),
                dst=int(rec["to"]),
                relation=rec["relation"],
                similarity=float(rec["similarity"]),
                target_length=float(rec["target_len"]),
            )
        )
    return graph


# ----------------------------------------------------------------------- svg

_CATEGORY_COLOR = {
    Category.ARCHITECTURE: "#8a5a3b",
    Category.MOUNTAIN: "#4a5d52",
    Category.RIVER: "#3e6e8e",
    Category.GRASSLAND: "#6d8f4e",
    Category.LAKE: "#46788a",
}

_FALLBACK_SHAPE = {
    Category.ARCHITECTURE: '<rect x="-10" y="-10" width="20" height="20" fill="none" stroke="{c}" stroke-width="2"/>',
    Category.MOUNTAIN: '<path d="M -14 10 L 0 -12 L 14 10 Z" fill="none" stroke="{c}" stroke-width="2"/>',
    Category.RIVER: '<path d="M -14 0 Q -7 -8 0 0 T 14 0" fill="none" stroke="{c}" stroke-width="2"/>',
    Category.GRASSLAND: '<path d="M -12 8 L -8 -6 M -2 8 L 0 -8 M 8 8 L 10 -5" stroke="{c}" stroke-width="2"/>',
    Category.LAKE: '<ellipse cx="0" cy="0" rx="13" ry="8" fill="none" stroke="{c}" stroke-width="2"/>',
}


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _glyph_fragment(glyph_id: str, category: Category, manifest: GlyphManifest | None) -> str:
    if manifest is not None and glyph_id:
        path = manifest.directory / f"{glyph_id}.svg"
        if path.is_file():
            text = path.read_text(encoding="utf-8").strip()
            if text.startswith("<?xml"):
                text = text.split("?>", 1)[1].strip()
            return text
    return _FALLBACK_SHAPE[category].format(c=_CATEGORY_COLOR[category])


def emit_svg(scene: dict, manifest: GlyphManifest | None = None) -> str:
    """Render a scene document to standalone SVG text."""
    vp = scene["viewport"]
    if vp["w"] > 0 and vp["h"] > 0:
        view_box = f'{_fmt(vp["x"])} {_fmt(vp["y"])} {_fmt(vp["w"])} {_fmt(vp["h"])}'
    elif scene["nodes"]:
        n = scene["nodes"][0]
        view_box = f'{_fmt(n["x"] - 50)} {_fmt(n["y"] - 50)} 100.00 100.00'
    else:
        view_box = "0 0 100 100"

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{view_box}" font-family="serif">',
        '<rect x="-100000" y="-100000" width="200000" height="200000" fill="#f5f0e6"/>',
    ]
    positions = {n["id"]: (n["x"], n["y"]) for n in scene["nodes"]}
    for e in scene["edges"]:
        x1, y1 = positions[e["from"]]
        x2, y2 = positions[e["to"]]
        parts.append(
            f'<path class="route" d="M {_fmt(x1)} {_fmt(y1)} L {_fmt(x2)} {_fmt(y2)}" '
            'stroke="#9a8c70" stroke-width="1.5" stroke-dasharray="6 4" fill="none"/>'
        )
    for n in scene["nodes"]:
        category = Category(n["category"])
        fragment = _glyph_fragment(n["glyph"], category, manifest)
        label = escape(n["word"])
        parts.append(
            f'<g class="node" transform="translate({_fmt(n["x"])} {_fmt(n["y"])})">'
            f"{fragment}"
            f'<text y="26" text-anchor="middle" font-size="11" '
            f'fill="{_CATEGORY_COLOR[category]}">{label}</text></g>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
