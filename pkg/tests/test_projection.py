import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from mappamundi.errors import ConfigurationError, StateError
from mappamundi.projection import (
    CATEGORY_ORDER,
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
    load_category_seeds,
    parse_scene,
    scene_to_json,
)
from mappamundi.rng import fnv1a64

from conftest import make_lexicon


# ------------------------------------------------------------------ classify

def separated_fixture():
    lex = make_lexicon([
        ("arch1", "NOUN", 1, (), [1.0, 0.0, 0.0, 0.0, 0.0]),
        ("mount1", "NOUN", 1, (), [0.0, 1.0, 0.0, 0.0, 0.0]),
        ("river1", "NOUN", 1, (), [0.0, 0.0, 1.0, 0.0, 0.0]),
        ("grass1", "NOUN", 1, (), [0.0, 0.0, 0.0, 1.0, 0.0]),
        ("lake1", "NOUN", 1, (), [0.0, 0.0, 0.0, 0.0, 1.0]),
        ("query", "NOUN", 1, (), [0.9, 0.1, 0.0, 0.0, 0.0]),
        ("equi", "NOUN", 1, (), [1.0, 1.0, 1.0, 1.0, 1.0]),
    ])
    seeds = {
        Category.ARCHITECTURE: ["arch1"],
        Category.MOUNTAIN: ["mount1"],
        Category.RIVER: ["river1"],
        Category.GRASSLAND: ["grass1"],
        Category.LAKE: ["lake1"],
    }
    return lex, seeds


def test_classify_seed_words_self_category():
    lex, seeds = separated_fixture()
    for cat, words in seeds.items():
        for w in words:
            assert classify(w, lex, seeds) is cat


def test_classify_matches_centroid_oracle():
    lex, seeds = separated_fixture()

    def oracle(word):
        q = lex.entries[word].embedding
        q = q / np.linalg.norm(q)
        best, best_cos = None, -2
        for cat in CATEGORY_ORDER:
            c = np.mean(
                [lex.entries[w].embedding / np.linalg.norm(lex.entries[w].embedding)
                 for w in seeds[cat]], axis=0)
            cos = float(q @ c / np.linalg.norm(c))
            if cos > best_cos + 1e-12:
                best, best_cos = cat, cos
        return best

    for w in lex.words():
        assert classify(w, lex, seeds) is oracle(w)


def test_classify_unknown_word_falls_back_to_parent():
    lex, seeds = separated_fixture()
    assert classify("missing", lex, seeds, Category.RIVER) is Category.RIVER
    assert classify("missing", lex, seeds) is Category.MOUNTAIN


def test_classify_tie_breaks_to_architecture():
    lex, seeds = separated_fixture()
    assert classify("equi", lex, seeds) is Category.ARCHITECTURE


def test_classify_empty_seed_category_rejected():
    lex, seeds = separated_fixture()
    seeds[Category.LAKE] = ["not_in_lexicon"]
    with pytest.raises(ConfigurationError):
        classify("query", lex, seeds)


def test_bundled_seeds_load(resources):
    for cat in CATEGORY_ORDER:
        assert len(resources.seeds[cat]) >= 5


def test_classify_total_and_deterministic(resources):
    for word in ["mountain", "lake", "xyzzy", "beijing", "песня"]:
        a = classify(word, resources.lexicon, resources.seeds, Category.LAKE)
        b = classify(word, resources.lexicon, resources.seeds, Category.LAKE)
        assert a is b
        assert isinstance(a, Category)


# -------------------------------------------------------------------- glyphs

def test_glyph_single_option():
    m = GlyphManifest({"mountain": 1}, directory=None)
    for w in ("a", "b", "c"):
        assert assign_glyph(w, Category.MOUNTAIN, m) == "mountain_0"


def test_glyph_stable():
    m = GlyphManifest({"lake": 5}, directory=None)
    assert assign_glyph("sea", Category.LAKE, m) == assign_glyph("sea", Category.LAKE, m)


def test_glyph_hash_formula():
    m = GlyphManifest({"river": 7}, directory=None)
    got = assign_glyph("stream", Category.RIVER, m)
    assert got == f"river_{fnv1a64('stream') % 7}"


def test_glyph_coverage_1000_words():
    m = GlyphManifest({"river": 7}, directory=None)
    seen = {assign_glyph(f"word{i}", Category.RIVER, m) for i in range(1000)}
    assert seen == {f"river_{i}" for i in range(7)}


def test_glyph_empty_category_rejected():
    with pytest.raises(ConfigurationError):
        assign_glyph("w", Category.LAKE, GlyphManifest({}, directory=None))


# --------------------------------------------------------------------- scene

def one_node_graph():
    g = MindMapGraph()
    g.nodes.append(
        MapNode(0, "sea", Category.LAKE, 0, position=(10.0, -4.0), glyph="lake_0")
    )
    return g


def two_node_graph():
    g = one_node_graph()
    g.nodes.append(
        MapNode(1, "see", Category.RIVER, 1, position=(70.0, -4.0), glyph="river_1")
    )
    g.edges.append(MapEdge(0, 1, "dada_pun", 1.0, 60.0))
    return g


def test_scene_empty():
    scene = emit_scene(MindMapGraph())
    assert scene["nodes"] == [] and scene["edges"] == []
    assert scene["viewport"] == {"x": 0.0, "y": 0.0, "w": 0.0, "h": 0.0}


def test_scene_single_node_centered():
    scene = emit_scene(one_node_graph())
    assert len(scene["nodes"]) == 1
    assert scene["viewport"]["x"] == 10.0 and scene["viewport"]["w"] == 0.0


def test_scene_margin():
    scene = emit_scene(two_node_graph())
    vp = scene["viewport"]
    assert vp["x"] == pytest.approx(10.0 - 6.0)  # 10% of width 60
    assert vp["w"] == pytest.approx(60.0 * 1.2)


def test_scene_unpositioned_node_rejected():
    g = MindMapGraph()
    g.nodes.append(MapNode(0, "w", Category.LAKE, 0))
    with pytest.raises(StateError):
        emit_scene(g)


def test_scene_roundtrip():
    g = two_node_graph()
    scene = emit_scene(g)
    again = emit_scene(parse_scene(json.loads(scene_to_json(scene))))
    assert scene_to_json(again) == scene_to_json(scene)


def test_scene_node_order_is_id_order():
    g = two_node_graph()
    g.nodes.reverse()
    assert [n["id"] for n in emit_scene(g)["nodes"]] == [0, 1]


# ----------------------------------------------------------------------- svg

def test_svg_empty_scene_valid():
    svg = emit_svg(emit_scene(MindMapGraph()))
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")


def test_svg_counts():
    svg = emit_svg(emit_scene(two_node_graph()))
    root = ET.fromstring(svg)
    ns = "{http://www.w3.org/2000/svg}"
    groups = [el for el in root.iter(f"{ns}g") if el.get("class") == "node"]
    routes = [el for el in root.iter(f"{ns}path") if el.get("class") == "route"]
    assert len(groups) == 2 and len(routes) == 1


def test_svg_deterministic(resources):
    scene = emit_scene(two_node_graph())
    a = emit_svg(scene, resources.manifest)
    b = emit_svg(scene, resources.manifest)
    assert a == b


def test_svg_uses_bundled_glyphs(resources):
    g = two_node_graph()
    svg = emit_svg(emit_scene(g), resources.manifest)
    ET.fromstring(svg)  # still valid XML with inlined fragments
    assert "<g>" in svg


def test_svg_fallback_shape_for_missing_glyph():
    g = two_node_graph()
    g.nodes[0].glyph = "lake_999"
    svg = emit_svg(emit_scene(g), None)
    ET.fromstring(svg)


def test_svg_escapes_labels():
    g = one_node_graph()
    g.nodes[0].word = "a<b&c"
    svg = emit_svg(emit_scene(g))
    ET.fromstring(svg)


def test_manifest_loads(resources):
    m = resources.manifest
    assert set(m.category_counts) == {c.value for c in Category}
    for cat, count in m.category_counts.items():
        for i in range(count):
            assert (m.directory / f"{cat}_{i}.svg").is_file()


def test_seeds_file_format_error(tmp_path):
    p = tmp_path / "seeds.tsv"
    p.write_text("mountain\tpeak\nbadline\n", encoding="utf-8")
    from mappamundi.errors import FormatError
    with pytest.raises(FormatError):
        load_category_seeds(p)
