import pytest

from mappamundi.errors import FormatError
from mappamundi.kg import KgTriple, covered, kg_neighbors, load_kg, save_kg


def write_kg(tmp_path, text):
    p = tmp_path / "kg.tsv"
    p.write_text(text, encoding="utf-8")
    return p


def test_load_three_lines(tmp_path):
    kg = load_kg(write_kg(tmp_path, "a\tr\tb\nb\ts\tc\nc\tt\td\n"))
    assert len(kg.triples) == 3


def test_duplicate_collapses(tmp_path):
    kg = load_kg(write_kg(tmp_path, "a\tr\tb\na\tr\tb\n"))
    assert len(kg.triples) == 1


def test_self_loop_skipped_with_count(tmp_path):
    kg = load_kg(write_kg(tmp_path, "great_wall\tdefends\tgreat_wall\na\tr\tb\n"))
    assert len(kg.triples) == 1
    assert kg.skipped_self_loops == 1


def test_malformed_line_number(tmp_path):
    with pytest.raises(FormatError) as exc:
        load_kg(write_kg(tmp_path, "a\tr\tb\nbroken line\n"))
    assert exc.value.line == 2


def test_comments_allowed(tmp_path):
    kg = load_kg(write_kg(tmp_path, "# header\na\tr\tb\n\n"))
    assert len(kg.triples) == 1


def test_covered_head_tail_absent(tmp_path):
    kg = load_kg(write_kg(tmp_path, "head\tr\ttail\n"))
    assert covered("head", kg)
    assert covered("tail", kg)  # symmetric closure
    assert not covered("missing", kg)


def test_neighbors_sorted_closure(tmp_path):
    kg = load_kg(write_kg(tmp_path, "w\tr1\ta\nb\tr2\tw\n"))
    assert kg_neighbors("w", kg) == [("a", "r1"), ("b", "r2")]


def test_neighbors_uncovered_empty(tmp_path):
    kg = load_kg(write_kg(tmp_path, "a\tr\tb\n"))
    assert kg_neighbors("zzz", kg) == []


def test_neighbors_duplicate_relation_single_entry(tmp_path):
    kg = load_kg(write_kg(tmp_path, "w\tr\ta\nw\tr\ta\n"))
    assert kg_neighbors("w", kg) == [("a", "r")]


def test_neighbors_never_self(resources):
    for word in ("beijing", "map", "utopia", "island"):
        assert word not in [n for n, _ in kg_neighbors(word, resources.kg)]


def test_covered_iff_neighbors(resources):
    words = {t.head for t in resources.kg.triples} | {t.tail for t in resources.kg.triples}
    for word in sorted(words) + ["nonexistent_word"]:
        assert covered(word, resources.kg) == bool(kg_neighbors(word, resources.kg))


def test_roundtrip_stability(resources, tmp_path):
    out = tmp_path / "kg2.tsv"
    save_kg(resources.kg, out)
    again = load_kg(out)
    assert again.triples == resources.kg.triples


def test_triple_validation():
    with pytest.raises(ValueError):
        KgTriple("a", "r", "a")
    with pytest.raises(ValueError):
        KgTriple("a\tb", "r", "c")
