import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mappamundi.errors import DegenerateInputError, FormatError, NotFoundError
from mappamundi.lexicon import (
    _grams,
    load_lexicon,
    morphological_similarity,
    phonological_similarity,
    semantic_neighbors,
    semantic_similarity,
)

from conftest import make_lexicon


def entry(word, emb, phon=()):
    return make_lexicon([(word, "NOUN", 1.0, phon, emb)]).entries[word]


# ------------------------------------------------------------------- loading

def test_load_basic(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text(
        "#dim=3\n"
        "# a comment\n"
        "alpha\tNOUN\t1.5\ta l f a\t1,0,0\n"
        "beta\tVERB\t2.0\t\t0,1,0\n",
        encoding="utf-8",
    )
    lex = load_lexicon(p)
    assert len(lex) == 2 and lex.dim == 3
    assert lex.entries["alpha"].phonetic == ("a", "l", "f", "a")
    assert lex.entries["beta"].phonetic == ()


def test_load_header_only(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("#dim=4\n", encoding="utf-8")
    assert len(load_lexicon(p)) == 0


def test_load_missing_header(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("alpha\tNOUN\t1\t\t1,0\n", encoding="utf-8")
    with pytest.raises(FormatError):
        load_lexicon(p)


def test_load_wrong_arity_names_line(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("#dim=3\nok\tNOUN\t1\t\t1,0,0\nbad\tNOUN\t1\t\t1,0\n", encoding="utf-8")
    with pytest.raises(FormatError) as exc:
        load_lexicon(p)
    assert exc.value.line == 3


def test_load_duplicate_last_wins(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("#dim=2\nw\tNOUN\t1\t\t1,0\nw\tVERB\t2\t\t0,1\n", encoding="utf-8")
    lex = load_lexicon(p)
    assert len(lex) == 1 and lex.entries["w"].idf == 2


def test_bundled_lexicon_loads(resources):
    assert resources.lexicon.dim == 8
    assert "beijing" in resources.lexicon


# -------------------------------------------------------------- similarities

def test_semantic_identity():
    e = entry("v", [1, 2, 3])
    assert semantic_similarity(e, e) == 1.0


def test_semantic_orthogonal():
    assert semantic_similarity(entry("a", [1, 0]), entry("b", [0, 1])) == 0.0


def test_semantic_hand_value():
    # cos([1,1],[1,0]) = 1/sqrt(2)
    got = semantic_similarity(entry("a", [1, 1]), entry("b", [1, 0]))
    assert got == pytest.approx(0.70711, abs=1e-5)


def test_semantic_negative_clamped():
    assert semantic_similarity(entry("a", [1, 0]), entry("b", [-1, 0])) == 0.0


def test_semantic_zero_vector_rejected():
    with pytest.raises(DegenerateInputError):
        semantic_similarity(entry("a", [0, 0]), entry("b", [1, 0]))


def test_morphological_identical():
    assert morphological_similarity("mountain", "mountain") == 1.0


def test_morphological_disjoint():
    assert morphological_similarity("abc", "xyz") == 0.0


def test_morphological_hand_value():
    # {wi,in,nt,te,er} vs {wi,in,nn,ne,er}: overlap 3, Dice 6/10
    assert morphological_similarity("winter", "winner") == pytest.approx(0.6)


def test_morphological_single_char_words():
    assert morphological_similarity("a", "a") == 1.0
    assert morphological_similarity("a", "b") == 0.0


def test_morphological_empty_rejected():
    with pytest.raises(DegenerateInputError):
        morphological_similarity("", "abc")


def test_phonological_identical():
    a = entry("a", [1, 0], phon=("m", "a", "p"))
    b = entry("b", [0, 1], phon=("m", "a", "p"))
    assert phonological_similarity(a, b) == 1.0


def test_phonological_all_differ():
    a = entry("a", [1, 0], phon=("m", "a", "p"))
    b = entry("b", [0, 1], phon=("t", "e", "k"))
    assert phonological_similarity(a, b) == 0.0


def test_phonological_hand_value():
    a = entry("a", [1, 0], phon=("m", "a", "p"))
    b = entry("b", [0, 1], phon=("m", "a", "t"))
    assert phonological_similarity(a, b) == pytest.approx(0.66667, abs=1e-5)


def test_phonological_grapheme_fallback():
    # no phonetics: character sequences substitute
    a = entry("map", [1, 0])
    b = entry("mat", [0, 1])
    assert phonological_similarity(a, b) == pytest.approx(2 / 3)


def _levenshtein_oracle(a, b):
    # full-matrix reference implementation
    m, n = len(a), len(b)
    d = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        d[i][0] = i
    for j in range(n + 1):
        d[0][j] = j
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            d[i][j] = min(
                d[i - 1][j] + 1,
                d[i][j - 1] + 1,
                d[i - 1][j - 1] + (a[i - 1] != b[j - 1]),
            )
    return d[m][n]


@given(st.text(alphabet="abcd", min_size=1, max_size=8),
       st.text(alphabet="abcd", min_size=1, max_size=8))
def test_phonological_matches_edit_distance_oracle(wa, wb):
    a = entry(wa, [1, 0])
    b = entry(wb, [0, 1])
    expected = 1 - _levenshtein_oracle(wa, wb) / max(len(wa), len(wb))
    assert phonological_similarity(a, b) == pytest.approx(expected)


@given(st.text(alphabet="abcdef", min_size=1, max_size=10),
       st.text(alphabet="abcdef", min_size=1, max_size=10))
def test_morphological_one_implies_equal_bigram_sets(wa, wb):
    if morphological_similarity(wa, wb) == 1.0:
        assert _grams(wa) == _grams(wb)


def test_similarity_axioms_random_pairs(resources):
    lex = resources.lexicon
    words = lex.words()
    rng = random.Random(1234)
    for _ in range(1000):
        wa, wb = rng.choice(words), rng.choice(words)
        a, b = lex.entries[wa], lex.entries[wb]
        for fn in (
            lambda: (semantic_similarity(a, b), semantic_similarity(b, a)),
            lambda: (morphological_similarity(wa, wb), morphological_similarity(wb, wa)),
            lambda: (phonological_similarity(a, b), phonological_similarity(b, a)),
        ):
            sab, sba = fn()
            assert 0.0 <= sab <= 1.0
            assert abs(sab - sba) <= 1e-12
        assert semantic_similarity(a, a) == 1.0
        assert morphological_similarity(wa, wa) == 1.0
        assert phonological_similarity(a, a) == 1.0


def test_semantic_scaling_invariance(resources):
    lex = resources.lexicon
    rng = random.Random(99)
    words = lex.words()
    for _ in range(100):
        a = lex.entries[rng.choice(words)]
        b = lex.entries[rng.choice(words)]
        scaled = entry("s", a.embedding * rng.uniform(0.01, 100.0))
        s1, s2 = semantic_similarity(a, b), semantic_similarity(scaled, b)
        assert s2 == pytest.approx(s1, rel=1e-9, abs=1e-12)


# ----------------------------------------------------------------- neighbors

def _neighbors_oracle(word, lex, k):
    def cos(u, v):
        num = sum(x * y for x, y in zip(u, v))
        den = math.sqrt(sum(x * x for x in u)) * math.sqrt(sum(y * y for y in v))
        return max(0.0, min(1.0, num / den))

    q = lex.entries[word].embedding
    scored = [
        (w, cos(q, e.embedding)) for w, e in lex.entries.items() if w != word
    ]
    scored.sort(key=lambda it: (-it[1], it[0]))
    return scored[:k]


def test_neighbors_k_zero(resources):
    assert semantic_neighbors("beijing", resources.lexicon, 0) == []


def test_neighbors_k_clamped():
    lex = make_lexicon([
        ("a", "NOUN", 1, (), [1, 0]),
        ("b", "NOUN", 1, (), [0, 1]),
        ("c", "NOUN", 1, (), [1, 1]),
    ])
    assert len(semantic_neighbors("a", lex, 10)) == 2


def test_neighbors_unknown_word(resources):
    with pytest.raises(NotFoundError):
        semantic_neighbors("zzzzz", resources.lexicon, 3)


def test_neighbors_match_oracle_toy():
    lex = make_lexicon([
        ("a", "NOUN", 1, (), [1.0, 0.0, 0.0]),
        ("b", "NOUN", 1, (), [0.9, 0.1, 0.0]),
        ("c", "NOUN", 1, (), [0.0, 1.0, 0.0]),
        ("d", "NOUN", 1, (), [0.5, 0.5, 0.1]),
        ("e", "NOUN", 1, (), [0.0, 0.0, 1.0]),
    ])
    for k in range(6):
        got = semantic_neighbors("a", lex, k)
        exp = _neighbors_oracle("a", lex, k)
        assert [w for w, _ in got] == [w for w, _ in exp]
        assert np.allclose([s for _, s in got], [s for _, s in exp])


def test_neighbors_match_oracle_bundled(resources):
    lex = resources.lexicon
    assert len(lex) <= 100
    for word in ("beijing", "winter", "map", "sea"):
        for k in (1, 3, 10, len(lex)):
            got = semantic_neighbors(word, lex, k)
            exp = _neighbors_oracle(word, lex, k)
            assert [w for w, _ in got] == [w for w, _ in exp]


def test_neighbors_scores_non_increasing(resources):
    scores = [s for _, s in semantic_neighbors("river", resources.lexicon, 50)]
    assert scores == sorted(scores, reverse=True)
