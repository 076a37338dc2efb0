"""Regenerate the bundled sample data under src/mappamundi/data/.

The embeddings are synthetic: each word sits near a thematic axis with a
small word-hash jitter, so semantic neighborhoods follow the five scene
categories and stay fully deterministic.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from mappamundi.rng import fnv1a64  # noqa: E402

DATA = ROOT / "src" / "mappamundi" / "data"

DIM = 8

# word -> (axis, pos, idf, phonetic)
WORDS = {
    # architecture (axis 0)
    "wall": (0, "NOUN", 1.4, "w ao l"),
    "tower": (0, "NOUN", 1.6, "t aw er"),
    "temple": (0, "NOUN", 1.8, "t eh m p ah l"),
    "bridge": (0, "NOUN", 1.5, "b r ih jh"),
    "palace": (0, "NOUN", 1.9, "p ae l ah s"),
    "pagoda": (0, "NOUN", 2.2, "p ah g ow d ah"),
    "gate": (0, "NOUN", 1.3, "g ey t"),
    "city": (0, "NOUN", 1.2, "s ih t iy"),
    "beijing": (0, "NOUN", 2.0, "b ey jh ih ng"),
    "village": (0, "NOUN", 1.4, "v ih l ih jh"),
    "pavilion": (0, "NOUN", 2.1, "p ah v ih l y ah n"),
    "build": (0, "VERB", 1.1, "b ih l d"),
    "ancient": (0, "ADJ", 1.3, "ey n sh ah n t"),
    # mountain (axis 1)
    "mountain": (1, "NOUN", 1.5, "m aw n t ah n"),
    "peak": (1, "NOUN", 1.7, "p iy k"),
    "cliff": (1, "NOUN", 1.8, "k l ih f"),
    "stone": (1, "NOUN", 1.3, "s t ow n"),
    "ridge": (1, "NOUN", 1.9, "r ih jh"),
    "valley": (1, "NOUN", 1.5, "v ae l iy"),
    "hill": (1, "NOUN", 1.3, "hh ih l"),
    "snow": (1, "NOUN", 1.6, "s n ow"),
    "winter": (1, "NOUN", 1.2, "w ih n t er"),
    "summit": (1, "NOUN", 1.9, "s ah m ih t"),
    "boulder": (1, "NOUN", 2.0, "b ow l d er"),
    "climb": (1, "VERB", 1.4, "k l ay m"),
    "frozen": (1, "ADJ", 1.5, "f r ow z ah n"),
    # river (axis 2)
    "river": (2, "NOUN", 1.4, "r ih v er"),
    "stream": (2, "NOUN", 1.6, "s t r iy m"),
    "current": (2, "NOUN", 1.5, "k er ah n t"),
    "waterfall": (2, "NOUN", 2.0, "w ao t er f ao l"),
    "delta": (2, "NOUN", 2.1, "d eh l t ah"),
    "flood": (2, "NOUN", 1.7, "f l ah d"),
    "canal": (2, "NOUN", 1.8, "k ah n ae l"),
    "spring": (2, "NOUN", 1.5, "s p r ih ng"),
    "flow": (2, "VERB", 1.3, "f l ow"),
    "rapid": (2, "ADJ", 1.6, "r ae p ih d"),
    # grassland (axis 3)
    "grass": (3, "NOUN", 1.4, "g r ae s"),
    "meadow": (3, "NOUN", 1.9, "m eh d ow"),
    "prairie": (3, "NOUN", 2.1, "p r eh r iy"),
    "field": (3, "NOUN", 1.2, "f iy l d"),
    "flower": (3, "NOUN", 1.4, "f l aw er"),
    "bamboo": (3, "NOUN", 1.8, "b ae m b uw"),
    "tree": (3, "NOUN", 1.2, "t r iy"),
    "moss": (3, "NOUN", 2.0, "m ao s"),
    "reed": (3, "NOUN", 2.1, "r iy d"),
    "graze": (3, "VERB", 2.0, "g r ey z"),
    "green": (3, "ADJ", 1.2, "g r iy n"),
    # lake (axis 4)
    "lake": (4, "NOUN", 1.5, "l ey k"),
    "pond": (4, "NOUN", 1.7, "p aa n d"),
    "lagoon": (4, "NOUN", 2.2, "l ah g uw n"),
    "mirror": (4, "NOUN", 1.8, "m ih r er"),
    "island": (4, "NOUN", 1.6, "ay l ah n d"),
    "sea": (4, "NOUN", 1.4, "s iy"),
    "shore": (4, "NOUN", 1.6, "sh ao r"),
    "bay": (4, "NOUN", 1.5, "b ey"),
    "marsh": (4, "NOUN", 2.0, "m aa r sh"),
    "pool": (4, "NOUN", 1.5, "p uw l"),
    "calm": (4, "ADJ", 1.5, "k aa m"),
    # abstract (axes 5-7)
    "utopia": (5, "NOUN", 2.4, "y uw t ow p iy ah"),
    "map": (5, "NOUN", 1.6, "m a p"),
    "dream": (5, "NOUN", 1.5, "d r iy m"),
    "memory": (5, "NOUN", 1.6, "m eh m er iy"),
    "journey": (6, "NOUN", 1.7, "jh er n iy"),
    "myth": (6, "NOUN", 2.0, "m ih th"),
    "olympics": (6, "NOUN", 2.5, "ow l ih m p ih k s"),
    "sport": (6, "NOUN", 1.5, "s p ao r t"),
    "game": (6, "NOUN", 1.3, "g ey m"),
    "bid": (6, "VERB", 1.5, "b ih d"),
    "winner": (6, "NOUN", 1.6, "w ih n er"),
    "dance": (7, "NOUN", 1.5, "d ae n s"),
    "song": (7, "NOUN", 1.4, "s ao ng"),
    "sing": (7, "VERB", 1.4, "s ih ng"),
    "see": (7, "VERB", 1.0, "s iy"),
    "knight": (7, "NOUN", 2.1, "n ay t"),
    "night": (5, "NOUN", 1.3, "n ay t"),
    "peace": (5, "NOUN", 1.6, "p iy s"),
    "piece": (7, "NOUN", 1.3, "p iy s"),
    # function words kept so POS filtering has something to drop;
    # axis None = pure jitter, so they sit far from every theme
    "for": (None, "OTHER", 0.1, "f ao r"),
    "the": (None, "OTHER", 0.1, "dh ah"),
    "of": (None, "OTHER", 0.1, "ah v"),
    "and": (None, "OTHER", 0.1, "ae n d"),
    "with": (None, "OTHER", 0.1, "w ih th"),
    "in": (None, "OTHER", 0.1, "ih n"),
}


def embedding(word: str, axis: int | None) -> list[float]:
    vec = [0.0] * DIM
    if axis is not None:
        vec[axis] = 1.0
    h = fnv1a64(word)
    for d in range(DIM):
        h = (h * 6364136223846793005 + 1442695040888963407) % (1 << 64)
        vec[d] += ((h >> 11) / 2**53 - 0.5) * 0.18
    return vec


def write_lexicon() -> None:
    lines = [f"#dim={DIM}", "# bundled sample lexicon (synthetic embeddings)"]
    for word, (axis, pos, idf, phon) in sorted(WORDS.items()):
        emb = ",".join(f"{v:.6f}" for v in embedding(word, axis))
        lines.append(f"{word}\t{pos}\t{idf}\t{phon}\t{emb}")
    (DATA / "lexicon.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")


TRIPLES = [
    ("beijing", "hosts", "olympics"),
    ("beijing", "builds", "great_wall"),
    ("beijing", "holds", "temple"),
    ("beijing", "dreams_of", "utopia"),
    ("beijing", "gathers", "palace"),
    ("olympics", "celebrates", "sport"),
    ("olympics", "crowns", "winner"),
    ("olympics", "stages", "game"),
    ("winter", "brings", "snow"),
    ("winter", "stills", "lake"),
    ("winter", "silences", "song"),
    ("snow", "caps", "peak"),
    ("snow", "melts_into", "stream"),
    ("map", "charts", "island"),
    ("map", "traces", "river"),
    ("map", "imagines", "utopia"),
    ("map", "folds", "memory"),
    ("map", "borders", "sea"),
    ("utopia", "floats_on", "island"),
    ("utopia", "feeds", "dream"),
    ("utopia", "walls_in", "garden"),
    ("island", "anchors", "lighthouse"),
    ("island", "rests_in", "lagoon"),
    ("river", "carves", "valley"),
    ("river", "feeds", "delta"),
    ("river", "passes", "bridge"),
    ("river", "remembers", "spring"),
    ("mountain", "shelters", "temple"),
    ("mountain", "casts", "shadow"),
    ("mountain", "rises_over", "meadow"),
    ("bridge", "spans", "canal"),
    ("bridge", "joins", "village"),
    ("temple", "keeps", "myth"),
    ("temple", "rings", "bell"),
    ("palace", "mirrors", "pond"),
    ("garden", "borders", "pavilion"),
    ("garden", "grows", "bamboo"),
    ("lake", "reflects", "moon"),
    ("lake", "hides", "marsh"),
    ("sea", "swallows", "journey"),
    ("sea", "writes", "myth"),
    ("journey", "follows", "road"),
    ("journey", "begins_with", "gate"),
    ("dream", "sails", "sea"),
    ("dream", "climbs", "tower"),
    ("memory", "pools_in", "pond"),
    ("myth", "names", "mountain"),
    ("grass", "covers", "prairie"),
    ("meadow", "hums_with", "song"),
    ("flower", "opens_at", "dawn"),
    ("moon", "silvers", "mirror"),
    ("shadow", "crosses", "field"),
    ("road", "winds_past", "hill"),
    ("lighthouse", "watches", "bay"),
    ("bell", "wakes", "city"),
    ("dawn", "gilds", "summit"),
    ("peace", "settles_on", "valley"),
    ("night", "drinks", "lagoon"),
    ("knight", "guards", "gate"),
    ("song", "carries_over", "water"),
    ("water", "circles", "island"),
    ("winner", "raises", "flag"),
    ("flag", "crowns", "tower"),
    ("sport", "fills", "field"),
    ("game", "echoes_in", "stadium"),
    ("stadium", "neighbors", "canal"),
    ("great_wall", "climbs", "ridge"),
    ("great_wall", "guards", "city"),
    ("pagoda", "overlooks", "pool"),
    ("pavilion", "faces", "waterfall"),
    ("waterfall", "veils", "cliff"),
    ("cliff", "drops_to", "shore"),
    ("shore", "collects", "reed"),
    ("reed", "whispers_to", "marsh"),
    ("bamboo", "shades", "pool"),
    ("prairie", "meets", "horizon"),
    ("horizon", "swallows", "sun"),
    ("sun", "dries", "flood"),
    ("flood", "redraws", "map"),
    ("spring", "wakes", "grass"),
    ("stone", "remembers", "glacier"),
    ("glacier", "feeds", "river"),
    ("boulder", "blocks", "stream"),
    ("tree", "leans_over", "pond"),
    ("moss", "softens", "stone"),
    ("village", "burns", "lantern"),
    ("lantern", "guides", "boat"),
    ("boat", "crosses", "bay"),
    ("piece", "completes", "map"),
    ("dance", "circles", "fire"),
    ("fire", "warms", "winter"),
    ("mirror", "doubles", "moon"),
    ("delta", "opens_to", "sea"),
    ("city", "dreams_of", "garden"),
    ("gate", "opens_to", "journey"),
    ("hill", "hides", "spring"),
    ("tower", "counts", "stars"),
    ("stars", "map", "night"),
    ("pool", "keeps", "sky"),
    ("sky", "floods", "lake"),
]


def write_kg() -> None:
    lines = ["# bundled sample knowledge graph: maps, rivers, utopia, islands"]
    lines += [f"{h}\t{r}\t{t}" for h, r, t in TRIPLES]
    (DATA / "kg.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")


SEEDS = {
    "architecture": [
        "wall", "tower", "temple", "bridge", "palace", "pagoda",
        "gate", "city", "village", "pavilion",
    ],
    "mountain": [
        "mountain", "peak", "cliff", "stone", "ridge", "valley",
        "hill", "snow", "summit", "boulder",
    ],
    "river": [
        "river", "stream", "current", "waterfall", "delta", "flood",
        "canal", "spring", "flow",
    ],
    "grassland": [
        "grass", "meadow", "prairie", "field", "flower", "bamboo",
        "tree", "moss", "reed",
    ],
    "lake": [
        "lake", "pond", "lagoon", "mirror", "island", "sea",
        "shore", "bay", "marsh", "pool",
    ],
}


def write_seeds() -> None:
    lines = ["# category seed words for nearest-centroid classification"]
    for cat, words in SEEDS.items():
        lines += [f"{cat}\t{w}" for w in words]
    (DATA / "seeds.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")


GLYPHS = {
    "architecture": [
        '<g><rect x="-12" y="-6" width="24" height="16" fill="none" stroke="#8a5a3b" stroke-width="2"/><path d="M -16 -6 L 0 -18 L 16 -6" fill="none" stroke="#8a5a3b" stroke-width="2"/></g>',
        '<g><path d="M -6 12 L -6 -14 L 6 -14 L 6 12 M -10 -14 L 10 -14 M -8 -20 L 8 -20" fill="none" stroke="#8a5a3b" stroke-width="2"/></g>',
        '<g><path d="M -16 8 Q 0 -10 16 8 M -12 8 L -12 14 M 12 8 L 12 14" fill="none" stroke="#8a5a3b" stroke-width="2"/></g>',
        '<g><path d="M -10 14 L -10 -8 L 0 -16 L 10 -8 L 10 14 M -4 14 L -4 2 L 4 2 L 4 14" fill="none" stroke="#8a5a3b" stroke-width="2"/></g>',
        '<g><path d="M -14 12 L 14 12 M -10 12 L -10 -4 L 10 -4 L 10 12 M -14 -4 L 0 -14 L 14 -4" fill="none" stroke="#8a5a3b" stroke-width="2"/></g>',
    ],
    "mountain": [
        '<g><path d="M -16 10 L -4 -12 L 4 0 L 10 -8 L 16 10 Z" fill="none" stroke="#4a5d52" stroke-width="2"/></g>',
        '<g><path d="M -16 10 L 0 -16 L 16 10 M -6 -2 L 0 -8 L 6 -2" fill="none" stroke="#4a5d52" stroke-width="2"/></g>',
        '<g><path d="M -18 10 L -8 -6 L 0 4 L 8 -14 L 18 10" fill="none" stroke="#4a5d52" stroke-width="2"/></g>',
        '<g><path d="M -14 10 Q -6 -14 0 10 M 0 10 Q 8 -18 14 10" fill="none" stroke="#4a5d52" stroke-width="2"/></g>',
        '<g><path d="M -16 10 L 0 -12 L 16 10 M -3 -8 L 3 -8" fill="none" stroke="#4a5d52" stroke-width="2"/></g>',
    ],
    "river": [
        '<g><path d="M -16 -6 Q -8 -12 0 -6 T 16 -6 M -16 2 Q -8 -4 0 2 T 16 2 M -16 10 Q -8 4 0 10 T 16 10" fill="none" stroke="#3e6e8e" stroke-width="2"/></g>',
        '<g><path d="M -14 -12 Q 4 -4 -6 4 Q -12 10 14 12" fill="none" stroke="#3e6e8e" stroke-width="2"/></g>',
        '<g><path d="M -16 0 Q -8 -8 0 0 T 16 0" fill="none" stroke="#3e6e8e" stroke-width="2"/><path d="M -12 8 Q -4 2 4 8 T 16 8" fill="none" stroke="#3e6e8e" stroke-width="1.5"/></g>',
        '<g><path d="M 0 -16 Q -6 -4 0 2 Q 6 8 0 16" fill="none" stroke="#3e6e8e" stroke-width="2"/></g>',
        '<g><path d="M -16 4 Q 0 -16 16 4 M -10 10 Q 0 -2 10 10" fill="none" stroke="#3e6e8e" stroke-width="2"/></g>',
    ],
    "grassland": [
        '<g><path d="M -12 10 L -10 -6 M -6 10 L -6 -10 M 0 10 L 2 -8 M 6 10 L 6 -12 M 12 10 L 10 -6" stroke="#6d8f4e" stroke-width="2" fill="none"/></g>',
        '<g><path d="M -10 10 Q -14 -2 -8 -10 M 0 10 Q -2 -6 4 -12 M 10 10 Q 12 -2 8 -8" stroke="#6d8f4e" stroke-width="2" fill="none"/></g>',
        '<g><path d="M -14 10 L 14 10 M -8 10 Q -10 -2 -4 -8 M 4 10 Q 2 -4 8 -10" stroke="#6d8f4e" stroke-width="2" fill="none"/></g>',
        '<g><circle cx="0" cy="-8" r="4" fill="none" stroke="#6d8f4e" stroke-width="2"/><path d="M 0 -4 L 0 12 M 0 4 Q -6 2 -8 -2 M 0 8 Q 6 6 8 2" stroke="#6d8f4e" stroke-width="2" fill="none"/></g>',
        '<g><path d="M -12 8 Q 0 2 12 8 M -12 12 Q 0 6 12 12 M 0 4 L 0 -12 M 0 -6 Q -6 -8 -6 -12 M 0 -8 Q 6 -10 6 -14" stroke="#6d8f4e" stroke-width="2" fill="none"/></g>',
    ],
    "lake": [
        '<g><ellipse cx="0" cy="2" rx="15" ry="9" fill="none" stroke="#46788a" stroke-width="2"/><path d="M -8 2 Q 0 -2 8 2" fill="none" stroke="#46788a" stroke-width="1.5"/></g>',
        '<g><path d="M -16 0 Q -8 -6 0 0 T 16 0 Q 8 10 0 8 T -16 0 Z" fill="none" stroke="#46788a" stroke-width="2"/></g>',
        '<g><ellipse cx="0" cy="4" rx="14" ry="7" fill="none" stroke="#46788a" stroke-width="2"/><circle cx="0" cy="-8" r="4" fill="none" stroke="#46788a" stroke-width="1.5"/></g>',
        '<g><path d="M -14 6 Q 0 -4 14 6 M -14 6 Q 0 14 14 6" fill="none" stroke="#46788a" stroke-width="2"/><path d="M -4 0 L 0 -10 L 4 0" fill="none" stroke="#46788a" stroke-width="1.5"/></g>',
        '<g><ellipse cx="0" cy="0" rx="16" ry="8" fill="none" stroke="#46788a" stroke-width="2"/><path d="M -6 -2 Q 0 -6 6 -2" fill="none" stroke="#46788a" stroke-width="1"/></g>',
    ],
}


def write_glyphs() -> None:
    glyph_dir = DATA / "glyphs"
    glyph_dir.mkdir(parents=True, exist_ok=True)
    counts = {}
    for cat, fragments in GLYPHS.items():
        counts[cat] = len(fragments)
        for i, frag in enumerate(fragments):
            (glyph_dir / f"{cat}_{i}.svg").write_text(frag + "\n", encoding="utf-8")
    manifest = {"category_counts": counts, "dir": "glyphs"}
    (DATA / "manifest.json").write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8"
    )


if __name__ == "__main__":
    DATA.mkdir(parents=True, exist_ok=True)
    write_lexicon()
    write_kg()
    write_seeds()
    write_glyphs()
    print(f"fixtures written to {DATA}")
