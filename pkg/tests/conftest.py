import numpy as np
import pytest

from mappamundi.lexicon import Lexicon, LexiconEntry, Pos
from mappamundi.session import Engine, EngineResources


def make_lexicon(records, dim=None):
    """records: (word, pos, idf, phonetic tuple, embedding list)."""
    dim = dim or len(records[0][4])
    lex = Lexicon(dim=dim)
    for word, pos, idf, phon, emb in records:
        arr = np.array(emb, dtype=np.float64)
        arr.flags.writeable = False
        lex.entries[word] = LexiconEntry(word, Pos[pos], idf, tuple(phon), arr)
    return lex


@pytest.fixture(scope="session")
def resources():
    return EngineResources.load()


@pytest.fixture
def engine(resources, tmp_path):
    return Engine(resources, tmp_path / "sessions")
