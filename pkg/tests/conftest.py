import sys
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).resolve().parent
sys.path.insert(0, str(TESTS_DIR))   # makes `oracles` importable

from vietext.ingest import Corpus, load_csv  # noqa: E402
from vietext.resources import data_text  # noqa: E402
from vietext.segment.dictionary import SegmenterDictionary  # noqa: E402


@pytest.fixture(scope="session")
def bundled_dictionary() -> SegmenterDictionary:
    return SegmenterDictionary.parse(data_text("dictionary_vi.txt"))


@pytest.fixture(scope="session")
def gold_text() -> str:
    return data_text("gold_vi_200.txt")


@pytest.fixture()
def feedback_corpus() -> Corpus:
    data = (TESTS_DIR.parent / "demos" / "data" / "feedback.csv").read_bytes()
    corpus = Corpus()
    corpus.add(*load_csv(data, "feedback"))
    return corpus
