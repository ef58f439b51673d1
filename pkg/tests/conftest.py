import pytest

from thumbtype.geometry import build_layout
from thumbtype.lexicon import from_pairs, load_shipped_lexicon
from thumbtype.session import load_phrases, shipped_phrases_path


@pytest.fixture(scope="session")
def enlarged():
    return build_layout("enlarged")


@pytest.fixture(scope="session")
def original():
    return build_layout("original")


@pytest.fixture(scope="session")
def shipped_lexicon():
    return load_shipped_lexicon()


@pytest.fixture(scope="session")
def shipped_phrases(shipped_lexicon):
    return load_phrases(shipped_phrases_path(), shipped_lexicon)


@pytest.fixture()
def tiny_lexicon():
    return from_pairs([("the", 50), ("they", 30), ("cat", 20)])
