from __future__ import annotations

import pathlib

import pytest

from corefkit.conll import parse_corpus

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def load_corpus(name: str):
    corpus, diagnostics = parse_corpus((FIXTURES / name).read_text("utf-8"))
    assert not diagnostics, diagnostics
    return corpus


@pytest.fixture(scope="session")
def dialogue_gold():
    return load_corpus("dialogue_gold.conll").documents[0]


@pytest.fixture(scope="session")
def dialogue_pred():
    return load_corpus("dialogue_pred.conll").documents[0]


@pytest.fixture(scope="session")
def herstel_doc():
    return load_corpus("herstel.conll").documents[0]
