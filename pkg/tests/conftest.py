from pathlib import Path

import pytest

from treematch.corpus import read_conll_file
from treematch.inventory import load_inventory
from treematch.kb import build_kb

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture()
def fig2_trees():
    return read_conll_file(DATA / "fig2.conll")


@pytest.fixture()
def fig2_kb(fig2_trees):
    return build_kb(fig2_trees)


@pytest.fixture()
def mini_inventory():
    return load_inventory(DATA / "mini_inventory.tsv")


@pytest.fixture()
def mini_doc_trees():
    return read_conll_file(DATA / "mini_doc.conll")


@pytest.fixture()
def mini_kb():
    return build_kb(read_conll_file(DATA / "mini_kb_corpus.conll"))
