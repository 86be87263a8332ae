from itertools import combinations
from pathlib import Path

import pytest

from commtree import build_graph, load_graph

DATA = Path(__file__).resolve().parent.parent / "data"


def fig_analog_edges():
    """K5 on a..e plus K4 on d..g, overlapping in the edge d-e."""
    return sorted(set(combinations("abcde", 2)) | set(combinations("defg", 2)))


@pytest.fixture
def fig_analog():
    return build_graph(fig_analog_edges())


@pytest.fixture(scope="session")
def karate():
    return load_graph(DATA / "karate.txt")


@pytest.fixture(scope="session")
def data_dir():
    return DATA


def complete_graph(labels):
    return build_graph(list(combinations(labels, 2)))
