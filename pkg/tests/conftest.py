from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from splitdom.harness import connected_graphs_upto, enumerate_small_graphs
from splitdom.patterns import catalog_lookup


@pytest.fixture(scope="session")
def petersen():
    return catalog_lookup("petersen")


@pytest.fixture(scope="session")
def small_connected():
    """Connected graphs up to isomorphism for modest n (shared cache)."""

    def get(max_n: int):
        return connected_graphs_upto(max_n)

    return get


@pytest.fixture(scope="session")
def graphs_exactly():
    def get(n: int, connected_only: bool = False):
        return enumerate_small_graphs(n, connected_only)

    return get
