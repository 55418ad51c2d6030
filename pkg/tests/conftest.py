import itertools
import os

import numpy as np
import pytest

from linkcohesion import Graph, load_communities, load_edge_list

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

EU_EDGE_FILE = "email-Eu-core.txt"
EU_LABEL_FILE = "email-Eu-core-department-labels.txt"


def make_graph(n, edges) -> Graph:
    return Graph(n, [u for u, _ in edges], [v for _, v in edges])


def complete_graph(n) -> Graph:
    return make_graph(n, list(itertools.combinations(range(n), 2)))


def cycle_graph(n) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def random_graph(rng, max_n=30, min_n=4, p=None) -> Graph:
    """Seeded G(n, p) with at least one edge."""
    while True:
        n = int(rng.integers(min_n, max_n + 1))
        prob = float(rng.uniform(0.08, 0.6)) if p is None else p
        mask = rng.random((n, n)) < prob
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if mask[i, j]]
        if edges:
            return make_graph(n, edges)


def eu_data_dir() -> str:
    return os.environ.get(
        "LINKCOHESION_DATA", os.path.join(os.path.dirname(DATA_DIR), "..", "data")
    )


@pytest.fixture(scope="session")
def karate():
    return load_edge_list(os.path.join(DATA_DIR, "karate.txt"))


@pytest.fixture(scope="session")
def karate_truth(karate):
    return load_communities(os.path.join(DATA_DIR, "karate_communities.txt"), karate)


@pytest.fixture(scope="session")
def eu_email():
    """EU email graph + department labels; skips when the files are absent."""
    base = eu_data_dir()
    edge_path = os.path.join(base, EU_EDGE_FILE)
    label_path = os.path.join(base, EU_LABEL_FILE)
    if not (os.path.exists(edge_path) and os.path.exists(label_path)):
        pytest.skip(
            f"EU email dataset not found under {os.path.abspath(base)}; "
            "run scripts/fetch_eu_email.py to download it"
        )
    g = load_edge_list(edge_path, drop_self_loops=True, symmetrize=True)
    truth = load_communities(label_path, g)
    return g, truth
