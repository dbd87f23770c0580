import random
from itertools import combinations

import networkx as nx
import pytest

from iterlin import Graph, make_graph


def to_nx(g: Graph) -> "nx.Graph":
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: "nx.Graph") -> Graph:
    nodes = sorted(h.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return make_graph(len(nodes), [(idx[u], idx[v]) for u, v in h.edges()])


def random_connected_graph(rng: random.Random, n_min: int = 2,
                           n_max: int = 40, extra: float = 0.5) -> Graph:
    """Random spanning tree plus a random sprinkle of extra edges."""
    n = rng.randint(n_min, n_max)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    budget = int(extra * n)
    for _ in range(budget):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    return make_graph(n, edges)


def permuted(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return make_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def all_graphs_upto(n: int):
    """Every labeled simple graph (not only connected) on up to n vertices."""
    for size in range(1, n + 1):
        pairs = list(combinations(range(size), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            yield make_graph(size, edges)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
