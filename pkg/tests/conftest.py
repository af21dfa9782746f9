"""Shared fixtures: canonical small graphs and random graph factories."""

import random

import pytest

from matchperm.graph import BipartiteGraph


def cycle_graph(n: int) -> BipartiteGraph:
    """Even cycle C_n with blacks and whites alternating along the cycle."""
    assert n % 2 == 0
    half = n // 2
    g = BipartiteGraph(half, half)
    order = []
    for i in range(half):
        order += [i, half + i]
    for i in range(n):
        g.add_edge(*sorted((order[i], order[(i + 1) % n])))
    return g


def complete_graph(a: int, b: int) -> BipartiteGraph:
    return BipartiteGraph(a, b, [(i, a + j) for i in range(a)
                                 for j in range(b)])


def cube_graph() -> BipartiteGraph:
    """The 3-cube: vertices are bit strings, blacks have even weight."""
    blacks = [0b000, 0b011, 0b101, 0b110]
    whites = [0b001, 0b010, 0b100, 0b111]
    idx = {w: i for i, w in enumerate(blacks)}
    idx.update({w: 4 + i for i, w in enumerate(whites)})
    g = BipartiteGraph(4, 4)
    for x in blacks:
        for bit in (1, 2, 4):
            g.add_edge(*sorted((idx[x], idx[x ^ bit])))
    return g


def random_bipartite(rng: random.Random, nb: int, nw: int,
                     p: float) -> BipartiteGraph:
    g = BipartiteGraph(nb, nw)
    for b in range(nb):
        for w in range(nb, nb + nw):
            if rng.random() < p:
                g.add_edge(b, w)
    return g


def random_matching_covered(rng: random.Random, max_side: int
                            ) -> BipartiteGraph:
    """Rejection sampling until the graph is matching covered."""
    from matchperm.matching import is_matching_covered

    while True:
        nb = rng.randint(1, max_side)
        g = random_bipartite(rng, nb, nb, rng.choice([0.3, 0.5]))
        if g.m and is_matching_covered(g):
            return g


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def k33():
    return complete_graph(3, 3)


@pytest.fixture
def q3():
    return cube_graph()


@pytest.fixture
def rng():
    return random.Random(0)
