"""The compiled and pure kernels must be interchangeable."""

import random

import pytest

from matchperm import _kernels
from matchperm._kernels import _pure


def _adj_from_edges(nl, edges):
    adj = [[] for _ in range(nl)]
    for u, v in edges:
        adj[u].append(v)
    return adj


def test_implementation_reported():
    assert _kernels.IMPLEMENTATION in ("cython", "pure")


def test_matching_sizes_agree_random():
    rng = random.Random(4)
    for _ in range(200):
        nl = rng.randint(0, 7)
        nr = rng.randint(0, 7)
        edges = [(u, v) for u in range(nl) for v in range(nr)
                 if rng.random() < 0.4]
        adj = _adj_from_edges(nl, edges)
        assert _kernels.max_matching(adj, nl, nr)[0] == \
            _pure.max_matching(adj, nl, nr)[0]


def test_matching_perfect_on_complete():
    adj = [[0, 1, 2], [0, 1, 2], [0, 1, 2]]
    size, left, right = _kernels.max_matching(adj, 3, 3)
    assert size == 3
    assert sorted(left) == [0, 1, 2]
    assert all(right[left[u]] == u for u in range(3))


def test_ryser_small_known():
    assert _kernels.ryser([1] * 9, 3) == 6
    assert _kernels.ryser([1, 0, 0, 0, 1, 0, 0, 0, 1], 3) == 1
    assert _kernels.ryser([], 0) == 1
    assert _kernels.ryser([0], 1) == 0


def test_ryser_matches_pure_random():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 6)
        rows = [rng.randint(0, 1) for _ in range(n * n)]
        assert _kernels.ryser(rows, n) == _pure.ryser(rows, n)


def test_ryser_big_entries():
    # entries outside {0, 1} must take the big-integer path
    rows = [10 ** 12, 2, 3, 4]
    expect = 10 ** 12 * 4 + 2 * 3
    assert _kernels.ryser(rows, 2) == expect
    assert _pure.ryser(rows, 2) == expect


@pytest.mark.skipif(_kernels.IMPLEMENTATION != "cython",
                    reason="compiled kernel not built")
def test_compiled_kernel_selected_by_default():
    from matchperm._kernels import _core
    assert _core.IMPLEMENTATION == "cython"
