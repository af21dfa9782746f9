"""Pure-Python fallback kernels.

Same API as the compiled module `_core`; used when the extension is not
built or when MATCHPERM_PURE=1 is set.
"""

from collections import deque

IMPLEMENTATION = "pure"

_INF = -1


def max_matching(adj, n_left, n_right):
    """Hopcroft-Karp maximum matching.

    `adj` is a list of `n_left` lists with right-side indices in [0, n_right).
    Returns (size, pair_left, pair_right) where unmatched entries are -1.
    The traversal order is fixed by the adjacency order, so the result is
    deterministic for a given input.
    """
    pair_l = [-1] * n_left
    pair_r = [-1] * n_right
    dist = [0] * n_left

    def bfs():
        queue = deque()
        found = False
        for u in range(n_left):
            if pair_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = pair_r[v]
                if w == -1:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u):
        for v in adj[u]:
            w = pair_r[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                pair_l[u] = v
                pair_r[v] = u
                return True
        dist[u] = _INF
        return False

    size = 0
    while bfs():
        for u in range(n_left):
            if pair_l[u] == -1 and dfs(u):
                size += 1
    return size, pair_l, pair_r


def ryser(rows, n):
    """Permanent of an n x n integer matrix by Ryser's formula.

    `rows` is a flat list of n*n integers in row-major order.  Uses a Gray
    code over column subsets; exact (Python integers).
    """
    if n == 0:
        return 1
    row_sums = [0] * n
    total = 0
    gray = 0
    # perm = (-1)^n sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} a_ij
    for counter in range(1, 1 << n):
        next_gray = counter ^ (counter >> 1)
        changed = gray ^ next_gray
        j = changed.bit_length() - 1
        if next_gray & changed:
            for i in range(n):
                row_sums[i] += rows[i * n + j]
        else:
            for i in range(n):
                row_sums[i] -= rows[i * n + j]
        gray = next_gray
        prod = 1
        for i in range(n):
            prod *= row_sums[i]
            if prod == 0:
                break
        if (n - gray.bit_count()) % 2:
            total -= prod
        else:
            total += prod
    return total
