# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Hopcroft-Karp matching and Ryser's permanent.

The Ryser kernel has a 128-bit integer fast path for small entries
(|a_ij| <= 1, n <= 24; the partial sums provably fit) and falls back to
Python integers otherwise.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef long long int128 "__int128"

IMPLEMENTATION = "cython"

cdef int _INF = -1


def max_matching(adj, int n_left, int n_right):
    """Hopcroft-Karp maximum matching; mirrors the pure-Python kernel."""
    cdef int m_total = 0
    cdef int i, j, u, v, w, size, head, tail
    for i in range(n_left):
        m_total += len(adj[i])

    cdef int *adj_flat = <int *> malloc(m_total * sizeof(int))
    cdef int *adj_start = <int *> malloc((n_left + 1) * sizeof(int))
    cdef int *pair_l = <int *> malloc(n_left * sizeof(int))
    cdef int *pair_r = <int *> malloc(n_right * sizeof(int)) if n_right else <int *> malloc(sizeof(int))
    cdef int *dist = <int *> malloc(n_left * sizeof(int))
    cdef int *queue = <int *> malloc(n_left * sizeof(int)) if n_left else <int *> malloc(sizeof(int))
    cdef int *stack = <int *> malloc((n_left + 1) * sizeof(int))
    cdef int *iter_pos = <int *> malloc(n_left * sizeof(int)) if n_left else <int *> malloc(sizeof(int))

    if (adj_flat == NULL or adj_start == NULL or pair_l == NULL or
            pair_r == NULL or dist == NULL or queue == NULL or
            stack == NULL or iter_pos == NULL):
        free(adj_flat); free(adj_start); free(pair_l); free(pair_r)
        free(dist); free(queue); free(stack); free(iter_pos)
        raise MemoryError()

    try:
        j = 0
        for i in range(n_left):
            adj_start[i] = j
            for v in adj[i]:
                adj_flat[j] = v
                j += 1
        adj_start[n_left] = j

        for i in range(n_left):
            pair_l[i] = -1
        for i in range(n_right):
            pair_r[i] = -1

        size = 0
        while True:
            # BFS phase
            head = 0
            tail = 0
            for u in range(n_left):
                if pair_l[u] == -1:
                    dist[u] = 0
                    queue[tail] = u
                    tail += 1
                else:
                    dist[u] = _INF
            found = False
            while head < tail:
                u = queue[head]
                head += 1
                for j in range(adj_start[u], adj_start[u + 1]):
                    v = adj_flat[j]
                    w = pair_r[v]
                    if w == -1:
                        found = True
                    elif dist[w] == _INF:
                        dist[w] = dist[u] + 1
                        queue[tail] = w
                        tail += 1
            if not found:
                break
            # DFS phase (iterative)
            for i in range(n_left):
                if pair_l[i] == -1:
                    if _dfs(i, adj_flat, adj_start, pair_l, pair_r, dist,
                            stack, iter_pos):
                        size += 1

        out_l = [pair_l[i] for i in range(n_left)]
        out_r = [pair_r[i] for i in range(n_right)]
        return size, out_l, out_r
    finally:
        free(adj_flat); free(adj_start); free(pair_l); free(pair_r)
        free(dist); free(queue); free(stack); free(iter_pos)


cdef bint _dfs(int root, int *adj_flat, int *adj_start, int *pair_l,
               int *pair_r, int *dist, int *stack, int *iter_pos):
    cdef int depth = 0
    cdef int u, v, w, j
    stack[0] = root
    iter_pos[root] = adj_start[root]
    while depth >= 0:
        u = stack[depth]
        j = iter_pos[u]
        if j >= adj_start[u + 1]:
            dist[u] = _INF
            depth -= 1
            continue
        iter_pos[u] = j + 1
        v = adj_flat[j]
        w = pair_r[v]
        if w == -1:
            # augment along the stack
            while depth >= 0:
                u = stack[depth]
                v = adj_flat[iter_pos[u] - 1]
                w = pair_l[u]
                pair_l[u] = v
                pair_r[v] = u
                depth -= 1
            return True
        elif dist[w] == dist[u] + 1:
            depth += 1
            stack[depth] = w
            iter_pos[w] = adj_start[w]
    return False


def ryser(rows, int n):
    """Permanent of an n x n integer matrix (row-major flat list), exact."""
    cdef int i, j, small
    if n == 0:
        return 1
    small = 1
    for i in range(n * n):
        v = rows[i]
        if v < -1 or v > 1:
            small = 0
            break
    if small and n <= 24:
        return _ryser_i128(rows, n)
    return _ryser_obj(rows, n)


cdef object _ryser_i128(rows, int n):
    cdef int128 *row_sums = <int128 *> malloc(n * sizeof(int128))
    cdef long long *mat = <long long *> malloc(n * n * sizeof(long long))
    cdef int128 total = 0, prod
    cdef unsigned long long counter, gray, next_gray, changed
    cdef int i, j, bits
    if row_sums == NULL or mat == NULL:
        free(row_sums); free(mat)
        raise MemoryError()
    try:
        for i in range(n * n):
            mat[i] = rows[i]
        for i in range(n):
            row_sums[i] = 0
        gray = 0
        for counter in range(1, (<unsigned long long> 1) << n):
            next_gray = counter ^ (counter >> 1)
            changed = gray ^ next_gray
            j = 0
            while not (changed & ((<unsigned long long> 1) << j)):
                j += 1
            if next_gray & changed:
                for i in range(n):
                    row_sums[i] += mat[i * n + j]
            else:
                for i in range(n):
                    row_sums[i] -= mat[i * n + j]
            gray = next_gray
            prod = 1
            for i in range(n):
                prod *= row_sums[i]
                if prod == 0:
                    break
            bits = 0
            changed = gray
            while changed:
                changed &= changed - 1
                bits += 1
            if (n - bits) & 1:
                total -= prod
            else:
                total += prod
        # convert int128 -> Python int
        negative = total < 0
        if negative:
            total = -total
        result = (<object> (<unsigned long long> (total >> 64))) << 64
        result += <object> (<unsigned long long> (total & <unsigned long long> 0xFFFFFFFFFFFFFFFF))
        return -result if negative else result
    finally:
        free(row_sums); free(mat)


cdef object _ryser_obj(rows, int n):
    # Python-integer accumulation: exact for arbitrary entries.
    cdef unsigned long long counter, gray, next_gray, changed
    cdef int i, j, bits
    row_sums = [0] * n
    total = 0
    gray = 0
    for counter in range(1, (<unsigned long long> 1) << n):
        next_gray = counter ^ (counter >> 1)
        changed = gray ^ next_gray
        j = 0
        while not (changed & ((<unsigned long long> 1) << j)):
            j += 1
        if next_gray & changed:
            for i in range(n):
                row_sums[i] = row_sums[i] + rows[i * n + j]
        else:
            for i in range(n):
                row_sums[i] = row_sums[i] - rows[i * n + j]
        gray = next_gray
        prod = 1
        for i in range(n):
            prod = prod * row_sums[i]
            if prod == 0:
                break
        bits = 0
        changed = gray
        while changed:
            changed &= changed - 1
            bits += 1
        if (n - bits) & 1:
            total = total - prod
        else:
            total = total + prod
    return total
