# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled canonical-form search; byte-identical twin of ``_canon_py``.

The colour refinement stays in Python (it is cheap); the ordering
search, which is factorial in the worst case, runs on C integer arrays.
See ``_canon_py`` for the encoding layout and the pruning argument.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

from moricensus._canon_py import _refine, _twins

__all__ = ["canonical_sequence"]


cdef struct Search:
    int n
    int total_len
    int cur_len
    bint best_set
    long long *cur
    long long *best
    int *adj_start   # n + 1 offsets into the adjacency arrays
    int *adj_nbr
    int *adj_ela
    int *adj_mul
    long long *labels
    int *pos         # node -> position, -1 if unplaced
    int *cell_of_depth
    int *cell_start  # ncells + 1 offsets into cell_nodes
    int *cell_nodes
    char *twin       # n*n interchangeability matrix
    int *tried       # per-depth scratch: candidates already expanded
    # scratch for one item's back-edge entries, reused across depths
    int *ent_pos
    int *ent_ela
    int *ent_mul


cdef int _build_item(Search *s, int v, int off) nogil:
    """Write the item for placing ``v`` next at cur[off:]; return its length."""
    cdef int cnt = 0
    cdef int i, j, p, e, m
    for i in range(s.adj_start[v], s.adj_start[v + 1]):
        p = s.pos[s.adj_nbr[i]]
        if p < 0:
            continue
        e = s.adj_ela[i]
        m = s.adj_mul[i]
        j = cnt
        while j > 0 and (s.ent_pos[j - 1] > p or
                         (s.ent_pos[j - 1] == p and s.ent_ela[j - 1] > e)):
            s.ent_pos[j] = s.ent_pos[j - 1]
            s.ent_ela[j] = s.ent_ela[j - 1]
            s.ent_mul[j] = s.ent_mul[j - 1]
            j -= 1
        s.ent_pos[j] = p
        s.ent_ela[j] = e
        s.ent_mul[j] = m
        cnt += 1
    s.cur[off] = s.labels[v]
    s.cur[off + 1] = cnt
    for i in range(cnt):
        s.cur[off + 2 + 3 * i] = s.ent_pos[i]
        s.cur[off + 3 + 3 * i] = s.ent_ela[i]
        s.cur[off + 4 + 3 * i] = s.ent_mul[i]
    return 2 + 3 * cnt


cdef int _compare(long long *a, long long *b, int length) nogil:
    cdef int i
    for i in range(length):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


cdef void _dfs(Search *s, int depth, bint tight) nogil:
    cdef int cid, i, j, v, off, item_len, cmp_result, tried_count
    cdef bint child_tight, skip
    if depth == s.n:
        if not s.best_set:
            memcpy(s.best, s.cur, s.total_len * sizeof(long long))
            s.best_set = True
        elif not tight and _compare(s.cur, s.best, s.total_len) < 0:
            memcpy(s.best, s.cur, s.total_len * sizeof(long long))
        return
    cid = s.cell_of_depth[depth]
    tried_count = 0
    for i in range(s.cell_start[cid], s.cell_start[cid + 1]):
        v = s.cell_nodes[i]
        if s.pos[v] >= 0:
            continue
        skip = False
        for j in range(tried_count):
            if s.twin[s.tried[depth * s.n + j] * s.n + v]:
                skip = True
                break
        if skip:
            continue
        s.tried[depth * s.n + tried_count] = v
        tried_count += 1
        off = s.cur_len
        item_len = _build_item(s, v, off)
        if not s.best_set:
            child_tight = True
        elif tight:
            cmp_result = _compare(s.cur + off, s.best + off, item_len)
            if cmp_result > 0:
                continue
            child_tight = cmp_result == 0
        else:
            child_tight = False
        s.pos[v] = depth
        s.cur_len = off + item_len
        _dfs(s, depth + 1, child_tight)
        s.cur_len = off
        s.pos[v] = -1


def canonical_sequence(n, labels, edges):
    """Minimal flat encoding of the graph over admissible node orderings.

    Same contract and output as ``moricensus._canon_py.canonical_sequence``.
    """
    if n == 0:
        return (0,)
    adj = [[] for _ in range(n)]
    for (u, v, e, m) in edges:
        adj[u].append((v, e, m))
        adj[v].append((u, e, m))

    colors = _refine(n, labels, adj)
    cells = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    cell_lists = [cells[c] for c in sorted(cells)]
    twin_rows = _twins(n, labels, adj)

    cdef Search s
    cdef int nedges = len(edges)
    cdef int total_len = 1 + 2 * n + 3 * nedges
    cdef int max_deg = max((len(a) for a in adj), default=0)
    cdef int ncells = len(cell_lists)
    cdef int i, j, k

    s.n = n
    s.total_len = total_len
    s.cur_len = 1
    s.best_set = False
    s.cur = <long long *> malloc(total_len * sizeof(long long))
    s.best = <long long *> malloc(total_len * sizeof(long long))
    s.adj_start = <int *> malloc((n + 1) * sizeof(int))
    s.adj_nbr = <int *> malloc(max(2 * nedges, 1) * sizeof(int))
    s.adj_ela = <int *> malloc(max(2 * nedges, 1) * sizeof(int))
    s.adj_mul = <int *> malloc(max(2 * nedges, 1) * sizeof(int))
    s.labels = <long long *> malloc(n * sizeof(long long))
    s.pos = <int *> malloc(n * sizeof(int))
    s.cell_of_depth = <int *> malloc(n * sizeof(int))
    s.cell_start = <int *> malloc((ncells + 1) * sizeof(int))
    s.cell_nodes = <int *> malloc(n * sizeof(int))
    s.twin = <char *> malloc(n * n * sizeof(char))
    s.tried = <int *> malloc(n * n * sizeof(int))
    s.ent_pos = <int *> malloc(max(max_deg, 1) * sizeof(int))
    s.ent_ela = <int *> malloc(max(max_deg, 1) * sizeof(int))
    s.ent_mul = <int *> malloc(max(max_deg, 1) * sizeof(int))
    if (s.cur == NULL or s.best == NULL or s.adj_start == NULL
            or s.adj_nbr == NULL or s.adj_ela == NULL or s.adj_mul == NULL
            or s.labels == NULL or s.pos == NULL or s.cell_of_depth == NULL
            or s.cell_start == NULL or s.cell_nodes == NULL
            or s.twin == NULL or s.tried == NULL
            or s.ent_pos == NULL or s.ent_ela == NULL or s.ent_mul == NULL):
        _free_search(&s)
        raise MemoryError()

    try:
        s.cur[0] = n
        k = 0
        for i in range(n):
            s.labels[i] = labels[i]
            s.pos[i] = -1
            s.adj_start[i] = k
            k += len(adj[i])
        s.adj_start[n] = k
        for i in range(n):
            k = s.adj_start[i]
            for (u, e, m) in adj[i]:
                s.adj_nbr[k] = u
                s.adj_ela[k] = e
                s.adj_mul[k] = m
                k += 1
        k = 0
        for i in range(ncells):
            s.cell_start[i] = k
            for v in cell_lists[i]:
                s.cell_nodes[k] = v
                k += 1
            for j in range(s.cell_start[i], k):
                s.cell_of_depth[j] = i
        s.cell_start[ncells] = k
        for i in range(n):
            for j in range(n):
                s.twin[i * n + j] = 1 if twin_rows[i][j] else 0

        _dfs(&s, 0, True)
        return tuple(s.best[i] for i in range(total_len))
    finally:
        _free_search(&s)


cdef void _free_search(Search *s):
    free(s.cur)
    free(s.best)
    free(s.adj_start)
    free(s.adj_nbr)
    free(s.adj_ela)
    free(s.adj_mul)
    free(s.labels)
    free(s.pos)
    free(s.cell_of_depth)
    free(s.cell_start)
    free(s.cell_nodes)
    free(s.twin)
    free(s.tried)
    free(s.ent_pos)
    free(s.ent_ela)
    free(s.ent_mul)
