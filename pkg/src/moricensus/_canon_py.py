"""Pure-Python canonical-form search for small labelled multigraphs.

Reference implementation of the hot kernel; ``moricensus._canon_cy`` is
the compiled twin and must produce byte-identical output.  The search
minimizes a flat integer encoding over node orderings, restricted to
orderings compatible with an iterated neighbourhood-colour refinement
and pruned against the best encoding found so far.

Encoding layout: ``(n, item_0, ..., item_{n-1})`` where the item for
position k is ``(label, b, j_1, e_1, m_1, ..., j_b, e_b, m_b)`` listing
the b back-edges from the node placed at k to already-placed positions,
sorted by (position, edge label).  Because each item states its own
length right after the node label, flat lexicographic comparison agrees
with itemwise comparison, which makes prefix pruning sound.
"""

from __future__ import annotations

__all__ = ["canonical_sequence"]


def _twins(n, labels, adj):
    """Static interchangeability matrix.

    Nodes u and v are twins when swapping them is an automorphism: equal
    labels and identical edge data to every third node.  Subtrees rooted
    at twin candidates reach the same minimum, so the search only ever
    expands one of them per depth.
    """
    view = []
    for v in range(n):
        entries = {}
        for (u, e, m) in adj[v]:
            entries.setdefault(u, []).append((e, m))
        view.append({u: tuple(sorted(es)) for u, es in entries.items()})
    twins = [[False] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if labels[u] != labels[v]:
                continue
            vu = {w: es for w, es in view[u].items() if w != v}
            vv = {w: es for w, es in view[v].items() if w != u}
            if vu == vv:
                twins[u][v] = twins[v][u] = True
    return twins


def _refine(n, labels, adj):
    """Colour nodes by iterated neighbourhood signatures.

    Returns a list of colour ranks; ranks are assigned by sorting
    signature values, so they are invariant under node relabelling.
    """
    base = []
    for v in range(n):
        incident = tuple(sorted((e, m) for (_, e, m) in adj[v]))
        base.append((labels[v], incident))
    order = sorted(set(base))
    rank = {key: i for i, key in enumerate(order)}
    colors = [rank[key] for key in base]
    ncolors = len(order)
    while True:
        keys = []
        for v in range(n):
            sig = tuple(sorted((e, m, colors[u]) for (u, e, m) in adj[v]))
            keys.append((colors[v], sig))
        order = sorted(set(keys))
        if len(order) == ncolors:
            return colors
        rank = {key: i for i, key in enumerate(order)}
        colors = [rank[key] for key in keys]
        ncolors = len(order)


def canonical_sequence(n, labels, edges):
    """Minimal flat encoding of the graph over admissible node orderings.

    ``labels`` is a sequence of n ints; ``edges`` a sequence of
    ``(u, v, elabel, mult)`` with u < v and unique (u, v, elabel).
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
    cell_order = [cells[c] for c in sorted(cells)]
    cell_at = []
    for cell in cell_order:
        cell_at.extend([cell] * len(cell))

    twins = _twins(n, labels, adj)
    pos = [-1] * n
    cur = [n]
    best = None

    def item_for(v):
        entries = sorted(
            (pos[u], e, m) for (u, e, m) in adj[v] if pos[u] >= 0
        )
        flat = [labels[v], len(entries)]
        for entry in entries:
            flat.extend(entry)
        return flat

    def dfs(depth, tight):
        # tight: cur equals the corresponding prefix of best (when best
        # exists), so segment comparisons against best stay meaningful.
        nonlocal best
        if depth == n:
            if best is None or (not tight and cur < best):
                best = list(cur)
            return
        tried = []
        for v in cell_at[depth]:
            if pos[v] >= 0:
                continue
            if any(twins[u][v] for u in tried):
                continue
            tried.append(v)
            item = item_for(v)
            if best is None:
                child_tight = True
            elif tight:
                off = len(cur)
                seg = best[off:off + len(item)]
                if item > seg:
                    continue
                child_tight = item == seg
            else:
                child_tight = False
            off = len(cur)
            pos[v] = depth
            cur.extend(item)
            dfs(depth + 1, child_tight)
            del cur[off:]
            pos[v] = -1

    dfs(0, True)
    return tuple(best)
