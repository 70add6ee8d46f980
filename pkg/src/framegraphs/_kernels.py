"""Array kernels for the hot loops.

Every kernel is plain Python over numpy arrays.  When numba is importable and
``FRAMEGRAPHS_NO_JIT`` is unset (or ``0``), they are compiled with ``njit``;
otherwise the very same bodies run in the interpreter.  Both paths must give
identical results, which the test suite checks.
"""

import os

import numpy as np

_DISABLED = os.environ.get("FRAMEGRAPHS_NO_JIT", "0") not in ("", "0")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit as _njit

    JIT_ENABLED = True

    def jit(f):
        return _njit(cache=True, nogil=True)(f)

except ImportError:  # pragma: no cover - exercised through the env flag
    JIT_ENABLED = False

    def jit(f):
        return f


# Large work arrays are allocated by numpy rather than inside compiled code:
# numpy asks the kernel for transparent huge pages, which cuts TLB misses
# on the random accesses of graph traversals by a large factor.



@jit
def is_forest_without(n, eu, ev, skip):
    """True iff the multigraph minus vertex ``skip`` has no cycle.

    Loops and parallel edges count as cycles.  ``skip = -1`` removes nothing.
    """
    parent = np.arange(n)
    for i in range(eu.shape[0]):
        a = eu[i]
        b = ev[i]
        if a == skip or b == skip:
            continue
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a == b:
            return False
        parent[a] = b
    return True


@jit
def ear_endpoints(n, eu, ev):
    """Find a cycle by DFS and one ear of it in a 2-connected multigraph.

    Returns the two ear endpoints, or (-1, -1) when the graph is a tree or a
    single cycle.  Loops must not be present.
    """
    m = eu.shape[0]
    if m <= n:
        return -1, -1
    deg = np.zeros(n + 1, np.int64)
    for i in range(m):
        deg[eu[i] + 1] += 1
        deg[ev[i] + 1] += 1
    indptr = np.cumsum(deg)
    fill = indptr[:n].copy()
    nbr = np.empty(2 * m, np.int64)
    eid = np.empty(2 * m, np.int64)
    for i in range(m):
        a = eu[i]
        b = ev[i]
        nbr[fill[a]] = b
        eid[fill[a]] = i
        fill[a] += 1
        nbr[fill[b]] = a
        eid[fill[b]] = i
        fill[b] += 1

    # depth-first search until the first back edge
    disc = np.full(n, -1, np.int64)
    pedge = np.full(n, -1, np.int64)
    parent = np.full(n, -1, np.int64)
    pos = indptr[:n].copy()
    stack = np.empty(n, np.int64)
    top = 0
    stack[0] = 0
    disc[0] = 0
    t = 1
    cu = -1
    cw = -1
    ce = -1
    while top >= 0 and cu == -1:
        v = stack[top]
        if pos[v] < indptr[v + 1]:
            k = pos[v]
            pos[v] += 1
            e = eid[k]
            if e == pedge[v]:
                continue
            w = nbr[k]
            if disc[w] == -1:
                disc[w] = t
                t += 1
                pedge[w] = e
                parent[w] = v
                top += 1
                stack[top] = w
            elif disc[w] < disc[v]:
                cu = v
                cw = w
                ce = e
        else:
            top -= 1

    on_cycle = np.zeros(n, np.bool_)
    cyc_edge = np.zeros(m, np.bool_)
    cyc_edge[ce] = True
    x = cu
    on_cycle[x] = True
    while x != cw:
        cyc_edge[pedge[x]] = True
        x = parent[x]
        on_cycle[x] = True

    # an ear is either a non-cycle edge between two cycle vertices, or a
    # path leaving the cycle at x and returning elsewhere
    leave_x = -1
    leave_w = -1
    for i in range(m):
        if cyc_edge[i]:
            continue
        a = eu[i]
        b = ev[i]
        if on_cycle[a] and on_cycle[b]:
            return a, b
        if leave_x == -1:
            if on_cycle[a]:
                leave_x = a
                leave_w = b
            elif on_cycle[b]:
                leave_x = b
                leave_w = a
    seen = np.zeros(n, np.bool_)
    seen[leave_x] = True
    seen[leave_w] = True
    queue = np.empty(n, np.int64)
    queue[0] = leave_w
    head = 0
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        for k in range(indptr[v], indptr[v + 1]):
            w = nbr[k]
            if seen[w]:
                continue
            if on_cycle[w]:
                return leave_x, w
            seen[w] = True
            queue[tail] = w
            tail += 1
    return leave_x, -1


@jit
def k_colorable(nbr_ptr, nbr, k, budget, colors):
    """DSATUR backtracking: can the graph be properly colored with k colors?

    Returns 1 (colorable, ``colors`` filled), 0 (not colorable) or -1
    (node budget exhausted).  New colors are introduced in increasing order
    only, which removes color-permutation symmetry.
    """
    n = nbr_ptr.shape[0] - 1
    if n == 0:
        return 1
    cnt = np.zeros((n, k), np.int64)
    sat = np.zeros(n, np.int64)
    for v in range(n):
        colors[v] = -1
    deg = nbr_ptr[1:] - nbr_ptr[:-1]
    stack_v = np.empty(n, np.int64)
    stack_c = np.empty(n, np.int64)
    stack_max = np.empty(n, np.int64)
    nodes = 0
    d = 0
    colored = 0

    # pick the first vertex
    best = 0
    for v in range(n):
        if deg[v] > deg[best]:
            best = v
    stack_v[0] = best
    stack_c[0] = 0
    stack_max[0] = -1
    while True:
        v = stack_v[d]
        old = colors[v]
        if old != -1:
            colors[v] = -1
            colored -= 1
            for j in range(nbr_ptr[v], nbr_ptr[v + 1]):
                w = nbr[j]
                cnt[w, old] -= 1
                if cnt[w, old] == 0:
                    sat[w] -= 1
        limit = stack_max[d] + 2
        if limit > k:
            limit = k
        c = stack_c[d]
        while c < limit and cnt[v, c] > 0:
            c += 1
        if c >= limit:
            d -= 1
            if d < 0:
                return 0
            continue
        nodes += 1
        if nodes > budget:
            return -1
        colors[v] = c
        colored += 1
        stack_c[d] = c + 1
        dead = False
        for j in range(nbr_ptr[v], nbr_ptr[v + 1]):
            w = nbr[j]
            if cnt[w, c] == 0:
                sat[w] += 1
                if colors[w] == -1 and sat[w] >= k:
                    dead = True
            cnt[w, c] += 1
        if dead:
            continue
        if colored == n:
            return 1
        # next vertex: max saturation, then max degree
        best = -1
        for w in range(n):
            if colors[w] == -1:
                if best == -1 or sat[w] > sat[best] or (
                        sat[w] == sat[best] and deg[w] > deg[best]):
                    best = w
        newmax = stack_max[d]
        if c > newmax:
            newmax = c
        d += 1
        stack_v[d] = best
        stack_c[d] = 0
        stack_max[d] = newmax


@jit
def count_components(n, eu, ev):
    parent = np.arange(n)
    parts = n
    for i in range(eu.shape[0]):
        a = eu[i]
        b = ev[i]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            parent[a] = b
            parts -= 1
    return parts


@jit
def _group_by(keys, ptr, order):
    nkeys = ptr.shape[0] - 1
    for i in range(keys.shape[0]):
        ptr[keys[i] + 1] += 1
    for k in range(nkeys):
        ptr[k + 1] += ptr[k]
    fill = ptr[:nkeys].copy()
    for i in range(keys.shape[0]):
        k = keys[i]
        order[fill[k]] = i
        fill[k] += 1


def group_by(keys, nkeys):
    """Stable counting sort: returns (order, ptr) with keys[order] grouped."""
    ptr = np.zeros(nkeys + 1, np.int64)
    order = np.empty(keys.shape[0], np.int64)
    _group_by(keys, ptr, order)
    return order, ptr


@jit
def _csr_fill(eu, ev, indptr, adj, tmp, shift):
    # two-level counting sort of half-edges by source: first into coarse
    # buckets of 2**shift consecutive vertices (few sequential write
    # streams), then within each bucket, whose rows fit in cache
    n = indptr.shape[0] - 1
    nbk = (n >> shift) + 1
    bptr = np.zeros(nbk + 1, np.int64)
    for i in range(eu.shape[0]):
        if eu[i] != ev[i]:
            indptr[eu[i] + 1] += 1
            indptr[ev[i] + 1] += 1
            bptr[(eu[i] >> shift) + 1] += 1
            bptr[(ev[i] >> shift) + 1] += 1
    for v in range(n):
        indptr[v + 1] += indptr[v]
    for k in range(nbk):
        bptr[k + 1] += bptr[k]
    fill = bptr[:nbk].copy()
    for i in range(eu.shape[0]):
        a = eu[i]
        b = ev[i]
        if a != b:
            k = fill[a >> shift]
            tmp[k, 0] = a
            tmp[k, 1] = b
            tmp[k, 2] = i
            fill[a >> shift] = k + 1
            k = fill[b >> shift]
            tmp[k, 0] = b
            tmp[k, 1] = a
            tmp[k, 2] = i
            fill[b >> shift] = k + 1
    vfill = indptr[:n].copy()
    for k in range(bptr[nbk]):
        a = tmp[k, 0]
        p = vfill[a]
        adj[p, 0] = tmp[k, 1]
        adj[p, 1] = tmp[k, 2]
        vfill[a] = p + 1
    return indptr[n]


def build_csr(n, eu, ev):
    """Adjacency in CSR form; loops are dropped.

    Row ``k`` of ``adj`` holds (neighbor, edge id); keeping both in one row
    means one cache miss per adjacency entry instead of two.
    """
    indptr = np.zeros(n + 1, np.int64)
    adj = np.empty((2 * eu.shape[0], 2), eu.dtype)
    tmp = np.empty((2 * eu.shape[0], 3), eu.dtype)
    size = _csr_fill(eu, ev, indptr, adj, tmp, 10)
    return indptr, adj[:size]


# columns of the per-vertex state table used by _blocks
_DISC, _LOW, _POS, _END = range(4)


@jit
def _blocks(indptr, adj, st, estack, vstack, pstack, eorder, eends, eptr,
            bptr, inc_vertex):
    n = st.shape[0]
    for v in range(n):
        st[v, _POS] = indptr[v]
        st[v, _END] = indptr[v + 1]
    t = 0
    nb = 0
    etop = 0
    ncomp = 0
    ne = 0
    ni = 0
    touch = 0
    for root in range(n):
        if st[root, _DISC] != -1:
            continue
        ncomp += 1
        top = 0
        vstack[0] = root
        pstack[0] = -1
        st[root, _DISC] = t
        st[root, _LOW] = t
        t += 1
        while top >= 0:
            v = vstack[top]
            if st[v, _POS] < st[v, _END]:
                k = st[v, _POS]
                st[v, _POS] = k + 1
                e = adj[k, 1]
                if e == pstack[top]:
                    continue
                w = adj[k, 0]
                if st[w, _DISC] == -1:
                    st[w, _DISC] = t
                    st[w, _LOW] = t
                    t += 1
                    # touch the neighbors' rows now: the loads are independent
                    # so their cache misses overlap instead of queueing up
                    for j in range(st[w, _POS], st[w, _END]):
                        touch += st[adj[j, 0], _DISC]
                    estack[etop, 0] = e
                    estack[etop, 1] = v
                    estack[etop, 2] = w
                    estack[etop, 3] = 1
                    etop += 1
                    top += 1
                    vstack[top] = w
                    pstack[top] = e
                elif st[w, _DISC] < st[v, _DISC]:
                    estack[etop, 0] = e
                    estack[etop, 1] = v
                    estack[etop, 2] = w
                    estack[etop, 3] = 0
                    etop += 1
                    if st[w, _DISC] < st[v, _LOW]:
                        st[v, _LOW] = st[w, _DISC]
            else:
                pe = pstack[top]
                top -= 1
                if top >= 0:
                    u = vstack[top]
                    if st[v, _LOW] < st[u, _LOW]:
                        st[u, _LOW] = st[v, _LOW]
                    if st[v, _LOW] >= st[u, _DISC]:
                        # pop one block.  Its vertices are u plus the lower
                        # ends of its tree edges, so no per-vertex marks are
                        # needed and everything is emitted grouped by block
                        while True:
                            etop -= 1
                            f = estack[etop, 0]
                            eorder[ne] = f
                            eends[ne, 0] = estack[etop, 1]
                            eends[ne, 1] = estack[etop, 2]
                            ne += 1
                            if estack[etop, 3] == 1:
                                inc_vertex[ni] = estack[etop, 2]
                                ni += 1
                            if f == pe:
                                break
                        inc_vertex[ni] = u
                        ni += 1
                        nb += 1
                        eptr[nb] = ne
                        bptr[nb] = ni
    return nb, ncomp, touch


def block_structure(n, eu, ev):
    """Biconnected components of a multigraph in one depth-first pass.

    Iterative Hopcroft-Tarjan on the edge stack.  Parallel edges are told
    apart by edge id so a doubled edge closes a cycle.  Every loop becomes a
    block of its own, numbered after the others.

    Returns a dict with the edge labels, the edges grouped by block
    (``eorder``/``eptr``, endpoints in ``eends``), the vertices grouped by
    block (``inc_vertex``/``bptr``), the block and component counts, and the
    CSR arrays.
    """
    m = eu.shape[0]
    dt = eu.dtype
    indptr, adj = build_csr(n, eu, ev)
    st = np.full((n, 4), -1, dt)
    estack = np.empty((max(m, 1), 4), dt)
    vstack = np.empty(max(n, 1), dt)
    pstack = np.empty(max(n, 1), dt)
    eorder = np.empty(m, dt)
    eends = np.empty((m, 2), dt)
    eptr = np.zeros(m + 1, np.int64)
    bptr = np.zeros(m + 1, np.int64)
    inc_vertex = np.empty(2 * m, dt)
    nb, ncomp, _ = _blocks(indptr, adj, st, estack, vstack, pstack, eorder, eends,
                           eptr, bptr, inc_vertex)
    ne = int(eptr[nb])
    ni = int(bptr[nb])
    loops = np.nonzero(eu == ev)[0]
    nl = loops.size
    if nl:
        eorder[ne:ne + nl] = loops
        eends[ne:ne + nl, 0] = eu[loops]
        eends[ne:ne + nl, 1] = eu[loops]
        eptr[nb + 1:nb + nl + 1] = ne + 1 + np.arange(nl)
        inc_vertex[ni:ni + nl] = eu[loops]
        bptr[nb + 1:nb + nl + 1] = ni + 1 + np.arange(nl)
    nb += nl
    eptr = eptr[:nb + 1]
    bptr = bptr[:nb + 1]
    # plain scatters outside the traversal overlap their cache misses
    label = np.empty(m, dt)
    label[eorder] = np.repeat(np.arange(nb, dtype=dt), np.diff(eptr))
    return {
        "nb": nb,
        "ncomp": ncomp,
        "label": label,
        "eorder": eorder,
        "eends": eends,
        "eptr": eptr,
        "bptr": bptr,
        "inc_vertex": inc_vertex[:ni + nl],
        "inc_block": np.repeat(np.arange(nb, dtype=dt), np.diff(bptr)),
        "block_loop": np.arange(nb) >= nb - nl,
        "indptr": indptr,
        "adj": adj,
    }


@jit
def _prune(bptr, inc_vertex, eends, eptr, vptr, vinc, inc_block,
           block_loop, order, active, cutcnt, alive, queue, trace_block, trace_cut):
    nb = bptr.shape[0] - 1
    nvert = vptr.shape[0] - 1
    for v in range(nvert):
        active[v] = vptr[v + 1] - vptr[v]
    for b in range(nb):
        c = 0
        for k in range(bptr[b], bptr[b + 1]):
            if active[inc_vertex[k]] >= 2:
                c += 1
        cutcnt[b] = c
    head = 0
    tail = 0
    for i in range(nb):
        b = order[i]
        if cutcnt[b] == 1:
            queue[tail] = b
            tail += 1
    nt = 0
    while head < tail:
        b = queue[head]
        head += 1
        if cutcnt[b] != 1:
            continue
        c = -1
        for k in range(bptr[b], bptr[b + 1]):
            x = inc_vertex[k]
            if active[x] >= 2:
                c = x
                break
        # a block is 2-connected, so b - c is connected and is a forest
        # exactly when it has nv - 2 edges; a loop block always prunes.
        # Each block is scanned once here, so this stays linear overall.
        nv = bptr[b + 1] - bptr[b]
        rest = 0
        for j in range(eptr[b], eptr[b + 1]):
            if eends[j, 0] != c and eends[j, 1] != c:
                rest += 1
        if block_loop[b] or rest == nv - 2:
            alive[b] = False
            trace_block[nt] = b
            trace_cut[nt] = c
            nt += 1
            active[c] -= 1
            if active[c] == 1:
                for k in range(vptr[c], vptr[c + 1]):
                    b2 = inc_block[vinc[k]]
                    if alive[b2]:
                        cutcnt[b2] -= 1
                        if cutcnt[b2] == 1:
                            queue[tail] = b2
                            tail += 1
                        break
    return nt


def prune_leaf_blocks(nb, bptr, inc_vertex, eends, eptr, vptr, vinc, inc_block,
                      block_loop, order):
    """Repeatedly delete leaf blocks whose cut-vertex is a feedback vertex.

    ``order`` fixes the initial queue order of leaves (FIFO afterwards).
    Returns (alive, trace_block, trace_cut, active) where ``active[v]`` is
    the number of surviving blocks containing ``v``.
    """
    active = np.zeros(vptr.shape[0] - 1, np.int64)
    cutcnt = np.zeros(nb, np.int64)
    alive = np.ones(nb, np.bool_)
    queue = np.empty(max(nb, 1), np.int64)
    trace_block = np.empty(max(nb, 1), np.int64)
    trace_cut = np.empty(max(nb, 1), np.int64)
    nt = _prune(bptr, inc_vertex, eends, eptr, vptr, vinc, inc_block,
                block_loop, order, active, cutcnt, alive, queue, trace_block, trace_cut)
    return alive, trace_block[:nt], trace_cut[:nt], active


@jit
def _ear_in_block(indptr, adj, label, b, start, disc, pedge, parent,
                  stack, on_cycle, cyc_edge, seen):
    n = disc.shape[0]
    pos = indptr[:n].copy()
    top = 0
    stack[0] = start
    disc[start] = 0
    t = 1
    cu = -1
    cw = -1
    ce = -1
    while top >= 0 and cu == -1:
        v = stack[top]
        if pos[v] < indptr[v + 1]:
            k = pos[v]
            pos[v] += 1
            e = adj[k, 1]
            if label[e] != b or e == pedge[v]:
                continue
            w = adj[k, 0]
            if disc[w] == -1:
                disc[w] = t
                t += 1
                pedge[w] = e
                parent[w] = v
                top += 1
                stack[top] = w
            elif disc[w] < disc[v]:
                cu = v
                cw = w
                ce = e
        else:
            top -= 1
    if cu == -1:
        return -1, -1
    cyc_edge[ce] = True
    x = cu
    on_cycle[x] = True
    while x != cw:
        cyc_edge[pedge[x]] = True
        x = parent[x]
        on_cycle[x] = True
    # scan the cycle's vertices for a non-cycle block edge
    leave_x = -1
    leave_w = -1
    x = cu
    while True:
        for k in range(indptr[x], indptr[x + 1]):
            e = adj[k, 1]
            if label[e] != b or cyc_edge[e]:
                continue
            w = adj[k, 0]
            if on_cycle[w]:
                return x, w
            if leave_x == -1:
                leave_x = x
                leave_w = w
        if x == cw:
            break
        x = parent[x]
    if leave_x == -1:
        return -1, -1
    seen[leave_x] = True
    seen[leave_w] = True
    # the stack array is free again and serves as the queue
    stack[0] = leave_w
    head = 0
    tail = 1
    while head < tail:
        v = stack[head]
        head += 1
        for k in range(indptr[v], indptr[v + 1]):
            if label[adj[k, 1]] != b:
                continue
            w = adj[k, 0]
            if seen[w]:
                continue
            if on_cycle[w]:
                return leave_x, w
            seen[w] = True
            stack[tail] = w
            tail += 1
    return leave_x, -1


def ear_in_block(indptr, adj, label, b, start):
    """Ear endpoints of block ``b`` found on the global adjacency arrays.

    Same contract as :func:`ear_endpoints`, but edges outside block ``b`` are
    skipped instead of building a local copy.  ``start`` is any vertex of
    the block.  Returns (-1, -1) if the block has no cycle with an ear.
    """
    n = indptr.shape[0] - 1
    dt = adj.dtype
    x, y = _ear_in_block(indptr, adj, label, b, start,
                         np.full(n, -1, dt), np.full(n, -1, dt), np.full(n, -1, dt),
                         np.empty(n, dt), np.zeros(n, np.bool_),
                         np.zeros(label.shape[0], np.bool_), np.zeros(n, np.bool_))
    return int(x), int(y)
