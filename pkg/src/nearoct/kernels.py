"""Hot inner loops: numba-jitted fast paths with pure-numpy fallbacks.

The fallback path is selected automatically when numba is missing, or forced
with the environment variable ``NEAROCT_NO_NUMBA=1``.  Both paths produce
bit-identical output (the same discovery orders), so everything downstream is
deterministic regardless of which path runs.
"""

from __future__ import annotations

import os

import numpy as np

UNREACHED = 8000  # distance sentinel, larger than any diameter we meet

_FORCED_OFF = os.environ.get("NEAROCT_NO_NUMBA", "") not in ("", "0")
try:
    import numba
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


def using_numba():
    return HAVE_NUMBA and not _FORCED_OFF


# ---------------------------------------------------------------------------
# all-pairs BFS distances on an undirected graph in CSR form


@njit(cache=True)
def _bfs_all_numba(indptr, indices, n):
    dist = np.full((n, n), UNREACHED, dtype=np.int16)
    queue = np.empty(n, dtype=np.int32)
    for src in range(n):
        row = dist[src]
        row[src] = 0
        queue[0] = src
        head, tail = 0, 1
        while head < tail:
            v = queue[head]
            head += 1
            dv = row[v]
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if row[w] == UNREACHED:
                    row[w] = dv + 1
                    queue[tail] = w
                    tail += 1
    return dist


def _bfs_all_numpy(indptr, indices, n):
    # padded neighbour matrix lets each BFS layer be one fancy-indexing step
    degs = np.diff(indptr)
    maxdeg = int(degs.max()) if n else 0
    nbr = np.full((n, maxdeg), -1, dtype=np.int32)
    for v in range(n):
        nbr[v, : degs[v]] = indices[indptr[v] : indptr[v + 1]]
    dist = np.full((n, n), UNREACHED, dtype=np.int16)
    for src in range(n):
        row = dist[src]
        row[src] = 0
        frontier = np.array([src], dtype=np.int32)
        d = 0
        while frontier.size:
            d += 1
            cand = nbr[frontier].ravel()
            cand = cand[cand >= 0]
            cand = np.unique(cand[row[cand] == UNREACHED])
            row[cand] = d
            frontier = cand
    return dist


def all_pairs_distances(indptr, indices, n):
    indptr = np.ascontiguousarray(indptr, dtype=np.int64)
    indices = np.ascontiguousarray(indices, dtype=np.int32)
    if using_numba():
        return _bfs_all_numba(indptr, indices, n)
    return _bfs_all_numpy(indptr, indices, n)


# ---------------------------------------------------------------------------
# orbit partition of ordered pairs under a simultaneous (diagonal) action


@njit(cache=True)
def _pair_orbits_numba(actions, n):
    ngen = actions.shape[0]
    labels = np.full(n * n, -1, dtype=np.int32)
    queue = np.empty(n * n, dtype=np.int64)
    norb = 0
    for start in range(n * n):
        if labels[start] >= 0:
            continue
        labels[start] = norb
        queue[0] = start
        head, tail = 0, 1
        while head < tail:
            code = queue[head]
            head += 1
            i = code // n
            j = code % n
            for g in range(ngen):
                code2 = np.int64(actions[g, i]) * n + actions[g, j]
                if labels[code2] < 0:
                    labels[code2] = norb
                    queue[tail] = code2
                    tail += 1
        norb += 1
    return labels, norb


def _pair_orbits_numpy(actions, n):
    labels = np.full(n * n, -1, dtype=np.int32)
    norb = 0
    act64 = actions.astype(np.int64)
    for start in range(n * n):
        if labels[start] >= 0:
            continue
        labels[start] = norb
        frontier = np.array([start], dtype=np.int64)
        while frontier.size:
            i, j = frontier // n, frontier % n
            imgs = (act64[:, i] * n + act64[:, j]).ravel()
            imgs = np.unique(imgs)
            imgs = imgs[labels[imgs] < 0]
            labels[imgs] = norb
            frontier = imgs
        norb += 1
    return labels, norb


def pair_orbit_labels(actions, n):
    """Label every ordered pair (i,j), encoded i*n+j, with its orbit id.

    Orbit ids are assigned in increasing order of the smallest pair code they
    contain, which makes the labelling canonical.
    """
    actions = np.ascontiguousarray(actions, dtype=np.int32)
    if using_numba():
        return _pair_orbits_numba(actions, n)
    return _pair_orbits_numpy(actions, n)


# ---------------------------------------------------------------------------
# graph girth (shortest cycle) via per-source BFS


@njit(cache=True)
def _girth_numba(indptr, indices, n):
    best = np.int64(1 << 30)
    depth = np.empty(n, dtype=np.int32)
    npred = np.empty(n, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    for src in range(n):
        depth[:] = -1
        npred[:] = 0
        depth[src] = 0
        queue[0] = src
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            du = depth[u]
            if 2 * du >= best:
                break
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if depth[w] < 0:
                    depth[w] = du + 1
                    npred[w] = 1
                    queue[tail] = w
                    tail += 1
                elif depth[w] == du + 1:
                    npred[w] += 1
                    if 2 * (du + 1) < best:
                        best = 2 * (du + 1)
                elif depth[w] == du and w != u:
                    if 2 * du + 1 < best:
                        best = 2 * du + 1
    return best


def _girth_numpy(indptr, indices, n):
    adj = np.zeros((n, n), dtype=bool)
    for v in range(n):
        adj[v, indices[indptr[v] : indptr[v + 1]]] = True
    best = 1 << 30
    for src in range(n):
        depth = np.full(n, -1, dtype=np.int32)
        depth[src] = 0
        frontier = np.array([src], dtype=np.int64)
        d = 0
        while frontier.size and 2 * d < best:
            d += 1
            pred_count = adj[frontier].sum(axis=0)
            if adj[np.ix_(frontier, frontier)].any():
                best = min(best, 2 * d - 1)
            nxt = np.flatnonzero((pred_count > 0) & (depth < 0))
            if nxt.size and (pred_count[nxt] > 1).any():
                best = min(best, 2 * d)
            depth[nxt] = d
            frontier = nxt
    return best


def graph_girth(indptr, indices, n):
    """Length of the shortest cycle, or a huge sentinel if the graph is a forest."""
    indptr = np.ascontiguousarray(indptr, dtype=np.int64)
    indices = np.ascontiguousarray(indices, dtype=np.int32)
    if using_numba():
        return int(_girth_numba(indptr, indices, n))
    return int(_girth_numpy(indptr, indices, n))


# ---------------------------------------------------------------------------
# exhaustive valuation search (values with every line patterned {m, m+1, m+1})


@njit(cache=True)
def _valuations_numba(order, lp_indptr, lp_lines, lines, vmin, vmax, out):
    n = order.shape[0]
    f = np.full(n, -1, dtype=np.int8)
    trial = np.zeros(n, dtype=np.int8)
    f[order[0]] = 0
    nsol = 0
    pos = 1
    trial[1] = vmin[order[1]]
    while pos >= 1:
        v = order[pos]
        val = trial[pos]
        if val > vmax[v]:
            f[v] = -1
            pos -= 1
            if pos >= 1:
                trial[pos] += 1
            continue
        ok = True
        for k in range(lp_indptr[v], lp_indptr[v + 1]):
            ln = lp_lines[k]
            x = np.int32(-1)
            y = np.int32(-1)
            for c in range(3):
                p = lines[ln, c]
                if p != v and f[p] >= 0:
                    if x < 0:
                        x = f[p]
                    else:
                        y = f[p]
            if y >= 0:
                lo = min(val, min(x, y))
                hi = max(val, max(x, y))
                mid = val + x + y - lo - hi
                if not (mid == lo + 1 and hi == lo + 1):
                    ok = False
                    break
            elif x >= 0:
                if val > x + 1 or val < x - 1:
                    ok = False
                    break
        if not ok:
            trial[pos] += 1
            continue
        f[v] = val
        if pos == n - 1:
            if nsol < out.shape[0]:
                out[nsol] = f
            nsol += 1
            f[v] = -1
            trial[pos] += 1
        else:
            pos += 1
            trial[pos] = vmin[order[pos]]
    return nsol


def _valuations_python(order, lp_indptr, lp_lines, lines, vmin, vmax, out):
    n = order.shape[0]
    f = np.full(n, -1, dtype=np.int8)
    trial = np.zeros(n, dtype=np.int8)
    f[order[0]] = 0
    nsol = 0
    pos = 1
    trial[1] = vmin[order[1]]
    while pos >= 1:
        v = order[pos]
        val = trial[pos]
        if val > vmax[v]:
            f[v] = -1
            pos -= 1
            if pos >= 1:
                trial[pos] += 1
            continue
        ok = True
        for k in range(lp_indptr[v], lp_indptr[v + 1]):
            ln = lp_lines[k]
            vals = [f[p] for p in lines[ln] if p != v and f[p] >= 0]
            if len(vals) == 2:
                lo = min(val, vals[0], vals[1])
                hi = max(val, vals[0], vals[1])
                mid = val + vals[0] + vals[1] - lo - hi
                if not (mid == lo + 1 and hi == lo + 1):
                    ok = False
                    break
            elif len(vals) == 1:
                if abs(int(val) - int(vals[0])) > 1:
                    ok = False
                    break
        if not ok:
            trial[pos] += 1
            continue
        f[v] = val
        if pos == n - 1:
            if nsol < out.shape[0]:
                out[nsol] = f
            nsol += 1
            f[v] = -1
            trial[pos] += 1
        else:
            pos += 1
            trial[pos] = vmin[order[pos]]
    return nsol


def valuation_search(order, lp_indptr, lp_lines, lines, vmin, vmax, max_solutions=8192):
    """DFS over point values in the given order; returns the solutions found.

    ``vmin``/``vmax`` bound the value of each point (used for the Lipschitz
    bound from the anchor and for least-zero canonicity).
    """
    n = order.shape[0]
    out = np.empty((max_solutions, n), dtype=np.int8)
    args = (
        np.ascontiguousarray(order, dtype=np.int32),
        np.ascontiguousarray(lp_indptr, dtype=np.int32),
        np.ascontiguousarray(lp_lines, dtype=np.int32),
        np.ascontiguousarray(lines, dtype=np.int32),
        np.ascontiguousarray(vmin, dtype=np.int8),
        np.ascontiguousarray(vmax, dtype=np.int8),
        out,
    )
    if using_numba():
        nsol = _valuations_numba(*args)
    else:
        nsol = _valuations_python(*args)
    if nsol > max_solutions:
        raise RuntimeError(
            f"valuation search found {nsol} solutions, above the "
            f"{max_solutions} capacity"
        )
    return out[:nsol].copy()


# ---------------------------------------------------------------------------
# neighboring pairs of value vectors: (i, j) with i < j such that some
# shift e in {-1, 0, 1} puts every coordinate of V[i] - V[j] + e in [-1, 1]


@njit(cache=True)
def _neighboring_numba(V, out):
    n, m = V.shape
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            lo = np.int8(127)
            hi = np.int8(-128)
            ok = True
            for x in range(m):
                d = V[i, x] - V[j, x]
                if d < lo:
                    lo = d
                if d > hi:
                    hi = d
                if hi - lo > 2 or hi > 2 or lo < -2:
                    ok = False
                    break
            if ok:
                if count < out.shape[0]:
                    out[count, 0] = i
                    out[count, 1] = j
                count += 1
    return count


def _neighboring_numpy(V, out):
    n = V.shape[0]
    count = 0
    v16 = V.astype(np.int16)
    block = max(1, (1 << 24) // max(1, V.size))
    for start in range(0, n, block):
        stop = min(n, start + block)
        diff = v16[start:stop, None, :] - v16[None, :, :]
        hi = diff.max(axis=2)
        lo = diff.min(axis=2)
        good = (hi - lo <= 2) & (hi <= 2) & (lo >= -2)
        rows, cols = np.nonzero(good)
        keep = start + rows < cols
        rows, cols = rows[keep], cols[keep]
        for r, c in zip(rows, cols):
            if count < out.shape[0]:
                out[count, 0] = start + r
                out[count, 1] = c
            count += 1
    return count


def neighboring_pairs(V, max_pairs=1 << 20):
    """All index pairs i < j of rows of V that are neighboring value vectors."""
    V = np.ascontiguousarray(V, dtype=np.int8)
    out = np.empty((max_pairs, 2), dtype=np.int32)
    if using_numba():
        count = _neighboring_numba(V, out)
    else:
        count = _neighboring_numpy(V, out)
    if count > max_pairs:
        raise RuntimeError(f"{count} neighboring pairs exceed capacity {max_pairs}")
    return out[:count].copy()
