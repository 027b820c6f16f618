"""Hot inner loops: union-find block refinement and orbit closure.

Two interchangeable backends are provided.  The numba backend compiles the
scalar loops with @njit; the numpy backend runs the same algorithms as plain
Python/numpy and exists so the package works (slowly) without a functioning
numba install and so the two can be benchmarked against each other.

Select with the environment variable EDGEPRIM_KERNELS:

    EDGEPRIM_KERNELS=numba   force numba (error if unavailable)
    EDGEPRIM_KERNELS=numpy   force the pure-numpy fallback
    EDGEPRIM_KERNELS=auto    numba when importable, else numpy (default)
"""

import os

import numpy as np

_choice = os.environ.get("EDGEPRIM_KERNELS", "auto").lower()

_have_numba = False
if _choice in ("auto", "numba"):
    try:
        from numba import njit

        _have_numba = True
    except ImportError:
        if _choice == "numba":
            raise
        _have_numba = False

BACKEND = "numba" if _have_numba else "numpy"


def _py_block_refine(gens, seeds_a, seeds_b, n):
    """Atkinson's minimal block algorithm (reference implementation).

    ``gens`` is an (m, n) array of point images.  Starting from the
    union-find classes that merge seeds_a[i] with seeds_b[i], repeatedly
    propagate merges through every generator until the class partition is
    generator-invariant.  Returns the root label of each point.
    """
    parent = np.arange(n, dtype=np.int64)

    def find(x):
        r = x
        while parent[r] != r:
            r = parent[r]
        while parent[x] != r:
            parent[x], x = r, parent[x]
        return r

    m = gens.shape[0]
    stack = list(zip(seeds_a.tolist(), seeds_b.tolist()))
    while stack:
        a, b = stack.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        if ra > rb:
            ra, rb = rb, ra
        parent[rb] = ra
        for k in range(m):
            stack.append((gens[k, ra], gens[k, rb]))
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        out[i] = find(i)
    return out


def _py_orbit_partition(gens, n):
    """Label each point with the least point of its orbit under ``gens``."""
    label = np.full(n, -1, dtype=np.int64)
    m = gens.shape[0]
    for start in range(n):
        if label[start] >= 0:
            continue
        label[start] = start
        stack = [start]
        while stack:
            p = stack.pop()
            for k in range(m):
                q = gens[k, p]
                if label[q] < 0:
                    label[q] = start
                    stack.append(q)
    return label


if _have_numba:

    @njit(cache=True)
    def _nb_block_refine(gens, seeds_a, seeds_b, n):  # pragma: no cover
        parent = np.arange(n, dtype=np.int64)
        m = gens.shape[0]
        cap = 4 * n + 16 * m + 4 * seeds_a.shape[0]
        qa = np.empty(cap, dtype=np.int64)
        qb = np.empty(cap, dtype=np.int64)
        top = 0
        for i in range(seeds_a.shape[0]):
            qa[top] = seeds_a[i]
            qb[top] = seeds_b[i]
            top += 1
        while top > 0:
            top -= 1
            a = qa[top]
            b = qb[top]
            ra = a
            while parent[ra] != ra:
                ra = parent[ra]
            x = a
            while parent[x] != ra:
                nxt = parent[x]
                parent[x] = ra
                x = nxt
            rb = b
            while parent[rb] != rb:
                rb = parent[rb]
            x = b
            while parent[x] != rb:
                nxt = parent[x]
                parent[x] = rb
                x = nxt
            if ra == rb:
                continue
            if ra > rb:
                ra, rb = rb, ra
            parent[rb] = ra
            if top + m >= cap:
                newcap = 2 * cap + m
                na = np.empty(newcap, dtype=np.int64)
                nb = np.empty(newcap, dtype=np.int64)
                na[:top] = qa[:top]
                nb[:top] = qb[:top]
                qa = na
                qb = nb
                cap = newcap
            for k in range(m):
                qa[top] = gens[k, ra]
                qb[top] = gens[k, rb]
                top += 1
        out = np.empty(n, dtype=np.int64)
        for i in range(n):
            r = i
            while parent[r] != r:
                r = parent[r]
            out[i] = r
        return out

    @njit(cache=True)
    def _nb_orbit_partition(gens, n):  # pragma: no cover
        label = np.full(n, -1, dtype=np.int64)
        m = gens.shape[0]
        stack = np.empty(n, dtype=np.int64)
        for start in range(n):
            if label[start] >= 0:
                continue
            label[start] = start
            stack[0] = start
            top = 1
            while top > 0:
                top -= 1
                p = stack[top]
                for k in range(m):
                    q = gens[k, p]
                    if label[q] < 0:
                        label[q] = start
                        stack[top] = q
                        top += 1
        return label


def block_refine(gens, seeds_a, seeds_b):
    """Finest generator-invariant partition merging each seed pair.

    gens: (m, n) int array of images; seeds_*: 1-d arrays of points.
    Returns an int64 array of per-point root labels.
    """
    gens = np.ascontiguousarray(gens, dtype=np.int64)
    seeds_a = np.asarray(seeds_a, dtype=np.int64)
    seeds_b = np.asarray(seeds_b, dtype=np.int64)
    n = gens.shape[1]
    if BACKEND == "numba":
        return _nb_block_refine(gens, seeds_a, seeds_b, n)
    return _py_block_refine(gens, seeds_a, seeds_b, n)


def orbit_partition(gens):
    """Per-point least-element orbit labels under the given images."""
    gens = np.ascontiguousarray(gens, dtype=np.int64)
    n = gens.shape[1]
    if gens.shape[0] == 0:
        return np.arange(n, dtype=np.int64)
    if BACKEND == "numba":
        return _nb_orbit_partition(gens, n)
    return _py_orbit_partition(gens, n)


def orbit_of(gens, starts, n):
    """Boolean mask of the orbit of ``starts`` (vectorised frontier BFS)."""
    seen = np.zeros(n, dtype=bool)
    frontier = np.unique(np.asarray(starts, dtype=np.int64))
    seen[frontier] = True
    if len(gens) == 0:
        return seen
    gmat = np.ascontiguousarray(gens, dtype=np.int64)
    while frontier.size:
        images = gmat[:, frontier].ravel()
        images = images[~seen[images]]
        if images.size == 0:
            break
        frontier = np.unique(images)
        seen[frontier] = True
    return seen
