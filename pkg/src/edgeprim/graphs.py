"""Graphs, coset graphs, induced actions, quotients, canonical forms.

A Graph is immutable: vertex count, sorted adjacency, canonical edge list
(ordered pairs (min,max), sorted).  GroupAction pairs a domain with the
permutation images of a fixed generator list; actions on edges and arcs are
induced from vertex actions.
"""

from dataclasses import dataclass, field

import numpy as np

from . import perm
from ._kernels import orbit_of as _orbit_mask
from .config import DEFAULT, BudgetError
from .perm import DTYPE, GroupHandle, Subgroup, bsgs, compose, inverse


class Graph:
    """Finite simple undirected graph."""

    def __init__(self, n, edges, labels=None):
        self.n = int(n)
        pairs = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range")
            pairs.add((min(u, v), max(u, v)))
        self.edges = sorted(pairs)
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = [np.array(sorted(a), dtype=DTYPE) for a in adj]
        self.labels = labels
        self._edge_index = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self):
        return len(self.edges)

    def edge_id(self, u, v):
        return self._edge_index[(min(u, v), max(u, v))]

    def degree_of(self, v):
        return len(self.adj[v])

    def relabel(self, p):
        """Image graph under the vertex permutation p."""
        return Graph(self.n, [(int(p[u]), int(p[v])) for u, v in self.edges])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, tuple(self.edges)))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n):
    """K_{1,n}: center is vertex 0."""
    return Graph(n + 1, [(0, i + 1) for i in range(n)])


class GroupAction:
    """A group acting on a domain through explicit generator images.

    ``images[i]`` is the permutation of the domain induced by ``gens[i]`` of
    the (optional) source handle.  ``stab_gens`` may record known images of
    generators of the stabilizer of ``base`` (used to avoid chain rebuilding
    on big domains); ``source`` and ``lift`` allow mapping further source
    elements into the domain.
    """

    def __init__(self, domain_size, images, source=None, base=0,
                 stab_gens=None, lift=None, socle_images=None,
                 min_normal_images=None):
        self.domain_size = int(domain_size)
        self.images = [np.asarray(p, dtype=DTYPE) for p in images]
        self.source = source
        self.base = base
        self.stab_gens = stab_gens
        self.lift = lift
        self.socle_images = socle_images
        self.min_normal_images = min_normal_images
        self._handle = None

    def handle(self, base_hint=()):
        if self._handle is None:
            socle = self.socle_images
            self._handle = bsgs(self.images, degree=self.domain_size,
                                base_hint=base_hint, socle_gens=socle)
        return self._handle

    def orbit_count(self):
        if not self.images:
            return self.domain_size
        labels = perm.orbits(bsgs(self.images, degree=self.domain_size))
        return len(labels)

    def is_transitive(self):
        if self.domain_size == 1:
            return True
        if not self.images:
            return False
        mask = _orbit_mask(np.stack(self.images), [0], self.domain_size)
        return bool(mask.all())


# ---------------------------------------------------------------------------
# coset graphs


@dataclass(frozen=True)
class CosetGraphSpec:
    group: GroupHandle
    sub: Subgroup
    swap: np.ndarray  # the element g with g^2 in H, g not normalizing H


@dataclass
class CosetGraphResult:
    graph: Graph
    action: GroupAction
    coset_action: perm.CosetAction
    connected: bool
    valency: int


def _validate_coset_spec(spec, budgets):
    g = np.asarray(spec.swap, dtype=DTYPE)
    h = spec.sub.group
    parent = spec.group
    if not parent.member(g):
        raise ValueError("swap element not in the group")
    if not h.member(compose(g, g)):
        raise ValueError("swap element squared is not in the subgroup")
    normalizes = all(h.member(perm.conjugate(x, g)) for x in h.gens)
    if normalizes:
        raise ValueError("swap element normalizes the subgroup")
    act = perm.coset_action(parent, spec.sub, budgets)
    if not act.is_faithful(budgets):
        raise ValueError("subgroup is not corefree")
    return g, act


def coset_graph(spec, budgets=DEFAULT):
    """Graph on the right cosets of H: Hx ~ Hy iff x y^-1 in HgH.

    Returns graph + vertex action; G acts arc-transitively by construction.
    Connectivity (<H,g> = G) is reported, not required.
    """
    g, act = _validate_coset_spec(spec, budgets)
    parent, h = spec.group, spec.sub.group
    n = act.degree
    w0 = int(act.act_element(g)[0])
    # edge set = orbit of the base arc under the generators
    g_imgs = act.images
    edges = set()
    frontier = [(0, w0)]
    edges.add((min(0, w0), max(0, w0)))
    while frontier:
        nxt = []
        for a, b in frontier:
            for img in g_imgs:
                e = (int(img[a]), int(img[b]))
                e = (min(e), max(e))
                if e not in edges:
                    edges.add(e)
                    nxt.append(e)
        frontier = nxt
    graph = Graph(n, edges)
    valency = graph.degree_of(0)
    # independent valency check: |H : H cap H^g|
    hg = bsgs([perm.conjugate(x, g) for x in h.gens], degree=parent.degree)
    inter = _intersection(h, hg, parent.degree)
    if h.order % inter.order or h.order // inter.order != valency:
        raise AssertionError(
            f"valency {valency} != |H:H^g cap H| = {h.order // inter.order}"
        )
    joined = bsgs(list(h.gens) + [g], degree=parent.degree)
    connected = joined.order == parent.order
    stab_imgs = act.stabilizer_images()
    action = GroupAction(
        n,
        g_imgs,
        source=parent,
        base=0,
        stab_gens=stab_imgs,
        lift=act.act_element,
        socle_images=(
            [act.act_element(s) for s in parent.socle_gens]
            if parent.socle_gens is not None
            else None
        ),
    )
    return CosetGraphResult(graph, action, act, connected, valency)


def _intersection(h1, h2, degree):
    """Subgroup intersection by sifting elements of the smaller group.

    Only used where one factor is small (edge stabilizers, valency checks).
    """
    small, big = (h1, h2) if h1.order <= h2.order else (h2, h1)
    if small.order > 200000:
        raise BudgetError("max_elements", small.order, 200000)
    elems, _ = small.elements()
    picked = []
    handle = bsgs([], degree=degree)
    for e in elems:
        if big.member(e) and not handle.member(e):
            picked.append(e)
            handle = bsgs(picked, degree=degree)
    return handle


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class GraphInvariants:
    n: int
    m: int
    connected: bool
    bipartite: bool
    halves: tuple
    regular: bool
    valency: int
    girth: int  # -1 when the graph is a forest, else min(girth, cap) with flag
    girth_capped: bool


def graph_invariants(graph, budgets=DEFAULT):
    n = graph.n
    color = np.full(n, -1, dtype=np.int64)
    bipartite = True
    components = 0
    for start in range(n):
        if color[start] >= 0:
            continue
        components += 1
        color[start] = 0
        frontier = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for v in graph.adj[u]:
                    v = int(v)
                    if color[v] < 0:
                        color[v] = color[u] ^ 1
                        nxt.append(v)
                    elif color[v] == color[u]:
                        bipartite = False
            frontier = nxt
    connected = components == 1
    halves = ()
    if bipartite and connected and n > 1:
        halves = (
            tuple(int(i) for i in np.nonzero(color == 0)[0]),
            tuple(int(i) for i in np.nonzero(color == 1)[0]),
        )
    degrees = [graph.degree_of(v) for v in range(n)]
    regular = len(set(degrees)) == 1
    if graph.m <= 20000:
        girth, capped = _girth(graph, budgets.girth_cap)
    else:
        girth, capped = -2, True  # skipped on large graphs
    return GraphInvariants(
        n, graph.m, connected, bipartite, halves, regular,
        degrees[0] if regular and degrees else (max(degrees) if degrees else 0),
        girth, capped,
    )


def diameter(graph):
    """Exact diameter by all-pairs BFS (small graphs only); -1 if disconnected."""
    best = 0
    for start in range(graph.n):
        dist = {start: 0}
        frontier = [start]
        d = 0
        while frontier:
            nxt = []
            for u in frontier:
                for v in graph.adj[u]:
                    v = int(v)
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        nxt.append(v)
            frontier = nxt
        if len(dist) < graph.n:
            return -1
        best = max(best, max(dist.values()))
    return best


def _girth(graph, cap):
    """Shortest cycle by truncated BFS from each vertex.

    Returns (girth, capped); a capped result means 'girth >= cap'; -1 means
    the graph is a forest (search exhausted without truncation).
    """
    best = None
    truncated = False
    n = graph.n
    for start in range(n):
        dist = {start: 0}
        parent = {start: -1}
        frontier = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for v in graph.adj[u]:
                    v = int(v)
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        nxt.append(v)
                    elif v != parent[u]:
                        length = dist[u] + dist[v] + 1
                        if best is None or length < best:
                            best = length
            depth = dist[frontier[0]]
            if best is not None and 2 * (depth + 1) >= best:
                break
            if depth + 1 > cap // 2 + 1:
                truncated = True
                break
            frontier = nxt
        if best is not None and best <= 3:
            break
    if best is None:
        return (cap, True) if truncated else (-1, False)
    if best > cap:
        return cap, True
    return best, False


# ---------------------------------------------------------------------------
# induced actions on edges and arcs


@dataclass
class EdgeAction:
    graph: Graph
    vertex_action: GroupAction
    edge_action: GroupAction
    arc_action: GroupAction


def _check_automorphisms(graph, images):
    eset = set(graph.edges)
    for p in images:
        for u, v in graph.edges:
            e = (int(p[u]), int(p[v]))
            if (min(e), max(e)) not in eset:
                raise ValueError("a generator is not a graph automorphism")


def edge_action(graph, act, budgets=DEFAULT, check=True, arcs=True):
    """Induced actions on the canonical edge list (and optionally on arcs)."""
    if check:
        _check_automorphisms(graph, act.images)
    m = graph.m
    budgets.check("max_points", max(m, 1))
    earr = np.array(graph.edges, dtype=DTYPE)

    def on_edges(p):
        iu = p[earr[:, 0]]
        iv = p[earr[:, 1]]
        lo = np.minimum(iu, iv)
        hi = np.maximum(iu, iv)
        out = np.empty(m, dtype=DTYPE)
        for i in range(m):
            out[i] = graph._edge_index[(int(lo[i]), int(hi[i]))]
        return out

    def on_arcs(p):
        e_img = on_edges(p)
        iu = p[earr[:, 0]]
        lo = np.minimum(iu, p[earr[:, 1]])
        out = np.empty(2 * m, dtype=DTYPE)
        # arc 2i = (u,v) with u<v, arc 2i+1 = (v,u)
        flip = (iu != lo).astype(np.int64)
        for i in range(m):
            out[2 * i] = 2 * e_img[i] + flip[i]
            out[2 * i + 1] = 2 * e_img[i] + (1 - flip[i])
        return out

    e_imgs = [on_edges(p) for p in act.images]
    e_act = GroupAction(
        m, e_imgs, source=act.source,
        lift=(lambda g, _f=act.lift: on_edges(_f(g))) if act.lift else None,
        socle_images=(
            [on_edges(p) for p in act.socle_images]
            if act.socle_images is not None
            else None
        ),
    )
    a_act = None
    if arcs:
        a_imgs = [on_arcs(p) for p in act.images]
        a_act = GroupAction(2 * m, a_imgs, source=act.source)
    return EdgeAction(graph, act, e_act, a_act)


def _vertex_group(act, base_hint=()):
    return act.handle() if not base_hint else bsgs(
        act.images, degree=act.domain_size, base_hint=base_hint)


def s_arc_level(graph, act, budgets=DEFAULT):
    """Largest s <= cap with transitivity on s-arcs.

    Iterative stabilizer-orbit check along one path: transitive on s-arcs iff
    transitive on (s-1)-arcs and the (s-1)-arc stabilizer is transitive on
    the admissible extensions.
    """
    cap = budgets.s_arc_cap
    if not act.is_transitive():
        return 0
    if graph.m == 0:
        return 0
    v0 = 0
    neigh = [int(x) for x in graph.adj[v0]]
    if not neigh:
        return 0
    path = [v0]
    level = 0
    while level < cap:
        prev = path[-2] if len(path) >= 2 else None
        candidates = [int(x) for x in graph.adj[path[-1]] if prev is None or int(x) != prev]
        if not candidates:
            break
        chain = bsgs(act.images, degree=act.domain_size, base_hint=tuple(path))
        stab = chain.stabilizer_gens(path)
        if stab:
            mask = _orbit_mask(np.stack(stab), [candidates[0]], act.domain_size)
            if not all(mask[c] for c in candidates):
                break
        elif len(candidates) > 1:
            break
        level += 1
        path.append(candidates[0])
    return level


@dataclass
class LocalAction:
    vertex: int
    neighbors: list
    group: GroupHandle  # constraint of the vertex stabilizer to the neighbors
    verdict: perm.PrimitivityVerdict


def local_action(graph, act, v, budgets=DEFAULT):
    """Vertex stabilizer acting on the neighborhood, with primitivity verdict."""
    neigh = [int(x) for x in graph.adj[v]]
    if not neigh:
        raise ValueError("vertex has no neighbors")
    if act.stab_gens is not None and act.base == v:
        stab = act.stab_gens
    else:
        chain = bsgs(act.images, degree=act.domain_size, base_hint=(v,))
        stab = chain.stabilizer_gens([v])
    pos = {p: i for i, p in enumerate(neigh)}
    restricted = []
    for g in stab:
        img = np.array([pos[int(g[p])] for p in neigh], dtype=DTYPE)
        restricted.append(img)
    handle = bsgs(restricted, degree=len(neigh))
    verdict = perm.primitivity_kind(handle, budgets)
    return LocalAction(v, neigh, handle, verdict)


def is_locally_primitive(graph, act, budgets=DEFAULT):
    """For vertex-transitive actions one vertex suffices."""
    return local_action(graph, act, 0, budgets).verdict.kind == perm.PRIMITIVE


# ---------------------------------------------------------------------------
# quotients and spreads


@dataclass
class QuotientResult:
    graph: Graph
    action: GroupAction
    is_spread: bool
    block_system: perm.BlockSystem


def quotient_and_spread(graph, act, system, budgets=DEFAULT):
    """Quotient modulo an invariant vertex partition; spread test.

    Errors if an edge lies inside a block or the partition is not invariant.
    """
    block_of = system.block_of
    for p in act.images:
        img_change = block_of[np.asarray(p, dtype=np.int64)]
        # invariance: block labels must be permuted consistently
        for b in range(system.n_blocks):
            members = np.nonzero(block_of == b)[0]
            target = set(int(img_change[m]) for m in members)
            if len(target) != 1:
                raise ValueError("block system not invariant under the action")
    q_edges = set()
    arcs_between = {}
    for u, v in graph.edges:
        bu, bv = int(block_of[u]), int(block_of[v])
        if bu == bv:
            raise ValueError("edge inside a block")
        key = (min(bu, bv), max(bu, bv))
        q_edges.add(key)
        arcs_between[key] = arcs_between.get(key, 0) + 1
    q_graph = Graph(system.n_blocks, q_edges)
    is_spread = all(count == 1 for count in arcs_between.values())
    rep = {}
    for pt in range(graph.n):
        rep.setdefault(int(block_of[pt]), pt)
    q_imgs = []
    for p in act.images:
        img = np.empty(system.n_blocks, dtype=DTYPE)
        for b in range(system.n_blocks):
            img[b] = int(block_of[p[rep[b]]])
        q_imgs.append(img)
    q_act = GroupAction(
        system.n_blocks, q_imgs, source=act.source,
        socle_images=(
            [_quotient_image(p, block_of, rep, system.n_blocks)
             for p in act.socle_images]
            if act.socle_images is not None
            else None
        ),
    )
    return QuotientResult(q_graph, q_act, is_spread, system)


def _quotient_image(p, block_of, rep, n_blocks):
    img = np.empty(n_blocks, dtype=DTYPE)
    for b in range(n_blocks):
        img[b] = int(block_of[p[rep[b]]])
    return img


# ---------------------------------------------------------------------------
# canonical forms


def _refine_colors(graph, colors):
    """1-WL refinement to a stable coloring (deterministic color ids)."""
    n = graph.n
    colors = np.asarray(colors, dtype=np.int64)
    while True:
        keys = []
        for v in range(n):
            neigh = tuple(sorted(int(colors[u]) for u in graph.adj[v]))
            keys.append((int(colors[v]), neigh))
        uniq = sorted(set(keys))
        if len(uniq) == len(set(colors.tolist())):
            # same number of classes: check stability (classes unchanged)
            remap = {k: i for i, k in enumerate(uniq)}
            new = np.array([remap[k] for k in keys], dtype=np.int64)
            if _same_partition(colors, new):
                return new
            colors = new
            continue
        remap = {k: i for i, k in enumerate(uniq)}
        colors = np.array([remap[k] for k in keys], dtype=np.int64)


def _same_partition(a, b):
    seen = {}
    for x, y in zip(a.tolist(), b.tolist()):
        if x in seen:
            if seen[x] != y:
                return False
        else:
            seen[x] = y
    return len(set(seen.values())) == len(seen)


def _cells(colors):
    cells = {}
    for v, c in enumerate(colors.tolist()):
        cells.setdefault(c, []).append(v)
    return cells


def _adjacency_bits(graph, order):
    """Upper-triangle bitstring of the relabeled adjacency matrix."""
    n = graph.n
    pos = np.empty(n, dtype=np.int64)
    for new, old in enumerate(order):
        pos[old] = new
    bits = bytearray((n * (n - 1) // 2 + 7) // 8)
    for u, v in graph.edges:
        a, b = int(pos[u]), int(pos[v])
        if a > b:
            a, b = b, a
        idx = b * (b - 1) // 2 + a
        bits[idx >> 3] |= 1 << (idx & 7)
    return bytes(bits)


def canonical_form(graph, group=None, budgets=DEFAULT):
    """Isomorphism-complete certificate of the graph.

    Iterated color refinement plus backtracking over individualizations of
    the first non-singleton cell (ordered by size, then least element); the
    certificate is the lexicographically least adjacency bitstring over the
    explored leaves.  ``group`` may supply known automorphisms (as a
    GroupHandle on the vertices); their orbits prune equivalent branches
    without changing the minimum.
    """
    budgets.check("max_canon_vertices", graph.n)
    n = graph.n
    if n == 0:
        raise ValueError("empty graph")
    base_colors = _refine_colors(graph, np.zeros(n, dtype=np.int64))
    best = [None]

    def leaf(colors):
        order = [v for _, v in sorted((int(colors[v]), v) for v in range(n))]
        bits = _adjacency_bits(graph, order)
        if best[0] is None or bits < best[0]:
            best[0] = bits

    def descend(colors, fixed, autos):
        cells = _cells(colors)
        non_singleton = [c for c in sorted(cells) if len(cells[c]) > 1]
        if not non_singleton:
            leaf(colors)
            return
        # cell choice must be label-invariant: order by (size, color id)
        target = min(non_singleton, key=lambda c: (len(cells[c]), c))
        cell = cells[target]
        candidates = cell
        next_autos = None
        if autos is not None:
            chain = autos.rebase(tuple(fixed)) if fixed else autos
            stab = chain.stabilizer_gens(list(fixed)) if fixed else autos.gens
            if stab:
                labels = perm.orbits(bsgs(stab, degree=n))
                orbit_id = {}
                for i, orb in enumerate(labels):
                    for v in orb:
                        orbit_id[v] = i
                per_orbit = {}
                for v in cell:
                    per_orbit.setdefault(orbit_id[v], []).append(v)
                # one representative per stabilizer orbit, chosen in the cell
                candidates = sorted(min(vs) for vs in per_orbit.values())
                next_autos = autos
            else:
                candidates = cell
                next_autos = None
        n_colors = int(colors.max()) + 1
        children = []
        for v in candidates:
            child = colors.copy()
            child[v] = n_colors
            refined = _refine_colors(graph, child)
            sizes = np.bincount(refined)
            inv = tuple(sizes.tolist())
            children.append((inv, v, refined))
        best_inv = min(ch[0] for ch in children)
        for inv, v, refined in children:
            if inv != best_inv:
                continue
            descend(refined, fixed + [v], next_autos)

    descend(base_colors, [], group)
    return (n, best[0])


def is_isomorphic(g1, g2, group1=None, group2=None, budgets=DEFAULT):
    if g1.n != g2.n or g1.m != g2.m:
        return False
    return canonical_form(g1, group1, budgets) == canonical_form(g2, group2, budgets)


def find_automorphism(graph, source, target, budgets=DEFAULT):
    """An automorphism mapping ``source`` to ``target``, or None.

    Individualization-refinement backtracking; used by the sporadic-group
    builders to extend known automorphism groups of highly symmetric graphs.
    """
    budgets.check("max_canon_vertices", graph.n)
    n = graph.n
    base = _refine_colors(graph, np.zeros(n, dtype=np.int64))
    c1 = base.copy()
    c1[source] = base.max() + 1
    c2 = base.copy()
    c2[target] = base.max() + 1
    return _extend_iso(graph, graph, _refine_colors(graph, c1),
                       _refine_colors(graph, c2), {source: target})


def find_isomorphism(g1, g2, budgets=DEFAULT):
    """A vertex bijection g1 -> g2 preserving adjacency, or None."""
    if g1.n != g2.n or g1.m != g2.m:
        return None
    budgets.check("max_canon_vertices", g1.n)
    base1 = _refine_colors(g1, np.zeros(g1.n, dtype=np.int64))
    base2 = _refine_colors(g2, np.zeros(g2.n, dtype=np.int64))
    if sorted(np.bincount(base1).tolist()) != sorted(np.bincount(base2).tolist()):
        return None
    return _extend_iso(g1, g2, base1, base2, {})


def _color_profile(colors):
    return tuple(sorted(np.bincount(colors[colors >= 0]).tolist()))


def _extend_iso(g1, g2, colors1, colors2, mapping):
    """DFS: individualize matching cells until discrete, then verify."""
    if _color_profile(colors1) != _color_profile(colors2):
        return None
    n = g1.n
    cells1 = _cells(colors1)
    non_singleton = [c for c in sorted(cells1) if len(cells1[c]) > 1]
    if not non_singleton:
        # colors discrete: read the induced bijection (match by color)
        bycolor2 = {int(colors2[v]): v for v in range(n)}
        p = np.empty(n, dtype=DTYPE)
        for v in range(n):
            c = int(colors1[v])
            if c not in bycolor2:
                return None
            p[v] = bycolor2[c]
        eset2 = {e: None for e in g2.edges}
        for u, v in g1.edges:
            a, b = int(p[u]), int(p[v])
            if (min(a, b), max(a, b)) not in eset2:
                return None
        return p
    target = min(non_singleton, key=lambda c: (len(cells1[c]), min(cells1[c])))
    cells2 = _cells(colors2)
    if target not in cells2 or len(cells2[target]) != len(cells1[target]):
        return None
    v = min(cells1[target])
    mark = max(int(colors1.max()), int(colors2.max())) + 1
    c1 = colors1.copy()
    c1[v] = mark
    r1 = _refine_colors(g1, c1)
    for w in cells2[target]:
        c2 = colors2.copy()
        c2[w] = mark
        r2 = _refine_colors(g2, c2)
        result = _extend_iso(g1, g2, r1, r2, mapping)
        if result is not None:
            return result
    return None


# ---------------------------------------------------------------------------
# graph6


def graph6_encode(graph):
    n = graph.n
    if n > 258047:
        raise ValueError("graph too large for graph6 here")
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    bits = []
    eset = set(graph.edges)
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in eset else 0)
    body = bytearray()
    for k in range(0, len(bits), 6):
        chunk = bits[k : k + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        body.append(val + 63)
    return (head + bytes(body)).decode("ascii")


def graph6_decode(text):
    data = text.strip().encode("ascii")
    if data[0] == 126:
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    bits = []
    for byte in body:
        val = byte - 63
        for k in range(5, -1, -1):
            bits.append((val >> k) & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def adjacency_text(graph):
    lines = [f"n {graph.n}"]
    for v in range(graph.n):
        lines.append(" ".join(str(int(u)) for u in graph.adj[v]))
    return "\n".join(lines) + "\n"
