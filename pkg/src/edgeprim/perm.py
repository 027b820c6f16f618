"""Permutation groups: Schreier-Sims chains, orbits, blocks, normal structure.

Permutations are numpy int32 image arrays on {0..n-1}; ``compose(p, q)``
applies p first, then q.  GroupHandle owns a deterministic base and strong
generating set; every derived fact (order, membership, stabilizers, block
systems) comes from that chain, so identical generator lists always produce
identical answers.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .config import DEFAULT, BudgetError

DTYPE = np.int32


# ---------------------------------------------------------------------------
# permutation primitives


def identity(n):
    return np.arange(n, dtype=DTYPE)


def is_identity(p):
    return bool(np.array_equal(p, np.arange(len(p), dtype=p.dtype)))


def compose(p, q):
    """Apply p, then q."""
    return q[p]


def inverse(p):
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p), dtype=p.dtype)
    return inv


def conjugate(p, g):
    """g^-1 p g."""
    return compose(compose(inverse(g), p), g)


def perm_order(p):
    n = len(p)
    seen = np.zeros(n, dtype=bool)
    out = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length > 1:
            out = out * length // np.gcd(out, length)
    return int(out)


def from_cycles(n, cycles):
    p = identity(n)
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:]):
            p[a] = b
        if cyc:
            p[cyc[-1]] = cyc[0]
    if not _is_perm(p):
        raise ValueError(f"cycles do not define a permutation: {cycles}")
    return p


def _is_perm(p):
    return bool(np.array_equal(np.sort(p), np.arange(len(p), dtype=p.dtype)))


def to_cycles(p):
    seen = set()
    cycles = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            seen.add(i)
            continue
        cyc = [i]
        seen.add(i)
        j = int(p[i])
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = int(p[j])
        cycles.append(cyc)
    return cycles


def format_cycles(p):
    cycles = to_cycles(p)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def parse_cycles(text, n=None):
    """Parse '(0 1 2)(3 4)' into an image array (degree n or inferred)."""
    text = text.strip()
    cycles = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] != "(":
            raise ValueError(f"bad cycle syntax at {text[pos:]!r}")
        end = text.index(")", pos)
        body = text[pos + 1 : end].replace(",", " ").split()
        if body:
            cycles.append([int(x) for x in body])
        pos = end + 1
    top = max((max(c) for c in cycles if c), default=-1)
    if n is None:
        n = top + 1
    elif top >= n:
        raise ValueError(f"point {top} out of range for degree {n}")
    return from_cycles(n, cycles)


def load_group_file(path):
    """Read the generator text format: 'degree n' then one cycle line per gen."""
    degree = None
    gens = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if degree is None:
                head, value = line.split()
                if head != "degree":
                    raise ValueError(f"expected 'degree n' first, got {line!r}")
                degree = int(value)
                if degree <= 0:
                    raise ValueError("degree must be positive")
                continue
            gens.append(parse_cycles(line, degree))
    if degree is None:
        raise ValueError(f"no 'degree' header in {path}")
    return degree, gens


def save_group_file(path, degree, gens, comment=None):
    with open(path, "w", encoding="utf-8") as fh:
        if comment:
            for line in comment.splitlines():
                fh.write(f"# {line}\n")
        fh.write(f"degree {degree}\n")
        for g in gens:
            fh.write(format_cycles(g) + "\n")


# ---------------------------------------------------------------------------
# stabilizer chain


class _Level:
    __slots__ = ("pt", "gens", "orbit", "pos", "sv_gen", "sv_prev", "_trans")

    def __init__(self, pt, degree):
        self.pt = pt
        self.gens = []  # strong generators introduced at this depth
        self.orbit = [pt]
        self.pos = {pt: 0}
        self.sv_gen = {pt: None}
        self.sv_prev = {pt: None}
        self._trans = {pt: None}  # None encodes the identity

    def transversal(self, point, degree):
        """Element mapping self.pt to ``point`` (walks the Schreier tree)."""
        t = self._trans.get(point, False)
        if t is not False:
            return t
        path = []
        walk = point
        while self._trans.get(walk, False) is False:
            path.append(walk)
            walk = self.sv_prev[walk]
        t = self._trans[walk]
        for node in reversed(path):
            g = self.sv_gen[node]
            t = g.copy() if t is None else compose(t, g)
            self._trans[node] = t
        return self._trans[point]


class GroupHandle:
    """A permutation group with a deterministic stabilizer chain.

    Immutable after construction; safe for concurrent reads.  ``socle_gens``
    optionally declares generators of the socle (used to shorten kernel and
    quasiprimitivity computations for groups built by the library).
    """

    def __init__(self, degree, gens, base_hint=(), socle_gens=None, name=None):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        self.degree = int(degree)
        clean = []
        seen = set()
        for g in gens:
            g = np.asarray(g, dtype=DTYPE)
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
            if not _is_perm(g):
                raise ValueError("generator is not a permutation")
            if is_identity(g):
                continue
            key = g.tobytes()
            if key in seen:
                continue
            seen.add(key)
            clean.append(g)
        self.gens = clean
        self.name = name
        self.socle_gens = (
            [np.asarray(g, dtype=DTYPE) for g in socle_gens] if socle_gens else None
        )
        # the chain is built on first use (order/membership/stabilizers);
        # construction is deterministic and idempotent, so lazy init is safe
        # for concurrent readers
        self._base_hint = tuple(base_hint)
        for pt in self._base_hint:
            if not 0 <= pt < self.degree:
                raise ValueError(f"base hint point {pt} out of range")
        self._levels = None
        self._order = None
        self._elements_cache = None
        self._classes_cache = None

    def _ensure_chain(self):
        if self._levels is None:
            self._levels = []
            self._build_chain(self._base_hint)
            order = 1
            for lvl in self._levels:
                order *= len(lvl.orbit)
            self._order = order
        return self._levels

    # -- chain construction -------------------------------------------------

    def _strong_gens(self, depth):
        out = []
        for lvl in self._levels[depth:]:
            out.extend(lvl.gens)
        return out

    def _recompute_orbit(self, depth):
        lvl = self._levels[depth]
        gens = self._strong_gens(depth)
        lvl.orbit = [lvl.pt]
        lvl.pos = {lvl.pt: 0}
        lvl.sv_gen = {lvl.pt: None}
        lvl.sv_prev = {lvl.pt: None}
        lvl._trans = {lvl.pt: None}
        head = 0
        while head < len(lvl.orbit):
            p = lvl.orbit[head]
            head += 1
            for g in gens:
                q = int(g[p])
                if q not in lvl.pos:
                    lvl.pos[q] = len(lvl.orbit)
                    lvl.orbit.append(q)
                    lvl.sv_gen[q] = g
                    lvl.sv_prev[q] = p

    def _sift(self, g, start=0):
        for depth in range(start, len(self._levels)):
            lvl = self._levels[depth]
            img = int(g[lvl.pt])
            if img == lvl.pt:
                continue
            if img not in lvl.pos:
                return g, depth
            t = lvl.transversal(img, self.degree)
            g = compose(g, inverse(t))
        return g, len(self._levels)

    def _new_level(self, residue, hint):
        for pt in hint:
            if all(lvl.pt != pt for lvl in self._levels) and residue[pt] != pt:
                self._levels.append(_Level(int(pt), self.degree))
                return
        moved = np.nonzero(residue != np.arange(self.degree, dtype=DTYPE))[0]
        self._levels.append(_Level(int(moved[0]), self.degree))

    def _build_chain(self, hint):
        for pt in hint:
            if not 0 <= pt < self.degree:
                raise ValueError(f"base hint point {pt} out of range")
            self._levels.append(_Level(int(pt), self.degree))
        for g in self.gens:
            self._add_element(g, hint)
        depth = len(self._levels) - 1
        while depth >= 0:
            redo = self._verify_level(depth, hint)
            depth = depth - 1 if redo is None else redo

    def _add_element(self, g, hint):
        """Sift g; append the residue as a strong generator. Returns depth or None."""
        residue, depth = self._sift(g)
        if is_identity(residue):
            return None
        if depth == len(self._levels):
            self._new_level(residue, hint)
        self._levels[depth].gens.append(residue)
        for d in range(depth + 1):
            self._recompute_orbit(d)
        return depth

    def _verify_level(self, depth, hint):
        lvl = self._levels[depth]
        gens = self._strong_gens(depth)
        idx = 0
        while idx < len(lvl.orbit):
            beta = lvl.orbit[idx]
            t_beta = lvl.transversal(beta, self.degree)
            for s in gens:
                target = int(s[beta])
                t_target = lvl.transversal(target, self.degree)
                # u_beta * s * u_target^-1 fixes the base point
                h = s if t_beta is None else compose(t_beta, s)
                if t_target is not None:
                    h = compose(h, inverse(t_target))
                if is_identity(h):
                    continue
                added = self._add_element(h, hint)
                if added is not None and added > depth:
                    return added
                if added is not None:
                    # same level grew (possible only through orbit growth)
                    return depth
            idx += 1
        return None

    # -- public facts --------------------------------------------------------

    @property
    def order(self):
        self._ensure_chain()
        return self._order

    def member(self, g):
        self._ensure_chain()
        g = np.asarray(g, dtype=DTYPE)
        if len(g) != self.degree:
            return False
        residue, _ = self._sift(g)
        return is_identity(residue)

    def base(self):
        return [lvl.pt for lvl in self._ensure_chain()]

    def rebase(self, base_hint):
        """Same group, chain forced to start with ``base_hint``."""
        return GroupHandle(
            self.degree, self.gens, base_hint=base_hint, socle_gens=self.socle_gens
        )

    def stabilizer_gens(self, points):
        """Generators of the pointwise stabilizer of ``points``."""
        self._ensure_chain()
        chain = self if self._base_starts_with(points) else self.rebase(points)
        chain._ensure_chain()
        depth = 0
        for pt in points:
            if depth < len(chain._levels) and chain._levels[depth].pt == pt:
                depth += 1
        gens = chain._strong_gens(depth)
        return gens

    def _base_starts_with(self, points):
        b = self.base()
        if len(points) > len(b):
            return False
        return all(b[i] == points[i] for i in range(len(points)))

    def random_element(self, rng):
        """Uniform element via the chain transversals."""
        g = None
        for lvl in self._ensure_chain():
            pt = lvl.orbit[rng.randrange(len(lvl.orbit))]
            t = lvl.transversal(pt, self.degree)
            if t is None:
                continue
            g = t.copy() if g is None else compose(g, t)
        return identity(self.degree) if g is None else g

    def elements(self, budgets=DEFAULT):
        """All elements (BFS closure); cached. Guarded by max_elements."""
        if self._elements_cache is not None:
            return self._elements_cache
        budgets.check("max_elements", self.order)
        out = [identity(self.degree)]
        index = {out[0].tobytes(): 0}
        head = 0
        while head < len(out):
            cur = out[head]
            head += 1
            for g in self.gens:
                nxt = compose(cur, g)
                key = nxt.tobytes()
                if key not in index:
                    index[key] = len(out)
                    out.append(nxt)
        assert len(out) == self.order
        self._elements_cache = (out, index)
        return self._elements_cache

    def conjugacy_class_reps(self, budgets=DEFAULT):
        """Deterministic class representatives via full enumeration."""
        if self._classes_cache is not None:
            return self._classes_cache
        elems, index = self.elements(budgets)
        inv_gens = [inverse(g) for g in self.gens]
        n_el = len(elems)
        label = np.full(n_el, -1, dtype=np.int64)
        reps = []
        for start in range(n_el):
            if label[start] >= 0:
                continue
            cls = len(reps)
            reps.append(elems[start])
            label[start] = cls
            stack = [start]
            while stack:
                i = stack.pop()
                e = elems[i]
                for g, gi in zip(self.gens, inv_gens):
                    j = index[compose(compose(gi, e), g).tobytes()]
                    if label[j] < 0:
                        label[j] = cls
                        stack.append(j)
        self._classes_cache = reps
        return reps


def bsgs(generators, degree=None, base_hint=(), socle_gens=None, name=None):
    """Build a GroupHandle from a generator list.

    With an empty list the degree must be given explicitly.
    """
    if degree is None:
        if not generators:
            raise ValueError("degree required for an empty generator list")
        degree = len(generators[0])
    return GroupHandle(degree, generators, base_hint=base_hint,
                       socle_gens=socle_gens, name=name)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup handle tied to a parent group."""

    parent: GroupHandle
    group: GroupHandle

    def __post_init__(self):
        for g in self.group.gens:
            if not self.parent.member(g):
                raise ValueError("subgroup generator outside parent group")
        if self.parent.order % self.group.order:
            raise AssertionError("subgroup order does not divide parent order")

    @property
    def index(self):
        return self.parent.order // self.group.order


def subgroup(parent, gens, base_hint=(), name=None):
    return Subgroup(parent, bsgs(list(gens), degree=parent.degree,
                                 base_hint=base_hint, name=name))


# ---------------------------------------------------------------------------
# orbits and block systems


def orbits(group):
    """Orbit partition of the domain, sorted by (size, least point)."""
    gens = group.gens
    n = group.degree
    if not gens:
        return [[i] for i in range(n)]
    labels = _kernels.orbit_partition(np.stack(gens))
    out = {}
    for i, lab in enumerate(labels.tolist()):
        out.setdefault(lab, []).append(i)
    return sorted(out.values(), key=lambda o: (len(o), o[0]))


def orbit_of(group_or_gens, start):
    gens = group_or_gens.gens if hasattr(group_or_gens, "gens") else group_or_gens
    n = len(gens[0]) if gens else None
    if n is None:
        raise ValueError("need at least one generator or use orbits()")
    mask = _kernels.orbit_of(np.stack(gens), [start], n)
    return np.nonzero(mask)[0]


def is_transitive(group):
    if group.degree == 1:
        return True
    if not group.gens:
        return False
    mask = _kernels.orbit_of(np.stack(group.gens), [0], group.degree)
    return bool(mask.all())


@dataclass(frozen=True)
class BlockSystem:
    """A G-invariant partition into equal-size blocks."""

    block_of: np.ndarray  # point -> block id (ids numbered by least point)
    n_blocks: int
    block_size: int

    @property
    def trivial(self):
        return self.block_size == 1 or self.n_blocks == 1

    def blocks(self):
        out = [[] for _ in range(self.n_blocks)]
        for pt, b in enumerate(self.block_of.tolist()):
            out[b].append(pt)
        return out

    def block_containing(self, pt):
        b = int(self.block_of[pt])
        return [i for i, lab in enumerate(self.block_of.tolist()) if lab == b]


def _labels_to_system(labels):
    order = {}
    block_of = np.empty(len(labels), dtype=np.int64)
    for pt, lab in enumerate(labels.tolist()):
        if lab not in order:
            order[lab] = len(order)
        block_of[pt] = order[lab]
    n_blocks = len(order)
    return BlockSystem(block_of, n_blocks, len(labels) // n_blocks)


def point_stabilizer(group, point):
    """Stabilizer of a point as a Subgroup; index equals the orbit length."""
    if not 0 <= point < group.degree:
        raise ValueError(f"point {point} out of range")
    gens = group.stabilizer_gens([point])
    sub = bsgs(gens, degree=group.degree, base_hint=[point] if gens else ())
    handle = Subgroup(group, sub)
    if group.gens:
        orb = orbit_of(group, point)
        if handle.index != len(orb):
            raise AssertionError("orbit-stabilizer mismatch")
    return handle


def minimal_block(group, pair, gens_matrix=None):
    """Smallest block containing both points of ``pair`` (Atkinson).

    Requires a transitive group; returns the full domain when the pair lies
    in no proper block.
    """
    a, b = pair
    if a == b:
        raise ValueError("need two distinct points")
    if gens_matrix is None:
        if not is_transitive(group):
            raise ValueError("minimal_block requires a transitive group")
        gens_matrix = np.stack(group.gens)
    labels = _kernels.block_refine(gens_matrix, [a], [b])
    root = labels[a]
    return [i for i, lab in enumerate(labels.tolist()) if lab == root]


def _suborbit_reps(group, base, stab_gens=None):
    """One representative per orbit of the point stabilizer of ``base``."""
    if stab_gens is None:
        stab_gens = group.stabilizer_gens([base])
    n = group.degree
    if not stab_gens:
        return [p for p in range(n) if p != base]
    labels = _kernels.orbit_partition(np.stack(stab_gens))
    reps = sorted(set(labels.tolist()))
    return [r for r in reps if r != labels[base]]


def block_lattice(group, basepoint, budgets=DEFAULT, stab_gens=None):
    """All blocks through ``basepoint``, smallest first.

    Join-closure of the minimal blocks over stabilizer-orbit representatives;
    in bijection with the overgroups of the point stabilizer.
    """
    if not is_transitive(group):
        raise ValueError("block_lattice requires a transitive group")
    n = group.degree
    budgets.check("max_points", n)
    if n == 1:
        return [[0]]
    gens_matrix = np.stack(group.gens)
    reps = _suborbit_reps(group, basepoint, stab_gens)
    minimal = []
    seen = set()
    for r in reps:
        blk = minimal_block(group, (basepoint, r), gens_matrix)
        key = tuple(blk)
        if key not in seen:
            seen.add(key)
            minimal.append(blk)
    # join-closure
    closure = {tuple(sorted(b)) for b in minimal}
    closure.add((basepoint,))
    frontier = list(closure)
    while frontier:
        nxt = []
        current = list(closure)
        for b1 in frontier:
            for b2 in current:
                if set(b1) >= set(b2) or set(b2) >= set(b1):
                    continue
                pts = sorted(set(b1) | set(b2))
                seeds = [(basepoint, p) for p in pts if p != basepoint]
                labels = _kernels.block_refine(
                    gens_matrix,
                    [s[0] for s in seeds],
                    [s[1] for s in seeds],
                )
                root = labels[basepoint]
                joined = tuple(
                    i for i, lab in enumerate(labels.tolist()) if lab == root
                )
                if joined not in closure:
                    closure.add(joined)
                    nxt.append(joined)
        frontier = nxt
    full = tuple(range(n))
    closure.add(full)
    return [list(b) for b in sorted(closure, key=lambda b: (len(b), b))]


PRIMITIVE = "primitive"
BIPRIMITIVE = "biprimitive"
IMPRIMITIVE_OTHER = "imprimitive_other"
INTRANSITIVE = "intransitive"


@dataclass(frozen=True)
class PrimitivityVerdict:
    kind: str
    witnesses: list = field(default_factory=list)  # one BlockSystem per size

    def __eq__(self, other):
        if isinstance(other, str):
            return self.kind == other
        return NotImplemented


def primitivity_kind(group, budgets=DEFAULT, stab_gens=None, base=0):
    """Primitive / biprimitive / imprimitive_other / intransitive + witnesses.

    ``stab_gens`` may supply known generators of the stabilizer of ``base``
    (e.g. from a coset construction) to avoid a chain rebuild.
    """
    n = group.degree
    budgets.check("max_points", n)
    if not is_transitive(group):
        return PrimitivityVerdict(INTRANSITIVE)
    if n == 1:
        return PrimitivityVerdict(PRIMITIVE)
    gens_matrix = np.stack(group.gens)
    reps = _suborbit_reps(group, base, stab_gens)
    systems = {}
    for r in reps:
        labels = _kernels.block_refine(gens_matrix, [base], [r])
        root = labels[base]
        size = int((labels == root).sum())
        if size == n:
            continue
        if size not in systems:
            systems[size] = _labels_to_system(labels)
    if not systems:
        return PrimitivityVerdict(PRIMITIVE)
    witnesses = [systems[s] for s in sorted(systems)]
    # biprimitive: every nontrivial block through the base has size n/2,
    # i.e. every nontrivial system has exactly two parts
    lattice = block_lattice(group, base, budgets, stab_gens)
    nontrivial = [b for b in lattice if 1 < len(b) < n]
    if nontrivial and all(len(b) == n // 2 for b in nontrivial):
        return PrimitivityVerdict(BIPRIMITIVE, witnesses)
    return PrimitivityVerdict(IMPRIMITIVE_OTHER, witnesses)


def has_proper_block(group, budgets=DEFAULT, stab_gens=None, base=0):
    """Early-exit imprimitivity test: first proper block system found, or None."""
    n = group.degree
    budgets.check("max_points", n)
    if n == 1 or not is_transitive(group):
        return None
    gens_matrix = np.stack(group.gens)
    for r in _suborbit_reps(group, base, stab_gens):
        labels = _kernels.block_refine(gens_matrix, [base], [r])
        if int((labels == labels[base]).sum()) < n:
            return _labels_to_system(labels)
    return None


# ---------------------------------------------------------------------------
# coset actions


class CosetAction:
    """Right-multiplication action of a group on the cosets of a subgroup.

    Cosets are identified by their canonical (lexicographically least)
    representative computed through the subgroup's stabilizer chain; the
    base coset (index 0) is the subgroup itself.
    """

    def __init__(self, parent, sub, budgets=DEFAULT):
        if sub.parent is not parent:
            raise ValueError("subgroup does not belong to this parent")
        index = sub.index
        budgets.check("max_cosets", index)
        self.parent = parent
        self.sub = sub
        h = sub.group
        reps = [self._canon(h, identity(parent.degree))]
        lookup = {reps[0].tobytes(): 0}
        head = 0
        while head < len(reps):
            r = reps[head]
            head += 1
            for g in parent.gens:
                nxt = self._canon(h, compose(r, g))
                key = nxt.tobytes()
                if key not in lookup:
                    lookup[key] = len(reps)
                    reps.append(nxt)
        if len(reps) != index:
            raise AssertionError(
                f"coset enumeration found {len(reps)} cosets, expected {index}"
            )
        self.reps = reps
        self.lookup = lookup
        self.degree = len(reps)
        self.images = [self.act_element(g) for g in parent.gens]

    @staticmethod
    def _canon(h, x):
        r = x
        for lvl in h._ensure_chain():
            if len(lvl.orbit) == 1:
                continue
            best = None
            best_img = None
            for delta in lvl.orbit:
                img = int(r[delta])
                if best_img is None or img < best_img:
                    best_img = img
                    best = delta
            t = lvl.transversal(best, h.degree)
            if t is not None:
                r = compose(t, r)
        return r

    def act_element(self, g):
        """Image array of right multiplication by g on the coset domain."""
        h = self.sub.group
        out = np.empty(self.degree, dtype=DTYPE)
        for i, r in enumerate(self.reps):
            out[i] = self.lookup[self._canon(h, compose(r, g)).tobytes()]
        return out

    def induced_handle(self, base_hint=(), socle_gens=None):
        imgs = [img for img in self.images]
        return bsgs(imgs, degree=self.degree, base_hint=base_hint,
                    socle_gens=socle_gens)

    def stabilizer_images(self):
        """Images of the subgroup's own generators (stabilizer of coset 0)."""
        return [self.act_element(g) for g in self.sub.group.gens]

    def is_faithful(self, budgets=DEFAULT):
        """Kernel triviality.

        Uses the parent's declared socle when available (the kernel is
        nontrivial iff some minimal normal subgroup lies inside the point
        stabilizer); otherwise compares image and parent orders.
        """
        if self.parent.socle_gens is not None:
            # almost simple / declared socle: unique minimal normal subgroup
            if all(self.sub.group.member(g) for g in self.parent.socle_gens):
                return False
            return True
        for n_sub in minimal_normal_subgroups(self.parent, budgets):
            if all(self.sub.group.member(g) for g in n_sub.group.gens):
                return False
        return True


def coset_action(parent, sub, budgets=DEFAULT):
    return CosetAction(parent, sub, budgets)


def is_maximal(parent, sub, budgets=DEFAULT):
    """No proper intermediate subgroup <=> coset action primitive."""
    if sub.index == 1:
        raise ValueError("subgroup is the whole group")
    act = coset_action(parent, sub, budgets)
    handle = act.induced_handle()
    verdict = primitivity_kind(handle, budgets,
                               stab_gens=act.stabilizer_images(), base=0)
    return verdict.kind == PRIMITIVE


# ---------------------------------------------------------------------------
# normal structure


def reduced_gens(degree, gens):
    """Greedy generating subset (keeps handles small before mask loops)."""
    picked = []
    handle = bsgs([], degree=degree)
    for g in gens:
        g = np.asarray(g, dtype=DTYPE)
        if is_identity(g) or handle.member(g):
            continue
        picked.append(g)
        handle = bsgs(picked, degree=degree)
    return picked, handle


def normal_closure(group, seeds, budgets=DEFAULT):
    """Smallest normal subgroup of ``group`` containing ``seeds``."""
    seeds = [np.asarray(s, dtype=DTYPE) for s in seeds]
    for s in seeds:
        if not group.member(s):
            raise ValueError("seed is not a member of the group")
    current = [s for s in seeds if not is_identity(s)]
    handle = bsgs(current, degree=group.degree)
    changed = True
    while changed:
        changed = False
        for s in list(current):
            for g in group.gens:
                c = conjugate(s, g)
                if not handle.member(c):
                    current.append(c)
                    handle = bsgs(current, degree=group.degree)
                    changed = True
    return Subgroup(group, handle)


def derived_subgroup(group, budgets=DEFAULT):
    comms = []
    for i, a in enumerate(group.gens):
        for b in group.gens[i + 1 :]:
            comms.append(compose(compose(inverse(a), inverse(b)), compose(a, b)))
    if not comms:
        return Subgroup(group, bsgs([], degree=group.degree))
    return normal_closure(group, comms, budgets)


def index_two_subgroups(group, budgets=DEFAULT):
    """All subgroups of index 2, via the derived quotient.

    Index-2 subgroups are kernels of surjections onto C2, which factor
    through the abelianization; enumerate sign assignments on a reduced
    generator list and keep the kernels.  Empty iff the abelianization has
    odd order.
    """
    if not group.gens:
        return []
    gens, _ = reduced_gens(group.degree, group.gens)
    der = derived_subgroup(group, budgets)
    k = len(gens)
    out = []
    for mask in range(1, 1 << k):
        signs = [(mask >> i) & 1 for i in range(k)]
        # kernel generated by the derived subgroup, the even generators, and
        # products of odd generator pairs
        odd = [g for g, s in zip(gens, signs) if s]
        even = [g for g, s in zip(gens, signs) if not s]
        sub_gens = list(der.group.gens) + even
        g0 = odd[0]
        sub_gens.extend(compose(g0, g) for g in odd)
        handle = bsgs(sub_gens, degree=group.degree)
        if handle.order * 2 != group.order:
            continue
        if any(handle.member(g) for g in odd):
            continue
        duplicate = any(
            other.group.order == handle.order
            and all(other.group.member(g) for g in handle.gens)
            for other in out
        )
        if not duplicate:
            out.append(Subgroup(group, handle))
    out.sort(key=lambda s: sorted(g.tobytes() for g in s.group.gens))
    return out


def minimal_normal_subgroups(group, budgets=DEFAULT):
    """Minimal normal subgroups via normal closures of class representatives.

    Complete because every minimal normal subgroup is the normal closure of
    any of its nontrivial elements.  Requires the element-enumeration budget
    unless the handle declares its socle structure.
    """
    if group.order == 1:
        return []
    if group.order > budgets.max_elements and group.socle_gens is not None:
        # declared socle of an almost simple group: unique minimal normal
        handle = bsgs(group.socle_gens, degree=group.degree)
        return [Subgroup(group, handle)]
    reps = group.conjugacy_class_reps(budgets)
    closures = []
    for rep in reps:
        if is_identity(rep):
            continue
        closures.append(normal_closure(group, [rep], budgets))
    minimal = []
    for cand in sorted(closures, key=lambda s: s.group.order):
        contains_smaller = False
        for m in minimal:
            if all(cand.group.member(g) for g in m.group.gens):
                contains_smaller = True
                break
        if contains_smaller:
            continue
        duplicate = any(
            m.group.order == cand.group.order
            and all(m.group.member(g) for g in cand.group.gens)
            for m in minimal
        )
        if not duplicate:
            minimal.append(cand)
    minimal.sort(key=lambda s: (s.group.order,
                                sorted(g.tobytes() for g in s.group.gens)))
    return minimal


QUASIPRIMITIVE = "quasiprimitive"
BIQUASIPRIMITIVE = "biquasiprimitive"
NEITHER = "neither"


def quasiprimitivity_kind(group, budgets=DEFAULT, min_normals=None):
    """quasiprimitive / biquasiprimitive / neither / intransitive.

    Sufficient to inspect minimal normal subgroups: any normal subgroup
    contains a minimal one and orbits only coarsen upward.
    """
    if not is_transitive(group):
        return INTRANSITIVE
    if min_normals is None:
        min_normals = minimal_normal_subgroups(group, budgets)
    max_orbits = 1
    for sub in min_normals:
        count = len(orbits(sub.group))
        max_orbits = max(max_orbits, count)
    if max_orbits == 1:
        return QUASIPRIMITIVE
    if max_orbits == 2:
        return BIQUASIPRIMITIVE
    return NEITHER


def centralizer(group, element, budgets=DEFAULT):
    """Centralizer of an element, by element enumeration."""
    element = np.asarray(element, dtype=DTYPE)
    if not group.member(element):
        raise ValueError("element not in group")
    elems, _ = group.elements(budgets)
    picked = []
    handle = bsgs([], degree=group.degree)
    for e in elems:
        if np.array_equal(compose(e, element), compose(element, e)):
            if not handle.member(e):
                picked.append(e)
                handle = bsgs(picked, degree=group.degree)
    return Subgroup(group, handle)
