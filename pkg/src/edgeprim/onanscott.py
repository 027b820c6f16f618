"""Quasiprimitive type recognition (the eight socle types) and strip algebra.

Strip analysis runs in a representation where the simple factors of T^k move
pairwise disjoint point sets (the structured-group machinery provides this
for wreath-type constructions); projections are then literal restrictions.
"""

from dataclasses import dataclass

import numpy as np

from . import perm
from .config import DEFAULT
from .perm import DTYPE, bsgs, compose, perm_order


# ---------------------------------------------------------------------------
# partitions of an index set


def normalize_partition(parts, k):
    """Canonical form: sorted tuple of sorted tuples covering range(k)."""
    seen = set()
    out = []
    for part in parts:
        pts = tuple(sorted(int(x) for x in part))
        if not pts:
            raise ValueError("empty part")
        for x in pts:
            if x in seen or not 0 <= x < k:
                raise ValueError("parts must be disjoint and inside the ground set")
            seen.add(x)
        out.append(pts)
    if len(seen) != k:
        raise ValueError("parts must cover the ground set")
    return tuple(sorted(out))


def partition_join(p1, p2, k):
    """Smallest common coarsening: connected components of the union relation."""
    p1 = normalize_partition(p1, k)
    p2 = normalize_partition(p2, k)
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in list(p1) + list(p2):
        for a, b in zip(part, part[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups = {}
    for x in range(k):
        groups.setdefault(find(x), []).append(x)
    return normalize_partition(groups.values(), k)


def partition_refines(p1, p2, k):
    """Does every part of p1 lie inside a part of p2?"""
    p2 = normalize_partition(p2, k)
    owner = {}
    for i, part in enumerate(p2):
        for x in part:
            owner[x] = i
    for part in normalize_partition(p1, k):
        if len({owner[x] for x in part}) != 1:
            return False
    return True


def is_invariant_partition(parts, k, top_images):
    """Is the partition preserved by the given permutations of range(k)?"""
    parts = normalize_partition(parts, k)
    index = {}
    for i, part in enumerate(parts):
        for x in part:
            index[x] = i
    for g in top_images:
        for part in parts:
            if len({index[int(g[x])] for x in part}) != 1:
                return False
    return True


# ---------------------------------------------------------------------------
# strips


@dataclass
class StripDecomposition:
    partition: tuple  # supports of the full strips
    subdirect: bool
    witness: dict  # per-part projection orders etc.


def strip_decomposition(k_handle, factors, budgets=DEFAULT):
    """Decompose K <= T_1 x ... x T_k into full strips, or report failure.

    ``factors`` are handles with pairwise disjoint moved-point supports and a
    common order |T|; K must move points only inside the union of supports.
    Returns a StripDecomposition with ``subdirect=False`` and the offending
    projection recorded when some projection is proper.
    """
    degree = k_handle.degree
    supports = []
    for f in factors:
        moved = set()
        for g in f.gens:
            moved.update(int(x) for x in np.nonzero(g != np.arange(degree, dtype=g.dtype))[0])
        supports.append(sorted(moved))
    t_order = factors[0].order
    if any(f.order != t_order for f in factors):
        raise ValueError("factors must share one order")
    flat = [x for s in supports for x in s]
    if len(set(flat)) != len(flat):
        raise ValueError("factor supports must be disjoint")

    def restrict(g, pts):
        img = np.arange(degree, dtype=DTYPE)
        for x in pts:
            img[x] = g[x]
        return img

    def projection_order(pts):
        gens = [restrict(g, pts) for g in k_handle.gens]
        return bsgs(gens, degree=degree).order

    k = len(factors)
    proj = [projection_order(supports[i]) for i in range(k)]
    for i, order in enumerate(proj):
        if order != t_order:
            return StripDecomposition(
                (), False, {"proper_projection": i, "order": order}
            )
    # linkage: i ~ j iff the joint projection is a diagonal (order |T|)
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(k):
        for j in range(i + 1, k):
            if find(i) == find(j):
                continue
            joint = projection_order(supports[i] + supports[j])
            if joint == t_order:
                parent[max(find(i), find(j))] = min(find(i), find(j))
            elif joint != t_order * t_order:
                raise AssertionError(
                    "joint projection is neither diagonal nor full"
                )
    groups = {}
    for x in range(k):
        groups.setdefault(find(x), []).append(x)
    partition = normalize_partition(groups.values(), k)
    # verify each part is one full strip
    orders = {}
    for part in partition:
        pts = [x for i in part for x in supports[i]]
        orders[part] = projection_order(pts)
        if orders[part] != t_order:
            raise AssertionError("part projection is not a single full strip")
    return StripDecomposition(partition, True, {"part_orders": orders})


# ---------------------------------------------------------------------------
# simple group recognition


SIMPLE_ORDERS = {
    60: "A5",
    168: "PSL(2,7)",
    360: "A6",
    504: "PSL(2,8)",
    660: "PSL(2,11)",
    1092: "PSL(2,13)",
    2448: "PSL(2,17)",
    2520: "A7",
    3420: "PSL(2,19)",
    4080: "PSL(2,16)",
    5616: "PSL(3,3)",
    6072: "PSL(2,23)",
    7800: "PSL(2,25)",
    7920: "M11",
    9828: "PSL(2,27)",
    12180: "PSL(2,29)",
    14880: "PSL(2,31)",
    25308: "PSL(2,37)",
    29120: "Sz(8)",
    32736: "PSL(2,32)",
    34440: "PSL(2,41)",
    39732: "PSL(2,43)",
    51888: "PSL(2,47)",
    58800: "PSL(2,49)",
    95040: "M12",
    181440: "A9",
    443520: "M22",
    1814400: "A10",
    10200960: "M23",
    19958400: "A11",
    44352000: "HS",
    239500800: "A12",
    244823040: "M24",
    898128000: "McL",
    495766656000: "Co3",
}


def identify_simple(order, handle=None, budgets=DEFAULT):
    """Name tag of a simple group from its order (profile-based tie-breaks).

    The order 20160 splits into A8 and PSL(3,4); an element of order 15
    certifies A8.  ``handle`` is required only for ambiguous orders.
    """
    if order == 20160:
        if handle is None:
            raise ValueError("order 20160 needs a handle to disambiguate")
        elems, _ = handle.elements(budgets)
        has15 = any(perm_order(e) == 15 for e in elems)
        return "A8" if has15 else "PSL(3,4)"
    name = SIMPLE_ORDERS.get(order)
    if name is None:
        raise ValueError(f"unknown simple group order {order}")
    return name


def socle_factors(group, budgets=DEFAULT):
    """(socle, factors): socle = product of minimal normal subgroups,
    factors = minimal normal subgroups of the socle."""
    minimals = perm.minimal_normal_subgroups(group, budgets)
    gens = []
    for sub in minimals:
        gens.extend(sub.group.gens)
    socle = bsgs(gens, degree=group.degree) if gens else bsgs([], degree=group.degree)
    factors = perm.minimal_normal_subgroups(socle, budgets) if socle.order > 1 else []
    return perm.Subgroup(group, socle), factors


# ---------------------------------------------------------------------------
# quasiprimitive type


@dataclass
class QPType:
    tag: str  # HA HS HC AS TW SD CD PA
    socle_factor_count: int
    simple_name: str | None
    heuristic: bool
    evidence: dict


@dataclass
class MinNormalOnDomain:
    """A minimal normal subgroup acting on the classification domain."""

    images: list  # generator images on the domain
    order: int
    factor_count: int | None = None  # k with N = T^k, if declared
    simple_order: int | None = None


@dataclass
class ProductData:
    """Disjoint-support representation of the socle point stabilizer."""

    factor_handles: list  # k handles with disjoint supports
    stab_handle: object  # N_omega in the same representation (GroupHandle)


def _is_abelian(images, degree):
    for i, a in enumerate(images):
        for b in images[i + 1 :]:
            if not np.array_equal(compose(a, b), compose(b, a)):
                return False
    return True


def qp_type(domain_size, min_normals, product_data=None, budgets=DEFAULT):
    """O'Nan-Scott type of a quasiprimitive action.

    ``min_normals`` lists every minimal normal subgroup as images on the
    domain (all must be transitive; callers established quasiprimitivity).
    ``product_data`` enables exact strip analysis; without it the SD/CD/PA
    split falls back to order arithmetic and is flagged heuristic.
    """
    if not min_normals:
        raise ValueError("no minimal normal subgroups supplied")
    for rec in min_normals:
        if not perm.is_transitive(bsgs(rec.images, degree=domain_size)):
            raise ValueError("a minimal normal subgroup is intransitive")
    if len(min_normals) > 2:
        raise AssertionError("quasiprimitive groups have at most two minimal normals")
    if len(min_normals) == 2:
        a, b = min_normals
        if a.order != b.order or a.order != domain_size:
            raise AssertionError("HS/HC minimal normals must be regular")
        k = a.factor_count
        if k is None:
            k = len(perm.minimal_normal_subgroups(
                bsgs(a.images, degree=domain_size), budgets))
        tag = "HS" if k == 1 else "HC"
        t_order = a.simple_order or _root_order(a.order, k)
        return QPType(tag, k, _name_or_none(t_order), False,
                      {"regular_order": a.order})
    rec = min_normals[0]
    n_handle = bsgs(rec.images, degree=domain_size)
    if _is_abelian(rec.images, domain_size):
        return QPType("HA", 1, None, False, {"socle_order": rec.order})
    k = rec.factor_count
    if k is None:
        k = len(perm.minimal_normal_subgroups(n_handle, budgets))
    t_order = rec.simple_order or _root_order(rec.order, k)
    if k == 1:
        return QPType("AS", 1, _name_or_none(t_order), False,
                      {"socle_order": rec.order})
    stab_order = rec.order // domain_size
    if stab_order == 1:
        return QPType("TW", k, _name_or_none(t_order), False,
                      {"regular": True})
    if product_data is not None:
        dec = strip_decomposition(product_data.stab_handle,
                                  product_data.factor_handles, budgets)
        if not dec.subdirect:
            return QPType("PA", k, _name_or_none(t_order), False,
                          {"projection": dec.witness})
        if len(dec.partition) == 1:
            return QPType("SD", k, _name_or_none(t_order), False,
                          {"strips": dec.partition})
        return QPType("CD", k, _name_or_none(t_order), False,
                      {"strips": dec.partition})
    # heuristic fallback: compare |N_omega| against powers of |T|
    ell = 0
    value = 1
    while value < stab_order:
        value *= t_order
        ell += 1
    if value == stab_order and ell >= 1:
        tag = "SD" if ell == 1 else "CD"
        return QPType(tag, k, _name_or_none(t_order), True,
                      {"stab_order": stab_order, "ell": ell})
    return QPType("PA", k, _name_or_none(t_order), True,
                  {"stab_order": stab_order})


def _root_order(order, k):
    root = round(order ** (1.0 / k))
    for cand in (root - 1, root, root + 1):
        if cand > 1 and cand**k == order:
            return cand
    raise AssertionError(f"{order} is not a perfect {k}-th power")


def _name_or_none(t_order):
    try:
        return identify_simple(t_order)
    except ValueError:
        return None
