import numpy as np
import pytest

from edgeprim import analysis, catalog, graphs, perm, psl2
from edgeprim.analysis import (
    EDGE_PRIMITIVE,
    EDGE_QP,
    arc_transitivity_trichotomy,
    classify_edge_action,
    classify_vertex_action,
    reduce_to_basic,
    theorem_audit,
)
from edgeprim.graphs import GroupAction, cycle_graph, star_graph
from edgeprim.perm import bsgs, parse_cycles


class TestClassifyEdge:
    def test_heawood_edge_primitive(self):
        named = catalog.heawood()
        rep = classify_edge_action(named.graph, named.action, want_type=False)
        assert rep.edge_kind == EDGE_PRIMITIVE

    def test_prime_cycle(self):
        g = cycle_graph(7)
        act = GroupAction(7, [parse_cycles("(0 1 2 3 4 5 6)", 7)])
        rep = classify_edge_action(g, act, want_type=False)
        assert rep.edge_kind == EDGE_PRIMITIVE

    def test_nonprime_cycle_imprimitive(self):
        g = cycle_graph(6)
        act = GroupAction(6, [parse_cycles("(0 1 2 3 4 5)", 6),
                              parse_cycles("(1 5)(2 4)", 6)])
        rep = classify_edge_action(g, act, want_type=False)
        assert rep.edge_kind != EDGE_PRIMITIVE
        assert "edge_block_system" in rep.witnesses

    def test_json_schema(self):
        named = catalog.k33()
        rep = classify_edge_action(named.graph, named.action, want_type=False,
                                   instance_id="k33")
        import json

        payload = json.loads(rep.to_json())
        assert payload["schema"] == 1
        assert payload["instance_id"] == "k33"
        assert set(payload) >= {"edge_kind", "vertex_kind", "s_level",
                                "onan_scott", "witnesses"}


class TestClassifyVertex:
    def test_heawood_biprimitive(self):
        named = catalog.heawood()
        rep = classify_vertex_action(named.graph, named.action)
        assert rep.vertex_kind == "biprimitive"

    def test_intransitive_orbits(self):
        g = star_graph(3)
        gens = [parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)", 4)]
        rep = classify_vertex_action(g, GroupAction(4, gens))
        assert rep.vertex_kind == "intransitive"
        assert len(rep.orbit_kinds) == 2


class TestTrichotomy:
    def test_star(self):
        g = star_graph(7)
        gens = [parse_cycles(f"({' '.join(str(i) for i in range(1, 8))})", 8),
                parse_cycles("(1 2)", 8)]
        assert arc_transitivity_trichotomy(g, GroupAction(8, gens)) == "star"

    def test_prime_cycle(self):
        g = cycle_graph(5)
        act = GroupAction(5, [parse_cycles("(0 1 2 3 4)", 5)])
        assert arc_transitivity_trichotomy(g, act) == "prime-cycle-regular"

    def test_arc_transitive(self):
        named = catalog.heawood()
        assert arc_transitivity_trichotomy(named.graph, named.action) == \
            "arc-transitive"


class TestReduceExpand:
    def test_biprimitive_no_reduction(self):
        named = catalog.heawood()
        res = reduce_to_basic(named.graph, named.action)
        assert res.verdict == "no-reduction-needed"

    def test_k66_locally_primitive_no_intermediate(self):
        """K66 under the 1440-group is locally primitive: the arc stabilizer
        (order 20) admits no strictly intermediate subgroup below the vertex
        stabilizer, so no spread lies over it."""
        q = 9
        G = psl2.psl2_family(q, "pgammal")
        data = psl2.dickson_maximals(G, q)
        e_datum = next(d for d in data if d.group.order == 40)  # N(D10)
        a_sub = next(
            s for s in perm.index_two_subgroups(e_datum.group)
            if _h_from_blocks(G, s.group, 120) is not None
        )
        h_handle = _h_from_blocks(G, a_sub.group, 120)
        g_swap = next(x for x in e_datum.group.gens
                      if not a_sub.group.member(x))
        spec = graphs.CosetGraphSpec(G, perm.Subgroup(G, h_handle), g_swap)
        k66 = graphs.coset_graph(spec)
        assert k66.graph.n == 12 and k66.graph.m == 36
        assert graphs.is_locally_primitive(k66.graph, k66.action)

    def test_m12_expand_from_intermediate(self):
        """Expanding the 144-graph through the index-two subgroup of its
        vertex stabilizer rebuilds the 288-vertex instance."""
        from edgeprim.analysis import expand_from_locally_imprimitive

        ex = catalog.m12_example()
        gam = ex["gamma"]
        inter_gens = [gam.coset_action.act_element(g) for g in ex["B"].gens]
        result = expand_from_locally_imprimitive(gam.graph, gam.action,
                                                 inter_gens)
        assert result.graph.n == 288
        assert result.graph.m == gam.graph.m
        assert graphs.is_isomorphic(result.graph, ex["sigma"].graph,
                                    result.action.handle(),
                                    ex["sigma"].action.handle())

    def test_expand_rejects_non_intermediate(self):
        from edgeprim.analysis import expand_from_locally_imprimitive

        ex = catalog.m12_example()
        gam = ex["gamma"]
        # the arc stabilizer itself is not strictly intermediate
        chain = bsgs(gam.action.images, degree=144, base_hint=(0,))
        stab0 = chain.stabilizer_gens([0])
        v0, w0 = gam.graph.edges[0]
        pair_chain = bsgs(gam.action.images, degree=144, base_hint=(v0, w0))
        pair_gens = pair_chain.stabilizer_gens([v0, w0])
        with pytest.raises(ValueError):
            expand_from_locally_imprimitive(gam.graph, gam.action, pair_gens)

    def test_m12_spread_roundtrip(self):
        """The 288-vertex instance reduces to the 144-vertex quotient with a
        genuine spread certificate (the worked reduction example)."""
        ex = catalog.m12_example()
        red = reduce_to_basic(ex["sigma"].graph, ex["sigma"].action)
        assert red.verdict == "reduced"
        assert red.certificate["is_spread"]
        assert red.certificate["edge_count_preserved"]
        assert red.certificate["locally_imprimitive"]
        assert graphs.is_isomorphic(
            red.graph, ex["gamma"].graph,
            bsgs(red.action.images, degree=144),
            ex["gamma"].action.handle(),
        )

    def test_construction_wreath_star_expansion_witness(self):
        """The 21-point star case: the linear group on flags sits strictly
        inside the imprimitive wreath overgroup (symbolic witness)."""
        flags, gens = _fano_flag_action()
        a_handle = bsgs(gens, degree=21)
        assert a_handle.order == 168
        # A preserves the partition of flags by their point: 7 blocks of 3
        blocks = {}
        for idx, (p, l) in enumerate(flags):
            blocks.setdefault(p, []).append(idx)
        block_list = list(blocks.values())
        for g in a_handle.gens:
            for blk in block_list:
                targets = {int(g[i]) for i in blk}
                assert any(targets == set(b2) for b2 in block_list)
        # the top action of A on the 7 blocks is the linear action, a proper
        # subgroup of S7, so A < S3 wr (top) < S3 wr S7
        reps = [blk[0] for blk in block_list]
        pos = {tuple(sorted(b)): i for i, b in enumerate(block_list)}
        top_imgs = []
        for g in a_handle.gens:
            img = np.empty(7, dtype=np.int32)
            for i, blk in enumerate(block_list):
                img[i] = pos[tuple(sorted(int(g[x]) for x in blk))]
            top_imgs.append(img)
        top = bsgs(top_imgs, degree=7)
        assert top.order == 168  # PSL(3,2) on the blocks, well below S7
        import math

        assert top.order < math.factorial(7)


def _h_from_blocks(G, a_handle, target_order):
    act = perm.coset_action(G, perm.Subgroup(G, a_handle))
    handle = act.induced_handle()
    lattice = perm.block_lattice(handle, 0, stab_gens=act.stabilizer_images())
    for block in lattice:
        if len(block) < 2 or len(block) == act.degree:
            continue
        gens = list(a_handle.gens) + [act.reps[b] for b in block if b]
        gens, h = perm.reduced_gens(G.degree, gens)
        if h.order == target_order:
            return h
    return None


def _fano_flag_action():
    """PSL(3,2) acting on the 21 point-line flags of the Fano plane."""
    points = list(range(1, 8))
    lines = []
    for a in points:
        for b in points:
            if b <= a:
                continue
            c = a ^ b
            if c > b:
                lines.append((a, b, c))

    def vec_image(matrix, v):
        out = 0
        for bit in range(3):
            if v >> bit & 1:
                out ^= matrix[bit]
        return out

    flags = [(p, l) for l in lines for p in l]
    index = {f: i for i, f in enumerate(flags)}
    gens = []
    for matrix in ([0b011, 0b010, 0b100], [0b010, 0b100, 0b001]):
        img = np.empty(21, dtype=np.int32)
        for i, (p, l) in enumerate(flags):
            p2 = vec_image(matrix, p)
            l2 = tuple(sorted(vec_image(matrix, x) for x in l))
            img[i] = index[(p2, l2)]
        gens.append(img)
    return flags, gens


class TestTheoremAudit:
    def test_k66_complete_bipartite(self):
        q = 9
        G = psl2.psl2_family(q, "pgammal")
        entries = psl2.enumerate_edge_primitive(G, q)
        k66 = next(e for e in entries if e.kind == "graph" and e.vertices == 12)
        rep = analysis.ClassificationReport("k66")
        rep.edge_kind = EDGE_PRIMITIVE
        rep.vertex_kind = "biprimitive"
        rep.complete_bipartite = True
        rep.bipartite = True
        assert theorem_audit(rep) == "eprim:complete-bipartite"

    def test_outside_hypotheses(self):
        rep = analysis.ClassificationReport("x")
        rep.edge_kind = EDGE_PRIMITIVE
        rep.vertex_kind = "biquasiprimitive"
        assert theorem_audit(rep) == "outside-theorem-hypotheses"

    def test_edgeqp_pa_not_qp_halves(self):
        rep = analysis.ClassificationReport("notqp")
        rep.edge_kind = EDGE_QP
        rep.vertex_kind = "biquasiprimitive"
        rep.onan_scott["edge"] = "PA"
        rep.bipartite = True
        rep.complete_bipartite = False
        rep.half_kinds = [{"kind": "neither"}, {"kind": "neither"}]
        assert theorem_audit(rep) == "edgeqp:PA-biqp-halves-not-qp"

    def test_edgeqp_sd(self):
        rep = analysis.ClassificationReport("sdhc")
        rep.edge_kind = EDGE_QP
        rep.vertex_kind = "biprimitive"
        rep.onan_scott["edge"] = "SD"
        rep.bipartite = True
        rep.complete_bipartite = False
        assert theorem_audit(rep) == "edgeqp:SD-CD-construction"


class TestPropositionGeneralRoundtrip:
    def test_harvested_triples(self):
        """(G, E, A, H) triples from the linear census produce edge-primitive
        graphs with the right edge stabilizer (order + membership spot)."""
        count = analysis_roundtrip_count(qs=(4, 5, 7, 8, 9), need=40)
        assert count >= 40

    def test_dihedral_battery(self):
        assert dihedral_triples((3, 5, 7)) >= 6

    def test_wreath_battery(self):
        assert wreath_triples((3, 4)) >= 6


def dihedral_triples(primes):
    """Reflection-stabilizer triples in dihedral groups of prime degree:
    every reflection subgroup is maximal with trivial index-two part, and
    the other reflections provide the corefree overgroups (prime cycles)."""
    count = 0
    for p in primes:
        rot = perm.from_cycles(p, [list(range(p))])
        refl = np.array([(-i) % p for i in range(p)], dtype=np.int32)
        G = bsgs([rot, refl])
        assert G.order == 2 * p
        e_handle = bsgs([refl], degree=p)
        assert perm.is_maximal(G, perm.Subgroup(G, e_handle))
        for a_sub in perm.index_two_subgroups(e_handle):
            count += _roundtrip_generic(G, e_handle, a_sub.group)
    return count


def wreath_triples(sizes):
    """Edge-stabilizer triples in the full bipartite-complete groups."""
    count = 0
    for n in sizes:
        gens = []
        cyc = list(range(n))
        gens.append(perm.from_cycles(2 * n, [cyc]))
        gens.append(perm.from_cycles(2 * n, [[0, 1]]))
        gens.append(perm.from_cycles(2 * n, [[n + i for i in cyc]]))
        gens.append(perm.from_cycles(2 * n, [[n, n + 1]]))
        gens.append(np.array([(i + n) % (2 * n) for i in range(2 * n)],
                             dtype=np.int32))
        G = bsgs(gens)
        import math

        assert G.order == 2 * math.factorial(n) ** 2
        # edge stabilizer of the pair {0, n}
        chain = G.rebase((0, n))
        e_gens = list(chain.stabilizer_gens([0, n]))
        swap = analysis._swap_element(
            graphs.GroupAction(2 * n, G.gens), 0, n)
        assert swap is not None
        e_handle = bsgs(e_gens + [swap], degree=2 * n)
        assert perm.is_maximal(G, perm.Subgroup(G, e_handle))
        for a_sub in perm.index_two_subgroups(e_handle):
            count += _roundtrip_generic(G, e_handle, a_sub.group)
    return count


def _roundtrip_generic(G, e_handle, a_handle):
    """Count corefree overgroup choices that round-trip edge-primitively."""
    g_swap = None
    for x in e_handle.gens:
        if not a_handle.member(x):
            g_swap = x
            break
    if g_swap is None:
        return 0
    act = perm.coset_action(G, perm.Subgroup(G, a_handle))
    handle = act.induced_handle()
    lattice = perm.block_lattice(handle, 0, stab_gens=act.stabilizer_images())
    found = 0
    for block in lattice:
        if len(block) < 2 or len(block) == act.degree:
            continue
        gens = list(a_handle.gens) + [act.reps[b] for b in block if b]
        gens, h_handle = perm.reduced_gens(G.degree, gens)
        if h_handle.order == e_handle.order and all(
            e_handle.member(x) for x in h_handle.gens
        ):
            continue
        core_test = perm.coset_action(G, perm.Subgroup(G, h_handle))
        if not core_test.is_faithful():
            continue
        spec = graphs.CosetGraphSpec(G, perm.Subgroup(G, h_handle), g_swap)
        try:
            result = graphs.coset_graph(spec)
        except ValueError:
            continue
        rep = classify_edge_action(result.graph, result.action,
                                   want_type=False)
        if result.graph.degree_of(0) == result.graph.n - 1:
            found += 1
            continue
        assert rep.edge_kind == EDGE_PRIMITIVE
        assert G.order % result.graph.m == 0
        assert G.order // result.graph.m == e_handle.order
        found += 1
    return found


def analysis_roundtrip_count(qs, need):
    from edgeprim.psl2 import dickson_maximals, line_groups

    count = 0
    for q in qs:
        for name, G in line_groups(q):
            for datum in dickson_maximals(G, q):
                for a_sub in perm.index_two_subgroups(datum.group):
                    count += _roundtrip_one(G, q, datum, a_sub)
                    if count >= need:
                        return count
    return count


def _roundtrip_one(G, q, datum, a_sub):
    from edgeprim.psl2 import _psl_handle

    T = _psl_handle(q)
    a_handle = a_sub.group
    g_swap = next(x for x in datum.group.gens if not a_handle.member(x))
    act = perm.coset_action(G, perm.Subgroup(G, a_handle))
    handle = act.induced_handle()
    lattice = perm.block_lattice(handle, 0, stab_gens=act.stabilizer_images())
    found = 0
    for block in lattice:
        if len(block) < 2 or len(block) == act.degree:
            continue
        gens = list(a_handle.gens) + [act.reps[b] for b in block if b]
        gens, h_handle = perm.reduced_gens(G.degree, gens)
        if h_handle.order == datum.group.order and all(
            datum.group.member(x) for x in h_handle.gens
        ):
            continue
        if all(h_handle.member(x) for x in T.gens):
            continue
        spec = graphs.CosetGraphSpec(G, perm.Subgroup(G, h_handle), g_swap)
        result = graphs.coset_graph(spec)
        rep = classify_edge_action(result.graph, result.action,
                                   want_type=False)
        if result.graph.degree_of(0) == result.graph.n - 1:
            found += 1  # complete graph: edge-primitivity via 2-transitivity
            continue
        assert rep.edge_kind == EDGE_PRIMITIVE, (q, datum.label)
        assert G.order % result.graph.m == 0
        assert G.order // result.graph.m == datum.group.order
        # membership spot check: E's generators stabilize the base edge
        mapper = analysis._vertex_to_edge_mapper(result.graph)
        w0 = int(result.coset_action.act_element(g_swap)[0])
        base_edge = result.graph.edge_id(0, w0)
        for x in datum.group.gens:
            img = mapper(result.coset_action.act_element(x))
            assert int(img[base_edge]) == base_edge
        found += 1
    return found
