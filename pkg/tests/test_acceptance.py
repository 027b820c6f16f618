"""Acceptance battery: one test per criterion, each printing a PASS/FAIL
line with its runtime.  The extended checks (HS/Co3 rows, the large
product-action instance) run when EDGEPRIM_EXTENDED=1.

All tolerances are exact (integer/combinatorial); runtime bounds follow the
stated budgets.
"""

import os
import random
import time

import numpy as np
import pytest

from edgeprim import analysis, catalog, graphs, onanscott, perm, psl2, spor
from edgeprim import structured, tables
from edgeprim.perm import bsgs

EXTENDED = os.environ.get("EDGEPRIM_EXTENDED", "") == "1"


class _Timer:
    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.monotonic() - self.start
        return False


def _report(criterion, ok, timer, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {criterion}: {status} ({timer.elapsed:.1f}s) {detail}")
    assert ok, f"criterion {criterion} failed: {detail}"


def test_criterion1_weiss_battery():
    """Four cubic graphs: edge-primitive, s-levels (3,4,4,5) in the
    K33/Heawood/Biggs-Smith/Tutte-Coxeter order, bipartite (1,1,0,1)."""
    with _Timer() as t:
        rows = catalog.weiss_cubic_check()
        ok = all(r["ok"] for r in rows)
        levels = [r["s_level"] for r in rows]
        bips = [r["bipartite"] for r in rows]
        ok = ok and levels == [3, 4, 4, 5] and bips == [True, True, False, True]
    _report("1 (cubic battery)", ok and t.elapsed < 60, t,
            f"s={levels} bipartite={bips}")


def test_criterion2_table2_reproduction():
    """Exact census match for every group over each q in the range."""
    with _Timer() as t:
        report = psl2.reproduce_table2()
        bad = [r for r in report if not r["match"]]
    _report("2 (linear census)", not bad and t.elapsed < 600, t,
            f"{len(report)} group rows, mismatches: "
            f"{[(r['q'], r['group']) for r in bad]}")


def test_criterion3_table1_core():
    """2-subset primitivity spot checks (core rows)."""
    with _Timer() as t:
        report = tables.reproduce_table1()
        bad = [r for r in report if not r["match"]]
    _report("3 (2-subset battery, core)", not bad and t.elapsed < 300, t,
            f"{len(report)} rows, mismatches: {[r['name'] for r in bad]}")


@pytest.mark.skipif(not EXTENDED, reason="extended battery (EDGEPRIM_EXTENDED=1)")
def test_criterion3_table1_extended():
    with _Timer() as t:
        report = tables.reproduce_table1(extended=True)
        bad = [r for r in report if not r["match"]]
    _report("3 (2-subset battery, extended)", not bad and t.elapsed < 1800, t,
            f"mismatches: {[r['name'] for r in bad]}")


def test_criterion4_m12_end_to_end():
    """The 144/288 pair: primitivity verdicts, the socle's edge verdicts,
    2-arc-transitivity, and the spread reduction."""
    with _Timer() as t:
        ex = catalog.m12_example()
        gam, sig = ex["gamma"], ex["sigma"]
        checks = {}
        rep = analysis.classify_edge_action(gam.graph, gam.action,
                                            want_type=False)
        checks["gamma edge-primitive"] = rep.edge_kind == analysis.EDGE_PRIMITIVE
        rep_v = analysis.classify_vertex_action(gam.graph, gam.action)
        checks["gamma vertex-primitive"] = rep_v.vertex_kind == "primitive"
        t_images = [gam.coset_action.act_element(g) for g in ex["T"].gens]
        t_act = graphs.GroupAction(144, t_images, socle_images=t_images)
        rep_t = analysis.classify_edge_action(gam.graph, t_act,
                                              want_type=False)
        checks["gamma socle edge-qp-not-primitive"] = (
            rep_t.edge_kind == analysis.EDGE_QP
            and "edge_block_system" in rep_t.witnesses
        )
        rep_se = analysis.classify_edge_action(sig.graph, sig.action,
                                               want_type=False)
        checks["sigma edge-primitive"] = rep_se.edge_kind == analysis.EDGE_PRIMITIVE
        checks["sigma 2-arc-transitive"] = graphs.s_arc_level(
            sig.graph, sig.action) == 2
        rep_sv = analysis.classify_vertex_action(sig.graph, sig.action)
        checks["sigma biquasiprimitive not biprimitive"] = (
            rep_sv.vertex_kind == "biquasiprimitive"
        )
        red = analysis.reduce_to_basic(sig.graph, sig.action)
        checks["reduction is a spread"] = (
            red.verdict == "reduced" and red.certificate["is_spread"]
            and red.certificate["edge_count_preserved"]
            and red.certificate["order_preserved"]
        )
        checks["quotient is the 144-graph"] = graphs.is_isomorphic(
            red.graph, gam.graph, bsgs(red.action.images, degree=144),
            gam.action.handle(),
        )
        bad = [k for k, v in checks.items() if not v]
    _report("4 (worked 144/288 pair)", not bad, t, f"failed: {bad}")


def test_criterion5_constructions_materialized():
    """Catalog constructions classify per their declared claims."""
    with _Timer() as t:
        results = {}
        for name in ("PASD", "PAHS", "PAGplusSD", "notqp", "SDHC"):
            res = structured.build_construction(name)
            findings, *_ = structured.analyze_construction(res)
            results[name] = findings
        ok = (
            results["PASD"]["vertex_type"] == "SD"
            and results["PASD"]["edge_type"] == "PA"
            and [h["type"] for h in results["PAHS"]["half_kinds"]] == ["HS", "HS"]
            and [h["type"] for h in results["PAGplusSD"]["half_kinds"]] == ["SD", "SD"]
            and results["SDHC"]["edge_kind"] == analysis.EDGE_QP
            and results["SDHC"]["edge_type"] == "SD"
            and [h["type"] for h in results["SDHC"]["half_kinds"]] == ["HC", "HC"]
            and results["notqp"]["edge_type"] == "PA"
            and all(h["kind"] != "quasiprimitive"
                    for h in results["notqp"]["half_kinds"])
        )
    _report("5 (materialized constructions)", ok, t,
            "PASD/PAHS/PAGplusSD/SDHC/notqp")


def test_criterion5_symbolic_constructions():
    """Symbolic-only entries, including the trivial-intersection witness in
    the order-12180 linear group."""
    with _Timer() as t:
        reports = {name: structured.build_construction(name)
                   for name in ("SD", "CDCD", "CDHC", "CDG+notqp", "TW")}
        ok = (
            reports["SD"]["ok"] and reports["SD"]["edge_primitive_top"]
            and reports["CDCD"]["ok"]
            and reports["CDHC"]["ok"] and reports["CDHC"]["half_type"] == "HC"
            and reports["CDG+notqp"]["ok"]
            and not reports["CDG+notqp"]["halves_qp"]
            and reports["TW"]["R_cap_R_tau_order"] == 1
            and reports["TW"]["R_maximal"]
            and reports["TW"]["socle_regular_on_edges"]
        )
    _report("5 (symbolic constructions)", ok, t,
            "SD/CDCD/CDHC/CDG+notqp/TW")


@pytest.mark.xfail(
    strict=True,
    reason="stated claim refuted computationally: the mixed-diagonal group "
    "is edge-quasiprimitive but NOT edge-primitive on every catalog seed "
    "(explicit invariant edge partition found); see the decisions ledger",
)
def test_criterion5_notqp_edge_primitive_as_stated():
    """The mixed-diagonal instance asserted edge-PRIMITIVE, as stated."""
    res = structured.build_construction("notqp")
    findings, *_ = structured.analyze_construction(res)
    assert findings["edge_kind"] == analysis.EDGE_PRIMITIVE


@pytest.mark.skipif(not EXTENDED, reason="extended battery (EDGEPRIM_EXTENDED=1)")
def test_criterion5_pacd_extended():
    with _Timer() as t:
        res = structured.build_construction("PACD")
        findings, *_ = structured.analyze_construction(res)
        ok = (findings["vertex_type"] == "CD"
              and findings["edge_type"] == "PA"
              and findings["vertices"] == 3600)
    _report("5 (extended product-action instance)", ok, t,
            f"{findings['vertices']}v {findings['edges']}e")


def test_criterion6_property_suites():
    """Always-on scans: generated-triple round trips, strip/join equality,
    brute-force oracles, join algebra, certificate invariance, and the
    no-regular-socle scan over the corpus."""
    from test_analysis import (analysis_roundtrip_count, dihedral_triples,
                               wreath_triples)
    from test_perm import _brute_min_normal_orders, brute_blocks_through
    from test_onanscott import (partitions_of, _strip_subgroup, _intersect,
                                a5_factors, A5_GENS)

    with _Timer() as t:
        detail = []
        # (a) generated (G, E, A, H) triples round-trip through the coset
        # construction with the right edge stabilizer
        count = analysis_roundtrip_count(
            qs=(4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27), need=250)
        count += dihedral_triples((3, 5, 7, 11, 13, 17, 19, 23))
        count += wreath_triples((3, 4))
        detail.append(f"triples={count}")
        assert count >= 200
        # (b) strip/join equality, 100 seeded pairs over the order-60 socle
        rng = random.Random(20240817)
        for _ in range(100):
            k = rng.choice([2, 3, 4])
            p1 = partitions_of(k, rng)
            p2 = partitions_of(k, rng)
            k1 = _strip_subgroup(k, p1, rng, None)
            k2 = _strip_subgroup(k, p2, rng, None)
            inter = _intersect(k1, k2, 5 * k)
            dec = onanscott.strip_decomposition(inter, a5_factors(k))
            assert dec.subdirect
            assert dec.partition == onanscott.partition_join(p1, p2, k)
        detail.append("strips=100")
        # (c) block lattice vs brute force on the degree <= 12 battery
        batteries = [
            ([perm.parse_cycles("(0 1 2 3 4 5)", 6)], 6),
            ([perm.parse_cycles("(0 1 2 3)", 4), perm.parse_cycles("(0 2)", 4)], 4),
            ([perm.parse_cycles("(0 1 2 3 4 5 6 7)", 8)], 8),
            ([perm.parse_cycles("(0 1 2 3 4 5)", 6),
              perm.parse_cycles("(1 5)(2 4)", 6)], 6),
            ([perm.parse_cycles("(0 1 2)(3 4 5)(6 7 8)", 9),
              perm.parse_cycles("(0 3 6)(1 4 7)(2 5 8)", 9),
              perm.parse_cycles("(1 2)(4 5)(7 8)", 9)], 9),
            ([perm.parse_cycles("(0 1 2 3 4 5 6 7 8 9 10 11)", 12),
              perm.parse_cycles("(1 11)(2 10)(3 9)(4 8)(5 7)", 12)], 12),
            ([perm.parse_cycles("(0 1 2 3 4 5 6 7 8 9)", 10),
              perm.parse_cycles("(0 5)(1 6)(2 7)(3 8)(4 9)", 10)], 10),
        ]
        for gens, degree in batteries:
            g = bsgs(gens, degree=degree)
            assert perm.block_lattice(g, 0) == brute_blocks_through(
                gens, degree, 0)
        detail.append(f"lattices={len(batteries)}")
        # (d) minimal normal subgroups vs brute force, orders <= 2000
        for handle in (
            bsgs([perm.parse_cycles("(0 1 2 3)", 4),
                  perm.parse_cycles("(0 1)", 4)]),
            bsgs([perm.parse_cycles("(0 1 2 3 4)", 5),
                  perm.parse_cycles("(0 1)", 5)]),
            bsgs([perm.parse_cycles("(0 1 2 3 4)", 5),
                  perm.parse_cycles("(0 1 2)", 5)]),
            psl2.psl2_family(7, "psl"),
            psl2.psl2_family(5, "pgl"),
            bsgs([perm.parse_cycles("(0 1 2 3 4 5 6 7)", 8),
                  perm.from_cycles(8, [[1, 7], [2, 6], [3, 5]])]),
        ):
            got = {s.group.order for s in perm.minimal_normal_subgroups(handle)}
            assert got == _brute_min_normal_orders(handle)
        detail.append("min-normals=6")
        # (e) partition-join algebra laws (seeded)
        rng = random.Random(7)
        for _ in range(60):
            k = rng.randrange(2, 8)
            ps = [partitions_of(k, rng, 3) for _ in range(3)]
            j12 = onanscott.partition_join(ps[0], ps[1], k)
            assert j12 == onanscott.partition_join(ps[1], ps[0], k)
            assert onanscott.partition_join(j12, ps[2], k) == \
                onanscott.partition_join(
                    ps[0], onanscott.partition_join(ps[1], ps[2], k), k)
            assert onanscott.partition_join(ps[0], ps[0], k) == \
                onanscott.normalize_partition(ps[0], k)
        detail.append("join-laws=60")
        # (f) certificate invariance: 50 shuffles per corpus graph
        rng = random.Random(12345)
        corpus = [catalog.k33(), catalog.heawood(), catalog.co_heawood(),
                  catalog.tutte_coxeter()]
        for named in corpus:
            base_cert = graphs.canonical_form(named.graph,
                                              named.action.handle())
            handle = named.action.handle()
            for _ in range(50):
                p = np.array(rng.sample(range(named.graph.n), named.graph.n),
                             dtype=np.int32)
                shuffled = named.graph.relabel(p)
                conj = [perm.conjugate(
                    np.asarray(g, dtype=np.int32), p)
                    for g in handle.gens]
                cert = graphs.canonical_form(shuffled,
                                             bsgs(conj, degree=named.graph.n))
                assert cert == base_cert, named.name
        detail.append("shuffles=4x50")
        # (g) corpus scans: vertex-transitivity of edge-primitive instances,
        # no regular-socle edge type, faithful halves, and the stabilizer
        # inequality for product socles
        _corpus_scans()
        detail.append("scans=ok")
        # (h) brute-force maximal-class completeness up to the stated bound
        from test_psl2 import assert_brute_completeness

        for q in (4, 5, 7, 8, 9, 11, 13):
            assert_brute_completeness(q)
        detail.append("dickson-brute<=13")
    _report("6 (property suites)", True, t, " ".join(detail))


def _corpus_scans():
    # edge-primitive connected non-star corpus members are vertex-transitive
    for named in (catalog.k33(), catalog.heawood(), catalog.tutte_coxeter(),
                  catalog.biggs_smith()):
        act = named.action
        assert act.is_transitive()
    # the socle of each cubic-battery group is simple with a nontrivial edge
    # stabilizer, so no edge action there has a regular product socle (the
    # no-counterexample scan for the regular-socle type)
    for named, socle_order in ((catalog.heawood(), 168),
                               (catalog.tutte_coxeter(), 360)):
        assert socle_order % named.graph.m != 0 or \
            socle_order != named.graph.m  # socle not regular on edges
    structured_types = {}
    for name in ("PASD", "PAHS", "PAGplusSD", "notqp", "SDHC"):
        res = structured.build_construction(name)
        findings, *_ = structured.analyze_construction(res)
        structured_types[name] = findings
        if findings["edge_kind"] == analysis.EDGE_PRIMITIVE:
            assert findings["edge_type"] != "TW", name
        # faithful halves for bipartite non-complete instances
        for rec in findings["half_kinds"] or []:
            assert rec.get("faithful", True), name
    # stabilizer inequality: vertex and edge socle stabilizers differ
    for name in ("PASD", "PAHS", "SDHC"):
        res = structured.build_construction(name)
        act = structured.structured_coset_action(res.group, "H")
        (_n, n_gens, n_order, _k, _t) = res.group.min_normals[0]
        v_imgs = [act.act(g) for g in n_gens]
        v_orbit = perm.orbits(bsgs(v_imgs, degree=act.degree))[0]
        graph = structured._structured_graph(act, res.swap, structured.DEFAULT)
        mapper = analysis._vertex_to_edge_mapper(graph)
        e_imgs = [mapper(p) for p in v_imgs]
        e_orbit = perm.orbits(bsgs(e_imgs, degree=graph.m))[0]
        n_v = n_order // len(v_orbit)
        n_e = n_order // len(e_orbit)
        assert n_v != n_e, name
