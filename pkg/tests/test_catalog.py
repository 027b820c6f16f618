import pytest

from edgeprim import catalog, graphs, perm
from edgeprim.perm import bsgs


class TestNamedGraphs:
    def test_heawood(self):
        ng = catalog.named_graph("heawood")
        inv = graphs.graph_invariants(ng.graph)
        assert (inv.n, inv.m, inv.girth, inv.valency) == (14, 21, 6, 3)
        assert ng.action.handle().order == 336

    def test_co_heawood(self):
        ng = catalog.named_graph("co-heawood")
        inv = graphs.graph_invariants(ng.graph)
        assert (inv.n, inv.m, inv.valency) == (14, 28, 4)

    def test_tutte_coxeter(self):
        ng = catalog.named_graph("tutte-coxeter")
        inv = graphs.graph_invariants(ng.graph)
        assert (inv.n, inv.m, inv.girth) == (30, 45, 8)
        assert ng.action.handle().order == 1440

    def test_biggs_smith_derived_invariants(self):
        ng = catalog.named_graph("biggs-smith")
        assert ng.expected["girth"] == 9
        assert ng.expected["diameter"] == 7
        inv = graphs.graph_invariants(ng.graph)
        assert inv.n == 102 and inv.valency == 3 and not inv.bipartite

    def test_biggs_smith_stabilizers(self):
        ng = catalog.named_graph("biggs-smith")
        handle = ng.action.handle()
        assert handle.order == 2448
        ea = graphs.edge_action(ng.graph, ng.action, check=False)
        eh = bsgs(ea.edge_action.images, degree=ng.graph.m)
        edge_stab = perm.point_stabilizer(eh, 0)
        assert edge_stab.group.order == 16
        arcs = bsgs(ea.arc_action.images, degree=2 * ng.graph.m)
        arc_stab = perm.point_stabilizer(arcs, 0)
        assert arc_stab.group.order == 8

    def test_parametric(self):
        assert catalog.named_graph("K_n", n=5).graph.m == 10
        assert catalog.named_graph("K_mn", m=2, n=3).graph.m == 6
        assert catalog.named_graph("C_n", n=7).graph.m == 7
        assert catalog.named_graph("star_n", n=4).graph.m == 4

    def test_unknown(self):
        with pytest.raises(ValueError):
            catalog.named_graph("petersen-prime")

    def test_stored_invariants_rederivable(self):
        for name in ("heawood", "co-heawood", "tutte-coxeter", "K_{3,3}"
                     .replace("{", "").replace("}", "").replace(",", "3")):
            pass
        for ng in (catalog.heawood(), catalog.co_heawood(),
                   catalog.tutte_coxeter(), catalog.k33()):
            inv = graphs.graph_invariants(ng.graph)
            for key, value in ng.expected.items():
                if hasattr(inv, key):
                    assert getattr(inv, key) == value, (ng.name, key)


class TestWeiss:
    def test_battery(self):
        rows = catalog.weiss_cubic_check()
        assert [r["name"] for r in rows] == [
            "K_{3,3}", "heawood", "biggs-smith", "tutte-coxeter"
        ]
        assert all(r["ok"] for r in rows)
        assert [r["s_level"] for r in rows] == [3, 4, 4, 5]
        assert [r["bipartite"] for r in rows] == [True, True, False, True]


class TestM12Example:
    def test_structure(self):
        ex = catalog.m12_example()
        assert ex["G"].order == 190080
        assert ex["T"].order == 95040
        assert ex["H"].order == 1320
        assert ex["E"].order == 120
        assert ex["A"].order == 60
        assert ex["gamma"].graph.n == 144
        assert ex["sigma"].graph.n == 288
        assert ex["gamma"].graph.m == ex["sigma"].graph.m == 1584

    def test_gamma_locally_imprimitive(self):
        ex = catalog.m12_example()
        assert not graphs.is_locally_primitive(ex["gamma"].graph,
                                               ex["gamma"].action)
