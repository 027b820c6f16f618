import pytest

from edgeprim import perm, spor
from edgeprim.perm import bsgs


class TestGolay:
    def test_weight_distribution(self):
        words = spor.golay_words()
        dist = {}
        for w in words:
            dist[bin(w).count("1")] = dist.get(bin(w).count("1"), 0) + 1
        assert dist == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}

    def test_octads_and_dodecads(self):
        assert len(spor.octads()) == 759
        assert len(spor.dodecads()) == 2576


class TestDataFiles:
    @pytest.mark.parametrize("name,order,degree", [
        ("m11_11", 7920, 11),
        ("m11_12", 7920, 12),
        ("m12_12", 95040, 12),
        ("m12aut_24", 190080, 24),
        ("m22_22", 443520, 22),
        ("m22aut_22", 887040, 22),
        ("m23_23", 10200960, 23),
        ("m24_24", 244823040, 24),
        ("sz8_65", 29120, 65),
        ("hs_100", 44352000, 100),
        ("hs_176", 44352000, 176),
        ("co3_276", 495766656000, 276),
    ])
    def test_load_and_verify(self, name, order, degree):
        handle = spor.load_group(name)
        assert handle.degree == degree
        assert handle.order == order
        assert perm.is_transitive(handle)

    def test_m24_quintuply_transitive(self):
        m24 = spor.load_group("m24_24")
        # order = 24*23*22*21*20*48: the stabilizer chain exposes the
        # transitivity degree through the first orbit lengths
        chain = m24.rebase((0, 1, 2, 3, 4))
        chain._ensure_chain()
        orbit_sizes = [len(l.orbit) for l in chain._levels[:5]]
        assert orbit_sizes == [24, 23, 22, 21, 20]

    def test_sz8_two_transitive(self):
        sz = spor.load_group("sz8_65")
        st = perm.point_stabilizer(sz, 0)
        assert len(perm.orbits(st.group)) == 2

    def test_hs176_two_transitive(self):
        hs = spor.load_group("hs_176")
        st = perm.point_stabilizer(hs, 0)
        assert st.group.order == 252000
        assert len(perm.orbits(st.group)) == 2

    def test_hs_graph_srg(self):
        g = spor.hs_graph()
        assert g.n == 100 and g.m == 1100  # srg checked at construction

    def test_mcl_graph_srg(self):
        g = spor.mcl_graph()
        assert g.n == 275 and g.m == 275 * 112 // 2
