import pytest

from symqaoa.corpus import generate_connected, generate_nonisomorphic
from symqaoa.graphs import encode_graph6


class TestGeneration:
    # known counts of non-isomorphic simple graphs (OEIS A000088 / A001349)
    @pytest.mark.parametrize("n,total", [(3, 4), (4, 11), (5, 34), (6, 156)])
    def test_total_counts(self, n, total):
        assert len(generate_nonisomorphic(n)) == total

    @pytest.mark.parametrize("n,connected", [(3, 2), (4, 6), (5, 21), (6, 112)])
    def test_connected_counts(self, n, connected):
        assert len(generate_connected(n)) == connected

    def test_all_distinct_and_sorted(self):
        graphs = generate_connected(5)
        keys = [(g.m, encode_graph6(g)) for g in graphs]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)

    def test_budget(self):
        with pytest.raises(ValueError):
            generate_nonisomorphic(10)
