import random

import pytest

from oracles import brute_decision, brute_rc, random_connected_graph
from rainbowrc.coloring import is_rainbow_connected
from rainbowrc.exact import BudgetExceeded, SearchBudget, rc_decision, rc_exact, short_paths
from rainbowrc.generators import complete, cycle, path, petersen, star, wheel
from rainbowrc.graph import GraphError, build_graph, diameter


def test_short_paths_c4():
    g = cycle(4)
    sp = short_paths(g, 2)
    assert set(sp) == {(0, 2), (1, 3)}
    assert len(sp[(0, 2)]) == 2 and all(len(p) == 2 for p in sp[(0, 2)])
    assert short_paths(path(4), 2)[(0, 3)] == []


class TestDecision:
    def test_p3_k1_refuted(self):
        assert not rc_decision(path(3), 1).feasible

    def test_complete_k1(self):
        d = rc_decision(complete(5), 1)
        assert d.feasible and set(d.certificate.colors) == {0}

    @pytest.mark.parametrize("prune", [True, False])
    def test_c6(self, prune):
        assert not rc_decision(cycle(6), 2, prune=prune).feasible
        d = rc_decision(cycle(6), 3, prune=prune)
        assert d.feasible and is_rainbow_connected(d.certificate, cycle(6))

    def test_c6_against_unreduced_enumeration(self):
        # 2^6 and 3^6 colorings, checked by path enumeration
        assert brute_decision(cycle(6), 2) is None
        assert brute_decision(cycle(6), 3) is not None

    def test_disconnected(self):
        with pytest.raises(GraphError):
            rc_decision(build_graph(4, [(0, 1), (2, 3)]), 2)

    def test_bad_k(self):
        with pytest.raises(ValueError):
            rc_decision(path(3), 0)

    def test_workers_do_not_change_result(self):
        g = wheel(7)
        a = rc_decision(g, 2)
        b = rc_decision(g, 2, workers=3)
        assert a == b


class TestRcExact:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_complete(self, n):
        assert rc_exact(complete(n), budget=SearchBudget(max_edges=28)).rc == 1

    @pytest.mark.parametrize("n", range(2, 9))
    def test_path(self, n):
        assert rc_exact(path(n)).rc == n - 1

    def test_cycles(self):
        assert rc_exact(cycle(4)).rc == 2
        assert rc_exact(cycle(6)).rc == 3

    def test_star(self):
        assert rc_exact(star(6)).rc == 5

    def test_petersen(self):
        r = rc_exact(petersen())
        assert r.rc == 3 and r.lower_bound_used == 2
        assert is_rainbow_connected(r.certificate, petersen(), witness=False)
        assert [lvl["feasible"] for lvl in r.search_stats["levels"]] == [False, True]

    def test_petersen_unpruned(self):
        assert rc_exact(petersen(), prune=False).rc == 3

    def test_edge_budget(self):
        with pytest.raises(BudgetExceeded):
            rc_exact(complete(7))

    def test_node_budget(self):
        with pytest.raises(BudgetExceeded):
            rc_exact(petersen(), budget=SearchBudget(max_nodes=3), prune=False)

    def test_single_vertex_rejected(self):
        with pytest.raises(GraphError):
            rc_exact(build_graph(1, []))


def _small_graphs(count, seed, max_edges):
    rng = random.Random(seed)
    return [random_connected_graph(rng, rng.randint(2, 6), max_edges=max_edges) for _ in range(count)]


@pytest.mark.parametrize("g", _small_graphs(40, 1, 8))
def test_symmetry_reduction_matches_brute_force(g):
    for k in range(1, g.m + 1):
        expected = brute_decision(g, k) is not None
        assert rc_decision(g, k).feasible == expected
        assert rc_decision(g, k, prune=False).feasible == expected


@pytest.mark.parametrize("g", _small_graphs(30, 2, 8))
def test_rc_matches_brute_force(g):
    assert rc_exact(g).rc == brute_rc(g)


@pytest.mark.parametrize("g", _small_graphs(60, 3, 12))
def test_rc_bounds_and_tightness(g):
    r = rc_exact(g)
    assert diameter(g) <= r.rc <= g.n - 1
    assert rc_decision(g, r.rc).feasible
    if r.rc > 1:
        assert not rc_decision(g, r.rc - 1).feasible
