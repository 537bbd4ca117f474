"""Graph construction, format round-trips, and the generator families."""
from fractions import Fraction

import pytest

from distenum import (GraphFormatError, format_graph, from_edge_list,
                      gen_bmm_graph, gen_clique_path, gen_isolated_plus_edge,
                      gen_random, gen_star, parse_graph)


def check_csr(g):
    assert len(g.offsets) == g.n + 1
    assert g.offsets[0] == 0
    for v in range(g.n):
        assert g.offsets[v] <= g.offsets[v + 1]
        assert g.degree(v) == g.offsets[v + 1] - g.offsets[v]
    assert g.offsets[g.n] == len(g.targets) == g.arc_count
    for t in g.targets:
        assert 0 <= t < g.n
    if g.weighted:
        assert len(g.weights) == len(g.targets)
    # handshaking in directed-arc form
    assert sum(g.degree(v) for v in range(g.n)) == g.arc_count


def test_path_degrees():
    g = from_edge_list(3, [(0, 1), (1, 2)], False)
    check_csr(g)
    assert [g.degree(v) for v in range(3)] == [1, 2, 1]
    assert g.m == 2 and not g.directed and not g.weighted


def test_empty_directed():
    g = from_edge_list(2, [], True)
    check_csr(g)
    assert g.m == 0
    assert g.stats().max_degree == 0


def test_out_star_stats():
    g = from_edge_list(3, [(0, 1, 5), (0, 2, 7)], True, weighted=True)
    check_csr(g)
    assert [g.degree(v) for v in range(3)] == [2, 0, 0]
    st = g.stats()
    assert st.max_degree == 2
    assert st.avg_degree == Fraction(2, 3)


def test_undirected_stores_both_orientations():
    g = from_edge_list(3, [(0, 2, 4)], False, weighted=True)
    assert sorted(g.neighbors(0)) == [2]
    assert sorted(g.neighbors(2)) == [0]
    arcs = {(u, g.targets[i]): g.weights[i]
            for u in range(3) for i in g.arcs_from(u)}
    assert arcs[(0, 2)] == arcs[(2, 0)] == 4


def test_parallel_edges_preserved():
    g = from_edge_list(2, [(0, 1), (0, 1)], False)
    assert g.degree(0) == 2
    assert g.m == 2


def test_rejects_out_of_range_vertex():
    with pytest.raises(ValueError):
        from_edge_list(2, [(0, 2)], False)
    with pytest.raises(ValueError):
        from_edge_list(2, [(-1, 0)], True)


def test_rejects_negative_weight():
    with pytest.raises(ValueError):
        from_edge_list(2, [(0, 1, -1)], False, weighted=True)


def test_rejects_weight_over_cap():
    # default cap is n^3
    with pytest.raises(ValueError):
        from_edge_list(2, [(0, 1, 9)], False, weighted=True)
    g = from_edge_list(2, [(0, 1, 8)], False, weighted=True)
    assert g.weights[0] == 8
    g = from_edge_list(2, [(0, 1, 9)], False, weighted=True,
                       weight_cap_exponent=4)
    assert g.weights[0] == 9


def test_degree_stats_invariants(corpus):
    for tag, g in corpus:
        check_csr(g)
        st = g.stats()
        degs = [g.degree(v) for v in range(g.n)]
        if g.n:
            assert st.max_degree == max(degs)
            assert st.avg_degree * g.n == sum(degs)
            assert st.avg_degree <= st.max_degree
        else:
            assert st.max_degree == 0
            assert st.avg_degree == 0


def test_round_trip_fixed_point(corpus):
    for tag, g in corpus:
        text = format_graph(g)
        h = parse_graph(text)
        assert format_graph(h) == text, tag
        assert (h.n, h.m, h.directed, h.weighted) == \
            (g.n, g.m, g.directed, g.weighted)
        for v in range(g.n):
            want = sorted((g.targets[i], g.weights[i] if g.weighted else 1)
                          for i in g.arcs_from(v))
            got = sorted((h.targets[i], h.weights[i] if h.weighted else 1)
                         for i in h.arcs_from(v))
            assert got == want, (tag, v)


def test_parse_comments_and_errors():
    g = parse_graph("# a path\n3 2 undirected unweighted\n0 1\n1 2\n")
    assert g.n == 3 and g.m == 2
    with pytest.raises(GraphFormatError):
        parse_graph("")
    with pytest.raises(GraphFormatError):
        parse_graph("3 2 sideways unweighted\n0 1\n1 2\n")
    with pytest.raises(GraphFormatError):
        parse_graph("3 2 undirected unweighted\n0 1\n")
    with pytest.raises(GraphFormatError):
        parse_graph("3 1 undirected weighted\n0 1\n")
    with pytest.raises(GraphFormatError):
        parse_graph("3 1 undirected unweighted\n0 1 5\n")


def test_clique_path_shape():
    for k in range(3, 17):
        g = gen_clique_path(k)
        check_csr(g)
        assert g.n == k + k * k
        assert g.m == k * (k - 1) // 2 + k * k
        assert g.stats().max_degree == k - 1
        assert not g.directed and not g.weighted
    with pytest.raises(ValueError):
        gen_clique_path(2)


def test_clique_path_structure():
    # the replaced clique edge is gone; its endpoints now connect through
    # the rest of the clique (2 hops) or the k^2+1 hop path
    from distenum import brute_force_matrix
    k = 4
    g = gen_clique_path(k)
    assert (k - 1) not in set(g.neighbors(k - 2))
    degs = sorted(g.degree(v) for v in range(g.n))
    assert degs == [2] * (k * k) + [k - 1] * k
    m = brute_force_matrix(g)
    assert m.entry(k - 2, k - 1) == 2
    assert m.entry(0, 1) == 1
    # some inner path vertex sits k^2 // 2 hops or more from the clique
    far = max(m.entry(0, v) for v in range(g.n))
    assert far >= k * k // 2


def test_star_shape():
    g = gen_star(4, [3, 1, 2])
    check_csr(g)
    assert g.degree(0) == 3
    assert all(g.degree(v) == 1 for v in range(1, 4))
    assert g.weighted
    single = gen_star(1, [])
    assert single.n == 1 and single.m == 0
    zero = gen_star(3, [0, 0])
    assert sorted(zero.weights[i] for i in zero.arcs_from(0)) == [0, 0]
    with pytest.raises(ValueError):
        gen_star(3, [1])


def test_bmm_graph_shape():
    g = gen_bmm_graph([[1]], [[1]])
    check_csr(g)
    assert g.n == 5 and g.m == 2
    from distenum import brute_force_matrix
    assert brute_force_matrix(g).entry(0, 2) == 2

    unreach = gen_bmm_graph([[1]], [[0]])
    assert brute_force_matrix(unreach).entry(0, 2) == float("inf")

    ident = [[1, 0], [0, 1]]
    g = gen_bmm_graph(ident, ident)
    assert g.n == 2 * 4 + 6
    assert g.m <= 2 * 4
    m = brute_force_matrix(g)
    for i in range(2):
        for k in range(2):
            want = 2 if i == k else None
            if want:
                assert m.entry(i, 4 + k) == 2
            else:
                assert m.entry(i, 4 + k) != 2
    with pytest.raises(ValueError):
        gen_bmm_graph([[1]], [[1, 0], [0, 1]])


def test_isolated_plus_edge_shape():
    g = gen_isolated_plus_edge(2)
    assert g.m == 1 and g.stats().max_degree == 1
    g = gen_isolated_plus_edge(5)
    check_csr(g)
    assert g.m == 1
    assert sorted(g.neighbors(3)) == [4]
    assert all(g.degree(v) == 0 for v in range(3))
    with pytest.raises(ValueError):
        gen_isolated_plus_edge(1)


def test_random_determinism_and_bounds():
    a = gen_random(10, 20, directed=False, seed=7)
    b = gen_random(10, 20, directed=False, seed=7)
    assert format_graph(a) == format_graph(b)
    c = gen_random(10, 20, directed=False, seed=8)
    assert format_graph(c) != format_graph(a)

    single = gen_random(1, 0)
    assert single.n == 1 and single.m == 0

    k10 = gen_random(10, 45, directed=False, seed=1)
    assert all(k10.degree(v) == 9 for v in range(10))

    with pytest.raises(ValueError):
        gen_random(3, 4, directed=False)
    with pytest.raises(ValueError):
        gen_random(3, 7, directed=True)


def test_random_simple_and_weighted():
    g = gen_random(9, 30, directed=True, max_weight=5, seed=2)
    check_csr(g)
    seen = set()
    for u in range(g.n):
        for i in g.arcs_from(u):
            v = g.targets[i]
            assert u != v
            assert (u, v) not in seen
            seen.add((u, v))
            assert 0 <= g.weights[i] <= 5
