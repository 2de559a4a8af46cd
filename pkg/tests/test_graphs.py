import math
import random

import pytest

from engelgraph import (
    EmptyGraphError,
    EngelGroupError,
    SameVertex,
    SimpleGraph,
    UnknownVertex,
    build_engel_graph,
    clique_number,
    compute_metrics,
    conjugacy_class,
    connected_components,
    diameter,
    find_isomorphism,
    graphs_isomorphic,
    induced_subgraph,
    is_planar,
    isolated_vertices,
    kuratowski_witness,
    left_engel_set,
    verify_kuratowski_witness,
)
from conftest import elem
from oracles import (
    brute_clique_number,
    engel_reaches_by_iteration,
    find_k33_subdivision,
    planar_by_subdivision_search,
    random_graph,
)


def complete_graph(n):
    return SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def k33():
    return SimpleGraph(6, [(a, b) for a in (0, 1, 2) for b in (3, 4, 5)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return SimpleGraph(10, outer + inner + spokes)


def test_simple_graph_validation():
    with pytest.raises(SameVertex):
        SimpleGraph(2, [(0, 0)])
    with pytest.raises(UnknownVertex):
        SimpleGraph(2, [(0, 2)])
    with pytest.raises(ValueError):
        SimpleGraph(2, [], labels=("a",))
    g = SimpleGraph(3, [(0, 1), (1, 0), (0, 1)])  # duplicates collapse
    assert g.edge_count == 1
    assert g.adjacency == ((1,), (0,), ())


def test_adjacency_is_symmetric_and_irreflexive(a4):
    g = build_engel_graph(a4)
    for u in range(g.vertex_count):
        assert u not in g.neighbors(u)
        for v in g.neighbors(u):
            assert u in g.neighbors(v)


def test_engel_graph_of_s3_is_k3(s3):
    g = build_engel_graph(s3)
    transpositions = sorted(
        elem(s3, c) for c in [(1, 2), (1, 3), (2, 3)]
    )
    assert list(g.labels) == transpositions
    assert g.edge_count == 3
    assert all(g.adjacent(u, v) for u in range(3) for v in range(u + 1, 3))


def test_engel_graph_vertices_are_complement_of_engel_set(s4, dic3):
    for G in (s4, dic3):
        g = build_engel_graph(G)
        expected = [x for x in range(G.order) if x not in set(left_engel_set(G))]
        assert list(g.labels) == expected


def test_engel_graph_matches_iteration_oracle(a4):
    g = build_engel_graph(a4)
    labels = g.labels
    for i in range(g.vertex_count):
        for j in range(i + 1, g.vertex_count):
            x, y = labels[i], labels[j]
            oracle = not engel_reaches_by_iteration(
                a4, x, y
            ) and not engel_reaches_by_iteration(a4, y, x)
            assert g.adjacent(i, j) == oracle


def test_engel_graph_rejects_engel_groups(c6):
    with pytest.raises(EngelGroupError):
        build_engel_graph(c6)


def test_connected_components():
    assert connected_components(complete_graph(3)) == [(0, 1, 2)]
    assert connected_components(SimpleGraph(2, [])) == [(0,), (1,)]
    two = SimpleGraph(5, [(0, 1), (2, 3), (3, 4)])
    assert connected_components(two) == [(0, 1), (2, 3, 4)]


def test_diameter():
    assert diameter(complete_graph(3)) == 1
    assert diameter(SimpleGraph(1, [])) == 0
    assert diameter(SimpleGraph(2, [])) == math.inf
    path = SimpleGraph(4, [(0, 1), (1, 2), (2, 3)])
    assert diameter(path) == 3
    with pytest.raises(EmptyGraphError):
        diameter(SimpleGraph(0, []))


def test_diameter_one_means_complete():
    rng = random.Random(13)
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 8), rng.random())
        complete = all(
            g.adjacent(u, v)
            for u in range(g.vertex_count)
            for v in range(u + 1, g.vertex_count)
        )
        try:
            assert (diameter(g) == 1) == complete
        except AssertionError:  # pragma: no cover
            raise


def test_isolated_vertices(s3):
    assert isolated_vertices(build_engel_graph(s3)) == ()
    assert isolated_vertices(SimpleGraph(2, [])) == (0, 1)
    assert isolated_vertices(SimpleGraph(3, [(0, 1)])) == (2,)


def test_induced_subgraph(d12):
    g = build_engel_graph(d12)
    full = induced_subgraph(g, range(g.vertex_count))
    assert full.adjacency == g.adjacency and full.labels == g.labels
    empty = induced_subgraph(g, [])
    assert empty.vertex_count == 0
    with pytest.raises(UnknownVertex):
        induced_subgraph(g, [99])
    # the conjugacy class of the reflection r induces a triangle
    r = d12.generators[1]
    cls = conjugacy_class(d12, r)
    assert len(cls) == 3
    position = {x: v for v, x in enumerate(g.labels)}
    sub = induced_subgraph(g, [position[x] for x in cls])
    assert sub.edge_count == 3
    assert diameter(sub) == 1


def test_clique_number_examples(s3, a4):
    assert clique_number(build_engel_graph(s3)) == 3
    assert clique_number(build_engel_graph(a4)) == 4
    assert clique_number(SimpleGraph(0, [])) == 0
    assert clique_number(SimpleGraph(4, [])) == 1
    assert clique_number(complete_graph(7)) == 7


def test_clique_number_against_enumeration_oracle():
    rng = random.Random(17)
    for _ in range(40):
        g = random_graph(rng, rng.randint(0, 10), rng.random())
        assert clique_number(g) == brute_clique_number(g)


def test_planarity_examples(s3, a4):
    assert is_planar(build_engel_graph(s3))
    assert not is_planar(build_engel_graph(a4))
    assert not is_planar(complete_graph(5))
    assert not is_planar(k33())
    assert is_planar(complete_graph(4))
    assert not is_planar(petersen())


def test_kuratowski_witness_is_verified(a4):
    for g in (build_engel_graph(a4), complete_graph(5), k33(), petersen()):
        witness = kuratowski_witness(g)
        assert witness is not None
        kind = verify_kuratowski_witness(witness, g)
        assert kind in ("K5", "K33")
    assert kuratowski_witness(complete_graph(4)) is None


def test_witness_verifier_rejects_junk():
    host = complete_graph(4)
    with pytest.raises(ValueError):
        verify_kuratowski_witness(complete_graph(4), host)  # K4 is neither
    fake = complete_graph(5)
    with pytest.raises(ValueError):
        verify_kuratowski_witness(fake, SimpleGraph(5, [(0, 1)]))  # not a subgraph
    # a K33 with one edge subdivided still verifies against a host holding it
    edges = [(a, b) for a in (0, 1, 2) for b in (3, 4, 5) if (a, b) != (2, 5)]
    edges += [(2, 6), (5, 6)]
    subdivided = SimpleGraph(7, edges)
    assert verify_kuratowski_witness(subdivided, subdivided) == "K33"


def test_planarity_against_subdivision_oracle():
    rng = random.Random(19)
    for _ in range(30):
        n = rng.randint(3, 10)
        g = random_graph(rng, n, rng.choice([0.2, 0.35, 0.5]))
        assert is_planar(g) == planar_by_subdivision_search(g)


def test_find_k33_subdivision_in_a4_graph(a4):
    g = build_engel_graph(a4)
    witness = find_k33_subdivision(g)
    assert witness is not None
    assert verify_kuratowski_witness(witness, g) == "K33"


def test_isomorphism_on_engel_graphs(d12, dic3):
    gd, gt = build_engel_graph(d12), build_engel_graph(dic3)
    mapping = find_isomorphism(gd, gt)
    assert mapping is not None
    for u, v in gd.edges():
        assert gt.adjacent(mapping[u], mapping[v])
    assert graphs_isomorphic(gd, gd)


def test_isomorphism_counterexamples():
    assert not graphs_isomorphic(complete_graph(3), SimpleGraph(3, [(0, 1), (1, 2)]))
    assert not graphs_isomorphic(complete_graph(3), complete_graph(4))
    # same degree sequence, different structure: C6 vs two triangles
    c6_cycle = SimpleGraph(6, [(i, (i + 1) % 6) for i in range(6)])
    triangles = SimpleGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not graphs_isomorphic(c6_cycle, triangles)


def test_isomorphism_under_random_relabeling():
    rng = random.Random(23)
    for _ in range(25):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, 0.4)
        relabel = list(range(n))
        rng.shuffle(relabel)
        h = SimpleGraph(n, [(relabel[u], relabel[v]) for u, v in g.edges()])
        mapping = find_isomorphism(g, h)
        assert mapping is not None
        assert graphs_isomorphic(h, g)  # symmetric


def test_metrics_invariants(s3, a4, d12):
    for G in (s3, a4, d12):
        g = build_engel_graph(G)
        m = compute_metrics(g)
        assert (m.component_count == 1) == (not math.isinf(m.diameter))
        assert m.clique_number <= m.vertex_count
        assert m.vertex_count == g.vertex_count
        assert m.edge_count == g.edge_count
    disconnected = SimpleGraph(3, [(0, 1)])
    m = compute_metrics(disconnected)
    assert math.isinf(m.diameter) and m.component_count == 2
