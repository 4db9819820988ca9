import itertools
import random

import pytest

from eccforge import (
    Multigraph,
    global_min_cut,
    max_kec_subgraphs,
    maximal_kec_bruteforce,
)
from eccforge.gen import planted_clusters, random_multigraph
from eccforge.oracle import kecc_partition
from eccforge.solver import DisconnectedError, TooSmallError


def enumerate_min_cut(g):
    """Exhaustive minimum cut for n <= 12: try every proper vertex subset."""
    verts = sorted(g.vertex_ids())
    items = [(eid, *g.endpoints(eid)) for eid in g.edge_ids()]
    best = None
    for r in range(1, len(verts)):
        for side in itertools.combinations(verts[1:], r - 1):
            s = {verts[0], *side}
            value = sum(1 for _e, a, b in items if (a in s) != (b in s))
            if best is None or value < best:
                best = value
    return best


def complete(n):
    g = Multigraph()
    for _ in range(n):
        g.add_vertex()
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            g.add_edge(u, v)
    return g


def test_min_cut_bridge(two_k4_bridge):
    cut = global_min_cut(two_k4_bridge)
    assert cut.value == 1
    (eid,) = cut.edges
    assert set(two_k4_bridge.endpoints(eid)) == {4, 5}
    assert cut.side in ({1, 2, 3, 4}, {5, 6, 7, 8})


def test_min_cut_triangle_and_k4():
    assert global_min_cut(complete(3)).value == 2
    assert global_min_cut(complete(4)).value == 3


def test_min_cut_matches_enumeration():
    rng = random.Random(55)
    for _ in range(30):
        n = rng.randint(2, 9)
        g = random_multigraph(rng, n, rng.randint(n - 1, 3 * n))
        if len(g.connected_components()) != 1:
            continue
        cut = global_min_cut(g)
        assert cut.value == enumerate_min_cut(g)
        crossing = {
            eid
            for eid in g.edge_ids()
            if (g.endpoints(eid)[0] in cut.side) != (g.endpoints(eid)[1] in cut.side)
        }
        assert crossing == cut.edges


def test_min_cut_errors():
    g = Multigraph()
    g.add_vertex()
    with pytest.raises(TooSmallError):
        global_min_cut(g)
    g.add_vertex()
    with pytest.raises(DisconnectedError):
        global_min_cut(g)


def test_k1_components():
    g = Multigraph()
    for _ in range(5):
        g.add_vertex()
    g.add_edge(1, 2)
    g.add_edge(4, 5)
    part = max_kec_subgraphs(g, 1)
    assert part.as_sets() == {
        frozenset({1, 2}),
        frozenset({3}),
        frozenset({4, 5}),
    }


def test_two_k4_bridge(two_k4_bridge):
    part = max_kec_subgraphs(two_k4_bridge, 3)
    assert part.as_sets() == {frozenset({1, 2, 3, 4}), frozenset({5, 6, 7, 8})}


def test_five_cycle_singletons():
    g = Multigraph()
    for _ in range(5):
        g.add_vertex()
    for i in range(5):
        g.add_edge(i + 1, (i + 1) % 5 + 1)
    part = max_kec_subgraphs(g, 3)
    assert all(len(c) == 1 for c in part.classes)


def ladder_coupled_k4s():
    """Two K4s joined by two vertex-disjoint 2-edge ladders: cross pairs are
    3-edge-connected in the whole graph, yet the maximal-3 partition keeps
    the K4s separate."""
    g = Multigraph()
    for _ in range(10):
        g.add_vertex()
    for base in (0, 4):
        vs = [base + i for i in (1, 2, 3, 4)]
        for i in range(4):
            for j in range(i + 1, 4):
                g.add_edge(vs[i], vs[j])
    # ladders 1-9-5 and 4-10-8, plus a direct link making lambda >= 3
    g.add_edge(1, 9)
    g.add_edge(9, 5)
    g.add_edge(4, 10)
    g.add_edge(10, 8)
    g.add_edge(2, 6)
    return g


def test_maximal_strictly_refines_kecc():
    g = ladder_coupled_k4s()
    kecc = kecc_partition(g, 3)
    maximal = max_kec_subgraphs(g, 3)
    assert maximal == maximal_kec_bruteforce(g, 3)
    assert maximal.refines(kecc)
    # strict: some kecc class splits into several maximal classes
    assert frozenset({1, 2, 3, 4}) in maximal.as_sets()
    assert frozenset({5, 6, 7, 8}) in maximal.as_sets()
    assert any(
        sum(1 for m in maximal.classes if m <= c) > 1 for c in kecc.classes
    )


def test_idempotence_on_classes():
    rng = random.Random(66)
    for _ in range(10):
        g = planted_clusters(rng, 2, 4, 18, 2)
        part = max_kec_subgraphs(g, 3)
        for cls in part.classes:
            sub = Multigraph()
            remap = {v: i + 1 for i, v in enumerate(sorted(cls))}
            for _ in cls:
                sub.add_vertex()
            for eid in g.edge_ids():
                a, b = g.endpoints(eid)
                if a in cls and b in cls:
                    sub.add_edge(remap[a], remap[b])
            again = max_kec_subgraphs(sub, 3)
            assert len(again.classes) == 1


def test_refinement_chain_and_certificate_consistency():
    rng = random.Random(67)
    for _ in range(15):
        n = rng.randint(4, 14)
        g = random_multigraph(rng, n, rng.randint(n, 4 * n))
        parts = {k: max_kec_subgraphs(g, k) for k in (3, 4, 5)}
        assert parts[5].refines(parts[4])
        assert parts[4].refines(parts[3])
        for k in (3, 4, 5):
            assert max_kec_subgraphs(g, k, use_certificate=True) == parts[k]


def test_oracle_agreement_bulk():
    # at least 500 (graph, k) instances within the n <= 40, m <= 400 caps
    rng = random.Random(500)
    instances = 0
    graphs = []
    for _ in range(120):
        n = rng.randint(3, 16)
        graphs.append(random_multigraph(rng, n, rng.randint(2, 4 * n)))
    for _ in range(40):
        graphs.append(
            planted_clusters(rng, rng.randint(2, 3), rng.randint(3, 6), 18, 3)
        )
    for _ in range(14):
        n = rng.randint(17, 40)
        graphs.append(random_multigraph(rng, n, rng.randint(n, 400)))
    for g in graphs:
        for k in (3, 4, 5):
            assert max_kec_subgraphs(g, k) == maximal_kec_bruteforce(g, k)
            instances += 1
    assert instances >= 500


def test_agreement_with_incremental_engine():
    from eccforge import DecompTree

    rng = random.Random(68)
    for _ in range(10):
        n = rng.randint(3, 12)
        g = random_multigraph(rng, n, rng.randint(2, 3 * n))
        tree = DecompTree()
        for _ in range(n):
            tree.insert_vertex()
        for eid in sorted(g.edge_ids()):
            tree.insert_edge(*g.endpoints(eid))
        assert set(map(frozenset, tree.partition())) == max_kec_subgraphs(
            g, 3
        ).as_sets()
