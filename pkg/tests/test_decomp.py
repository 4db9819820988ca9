import itertools
import random

import pytest

from eccforge import DecompTree, Multigraph, maximal_kec_bruteforce
from eccforge.gen import staircase_sequence, random_insertion_sequence
from eccforge.graph import SelfLoopError, UnknownVertexError


def replay(edges, n):
    tree = DecompTree()
    g = Multigraph()
    for _ in range(n):
        tree.insert_vertex()
        g.add_vertex()
    for u, v in edges:
        tree.insert_edge(u, v)
        g.add_edge(u, v)
    return tree, g


def as_sets(partition):
    return set(map(frozenset, partition))


def test_insert_vertex_trivial_chain():
    tree = DecompTree()
    v = tree.insert_vertex()
    assert v == 1
    assert tree.same_max_3ec(1, 1)
    assert tree.partition() == [{1}]
    # root plus the 1ecc/2ecc/3ecc chain
    assert tree.root.level == 0
    chain = list(tree.root.children)
    assert len(chain) == 1 and chain[0].kind == "ecc1"
    tree.validate()
    w = tree.insert_vertex()
    assert not tree.same_max_3ec(v, w)
    assert tree.count() == 2


def test_insert_edge_errors():
    tree = DecompTree()
    tree.insert_vertex()
    with pytest.raises(SelfLoopError):
        tree.insert_edge(1, 1)
    with pytest.raises(UnknownVertexError):
        tree.insert_edge(1, 2)
    with pytest.raises(UnknownVertexError):
        tree.same_max_3ec(1, 5)


def test_triangle_stays_trivial():
    tree, _ = replay([(1, 2), (2, 3), (3, 1)], 3)
    for u, v in itertools.combinations(range(1, 4), 2):
        assert not tree.same_max_3ec(u, v)
    assert tree.count() == 3


K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


@pytest.mark.parametrize("perm", list(itertools.permutations(range(6)))[::40])
def test_k4_any_insertion_order(perm):
    edges = [K4_EDGES[i] for i in perm]
    tree, g = replay(edges, 4)
    assert tree.partition() == [{1, 2, 3, 4}]
    assert tree.same_max_3ec(1, 3)
    assert as_sets(tree.partition()) == maximal_kec_bruteforce(g, 3).as_sets()
    tree.validate()


def test_two_k4_bridge_partition():
    edges = list(K4_EDGES) + [(u + 4, v + 4) for u, v in K4_EDGES] + [(4, 5)]
    tree, g = replay(edges, 8)
    assert tree.partition() == [{1, 2, 3, 4}, {5, 6, 7, 8}]
    assert not tree.same_max_3ec(4, 5)
    tree.insert_edge(1, 8)  # a second interconnection keeps the partition
    g.add_edge(1, 8)
    assert tree.partition() == [{1, 2, 3, 4}, {5, 6, 7, 8}]
    assert as_sets(tree.partition()) == maximal_kec_bruteforce(g, 3).as_sets()
    assert tree.subgraph_of(6) == {5, 6, 7, 8}
    assert tree.count() == 2


def test_staircase_sequence_all_trivial_with_growing_3ecc():
    # staircase insertions: the maximal subgraphs stay trivial throughout,
    # even as the 3-edge-connected components grow
    from eccforge.oracle import kecc_partition

    n = 10
    tree, g = replay([], n)
    seq = staircase_sequence(n)
    for i, (u, v) in enumerate(seq):
        tree.insert_edge(u, v)
        g.add_edge(u, v)
        assert tree.count() == n  # all trivial, always
        if i >= 3 and i % 2 == 1:
            k = (i + 3) // 2  # prefix ends at edge (k, k-1)
            classes = kecc_partition(g, 3).as_sets()
            assert frozenset(range(1, k)) in classes
    assert tree.affecting_insertions == len(seq)
    assert tree.affecting_insertions <= 3 * (n - 1)


def test_affecting_bound_random_sequences():
    rng = random.Random(100)
    for _ in range(25):
        n = rng.randint(2, 20)
        ops = random_insertion_sequence(rng, n, rng.randint(5, 60))
        tree = DecompTree()
        for op in ops:
            if op[0] == "av":
                tree.insert_vertex()
            else:
                tree.insert_edge(op[1], op[2])
        assert tree.affecting_insertions <= 3 * (tree.n_vertices - 1)


def test_monotone_merging_and_oracle_equivalence():
    rng = random.Random(4242)
    for _ in range(20):
        n = rng.randint(3, 14)
        ops = random_insertion_sequence(rng, n, rng.randint(5, 40))
        tree = DecompTree()
        g = Multigraph()
        prev = None
        for op in ops:
            if op[0] == "av":
                tree.insert_vertex()
                g.add_vertex()
            else:
                tree.insert_edge(op[1], op[2])
                g.add_edge(op[1], op[2])
            part = as_sets(tree.partition())
            assert part == maximal_kec_bruteforce(g, 3).as_sets()
            if prev is not None and len(prev) >= len(part):
                # classes only merge: every earlier class sits inside one
                # current class
                for cls in prev:
                    assert any(cls <= cur for cur in part)
            prev = part
            tree.validate()


def test_same_leaf_insert_is_structural_noop():
    tree, _ = replay(K4_EDGES, 4)
    calls_before = tree.total_insert_calls
    affecting_before = tree.affecting_insertions
    tree.insert_edge(1, 4)
    assert tree.affecting_insertions == affecting_before
    assert tree.total_insert_calls == calls_before + 1
    assert tree.partition() == [{1, 2, 3, 4}]


def test_whole_graph_condenses_to_root_then_grows():
    tree, _ = replay(K4_EDGES, 4)
    assert tree.root.leaf or tree.count() == 1
    v = tree.insert_vertex()  # must demote the condensed root cleanly
    assert v == 5
    tree.validate()
    assert tree.partition() == [{1, 2, 3, 4}, {5}]
    tree.insert_edge(4, 5)
    tree.insert_edge(3, 5)
    tree.insert_edge(2, 5)
    assert tree.partition() == [{1, 2, 3, 4, 5}]


def test_partition_and_count_empty():
    tree = DecompTree()
    assert tree.partition() == []
    assert tree.count() == 0


def cycle4():
    return replay([(1, 2), (2, 3), (3, 4), (4, 1)], 4)


def test_merge_opposite_cycle_members_no_reinsertion():
    # inserting a chord between opposite 4-cycle members merges two leaf
    # 3-eccs that share no cactus edge: both get expanded with trivial
    # chains and nothing is re-inserted
    tree, g = cycle4()
    calls_before = tree.total_insert_calls
    tree.insert_edge(1, 3)
    g.add_edge(1, 3)
    # one user call plus exactly one internal repeat after the merge
    assert tree.total_insert_calls == calls_before + 2
    d1 = tree._ancestor_at(1, 3)
    assert d1 is tree._ancestor_at(3, 3)
    assert not d1.leaf
    # the two expanded chains were linked by the repeated insertion, so the
    # merged 3-ecc node now holds one component with a 2-node block tree
    (c,) = d1.children
    assert c.kind == "ecc1"
    assert len(c.children) == 2
    assert set(map(frozenset, tree.partition())) == maximal_kec_bruteforce(
        g, 3
    ).as_sets()
    tree.validate()


def test_merge_adjacent_cycle_members_one_reinsertion():
    # a parallel edge to an existing 4-cycle edge merges two adjacent
    # 3-eccs; the old edge between them is pushed down and re-inserted
    tree, g = cycle4()
    calls_before = tree.total_insert_calls
    tree.insert_edge(1, 2)
    g.add_edge(1, 2)
    # user call + one re-insertion of the displaced edge + one repeat
    assert tree.total_insert_calls == calls_before + 3
    d = tree._ancestor_at(1, 3)
    assert d is tree._ancestor_at(2, 3)
    assert set(map(frozenset, tree.partition())) == maximal_kec_bruteforce(
        g, 3
    ).as_sets()
    tree.validate()


def test_tree_size_stays_linear():
    # empirically the ratio tops out just under 4 nodes per vertex (the
    # insert_vertex chain); 6n + 1 is a comfortable linear ceiling
    def count_nodes(tree):
        total = 0
        stack = [tree.root]
        while stack:
            nd = stack.pop()
            total += 1
            stack.extend(nd.children)
        return total

    rng = random.Random(55)
    for _ in range(30):
        n = rng.randint(2, 30)
        ops = random_insertion_sequence(rng, n, rng.randint(5, 150))
        tree = DecompTree()
        for op in ops:
            if op[0] == "av":
                tree.insert_vertex()
            else:
                tree.insert_edge(op[1], op[2])
        assert count_nodes(tree) <= 6 * tree.n_vertices + 1
