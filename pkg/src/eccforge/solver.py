"""Static maximal k-edge-connected subgraphs by repeated small-cut removal.

Minimum cuts come from Stoer-Wagner maximum-adjacency contraction phases over
a parallel-edge-collapsed weight matrix; any cut of value < k is removed and
the connected remainders are re-examined until every piece is k-edge-connected.
"""

from __future__ import annotations


import numpy as np

from .graph import Cut, Multigraph
from .certificates import k_certificate


class SolverError(Exception):
    pass


class DisconnectedError(SolverError):
    pass


class TooSmallError(SolverError):
    pass


class Partition:
    """Disjoint vertex classes covering V, ordered by minimum member."""

    def __init__(self, classes: list[set[int]], class_of: dict[int, int]):
        self.classes = classes
        self.class_of = class_of

    @classmethod
    def from_classes(cls, classes) -> "Partition":
        ordered = sorted((set(c) for c in classes), key=min)
        class_of = {v: i for i, c in enumerate(ordered) for v in c}
        return cls(ordered, class_of)

    def same(self, u: int, v: int) -> bool:
        return self.class_of[u] == self.class_of[v]

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(c) for c in self.classes}

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.as_sets() == other.as_sets()

    def __repr__(self) -> str:
        return f"Partition({[sorted(c) for c in self.classes]})"

    def refines(self, coarser: "Partition") -> bool:
        return all(
            len({coarser.class_of[v] for v in c}) == 1 for c in self.classes
        )


def _stoer_wagner(verts: list[int], edge_items: list) -> tuple[int, set[int]]:
    """Minimum cut of a connected multigraph given as (eid, u, v) items.

    Returns (cut value, one side as original vertex ids). Parallel edges are
    collapsed into integer weights; merge groups track original vertices so
    the best phase's side can be reported.
    """
    n = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    w_mat = np.zeros((n, n), dtype=np.int64)
    for _eid, u, v in edge_items:
        iu, iv = index[u], index[v]
        w_mat[iu, iv] += 1
        w_mat[iv, iu] += 1
    groups: dict[int, list[int]] = {i: [verts[i]] for i in range(n)}
    active = list(range(n))
    best_val = None
    best_side: list[int] = []
    while len(active) > 1:
        act = np.array(active)
        sub = w_mat[np.ix_(act, act)]
        a = len(active)
        in_a = np.zeros(a, dtype=bool)
        in_a[0] = True
        w = sub[0].copy()
        w[0] = -1
        order = [0]
        last_w = 0
        for _ in range(a - 1):
            j = int(np.argmax(w))
            last_w = int(w[j])
            order.append(j)
            in_a[j] = True
            w = w + sub[j]
            w[in_a] = -1
        s, t = active[order[-2]], active[order[-1]]
        if best_val is None or last_w < best_val:
            best_val = last_w
            best_side = list(groups[t])
        w_mat[s, :] += w_mat[t, :]
        w_mat[:, s] += w_mat[:, t]
        w_mat[s, s] = 0
        groups[s].extend(groups.pop(t))
        active.remove(t)
    return int(best_val), set(best_side)


def global_min_cut(g: Multigraph) -> Cut:
    """A minimum edge cut of a connected multigraph with >= 2 vertices."""
    if g.n < 2:
        raise TooSmallError("minimum cut needs at least two vertices")
    if len(g.connected_components()) != 1:
        raise DisconnectedError("graph is not connected")
    items = [(eid, *g.endpoints(eid)) for eid in g.edge_ids()]
    value, side = _stoer_wagner(list(g.vertex_ids()), items)
    edges = {eid for eid, u, v in items if (u in side) != (v in side)}
    if len(edges) != value:
        raise SolverError("cut side inconsistent with cut value")
    return Cut(value, edges, side)


def max_kec_subgraphs(g: Multigraph, k: int, use_certificate: bool = False) -> Partition:
    """Vertex classes of the maximal k-edge-connected subgraphs.

    k = 1 degenerates to connected components. With use_certificate the input
    is first replaced by its k-certificate (same answer, k >= 3 only).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if use_certificate:
        g = k_certificate(g, k).certificate
    all_items = [(eid, *g.endpoints(eid)) for eid in g.edge_ids()]
    classes: list[set[int]] = []
    stack: list[tuple[set[int], list]] = []
    for comp in g.connected_components():
        stack.append((comp, [it for it in all_items if it[1] in comp]))
    while stack:
        S, items = stack.pop()
        if len(S) == 1:
            classes.append(S)
            continue
        value, side = _stoer_wagner(sorted(S), items)
        if value >= k:
            classes.append(S)
            continue
        kept = [it for it in items if (it[1] in side) == (it[2] in side)]
        stack.extend(_split_pieces(S, kept))
    return Partition.from_classes(classes)


def _split_pieces(S: set[int], items: list) -> list[tuple[set[int], list]]:
    adj: dict[int, list[int]] = {v: [] for v in S}
    for _eid, u, v in items:
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    out = []
    for s in S:
        if s in seen:
            continue
        piece = {s}
        seen.add(s)
        frontier = [s]
        while frontier:
            v = frontier.pop()
            for t in adj[v]:
                if t not in piece:
                    piece.add(t)
                    seen.add(t)
                    frontier.append(t)
        out.append((piece, [it for it in items if it[1] in piece]))
    return out
