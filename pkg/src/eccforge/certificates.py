"""Forest decompositions and sparse certificates that preserve the maximal
k-edge-connected subgraphs.

A forest decomposition peels successive spanning forests off the graph. The
union of the first ceil(4*k*log2(n)) forests is guaranteed to contain every
edge whose endpoints lie in different maximal k-edge-connected subgraphs;
that superset plus a k-forest decomposition of the rest is a k-certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dsu import DsuForest
from .graph import Multigraph


@dataclass
class ForestDecomposition:
    forests: list[set[int]]  # F_1..F_t as edge-id sets, later ones may be empty
    graph: Multigraph  # the decomposed source graph
    t: int


@dataclass
class CertificateReport:
    certificate: Multigraph
    eprime: set[int]  # superset of the k-interconnection edges
    forests_used: int
    sizes: tuple[int, int]  # (|E'|, certificate edge count)


def forest_decomposition(g: Multigraph, t: int) -> ForestDecomposition:
    """Peel t spanning forests: F_i spans g minus F_1..F_{i-1}.

    Edges are considered in adjacency-list order for deterministic output.
    """
    if t < 1:
        raise ValueError("need at least one forest")
    remaining = set(g.edge_ids())
    forests: list[set[int]] = []
    for _ in range(t):
        if not remaining:
            forests.append(set())
            continue
        uf = DsuForest()
        item = {v: uf.make_set(v) for v in g.vertex_ids()}
        forest: set[int] = set()
        for v in g.vertex_ids():
            for eid in g.incident(v):
                if eid not in remaining or eid in forest:
                    continue
                a, b = g.endpoints(eid)
                if uf.root_of(item[a]) != uf.root_of(item[b]):
                    uf.unite(item[a], item[b], None)
                    forest.add(eid)
        forests.append(forest)
        remaining -= forest
    return ForestDecomposition(forests, g, t)


def superset_forest_count(n: int, k: int) -> int:
    """ceil(4*k*log2(n)) with a floor of one forest."""
    if n <= 1:
        return 1
    return max(1, math.ceil(4 * k * math.log2(n)))


def interconnection_superset(g: Multigraph, k: int) -> set[int]:
    """An edge set guaranteed to contain every k-interconnection edge:
    the union of the first ceil(4*k*log2(n)) forests of a decomposition."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if g.n == 0:
        return set()
    t = superset_forest_count(g.n, k)
    fd = forest_decomposition(g, t)
    out: set[int] = set()
    for f in fd.forests:
        out |= f
    return out


def k_certificate(g: Multigraph, k: int) -> CertificateReport:
    """A spanning subgraph with the same maximal k-edge-connected subgraphs.

    Construction: all k-interconnection edges are kept via the forest-count
    superset E', and the remainder is thinned to a k-forest decomposition.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    eprime = interconnection_superset(g, k)
    rest = g.subgraph_with_edges(set(g.edge_ids()) - eprime)
    fd = forest_decomposition(rest, k)
    cert_edges = set(eprime)
    for f in fd.forests:
        cert_edges |= f
    cert = g.subgraph_with_edges(cert_edges)
    return CertificateReport(
        certificate=cert,
        eprime=eprime,
        forests_used=superset_forest_count(g.n, k),
        sizes=(len(eprime), cert.m),
    )
