"""Maximal k-edge-connected subgraphs: incremental, static, and fully dynamic."""

from .graph import Cut, Multigraph, parse_graph, parse_stream, serialize_graph
from .dsu import DsuForest
from .blockforest import BlockForest
from .cactusforest import CactusForest
from .decomp import DecompTree
from .certificates import (
    CertificateReport,
    ForestDecomposition,
    forest_decomposition,
    interconnection_superset,
    k_certificate,
)
from .solver import Partition, global_min_cut, max_kec_subgraphs
from .dynamic import SparsTree
from .oracle import edge_connectivity, kecc_partition, maximal_kec_bruteforce

__all__ = [
    "BlockForest",
    "CactusForest",
    "CertificateReport",
    "Cut",
    "DecompTree",
    "DsuForest",
    "ForestDecomposition",
    "Multigraph",
    "Partition",
    "SparsTree",
    "edge_connectivity",
    "forest_decomposition",
    "global_min_cut",
    "interconnection_superset",
    "k_certificate",
    "kecc_partition",
    "max_kec_subgraphs",
    "maximal_kec_bruteforce",
    "parse_graph",
    "parse_stream",
    "serialize_graph",
]
