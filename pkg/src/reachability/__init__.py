"""
Transitive edge reduction, the chain reachability index and DAG width.
"""

from .index import INF, UNREACHABLE, ReachIndex, build_index, edge_classification, query, to_closure_matrix
from .reduction import ReductionStats, reduce, reduce_incoming, reduce_outgoing
from .width import (
    BipartiteGraph,
    Matching,
    WidthResult,
    build_bipartite,
    fulkerson_width,
    has_augmenting_path,
    hopcroft_karp,
    minimum_chains,
)

__all__ = [
    'BipartiteGraph',
    'INF',
    'Matching',
    'ReachIndex',
    'ReductionStats',
    'UNREACHABLE',
    'WidthResult',
    'build_bipartite',
    'build_index',
    'edge_classification',
    'fulkerson_width',
    'has_augmenting_path',
    'hopcroft_karp',
    'minimum_chains',
    'query',
    'reduce',
    'reduce_incoming',
    'reduce_outgoing',
    'to_closure_matrix',
]
