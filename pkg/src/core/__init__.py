"""
Graph representation, condensation and traversal-based closure.
"""

from .closure import ClosureBitsets, to_csr, transitive_closure_baseline
from .condensation import CondensationResult, condense_sccs, strongly_connected_components
from .graph import (
    Dag,
    Digraph,
    dag_from_edges,
    dfs_reachable,
    from_edge_list,
    is_adjacency_sorted,
    sort_adjacency_lists,
    to_dag,
)

__all__ = [
    'ClosureBitsets',
    'CondensationResult',
    'Dag',
    'Digraph',
    'condense_sccs',
    'dag_from_edges',
    'dfs_reachable',
    'from_edge_list',
    'is_adjacency_sorted',
    'sort_adjacency_lists',
    'strongly_connected_components',
    'to_csr',
    'to_dag',
    'transitive_closure_baseline',
]
