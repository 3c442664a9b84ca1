"""
Flat file formats: edge lists, chain files and index files.
"""

from .chain_file import load_chains, save_chains
from .edge_list import load_edge_list, read_digraph, save_edge_list
from .index_file import load_index, save_index

__all__ = [
    'load_chains',
    'load_edge_list',
    'load_index',
    'read_digraph',
    'save_chains',
    'save_edge_list',
    'save_index',
]
