"""
Path and chain decompositions of a DAG.
"""
from typing import Callable, Dict, Optional, Tuple

from ..core.graph import Dag
from ..utils.errors import InputError
from .chains import ChainDecomposition
from .concatenation import ConcatStats, LookupResult, concatenate, reversed_dfs_lookup
from .nh_conc import nh_conc
from .paths import chain_order_paths, node_order_paths

METHODS = ("nh_conc", "node_order", "node_order_conc", "chain_order", "chain_order_conc")

_PATH_HEURISTICS: Dict[str, Callable[[Dag], ChainDecomposition]] = {
    "node_order": node_order_paths,
    "chain_order": chain_order_paths,
}


def decompose(d: Dag, method: str = "nh_conc") -> Tuple[ChainDecomposition, Optional[ConcatStats]]:
    """
    Decompose d with one of METHODS.

    The "*_conc" methods run the path heuristic followed by concatenate.
    Plain path heuristics return no ConcatStats.
    """
    if method not in METHODS:
        raise InputError(f"unknown decomposition method '{method}', expected one of {', '.join(METHODS)}")
    if method == "nh_conc":
        return nh_conc(d)
    paths = _PATH_HEURISTICS[method.removesuffix("_conc")](d)
    if method.endswith("_conc"):
        return concatenate(d, paths)
    return paths, None


__all__ = [
    'ChainDecomposition',
    'ConcatStats',
    'LookupResult',
    'METHODS',
    'chain_order_paths',
    'concatenate',
    'decompose',
    'nh_conc',
    'node_order_paths',
    'reversed_dfs_lookup',
]
