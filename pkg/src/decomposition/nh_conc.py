"""
Node-order chain heuristic with online concatenation and greedy choices.
"""
import logging
from typing import List, Tuple

from ..core.graph import Dag
from .chains import ChainDecomposition
from .concatenation import ConcatStats, reversed_dfs_lookup

logger = logging.getLogger(__name__)


def nh_conc(d: Dag) -> Tuple[ChainDecomposition, ConcatStats]:
    """
    Build a chain decomposition in one ascending topological sweep.

    An unassigned vertex joins, in order of preference:
      1. the chain ending at its immediate predecessor of lowest out-degree
         (ties to the lowest vertex id),
      2. the chain ending at an ancestor found by reversed_dfs_lookup,
      3. a new chain.
    Once a vertex ends its chain, its first immediate successor (ascending
    rank) of in-degree 1 is appended right away.

    Expects adjacency lists sorted by sort_adjacency_lists.

    Returns:
        The decomposition and its ConcatStats, where c counts the vertices
        placed through a lookup and k_p = k_c + c.
    """
    n = d.n
    out_adj, in_adj = d.out_adj, d.in_adj
    chain_id = [-1] * n
    is_tail = bytearray(n)
    chains: List[List[int]] = []
    blocked: set = set()
    joins = 0
    total_path_len = 0

    for v in d.order:
        if chain_id[v] < 0:
            best = -1
            best_key = (0, 0)
            for p in in_adj[v]:
                if is_tail[p]:
                    key = (len(out_adj[p]), p)
                    if best < 0 or key < best_key:
                        best, best_key = p, key
            if best < 0:
                result = reversed_dfs_lookup(d, v, is_tail.__getitem__, blocked)
                if result.path:
                    best = result.path[0]
                    joins += 1
                    total_path_len += len(result.path) - 1
            if best >= 0:
                cid = chain_id[best]
                is_tail[best] = 0
                chains[cid].append(v)
            else:
                cid = len(chains)
                chains.append([v])
            chain_id[v] = cid
            is_tail[v] = 1

        chain = chains[chain_id[v]]
        if chain[-1] != v:
            continue
        for s in out_adj[v]:
            if len(in_adj[s]) == 1 and chain_id[s] < 0:
                chain.append(s)
                chain_id[s] = chain_id[v]
                is_tail[v] = 0
                is_tail[s] = 1
                break

    decomposition = ChainDecomposition.from_chains(chains, n)
    stats = ConcatStats(k_p=len(chains) + joins, k_c=len(chains), c=joins,
                        total_path_len=total_path_len)
    logger.debug(f"NH_conc built {len(chains)} chains ({joins} via lookup)")
    return decomposition, stats
