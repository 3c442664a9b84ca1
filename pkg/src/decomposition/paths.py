"""
Linear-time path decomposition heuristics.
"""
import logging
from typing import List

from ..core.graph import Dag
from .chains import ChainDecomposition

logger = logging.getLogger(__name__)


def node_order_paths(d: Dag) -> ChainDecomposition:
    """
    Node-order heuristic.

    Vertices are scanned in ascending topological order. A vertex extends the
    first path (in in_adj order) whose last vertex is one of its immediate
    predecessors, otherwise it starts a new path.
    """
    path_of = [-1] * d.n
    is_tail = [False] * d.n
    paths: List[List[int]] = []
    for v in d.order:
        for p in d.in_adj[v]:
            if is_tail[p]:
                is_tail[p] = False
                path_of[v] = path_of[p]
                paths[path_of[v]].append(v)
                break
        else:
            path_of[v] = len(paths)
            paths.append([v])
        is_tail[v] = True

    logger.debug(f"Node-order heuristic produced {len(paths)} paths")
    return ChainDecomposition.from_chains(paths, d.n)


def chain_order_paths(d: Dag) -> ChainDecomposition:
    """
    Chain-order heuristic.

    Starting from the lowest-ranked unassigned vertex, a path is extended with
    the first unassigned immediate successor (ascending rank) until none is
    left, then the next path starts.
    """
    assigned = [False] * d.n
    # per-vertex scan position so every successor list is read once overall
    cursor = [0] * d.n
    paths: List[List[int]] = []
    for start in d.order:
        if assigned[start]:
            continue
        assigned[start] = True
        path = [start]
        v = start
        while True:
            succ = d.out_adj[v]
            i = cursor[v]
            while i < len(succ) and assigned[succ[i]]:
                i += 1
            cursor[v] = i
            if i == len(succ):
                break
            v = succ[i]
            assigned[v] = True
            path.append(v)
        paths.append(path)

    logger.debug(f"Chain-order heuristic produced {len(paths)} paths")
    return ChainDecomposition.from_chains(paths, d.n)
