"""
Chain concatenation by reversed depth-first lookups.

Any path or chain decomposition is turned into a chain decomposition by
joining a chain whose first vertex is reachable from the last vertex of
another chain. Vertices a failed lookup has already explored are never
expanded again, which keeps the total work at O(|E| + sum of path lengths).
"""
import logging
from dataclasses import dataclass
from typing import Callable, FrozenSet, List, MutableSet, Tuple

from ..core.graph import Dag
from .chains import ChainDecomposition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LookupResult:
    """
    Attributes:
        blocked: visited vertices that are not on the discovered path
        path: vertices from the found chain tail down to the start vertex,
            empty when no chain tail is an ancestor of the start
    """
    blocked: FrozenSet[int]
    path: Tuple[int, ...]


@dataclass(frozen=True)
class ConcatStats:
    """
    Attributes:
        k_p: chains before concatenation
        k_c: chains after concatenation
        c: number of concatenations (always k_p - k_c)
        total_path_len: summed edge length of all connecting paths
    """
    k_p: int
    k_c: int
    c: int
    total_path_len: int


def reversed_dfs_lookup(d: Dag, start: int, is_chain_tail: Callable[[int], bool],
                        globally_blocked: MutableSet[int]) -> LookupResult:
    """
    Search the ancestors of start for the last vertex of some chain.

    The traversal follows in_adj edges depth-first in stored order. A
    discovered vertex is first tested with is_chain_tail (the start itself is
    never tested); vertices in globally_blocked are not expanded. On return
    every visited vertex off the path has been added to globally_blocked.
    """
    in_adj = d.in_adj
    visited = {start}
    stack = [start]
    cursors = [0]
    while stack:
        v = stack[-1]
        preds = in_adj[v]
        i = cursors[-1]
        advanced = False
        while i < len(preds):
            p = preds[i]
            i += 1
            if p in visited:
                continue
            if is_chain_tail(p):
                path = (p,) + tuple(reversed(stack))
                blocked = visited.difference(path)
                globally_blocked.update(blocked)
                return LookupResult(blocked=frozenset(blocked), path=path)
            visited.add(p)
            if p in globally_blocked:
                continue
            cursors[-1] = i
            stack.append(p)
            cursors.append(0)
            advanced = True
            break
        if not advanced:
            stack.pop()
            cursors.pop()

    globally_blocked.update(visited)
    return LookupResult(blocked=frozenset(visited), path=())


def concatenate(d: Dag, paths: ChainDecomposition) -> Tuple[ChainDecomposition, ConcatStats]:
    """
    Concatenate the chains of a decomposition until no more joins exist.

    Chains are visited in ascending topological rank of their first vertex.
    A successful lookup links the chain owning the found tail in front of the
    current chain. Links are recorded per input chain and resolved into
    merged chains and fresh labels in one final pass.
    """
    segments = paths.chains
    k_p = len(segments)
    seg_of = paths.chain_of
    succ_seg = [-1] * k_p
    pred_seg = [-1] * k_p
    is_tail = bytearray(d.n)
    for segment in segments:
        is_tail[segment[-1]] = 1

    blocked: set = set()
    order = sorted(range(k_p), key=lambda cid: d.topo_rank[segments[cid][0]])
    joins = 0
    total_path_len = 0
    for cid in order:
        result = reversed_dfs_lookup(d, segments[cid][0], is_tail.__getitem__, blocked)
        if not result.path:
            continue
        tail = result.path[0]
        tail_seg = seg_of[tail]
        succ_seg[tail_seg] = cid
        pred_seg[cid] = tail_seg
        is_tail[tail] = 0
        joins += 1
        total_path_len += len(result.path) - 1

    merged: List[List[int]] = []
    for cid in order:
        if pred_seg[cid] != -1:
            continue
        chain: List[int] = []
        seg = cid
        while seg != -1:
            chain.extend(segments[seg])
            seg = succ_seg[seg]
        merged.append(chain)

    decomposition = ChainDecomposition.from_chains(merged, d.n)
    stats = ConcatStats(k_p=k_p, k_c=decomposition.k_c, c=joins, total_path_len=total_path_len)
    logger.debug(f"Concatenation joined {joins} of {k_p} chains, "
                 f"connecting paths total {total_path_len} edges")
    return decomposition, stats
