"""
DAG width and a minimum chain decomposition by maximum bipartite matching.

Every vertex appears once on each side of a bipartite graph; x_i is joined
to y_j whenever i reaches j. A maximum matching M links vertices into chains,
so the minimum chain count, and by Dilworth the width, is n - |M|.
"""
import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..core.graph import Dag, is_adjacency_sorted, sort_adjacency_lists
from ..decomposition.chains import ChainDecomposition
from ..decomposition.nh_conc import nh_conc
from ..utils.timing import PhaseTimer
from .index import ReachIndex, build_index

logger = logging.getLogger(__name__)

_UNLIMITED = float("inf")


@dataclass(frozen=True)
class BipartiteGraph:
    """
    Attributes:
        n: size of each side
        adj: y-neighbours of every x vertex, ascending
    """
    n: int
    adj: Tuple[Tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return sum(len(ys) for ys in self.adj)


@dataclass(frozen=True)
class Matching:
    """
    Attributes:
        match_x: partner of every x vertex, None when unmatched
        match_y: partner of every y vertex, None when unmatched
    """
    match_x: Tuple[Optional[int], ...]
    match_y: Tuple[Optional[int], ...]

    @property
    def size(self) -> int:
        return sum(1 for y in self.match_x if y is not None)


@dataclass(frozen=True)
class WidthResult:
    """
    Attributes:
        width: maximum antichain size
        chains: a decomposition with exactly width chains
        timings: integer milliseconds for index, bipartite, matching, total
    """
    width: int
    chains: ChainDecomposition
    timings: Dict[str, int] = field(default_factory=dict)


def _row_block(ix: ReachIndex, rows: range, chain_arr: np.ndarray, pos_arr: np.ndarray) -> List[Tuple[int, ...]]:
    block = []
    for i in rows:
        mask = ix.idx[i, chain_arr] <= pos_arr
        mask[i] = False
        block.append(tuple(np.flatnonzero(mask).tolist()))
    return block


def build_bipartite(ix: ReachIndex, workers: int = 1) -> BipartiteGraph:
    """
    Enumerate the strict reachability pairs of the index row by row.

    Only one boolean row is materialised per worker at a time. With
    workers > 1 the rows are split into blocks built on a thread pool.
    """
    n = ix.n
    chain_arr = np.asarray(ix.chain_of, dtype=np.int64)
    pos_arr = np.asarray(ix.pos_of, dtype=np.int32)
    if workers <= 1 or n < 2 * workers:
        adj = _row_block(ix, range(n), chain_arr, pos_arr)
    else:
        size = -(-n // workers)
        blocks = [range(lo, min(lo + size, n)) for lo in range(0, n, size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(lambda rows: _row_block(ix, rows, chain_arr, pos_arr), blocks)
            adj = [row for part in parts for row in part]
    b = BipartiteGraph(n=n, adj=tuple(adj))
    logger.debug(f"Bipartite graph has {b.edge_count} edges")
    return b


def _layers(adj, match_x: List[int], match_y: List[int], dist: List[float]) -> float:
    """
    Breadth-first layering from the free x vertices.

    Returns the length of the shortest augmenting path, infinite if none.
    """
    queue: deque = deque()
    for x in range(len(adj)):
        if match_x[x] < 0:
            dist[x] = 0
            queue.append(x)
        else:
            dist[x] = _UNLIMITED
    found = _UNLIMITED
    while queue:
        x = queue.popleft()
        if dist[x] >= found:
            continue
        for y in adj[x]:
            partner = match_y[y]
            if partner < 0:
                if found == _UNLIMITED:
                    found = dist[x] + 1
            elif dist[partner] == _UNLIMITED:
                dist[partner] = dist[x] + 1
                queue.append(partner)
    return found


def _augment_from(root: int, adj, match_x: List[int], match_y: List[int],
                  dist: List[float], ptr: List[int], found: float) -> bool:
    """Iterative depth-first search for one augmenting path along the layers."""
    stack = [root]
    via: List[int] = []
    while stack:
        x = stack[-1]
        ys = adj[x]
        advanced = False
        while ptr[x] < len(ys):
            y = ys[ptr[x]]
            ptr[x] += 1
            partner = match_y[y]
            if partner < 0:
                if dist[x] + 1 == found:
                    via.append(y)
                    # flip the matched edges along the stack
                    for px, py in zip(stack, via):
                        match_x[px] = py
                        match_y[py] = px
                    return True
            elif dist[partner] == dist[x] + 1:
                via.append(y)
                stack.append(partner)
                advanced = True
                break
        if not advanced:
            dist[x] = _UNLIMITED
            stack.pop()
            if via:
                via.pop()
    return False


def hopcroft_karp(b: BipartiteGraph) -> Matching:
    """
    Maximum-cardinality matching in O(|edges| * sqrt(n)).

    A greedy pass seeds the matching; each phase then layers the graph by
    breadth-first search and augments along vertex-disjoint shortest paths.
    """
    n = b.n
    adj = b.adj
    match_x = [-1] * n
    match_y = [-1] * n
    for x in range(n):
        for y in adj[x]:
            if match_y[y] < 0:
                match_x[x] = y
                match_y[y] = x
                break

    dist: List[float] = [_UNLIMITED] * n
    phases = 0
    while True:
        found = _layers(adj, match_x, match_y, dist)
        if found == _UNLIMITED:
            break
        phases += 1
        ptr = [0] * n
        for x in range(n):
            if match_x[x] < 0:
                _augment_from(x, adj, match_x, match_y, dist, ptr, found)

    matching = Matching(match_x=tuple(y if y >= 0 else None for y in match_x),
                        match_y=tuple(x if x >= 0 else None for x in match_y))
    logger.debug(f"Hopcroft-Karp finished after {phases} phases, |M|={matching.size}")
    return matching


def has_augmenting_path(b: BipartiteGraph, m: Matching) -> bool:
    """One extra layering phase; False certifies that m is maximum."""
    match_x = [-1 if y is None else y for y in m.match_x]
    match_y = [-1 if x is None else x for x in m.match_y]
    dist: List[float] = [_UNLIMITED] * b.n
    return _layers(b.adj, match_x, match_y, dist) != _UNLIMITED


def minimum_chains(m: Matching) -> ChainDecomposition:
    """
    Assemble chains by treating match_x as a successor function.

    Vertices unmatched on the y side have no matched predecessor and start a
    chain, which is followed through match_x until it ends.
    """
    chains: List[List[int]] = []
    for start, pred in enumerate(m.match_y):
        if pred is not None:
            continue
        chain = [start]
        nxt = m.match_x[start]
        while nxt is not None:
            chain.append(nxt)
            nxt = m.match_x[nxt]
        chains.append(chain)
    return ChainDecomposition.from_chains(chains, len(m.match_x))


def fulkerson_width(d: Dag, workers: int = 1) -> WidthResult:
    """
    Width of d and a minimum chain decomposition.

    Pipeline: sorted adjacency, nh_conc, build_index, build_bipartite,
    hopcroft_karp. The index phase covers sorting, decomposition and build.

    Args:
        d: a Dag
        workers: threads used for the bipartite rows

    Returns:
        WidthResult with width = n - |M|
    """
    timer = PhaseTimer()
    with timer.phase("total"):
        with timer.phase("index"):
            if not is_adjacency_sorted(d):
                d = sort_adjacency_lists(d)
            dec, _ = nh_conc(d)
            ix = build_index(d, dec)
        with timer.phase("bipartite"):
            b = build_bipartite(ix, workers=workers)
        with timer.phase("matching"):
            m = hopcroft_karp(b)
        width = d.n - m.size
        chains = minimum_chains(m)

    timings = {
        "index_ms": timer.ms("index"),
        "bipartite_ms": timer.ms("bipartite"),
        "matching_ms": timer.ms("matching"),
        "total_ms": timer.ms("total"),
    }
    logger.info(f"Width {width} (heuristic chains {dec.k_c}); timings {timings}")
    return WidthResult(width=width, chains=chains, timings=timings)
