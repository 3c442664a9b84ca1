"""
Traversal-based transitive closure, the baseline and oracle for the index.
"""
import logging
from dataclasses import dataclass
from typing import Set, Tuple

import numpy as np

from .graph import Dag

logger = logging.getLogger(__name__)


def to_csr(d: Dag) -> Tuple[np.ndarray, np.ndarray]:
    """Compressed sparse row arrays (indptr, indices) of the successor lists."""
    counts = np.fromiter((len(succ) for succ in d.out_adj), dtype=np.int64, count=d.n)
    indptr = np.zeros(d.n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    indices = np.fromiter((v for succ in d.out_adj for v in succ), dtype=np.int64,
                          count=int(indptr[-1]))
    return indptr, indices


@dataclass(frozen=True)
class ClosureBitsets:
    """
    Per-source reachability bit-sets, one packed numpy row per vertex.

    Row s has bit t set iff t is reachable from s; every row includes s.
    """
    n: int
    rows: np.ndarray

    def reaches(self, s: int, t: int) -> bool:
        return bool((self.rows[s, t >> 3] >> (7 - (t & 7))) & 1)

    def row(self, s: int) -> Set[int]:
        bits = np.unpackbits(self.rows[s], count=self.n)
        return set(np.flatnonzero(bits).tolist())

    def to_matrix(self) -> np.ndarray:
        """Dense n x n boolean matrix."""
        return np.unpackbits(self.rows, axis=1, count=self.n).astype(bool)

    def pair_count(self, reflexive: bool = True) -> int:
        total = int(np.unpackbits(self.rows, axis=1, count=self.n).sum())
        return total if reflexive else total - self.n


def transitive_closure_baseline(d: Dag) -> ClosureBitsets:
    """
    Closure by a breadth-first search from every vertex.

    Each search is level-synchronous over CSR arrays: a frontier's successor
    ranges are gathered in one step, unseen vertices become the next
    frontier. Total work is O(n * (n + |E|)).
    """
    n = d.n
    indptr, indices = to_csr(d)
    rows = np.zeros((n, (n + 7) // 8), dtype=np.uint8)
    visited = np.zeros(n, dtype=bool)

    for s in range(n):
        visited[:] = False
        visited[s] = True
        frontier = np.array([s], dtype=np.int64)
        while frontier.size:
            starts = indptr[frontier]
            counts = indptr[frontier + 1] - starts
            total = int(counts.sum())
            if total == 0:
                break
            # flat positions of every successor slot of the frontier
            offsets = np.repeat(starts - np.cumsum(counts) + counts, counts)
            successors = indices[offsets + np.arange(total)]
            fresh = np.unique(successors[~visited[successors]])
            visited[fresh] = True
            frontier = fresh
        rows[s] = np.packbits(visited)

    logger.debug(f"Baseline closure computed for {n} sources")
    return ClosureBitsets(n=n, rows=rows)
