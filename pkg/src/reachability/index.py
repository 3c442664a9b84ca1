"""
Chain-based reachability index with constant-time queries.

Every vertex stores, for each chain of a decomposition, the lowest position
in that chain it can reach. s reaches t exactly when the entry of s for the
chain of t is at or below the position of t.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core.graph import Dag
from ..decomposition.chains import ChainDecomposition
from ..utils.errors import InputError, PreconditionError

logger = logging.getLogger(__name__)

# Unreachable entries are stored as the largest int32 so a merge is a plain
# elementwise minimum; files and row() use 0 instead.
INF = np.iinfo(np.int32).max
UNREACHABLE = 0


@dataclass(frozen=True)
class ReachIndex:
    """
    Attributes:
        k_c: number of chains
        chain_of: 0-based chain of every vertex
        pos_of: 1-based chain position of every vertex
        idx: read-only n x k_c int32 block, INF where a chain is unreachable
        e_tr: edges classified transitive during the build
        e_red: edges classified non-transitive during the build
    """
    k_c: int
    chain_of: Tuple[int, ...]
    pos_of: Tuple[int, ...]
    idx: np.ndarray
    e_tr: int = 0
    e_red: int = 0

    @property
    def n(self) -> int:
        return len(self.chain_of)

    @property
    def memory_entries(self) -> int:
        return self.k_c * self.n

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range [0, {self.n})")

    def label(self, v: int) -> Tuple[int, int]:
        """The 1-based (chain, position) pair of v."""
        self.check_vertex(v)
        return self.chain_of[v] + 1, self.pos_of[v]

    def row(self, v: int) -> List[int]:
        """Index array of v with UNREACHABLE in place of the internal sentinel."""
        self.check_vertex(v)
        row = self.idx[v]
        return np.where(row == INF, UNREACHABLE, row).tolist()

    @classmethod
    def from_rows(cls, labels: Sequence[Tuple[int, int]], rows: Sequence[Sequence[int]],
                  k_c: Optional[int] = None, e_tr: int = 0, e_red: int = 0) -> "ReachIndex":
        """
        Rebuild an index from 1-based labels and rows in external form.

        Raises:
            InputError: if a label or row is inconsistent with the chain count
        """
        n = len(labels)
        if k_c is None:
            k_c = len(rows[0]) if n else 0
        idx = np.full((n, k_c), INF, dtype=np.int32)
        for v, row in enumerate(rows):
            if len(row) != k_c:
                raise InputError(f"vertex {v}: expected {k_c} entries, got {len(row)}")
            values = np.asarray(row, dtype=np.int64)
            if (values < 0).any():
                raise InputError(f"vertex {v}: negative index entry")
            idx[v] = np.where(values == UNREACHABLE, INF, values)
        chain_of = []
        pos_of = []
        for v, (chain, pos) in enumerate(labels):
            if not 1 <= chain <= k_c or pos < 1:
                raise InputError(f"vertex {v}: invalid label ({chain}, {pos})")
            if idx[v, chain - 1] != pos:
                raise InputError(f"vertex {v}: entry for its own chain must be its position {pos}")
            chain_of.append(chain - 1)
            pos_of.append(pos)
        idx.setflags(write=False)
        return cls(k_c=k_c, chain_of=tuple(chain_of), pos_of=tuple(pos_of), idx=idx,
                   e_tr=e_tr, e_red=e_red)


def build_index(d: Dag, dec: ChainDecomposition) -> ReachIndex:
    """
    Fill the index in one reverse topological sweep.

    Successors of each vertex are visited in ascending topological order. An
    edge (v, t) is merged only when no earlier successor already reaches t,
    i.e. when t's position is below the entry v holds for t's chain; all
    other edges are transitive and cost O(1). The cell of v's own chain is
    set after the sweep so an edge into the same chain is classified like any
    other.

    Args:
        d: DAG with adjacency lists sorted by sort_adjacency_lists
        dec: chain decomposition of d

    Returns:
        The ReachIndex, with e_tr + e_red = |E|

    Raises:
        PreconditionError: if dec does not match d or a successor list is not
            in ascending topological order
    """
    if dec.n != d.n:
        raise PreconditionError(f"decomposition covers {dec.n} vertices, graph has {d.n}")

    chain_of, pos_of = dec.chain_of, dec.pos_of
    rank = d.topo_rank
    idx = np.full((d.n, dec.k_c), INF, dtype=np.int32)
    e_tr = 0
    e_red = 0
    for v in reversed(d.order):
        row = idx[v]
        last_rank = -1
        for t in d.out_adj[v]:
            if rank[t] <= last_rank:
                raise PreconditionError(
                    f"successors of vertex {v} are not in ascending topological order; "
                    f"sort the adjacency lists first")
            last_rank = rank[t]
            if pos_of[t] < row[chain_of[t]]:
                np.minimum(row, idx[t], out=row)
                e_red += 1
            else:
                e_tr += 1
        row[chain_of[v]] = pos_of[v]

    idx.setflags(write=False)
    logger.info(f"Index built over {dec.k_c} chains: {e_red} non-transitive, {e_tr} transitive edges")
    return ReachIndex(k_c=dec.k_c, chain_of=chain_of, pos_of=pos_of, idx=idx, e_tr=e_tr, e_red=e_red)


def query(ix: ReachIndex, s: int, t: int) -> bool:
    """
    True when t is reachable from s (every vertex reaches itself).

    Raises:
        InputError: if s or t is not a vertex of the index
    """
    ix.check_vertex(s)
    ix.check_vertex(t)
    return bool(ix.idx[s, ix.chain_of[t]] <= ix.pos_of[t])


def edge_classification(ix: ReachIndex) -> Tuple[int, int]:
    """The (e_tr, e_red) counts recorded while the index was built."""
    return ix.e_tr, ix.e_red


def to_closure_matrix(ix: ReachIndex) -> np.ndarray:
    """Dense n x n boolean reachability matrix, diagonal included."""
    chain_arr = np.asarray(ix.chain_of, dtype=np.int64)
    pos_arr = np.asarray(ix.pos_of, dtype=np.int32)
    return ix.idx[:, chain_arr] <= pos_arr[np.newaxis, :]
