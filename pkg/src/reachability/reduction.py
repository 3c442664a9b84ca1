"""
Linear-time removal of transitive edges detectable through a chain decomposition.

If a vertex has two outgoing edges into the same chain, the one pointing
higher up the chain is transitive: the lower target reaches it along the
chain. Symmetrically, of two incoming edges from the same chain only the one
leaving from the highest point can be non-transitive. Keeping one edge per
(vertex, chain) pair in each direction bounds every out- and in-degree by k_c.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

from ..core.graph import Adjacency, Dag
from ..decomposition.chains import ChainDecomposition
from ..utils.errors import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionStats:
    """
    Attributes:
        removed_out: edges removed by the outgoing pass
        removed_in: edges removed by the incoming pass
        remaining: edges left (|E_red'|)
        edge_visits: adjacency entries read, at most 3 per edge per pass
    """
    removed_out: int
    removed_in: int
    remaining: int
    edge_visits: int = 0


def _check(d: Dag, dec: ChainDecomposition) -> None:
    if dec.n != d.n:
        raise PreconditionError(f"decomposition covers {dec.n} vertices, graph has {d.n}")


def _keep_extreme(adj: Adjacency, dec: ChainDecomposition, lowest: bool) -> Tuple[List[List[int]], int, int]:
    """
    Filter every adjacency list down to one neighbour per chain.

    With lowest=True the neighbour of minimum chain position survives,
    otherwise the one of maximum position. The k_c scratch arrays are reset
    lazily through a per-vertex stamp.
    """
    chain_of, pos_of = dec.chain_of, dec.pos_of
    best = [0] * dec.k_c
    stamp = [-1] * dec.k_c
    kept_lists: List[List[int]] = []
    removed = 0
    visits = 0
    for v, nbrs in enumerate(adj):
        # first and second loops: pick the extreme position per chain
        for t in nbrs:
            c = chain_of[t]
            p = pos_of[t]
            if stamp[c] != v:
                stamp[c] = v
                best[c] = p
            elif (p < best[c]) if lowest else (p > best[c]):
                best[c] = p
        # third loop: keep only the extreme neighbour of each chain
        kept = [t for t in nbrs if pos_of[t] == best[chain_of[t]]]
        visits += 2 * len(nbrs)
        removed += len(nbrs) - len(kept)
        kept_lists.append(kept)
    return kept_lists, removed, visits


def _from_out_lists(d: Dag, out_lists: List[List[int]]) -> Dag:
    in_lists: List[List[int]] = [[] for _ in range(d.n)]
    for u, succ in enumerate(out_lists):
        for v in succ:
            in_lists[v].append(u)
    return Dag(n=d.n, out_adj=tuple(map(tuple, out_lists)),
               in_adj=tuple(map(tuple, in_lists)), topo_rank=d.topo_rank)


def _from_in_lists(d: Dag, in_lists: List[List[int]]) -> Dag:
    keep = [set(preds) for preds in in_lists]
    # filter out_adj in place of rebuilding it so successor order survives
    out_lists = [[v for v in succ if u in keep[v]] for u, succ in enumerate(d.out_adj)]
    return Dag(n=d.n, out_adj=tuple(map(tuple, out_lists)),
               in_adj=tuple(map(tuple, in_lists)), topo_rank=d.topo_rank)


def reduce_outgoing(d: Dag, dec: ChainDecomposition) -> Tuple[Dag, ReductionStats]:
    """Keep, per vertex and target chain, only the edge to the lowest target."""
    _check(d, dec)
    out_lists, removed, visits = _keep_extreme(d.out_adj, dec, lowest=True)
    reduced = _from_out_lists(d, out_lists)
    stats = ReductionStats(removed_out=removed, removed_in=0,
                           remaining=reduced.edge_count, edge_visits=visits)
    logger.debug(f"Outgoing pass removed {removed} of {d.edge_count} edges")
    return reduced, stats


def reduce_incoming(d: Dag, dec: ChainDecomposition) -> Tuple[Dag, ReductionStats]:
    """Keep, per vertex and source chain, only the edge from the highest source."""
    _check(d, dec)
    in_lists, removed, visits = _keep_extreme(d.in_adj, dec, lowest=False)
    reduced = _from_in_lists(d, in_lists)
    stats = ReductionStats(removed_out=0, removed_in=removed,
                           remaining=reduced.edge_count, edge_visits=visits)
    logger.debug(f"Incoming pass removed {removed} of {d.edge_count} edges")
    return reduced, stats


def reduce(d: Dag, dec: ChainDecomposition) -> Tuple[Dag, ReductionStats]:
    """Outgoing pass followed by incoming pass; the closure is unchanged."""
    after_out, out_stats = reduce_outgoing(d, dec)
    reduced, in_stats = reduce_incoming(after_out, dec)
    stats = ReductionStats(removed_out=out_stats.removed_out, removed_in=in_stats.removed_in,
                           remaining=in_stats.remaining,
                           edge_visits=out_stats.edge_visits + in_stats.edge_visits)
    logger.info(f"Reduction kept {stats.remaining} of {d.edge_count} edges "
                f"(outgoing -{stats.removed_out}, incoming -{stats.removed_in})")
    return reduced, stats
