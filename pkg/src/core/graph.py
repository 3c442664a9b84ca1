"""
Graph representation and topological machinery.

`Digraph` is a validated edge list as read from disk; `Dag` is the immutable
adjacency form every algorithm in the toolkit works on. Vertex ids are dense
integers in [0, n).
"""
import heapq
import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from ..utils.errors import CycleError, InputError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
Adjacency = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Digraph:
    """
    A directed graph given as a deduplicated edge list without self-loops.

    Attributes:
        n: vertex count
        edges: (source, target) pairs in first-seen order
        dropped_self_loops: self-loops filtered out at construction
        dropped_duplicates: repeated edges filtered out at construction
    """
    n: int
    edges: Tuple[Edge, ...]
    dropped_self_loops: int = 0
    dropped_duplicates: int = 0

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Dag:
    """
    An immutable directed acyclic graph.

    Attributes:
        n: vertex count
        out_adj: successors per vertex
        in_adj: predecessors per vertex (exact transpose of out_adj)
        topo_rank: position of every vertex in a topological order
    """
    n: int
    out_adj: Adjacency
    in_adj: Adjacency
    topo_rank: Tuple[int, ...]
    order: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        order = [0] * self.n
        for v, rank in enumerate(self.topo_rank):
            order[rank] = v
        object.__setattr__(self, "order", tuple(order))

    @property
    def edge_count(self) -> int:
        return sum(len(succ) for succ in self.out_adj)

    def edges(self) -> Iterator[Edge]:
        """Iterate all edges, grouped by source in vertex-id order."""
        for u, succ in enumerate(self.out_adj):
            for v in succ:
                yield u, v

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range [0, {self.n})")


def from_edge_list(n: int, edges: Iterable[Edge],
                   line_numbers: Optional[Sequence[int]] = None) -> Digraph:
    """
    Build a Digraph, dropping self-loops and duplicate edges.

    Args:
        n: vertex count
        edges: (source, target) pairs
        line_numbers: source line of every edge, used in error messages when
            the edges come from a file

    Returns:
        The validated Digraph

    Raises:
        InputError: if n is negative or an endpoint is outside [0, n)
    """
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")

    seen: Set[Edge] = set()
    kept: List[Edge] = []
    self_loops = 0
    duplicates = 0
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            where = f"line {line_numbers[i]}" if line_numbers is not None else f"edge {i + 1}"
            raise InputError(f"{where}: endpoint of ({u}, {v}) out of range [0, {n})")
        if u == v:
            self_loops += 1
            continue
        if (u, v) in seen:
            duplicates += 1
            continue
        seen.add((u, v))
        kept.append((u, v))

    if self_loops or duplicates:
        logger.info(f"Dropped {self_loops} self-loops and {duplicates} duplicate edges")
    return Digraph(n=n, edges=tuple(kept), dropped_self_loops=self_loops,
                   dropped_duplicates=duplicates)


def _adjacency(n: int, edges: Iterable[Edge]) -> Tuple[Adjacency, Adjacency]:
    out_adj: List[List[int]] = [[] for _ in range(n)]
    in_adj: List[List[int]] = [[] for _ in range(n)]
    for u, v in edges:
        out_adj[u].append(v)
    # built from out_adj so in_adj lists are in ascending source id
    for u in range(n):
        for v in out_adj[u]:
            in_adj[v].append(u)
    return tuple(map(tuple, out_adj)), tuple(map(tuple, in_adj))


def _cycle_witness(n: int, in_adj: Adjacency, remaining: Sequence[int]) -> int:
    """Walk predecessors inside the unsorted remainder until a vertex repeats."""
    left = [False] * n
    for v in remaining:
        left[v] = True
    v = remaining[0]
    seen: Set[int] = set()
    while v not in seen:
        seen.add(v)
        # every leftover vertex keeps at least one leftover predecessor
        v = next(p for p in in_adj[v] if left[p])
    return v


def to_dag(g: Digraph) -> Dag:
    """
    Assign topological ranks with a source queue, lowest vertex id first.

    Args:
        g: an acyclic Digraph

    Returns:
        The Dag with topo_rank set

    Raises:
        CycleError: if g contains a directed cycle
    """
    out_adj, in_adj = _adjacency(g.n, g.edges)
    indegree = [len(preds) for preds in in_adj]
    ready = [v for v in range(g.n) if indegree[v] == 0]
    heapq.heapify(ready)

    rank = [-1] * g.n
    next_rank = 0
    while ready:
        v = heapq.heappop(ready)
        rank[v] = next_rank
        next_rank += 1
        for w in out_adj[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                heapq.heappush(ready, w)

    if next_rank < g.n:
        remaining = [v for v in range(g.n) if rank[v] < 0]
        raise CycleError(_cycle_witness(g.n, in_adj, remaining))

    return Dag(n=g.n, out_adj=out_adj, in_adj=in_adj, topo_rank=tuple(rank))


def sort_adjacency_lists(d: Dag) -> Dag:
    """
    Sort every successor list in ascending topological order in O(n + |E|).

    Vertices are swept in reverse topological order and each one is pushed
    onto the stack of each of its predecessors; popping a stack then yields
    the successors lowest rank first.
    """
    stacks: List[List[int]] = [[] for _ in range(d.n)]
    for v in reversed(d.order):
        for s in d.in_adj[v]:
            stacks[s].append(v)
    out_adj = tuple(tuple(reversed(stack)) for stack in stacks)
    return Dag(n=d.n, out_adj=out_adj, in_adj=d.in_adj, topo_rank=d.topo_rank)


def is_adjacency_sorted(d: Dag) -> bool:
    """True when every successor list is strictly ascending in topo_rank."""
    rank = d.topo_rank
    for succ in d.out_adj:
        for a, b in zip(succ, succ[1:]):
            if rank[a] >= rank[b]:
                return False
    return True


def dag_from_edges(n: int, edges: Iterable[Edge]) -> Dag:
    """Convenience: from_edge_list, to_dag and sort_adjacency_lists in one call."""
    return sort_adjacency_lists(to_dag(from_edge_list(n, edges)))


def dfs_reachable(d: Dag, s: int) -> Set[int]:
    """
    Vertices reachable from s, s included, by iterative depth-first search.

    Raises:
        InputError: if s is not a vertex of d
    """
    d.check_vertex(s)
    seen = {s}
    stack = [s]
    while stack:
        v = stack.pop()
        for w in d.out_adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen
