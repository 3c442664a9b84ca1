"""
Strongly connected component condensation (iterative Tarjan).
"""
import logging
from dataclasses import dataclass
from typing import List, Set, Tuple

from .graph import Dag, Digraph, from_edge_list, sort_adjacency_lists, to_dag

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CondensationResult:
    """
    Attributes:
        dag: the acyclic graph of supernodes
        component_of: supernode id of every original vertex
        component_count: number of supernodes
    """
    dag: Dag
    component_of: Tuple[int, ...]
    component_count: int


def strongly_connected_components(g: Digraph) -> List[int]:
    """
    Label every vertex with its component id.

    Components are numbered in the order Tarjan's algorithm completes them,
    which is a reverse topological order of the condensation.
    """
    n = g.n
    succ: List[List[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        succ[u].append(v)

    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    component = [-1] * n
    stack: List[int] = []
    counter = 0
    count = 0

    for root in range(n):
        if index[root] >= 0:
            continue
        # explicit call stack of (vertex, next successor position)
        work = [(root, 0)]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            if pos < len(succ[v]):
                work[-1] = (v, pos + 1)
                w = succ[v][pos]
                if index[w] < 0:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component[w] = count
                    if w == v:
                        break
                count += 1
    return component


def condense_sccs(g: Digraph) -> CondensationResult:
    """
    Collapse every strongly connected component into a supernode.

    Supernode ids are renumbered so that they ascend along a topological
    order of the condensation. An edge A->B exists iff some original edge
    crosses from component A to component B.
    """
    raw = strongly_connected_components(g)
    count = max(raw) + 1 if raw else 0
    # Tarjan completes sinks first; flip to get topological numbering
    component_of = tuple(count - 1 - c for c in raw)

    crossing: Set[Tuple[int, int]] = set()
    edges = []
    for u, v in g.edges:
        a, b = component_of[u], component_of[v]
        if a != b and (a, b) not in crossing:
            crossing.add((a, b))
            edges.append((a, b))

    dag = sort_adjacency_lists(to_dag(from_edge_list(count, edges)))
    logger.info(f"Condensed {g.n} vertices into {count} supernodes with {len(edges)} edges")
    return CondensationResult(dag=dag, component_of=component_of, component_count=count)
