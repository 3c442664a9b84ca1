"""
Validity checks for chain decompositions.
"""
from typing import List, Optional, Sequence

from ..core.closure import ClosureBitsets, transitive_closure_baseline
from ..core.graph import Dag
from ..decomposition.chains import ChainDecomposition
from ..utils import setup_logger


class ChainValidator:
    """
    Checks a decomposition against the graph it claims to cover.

    Reachability questions are answered from a baseline closure computed
    once per validator, so this class is meant for tests and small graphs.
    """

    def __init__(self, d: Dag, closure: Optional[ClosureBitsets] = None, logger=None):
        """
        Args:
            d: the decomposed DAG
            closure: precomputed closure of d (optional)
            logger: Logger instance (optional)
        """
        self.dag = d
        self.closure = closure if closure is not None else transitive_closure_baseline(d)
        self.logger = logger if logger is not None else setup_logger(self.__class__.__name__)

    def partition_problems(self, chains: Sequence[Sequence[int]]) -> List[str]:
        problems = []
        seen = [False] * self.dag.n
        for cid, chain in enumerate(chains, start=1):
            if not chain:
                problems.append(f"chain {cid} is empty")
            for v in chain:
                if not 0 <= v < self.dag.n:
                    problems.append(f"chain {cid}: vertex {v} out of range")
                elif seen[v]:
                    problems.append(f"vertex {v} is covered twice")
                else:
                    seen[v] = True
        missing = seen.count(False)
        if missing:
            problems.append(f"{missing} vertices are not covered")
        return problems

    def chain_problems(self, chains: Sequence[Sequence[int]], paths: bool = False) -> List[str]:
        """
        Consecutive vertices must rise in topological rank and reach each
        other; with paths=True they must be joined by an edge.
        """
        problems = []
        rank = self.dag.topo_rank
        for cid, chain in enumerate(chains, start=1):
            for u, v in zip(chain, chain[1:]):
                if rank[u] >= rank[v]:
                    problems.append(f"chain {cid}: {u} does not precede {v} topologically")
                elif paths and v not in self.dag.out_adj[u]:
                    problems.append(f"chain {cid}: no edge {u} -> {v}")
                elif not self.closure.reaches(u, v):
                    problems.append(f"chain {cid}: {u} does not reach {v}")
        return problems

    def concatenation_problems(self, chains: Sequence[Sequence[int]]) -> List[str]:
        """Pairs of distinct chains where the last vertex of one reaches the first of the other."""
        problems = []
        for a, first in enumerate(chains, start=1):
            for b, second in enumerate(chains, start=1):
                if a != b and self.closure.reaches(first[-1], second[0]):
                    problems.append(f"chain {a} ends at {first[-1]}, which reaches the head {second[0]} of chain {b}")
        return problems

    def validate(self, dec: ChainDecomposition, paths: bool = False,
                 concatenation_free: bool = False) -> List[str]:
        """
        Run every requested check.

        Args:
            dec: the decomposition to check
            paths: also require an edge between consecutive vertices
            concatenation_free: also require that no chain can be appended to another

        Returns:
            A list of problems, empty when dec passes
        """
        chains = dec.chains
        problems = self.partition_problems(chains) + self.chain_problems(chains, paths=paths)
        if concatenation_free:
            problems += self.concatenation_problems(chains)
        for problem in problems:
            self.logger.warning(f"Invalid decomposition: {problem}")
        return problems
