"""
Chain decomposition data type.
"""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..core.graph import Dag
from ..utils.errors import InputError

Chain = Tuple[int, ...]


@dataclass(frozen=True)
class ChainDecomposition:
    """
    Vertex-disjoint chains covering every vertex.

    Attributes:
        chains: the chains, each listed in ascending topological order
        chain_of: 0-based chain id of every vertex
        pos_of: 1-based position of every vertex inside its chain
    """
    chains: Tuple[Chain, ...]
    chain_of: Tuple[int, ...]
    pos_of: Tuple[int, ...]

    @property
    def k_c(self) -> int:
        return len(self.chains)

    @property
    def n(self) -> int:
        return len(self.chain_of)

    @classmethod
    def from_chains(cls, chains: Iterable[Sequence[int]], n: int) -> "ChainDecomposition":
        """
        Label the vertices of the given chains.

        Raises:
            InputError: if a vertex is out of range, repeated, or missing
        """
        chain_of = [-1] * n
        pos_of = [0] * n
        frozen: List[Chain] = []
        for cid, chain in enumerate(chains):
            chain = tuple(chain)
            if not chain:
                raise InputError(f"chain {cid + 1} is empty")
            for pos, v in enumerate(chain, start=1):
                if not 0 <= v < n:
                    raise InputError(f"chain {cid + 1}: vertex {v} out of range [0, {n})")
                if chain_of[v] >= 0:
                    raise InputError(f"vertex {v} appears in chains {chain_of[v] + 1} and {cid + 1}")
                chain_of[v] = cid
                pos_of[v] = pos
            frozen.append(chain)
        missing = [v for v in range(n) if chain_of[v] < 0]
        if missing:
            raise InputError(f"{len(missing)} vertices are not covered, first is {missing[0]}")
        return cls(chains=tuple(frozen), chain_of=tuple(chain_of), pos_of=tuple(pos_of))

    def label(self, v: int) -> Tuple[int, int]:
        """The 1-based (chain, position) pair of v."""
        return self.chain_of[v] + 1, self.pos_of[v]

    def heads(self) -> List[int]:
        return [chain[0] for chain in self.chains]

    def tails(self) -> List[int]:
        return [chain[-1] for chain in self.chains]

    def is_path_decomposition(self, d: Dag) -> bool:
        """True when every consecutive pair of every chain is joined by an edge."""
        for chain in self.chains:
            for u, v in zip(chain, chain[1:]):
                if v not in d.out_adj[u]:
                    return False
        return True


def sorted_by_head_rank(chains: Iterable[Sequence[int]], d: Dag) -> List[Sequence[int]]:
    """Order chains by the topological rank of their first vertex."""
    return sorted(chains, key=lambda chain: d.topo_rank[chain[0]])
