"""
Watts–Strogatz small-world model.
"""
from typing import List, Set

import numpy as np

from ..core.graph import Dag
from .base_generator import BaseGenerator, GeneratorConfig


class WattsStrogatzGenerator(BaseGenerator):
    """
    Ring lattice with k nearest neighbours, then random rewiring.

    Lattice edges (u, u + j) are visited for j = 1..k/2 and every u; with
    probability b an edge is replaced by (u, w) for a uniformly drawn w that
    is neither u nor already adjacent to u. The edge count stays n * k / 2.
    """

    def get_name(self) -> str:
        return "WS"

    def sample_edges(self, gc: GeneratorConfig, rng: np.random.Generator) -> np.ndarray:
        n, half = gc.n, gc.k // 2
        neighbours: List[Set[int]] = [set() for _ in range(n)]
        for u in range(n):
            for j in range(1, half + 1):
                v = (u + j) % n
                neighbours[u].add(v)
                neighbours[v].add(u)

        for j in range(1, half + 1):
            coins = rng.random(n)
            for u in range(n):
                if coins[u] >= gc.b:
                    continue
                v = (u + j) % n
                if v not in neighbours[u] or len(neighbours[u]) >= n - 1:
                    continue
                w = int(rng.integers(n))
                while w == u or w in neighbours[u]:
                    w = int(rng.integers(n))
                neighbours[u].discard(v)
                neighbours[v].discard(u)
                neighbours[u].add(w)
                neighbours[w].add(u)

        edges = [[u, v] for u in range(n) for v in neighbours[u] if u < v]
        return np.asarray(edges, dtype=np.int64).reshape(-1, 2)


def gen_ws(n: int, k: int, b: float, seed: int = 42) -> Dag:
    """Small-world graph oriented from low to high id."""
    return WattsStrogatzGenerator().generate(GeneratorConfig(model="WS", n=n, seed=seed, k=k, b=b))
