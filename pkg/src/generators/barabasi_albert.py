"""
Barabási–Albert preferential attachment model.
"""
from typing import List

import numpy as np

from ..core.graph import Dag
from .base_generator import BaseGenerator, GeneratorConfig


class BarabasiAlbertGenerator(BaseGenerator):
    """
    Grows a graph from a clique on m + 1 vertices.

    Every later vertex v links to m distinct earlier vertices drawn with
    probability proportional to their current degree, using a list that
    repeats each vertex once per incident edge. The edge count is
    m(m+1)/2 + (n - m - 1) * m.
    """

    def get_name(self) -> str:
        return "BA"

    def sample_edges(self, gc: GeneratorConfig, rng: np.random.Generator) -> np.ndarray:
        n, m = gc.n, gc.m
        edges: List[List[int]] = [[u, v] for u in range(m + 1) for v in range(u + 1, m + 1)]
        endpoints: List[int] = [v for v in range(m + 1) for _ in range(m)]

        for v in range(m + 1, n):
            targets: List[int] = []
            chosen = set()
            while len(targets) < m:
                draws = rng.integers(len(endpoints), size=m - len(targets))
                for i in draws.tolist():
                    t = endpoints[i]
                    if t not in chosen:
                        chosen.add(t)
                        targets.append(t)
            for t in targets:
                edges.append([t, v])
                endpoints.append(t)
            endpoints.extend([v] * m)

        return np.asarray(edges, dtype=np.int64).reshape(-1, 2)


def gen_ba(n: int, m: int, seed: int = 42) -> Dag:
    """Preferential attachment graph oriented from low to high id."""
    return BarabasiAlbertGenerator().generate(GeneratorConfig(model="BA", n=n, seed=seed, m=m))
