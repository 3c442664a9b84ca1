"""
Path-based DAG model: a fixed number of random paths plus random forward edges.
"""
import numpy as np

from ..core.graph import Dag
from .base_generator import BaseGenerator, GeneratorConfig, upper_triangle_keys, upper_triangle_pairs


class PathBasedGenerator(BaseGenerator):
    """
    A random permutation of the vertices is cut at paths - 1 uniformly chosen
    points. Each segment is sorted by id and chained, giving n - paths path
    edges. Uniform forward pairs are then added, skipping duplicates, until
    the graph has round(avg_degree * n) edges.
    """

    def get_name(self) -> str:
        return "PB"

    def sample_edges(self, gc: GeneratorConfig, rng: np.random.Generator) -> np.ndarray:
        n = gc.n
        perm = rng.permutation(n)
        cuts = np.sort(rng.choice(np.arange(1, n), size=gc.paths - 1, replace=False)) if gc.paths > 1 else []
        path_edges = []
        for segment in np.split(perm, cuts):
            segment = np.sort(segment)
            path_edges.append(np.column_stack((segment[:-1], segment[1:])))
        edges = np.concatenate(path_edges).astype(np.int64).reshape(-1, 2)

        target = int(round((gc.avg_degree or 0.0) * n))
        if target <= len(edges):
            return edges

        pairs = n * (n - 1) // 2
        present = set(upper_triangle_keys(n, edges).tolist())
        extra = []
        while len(present) < target:
            for key in rng.integers(pairs, size=target - len(present)).tolist():
                if key not in present:
                    present.add(key)
                    extra.append(key)
        extra_edges = upper_triangle_pairs(n, np.asarray(extra, dtype=np.int64))
        self.logger.debug(f"PB added {len(extra)} forward edges to {len(edges)} path edges")
        return np.concatenate((edges, extra_edges))


def gen_pb(n: int, paths: int, avg_degree: float = 0.0, seed: int = 42) -> Dag:
    """Path-based DAG with the given number of paths and target average degree."""
    return PathBasedGenerator().generate(
        GeneratorConfig(model="PB", n=n, seed=seed, paths=paths, avg_degree=avg_degree))
