"""
Test fixtures: small hand-made DAGs and seeded random DAG families.
"""
from typing import Iterator, List, Tuple

import numpy as np

from src.core.graph import Dag, dag_from_edges
from src.generators import GeneratorConfig, generate

# Three chains; vertex 1 is labelled (1, 1) and its index array is [1, 2, 2].
SAMPLE_CHAINS = [[1, 2, 3], [4, 7, 9], [0, 5, 6, 8]]
SAMPLE_EDGES = [
    (1, 2), (2, 3),
    (4, 7), (7, 9),
    (0, 5), (5, 6), (6, 8),
    (1, 7), (1, 5), (3, 9),
]
SAMPLE_N = 10


def sample_dag() -> Dag:
    return dag_from_edges(SAMPLE_N, SAMPLE_EDGES)


def path_dag(n: int) -> Dag:
    return dag_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def diamond_dag() -> Dag:
    return dag_from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def complete_dag(n: int) -> Dag:
    return dag_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def antichain_dag(n: int) -> Dag:
    return dag_from_edges(n, [])


def relabel(d: Dag, seed: int) -> Dag:
    """The same DAG under a random vertex permutation, so ids stop being a topological order."""
    perm = np.random.default_rng(seed).permutation(d.n).tolist()
    return dag_from_edges(d.n, [(perm[u], perm[v]) for u, v in d.edges()])


def random_configs(count: int, max_n: int, seed: int = 0, min_n: int = 1) -> Iterator[GeneratorConfig]:
    """
    Cycle through the four models with random sizes and densities.

    Average degrees range from empty graphs to about half of all pairs.
    """
    rng = np.random.default_rng(seed)
    models = ["ER", "BA", "WS", "PB"]
    for i in range(count):
        model = models[i % 4]
        n = int(rng.integers(min_n, max_n + 1))
        graph_seed = int(rng.integers(2**32))
        if model == "ER":
            yield GeneratorConfig(model="ER", n=n, seed=graph_seed, p=float(rng.choice([0.0, 0.05, 0.1, 0.3, 0.6])))
        elif model == "BA":
            if n < 2:
                yield GeneratorConfig(model="ER", n=n, seed=graph_seed, p=0.5)
                continue
            yield GeneratorConfig(model="BA", n=n, seed=graph_seed, m=int(rng.integers(1, min(n - 1, 5) + 1)))
        elif model == "WS":
            k = 2 * int(rng.integers(0, (n - 1) // 2 + 1)) if n > 2 else 0
            yield GeneratorConfig(model="WS", n=n, seed=graph_seed, k=min(k, 8), b=float(rng.choice([0.0, 0.3, 0.9])))
        else:
            paths = int(rng.integers(1, n + 1))
            degree = float(rng.choice([0.0, 1.0, 2.0, 4.0]))
            degree = min(degree, (n - 1) / 2)
            yield GeneratorConfig(model="PB", n=n, seed=graph_seed, paths=paths, avg_degree=degree)


def random_dags(count: int, max_n: int, seed: int = 0, min_n: int = 1) -> Iterator[Tuple[str, Dag]]:
    """Random DAGs of all four models; every other one is relabelled."""
    for i, gc in enumerate(random_configs(count, max_n, seed=seed, min_n=min_n)):
        d = generate(gc)
        if i % 2:
            d = relabel(d, gc.seed)
        yield f"{gc.model}-n{gc.n}-s{gc.seed}", d


def edge_set(d: Dag) -> List[Tuple[int, int]]:
    return sorted(d.edges())
