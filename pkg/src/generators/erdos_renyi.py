"""
Erdős–Rényi G(n, p) model.
"""
import numpy as np

from ..core.graph import Dag
from .base_generator import BaseGenerator, GeneratorConfig, upper_triangle_pairs


class ErdosRenyiGenerator(BaseGenerator):
    """Every unordered pair becomes an edge independently with probability p."""

    def get_name(self) -> str:
        return "ER"

    def sample_edges(self, gc: GeneratorConfig, rng: np.random.Generator) -> np.ndarray:
        pairs = gc.n * (gc.n - 1) // 2
        # a binomial count followed by a uniform subset has the G(n, p) law
        count = int(rng.binomial(pairs, gc.p)) if pairs else 0
        keys = rng.choice(pairs, size=count, replace=False) if count else np.empty(0, dtype=np.int64)
        return upper_triangle_pairs(gc.n, np.asarray(keys, dtype=np.int64))


def gen_er(n: int, p: float, seed: int = 42) -> Dag:
    """G(n, p) oriented from low to high id."""
    return ErdosRenyiGenerator().generate(GeneratorConfig(model="ER", n=n, seed=seed, p=p))
