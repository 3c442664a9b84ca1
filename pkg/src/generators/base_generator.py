"""
Base generator module for seeded random DAG models.
"""
from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

import numpy as np

from ..core.graph import Dag, dag_from_edges
from ..utils import Config, InputError, setup_logger

MODELS = ("ER", "BA", "WS", "PB")
RNG_NAME = "numpy.PCG64"


@dataclass(frozen=True)
class GeneratorConfig:
    """
    Parameters of one generated graph.

    Only the fields of the chosen model are used: ER reads p, BA reads m,
    WS reads k and b, PB reads paths and avg_degree.
    """
    model: str
    n: int
    seed: int = 42
    p: Optional[float] = None
    m: Optional[int] = None
    k: Optional[int] = None
    b: Optional[float] = None
    paths: Optional[int] = None
    avg_degree: Optional[float] = None

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        """
        Raises:
            InputError: if the parameters are outside their model's range
        """
        if self.model not in MODELS:
            raise InputError(f"unknown model '{self.model}', expected one of {', '.join(MODELS)}")
        if self.n < 1:
            raise InputError(f"n must be positive, got {self.n}")
        if self.seed < 0:
            raise InputError(f"seed must be non-negative, got {self.seed}")

        if self.model == "ER":
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise InputError(f"ER needs 0 <= p <= 1, got {self.p}")
        elif self.model == "BA":
            if self.m is None or self.m < 1 or self.n <= self.m:
                raise InputError(f"BA needs m >= 1 and n > m, got m={self.m}, n={self.n}")
        elif self.model == "WS":
            if self.k is None or self.k < 0 or self.k % 2 or self.k >= self.n:
                raise InputError(f"WS needs an even k with 0 <= k < n, got k={self.k}, n={self.n}")
            if self.b is None or not 0.0 <= self.b <= 1.0:
                raise InputError(f"WS needs 0 <= b <= 1, got {self.b}")
        else:
            if self.paths is None or not 1 <= self.paths <= self.n:
                raise InputError(f"PB needs 1 <= paths <= n, got paths={self.paths}, n={self.n}")
            degree = self.avg_degree or 0.0
            if degree < 0:
                raise InputError(f"PB needs a non-negative average degree, got {degree}")
            if round(degree * self.n) > self.n * (self.n - 1) // 2:
                raise InputError(f"PB average degree {degree} is too dense for n={self.n}")

    @classmethod
    def for_degree(cls, model: str, n: int, degree: float, seed: int = 42,
                   b: Optional[float] = None, paths: Optional[int] = None) -> "GeneratorConfig":
        """
        Map an average degree (edges per vertex) to the model's parameters.

        ER uses p = 2d/(n-1), BA attaches m = d edges per vertex, WS joins
        k = 2d ring neighbours, PB targets d directly. b and paths default to
        the generators section of the configuration.
        """
        config = Config()
        if model == "ER":
            p = min(1.0, 2.0 * degree / (n - 1)) if n > 1 else 0.0
            return cls(model=model, n=n, seed=seed, p=p)
        if model == "BA":
            return cls(model=model, n=n, seed=seed, m=max(1, int(round(degree))))
        if model == "WS":
            if b is None:
                b = config.get("generators.ws_rewire_probability", 0.9)
            return cls(model=model, n=n, seed=seed, k=2 * int(round(degree)), b=b)
        if model == "PB":
            if paths is None:
                paths = min(n, config.get("generators.pb_paths", 100))
            return cls(model=model, n=n, seed=seed, paths=paths, avg_degree=degree)
        raise InputError(f"unknown model '{model}', expected one of {', '.join(MODELS)}")

    def params(self) -> Dict[str, Any]:
        """The fields that apply to this model."""
        return {key: value for key, value in asdict(self).items() if value is not None}

    def describe(self) -> str:
        """One-line record of the configuration and random stream, for file headers."""
        fields = " ".join(f"{key}={value}" for key, value in self.params().items())
        return f"{fields} rng={RNG_NAME}"


def upper_triangle_pairs(n: int, keys: np.ndarray) -> np.ndarray:
    """
    Decode row-major indices of the strict upper triangle into (i, j) pairs.

    Key 0 is (0, 1), key n-2 is (0, n-1), key n-1 is (1, 2) and so on.
    """
    rows = np.arange(n, dtype=np.int64)
    row_start = rows * n - rows * (rows + 1) // 2
    i = np.searchsorted(row_start, keys, side="right") - 1
    j = keys - row_start[i] + i + 1
    return np.column_stack((i, j)).astype(np.int64)


def upper_triangle_keys(n: int, pairs: np.ndarray) -> np.ndarray:
    """Inverse of upper_triangle_pairs for pairs with i < j."""
    i = pairs[:, 0].astype(np.int64)
    j = pairs[:, 1].astype(np.int64)
    return i * n - i * (i + 1) // 2 + (j - i - 1)


class BaseGenerator(ABC):
    """
    Abstract base class for all random DAG models.

    Subclasses sample an undirected edge set; this class orients it from low
    to high vertex id, which makes the identity a topological order.
    """

    def __init__(self, logger=None):
        """
        Args:
            logger: Logger instance (optional)
        """
        self.logger = logger if logger is not None else setup_logger(self.__class__.__name__)

    @abstractmethod
    def sample_edges(self, gc: GeneratorConfig, rng: np.random.Generator) -> np.ndarray:
        """
        Draw the edge set of one graph.

        Args:
            gc: validated parameters of this model
            rng: the single random stream of this generation

        Returns:
            (m, 2) integer array of distinct pairs, either orientation
        """
        pass

    @abstractmethod
    def get_name(self) -> str:
        """
        Get the model name.

        Returns:
            One of MODELS
        """
        pass

    def generate(self, gc: GeneratorConfig) -> Dag:
        """
        Generate the DAG described by gc.

        Args:
            gc: parameters, gc.model must match this generator

        Returns:
            A Dag whose edges all go from lower to higher vertex id
        """
        if gc.model != self.get_name():
            raise InputError(f"{self.get_name()} generator cannot build a {gc.model} graph")
        rng = np.random.default_rng(gc.seed)
        edges = self.sample_edges(gc, rng)
        if len(edges):
            edges = np.sort(edges, axis=1)
            edges = edges[np.lexsort((edges[:, 1], edges[:, 0]))]
        dag = dag_from_edges(gc.n, map(tuple, edges.tolist()))
        self.logger.info(f"Generated {gc.model} graph: n={gc.n}, |E|={dag.edge_count}, seed={gc.seed}")
        return dag
