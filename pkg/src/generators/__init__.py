"""
Seeded random DAG generators.
"""
from typing import Dict, Type

from ..core.graph import Dag
from .barabasi_albert import BarabasiAlbertGenerator, gen_ba
from .base_generator import MODELS, RNG_NAME, BaseGenerator, GeneratorConfig
from .erdos_renyi import ErdosRenyiGenerator, gen_er
from .path_based import PathBasedGenerator, gen_pb
from .watts_strogatz import WattsStrogatzGenerator, gen_ws

GENERATORS: Dict[str, Type[BaseGenerator]] = {
    "ER": ErdosRenyiGenerator,
    "BA": BarabasiAlbertGenerator,
    "WS": WattsStrogatzGenerator,
    "PB": PathBasedGenerator,
}


def generate(config: GeneratorConfig) -> Dag:
    """Build the graph described by config with the generator of its model."""
    return GENERATORS[config.model]().generate(config)


__all__ = [
    'BarabasiAlbertGenerator',
    'BaseGenerator',
    'ErdosRenyiGenerator',
    'GENERATORS',
    'GeneratorConfig',
    'MODELS',
    'PathBasedGenerator',
    'RNG_NAME',
    'WattsStrogatzGenerator',
    'gen_ba',
    'gen_er',
    'gen_pb',
    'gen_ws',
    'generate',
]
