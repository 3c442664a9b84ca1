"""
Chain file format: line i lists the vertex ids of chain i.
"""
from pathlib import Path
from typing import Optional, Union

from ..decomposition.chains import ChainDecomposition
from .edge_list import data_lines, parse_ints

PathLike = Union[str, Path]


def save_chains(path: PathLike, dec: ChainDecomposition) -> None:
    """Write one line of space-separated vertex ids per chain, in chain order."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        for chain in dec.chains:
            f.write(" ".join(map(str, chain)) + "\n")


def load_chains(path: PathLike, n: Optional[int] = None) -> ChainDecomposition:
    """
    Read a chain file.

    Args:
        path: chain file
        n: vertex count; defaults to the number of listed vertices

    Raises:
        ParseError: on a non-numeric entry
        InputError: if the chains do not partition [0, n)
    """
    chains = []
    for lineno, tokens in data_lines(path):
        chains.append(parse_ints(tokens, lineno, len(tokens), "vertex ids"))
    if n is None:
        n = sum(len(chain) for chain in chains)
    return ChainDecomposition.from_chains(chains, n)
