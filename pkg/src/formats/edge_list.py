"""
Plain-text edge-list format.

Comment lines start with '#'. The first other line is "n m", followed by
exactly m lines "u v" with 0-based vertex ids.
"""
import logging
from pathlib import Path
from typing import Iterable, Iterator, List, Tuple, Union

from ..core.graph import Dag, Digraph, from_edge_list, sort_adjacency_lists, to_dag
from ..utils.errors import ParseError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def data_lines(path: PathLike) -> Iterator[Tuple[int, List[str]]]:
    """Yield (line number, tokens) for every non-blank, non-comment line."""
    with open(path, 'r', encoding='utf-8') as f:
        for lineno, line in enumerate(f, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith('#'):
                continue
            yield lineno, stripped.split()


def parse_ints(tokens: List[str], lineno: int, expected: int, what: str) -> List[int]:
    """Parse exactly `expected` non-negative decimal integers."""
    if len(tokens) != expected:
        raise ParseError(f"expected {what}, got '{' '.join(tokens)}'", line=lineno)
    try:
        values = [int(token) for token in tokens]
    except ValueError:
        raise ParseError(f"expected {what}, got '{' '.join(tokens)}'", line=lineno) from None
    if any(value < 0 for value in values):
        raise ParseError(f"negative value in '{' '.join(tokens)}'", line=lineno)
    return values


def read_digraph(path: PathLike) -> Digraph:
    """
    Read an edge list without requiring acyclicity.

    Raises:
        ParseError: on a malformed header or edge line, or a wrong edge count
        InputError: if an endpoint is out of range
    """
    lines = data_lines(path)
    first = next(lines, None)
    if first is None:
        raise ParseError(f"{path}: missing 'n m' header")
    lineno, tokens = first
    n, m = parse_ints(tokens, lineno, 2, "header 'n m'")

    edges: List[Tuple[int, int]] = []
    line_numbers: List[int] = []
    for lineno, tokens in lines:
        if len(edges) == m:
            raise ParseError(f"more than the {m} edges announced in the header", line=lineno)
        u, v = parse_ints(tokens, lineno, 2, "edge 'u v'")
        edges.append((u, v))
        line_numbers.append(lineno)
    if len(edges) != m:
        raise ParseError(f"{path}: header announces {m} edges, found {len(edges)}")

    logger.debug(f"Read {m} edges over {n} vertices from {path}")
    return from_edge_list(n, edges, line_numbers=line_numbers)


def load_edge_list(path: PathLike) -> Dag:
    """
    Read an edge list into a Dag with sorted adjacency lists.

    Raises:
        ParseError: on malformed content
        CycleError: if the graph has a directed cycle
    """
    return sort_adjacency_lists(to_dag(read_digraph(path)))


def save_edge_list(path: PathLike, d: Union[Dag, Digraph], comments: Iterable[str] = ()) -> None:
    """
    Write d in edge-list format, preceded by one '#' line per comment.

    Edges are written grouped by source in vertex-id order.
    """
    edges = list(d.edges) if isinstance(d, Digraph) else list(d.edges())
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        for comment in comments:
            f.write(f"# {comment}\n")
        f.write(f"{d.n} {len(edges)}\n")
        for u, v in edges:
            f.write(f"{u} {v}\n")
    logger.debug(f"Wrote {len(edges)} edges to {path}")
