"""
Index file format.

Line 1 is "n k_c"; then one line per vertex "chain pos e_0 ... e_{k_c-1}"
with 1-based chains and positions and 0 for unreachable chains. An optional
comment "# e_tr=<int> e_red=<int>" carries the edge classification.
"""
import re
from pathlib import Path
from typing import List, Tuple, Union

from ..reachability.index import ReachIndex
from ..utils.errors import ParseError
from .edge_list import data_lines, parse_ints

PathLike = Union[str, Path]

_COUNTS = re.compile(r"#\s*e_tr=(\d+)\s+e_red=(\d+)")


def save_index(path: PathLike, ix: ReachIndex) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(f"# e_tr={ix.e_tr} e_red={ix.e_red}\n")
        f.write(f"{ix.n} {ix.k_c}\n")
        for v in range(ix.n):
            chain, pos = ix.label(v)
            f.write(" ".join(map(str, [chain, pos, *ix.row(v)])) + "\n")


def load_index(path: PathLike) -> ReachIndex:
    """
    Read an index written by save_index.

    Raises:
        ParseError: on a malformed line or a wrong number of vertex lines
        InputError: if a label disagrees with its row
    """
    e_tr = e_red = 0
    with open(path, 'r', encoding='utf-8') as f:
        for line in f:
            match = _COUNTS.match(line.strip())
            if match:
                e_tr, e_red = int(match.group(1)), int(match.group(2))
                break

    lines = data_lines(path)
    first = next(lines, None)
    if first is None:
        raise ParseError(f"{path}: missing 'n k_c' header")
    lineno, tokens = first
    n, k_c = parse_ints(tokens, lineno, 2, "header 'n k_c'")

    labels: List[Tuple[int, int]] = []
    rows: List[List[int]] = []
    for lineno, tokens in lines:
        if len(rows) == n:
            raise ParseError(f"more than the {n} vertex lines announced in the header", line=lineno)
        values = parse_ints(tokens, lineno, k_c + 2, f"'chain pos' and {k_c} entries")
        labels.append((values[0], values[1]))
        rows.append(values[2:])
    if len(rows) != n:
        raise ParseError(f"{path}: header announces {n} vertices, found {len(rows)}")
    return ReachIndex.from_rows(labels, rows, k_c=k_c, e_tr=e_tr, e_red=e_red)
