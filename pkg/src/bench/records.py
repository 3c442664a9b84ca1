"""
Benchmark record type and the fixed CSV column layout.
"""
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, Optional


@dataclass
class BenchRecord:
    """
    One row of the benchmark CSV.

    Attributes:
        model, n, avg_degree, seed: the grid cell
        edges: |E| of the generated graph
        k_c: chains found by nh_conc
        width: exact width, only with --with-width
        e_tr, e_red: edge classification of the index build
        tr_ratio: e_tr / (e_tr + e_red)
        e_red_out: edges left after the outgoing reduction pass
        e_red_both: edges left after both reduction passes
        sort_ms, decomp_ms, index_ms: pipeline phases
        total_ms: the pipeline including any reduction done before indexing
        tc_baseline_ms: traversal-based closure on the same graph
        index_phase_ms, bipartite_ms, matching_ms: width phases
        error: exception text when the cell failed
    """
    model: str
    n: int
    avg_degree: float
    seed: int
    edges: Optional[int] = None
    k_c: Optional[int] = None
    width: Optional[int] = None
    e_tr: Optional[int] = None
    e_red: Optional[int] = None
    tr_ratio: Optional[float] = None
    e_red_out: Optional[int] = None
    e_red_both: Optional[int] = None
    sort_ms: Optional[int] = None
    decomp_ms: Optional[int] = None
    index_ms: Optional[int] = None
    total_ms: Optional[int] = None
    tc_baseline_ms: Optional[int] = None
    index_phase_ms: Optional[int] = None
    bipartite_ms: Optional[int] = None
    matching_ms: Optional[int] = None
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def non_timing(self) -> Dict[str, Any]:
        """Columns that depend only on the inputs and the seed."""
        return {key: value for key, value in asdict(self).items() if not key.endswith("_ms")}


COLUMNS = tuple(f.name for f in fields(BenchRecord))
INT_COLUMNS = ("n", "seed", "edges", "k_c", "width", "e_tr", "e_red", "e_red_out", "e_red_both",
               "sort_ms", "decomp_ms", "index_ms", "total_ms", "tc_baseline_ms",
               "index_phase_ms", "bipartite_ms", "matching_ms")
