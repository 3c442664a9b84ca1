"""
Index build time against traversal closure time, keyed by average degree.
"""
from typing import Iterable

import pandas as pd

from .records import BenchRecord

PLOT_COLUMNS = ["avg_degree", "index_ms", "tc_baseline_ms"]


def emit_plot_data(records: Iterable[BenchRecord]) -> pd.DataFrame:
    """
    Two series, index_ms and tc_baseline_ms, averaged over seeds per degree.

    Records that failed or lack either timing are left out. The frame is
    sorted by avg_degree and empty when no record qualifies.
    """
    rows = [
        {"avg_degree": r.avg_degree, "index_ms": r.index_ms, "tc_baseline_ms": r.tc_baseline_ms}
        for r in records
        if r.error is None and r.index_ms is not None and r.tc_baseline_ms is not None
    ]
    if not rows:
        return pd.DataFrame(columns=PLOT_COLUMNS)
    frame = pd.DataFrame(rows, columns=PLOT_COLUMNS)
    return frame.groupby("avg_degree", as_index=False).mean().sort_values("avg_degree").reset_index(drop=True)
