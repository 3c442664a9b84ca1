"""
Benchmark harness: runtime and edge-classification records over a generator grid.
"""

from .harness import BenchCell, BenchGrid, BenchOptions, records_to_frame, run_bench, run_cell, write_csv
from .plot_data import PLOT_COLUMNS, emit_plot_data
from .records import COLUMNS, BenchRecord

__all__ = [
    'BenchCell',
    'BenchGrid',
    'BenchOptions',
    'BenchRecord',
    'COLUMNS',
    'PLOT_COLUMNS',
    'emit_plot_data',
    'records_to_frame',
    'run_bench',
    'run_cell',
    'write_csv',
]
