"""
Chain Reachability Toolkit

This package contains modules for decomposing DAGs into chains, removing
transitive edges, building constant-time reachability indexes and computing
DAG width.
"""

__version__ = "1.0.0"

# Export key constants
DEFAULT_METHOD = "nh_conc"  # Decomposition used by index, closure and width
