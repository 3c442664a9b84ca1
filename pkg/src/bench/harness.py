"""
Benchmark harness: generate, decompose, index and time every grid cell.
"""
import itertools
import logging
import multiprocessing
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Sequence, Union

import pandas as pd
from tqdm import tqdm

from ..core.closure import transitive_closure_baseline
from ..core.graph import sort_adjacency_lists
from ..decomposition.nh_conc import nh_conc
from ..generators import GeneratorConfig, generate
from ..reachability.index import build_index
from ..reachability.reduction import reduce, reduce_outgoing
from ..reachability.width import fulkerson_width
from ..utils import Config, InputError, PhaseTimer
from ..validators.schema_validator import SchemaValidator
from .records import COLUMNS, INT_COLUMNS, BenchRecord

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchCell:
    model: str
    n: int
    avg_degree: float
    seed: int


@dataclass(frozen=True)
class BenchOptions:
    """
    Attributes:
        with_width: also run the exact width computation
        reduce_first: index the reduced graph instead of the input
        skip_baseline: leave tc_baseline_ms empty
        width_workers: threads for the bipartite rows
        ws_rewire_probability: WS b; generators.ws_rewire_probability when None
        pb_paths: PB path count, capped at n; generators.pb_paths when None
    """
    with_width: bool = False
    reduce_first: bool = False
    skip_baseline: bool = False
    width_workers: int = 1
    ws_rewire_probability: Optional[float] = None
    pb_paths: Optional[int] = None

    def resolved(self, config: Optional[Config] = None) -> "BenchOptions":
        """Copy with the generator settings filled in from the configuration."""
        config = config if config is not None else Config()
        return replace(
            self,
            ws_rewire_probability=(self.ws_rewire_probability if self.ws_rewire_probability is not None
                                   else config.get("generators.ws_rewire_probability", 0.9)),
            pb_paths=self.pb_paths if self.pb_paths is not None else config.get("generators.pb_paths", 100),
        )


@dataclass(frozen=True)
class BenchGrid:
    models: Sequence[str]
    sizes: Sequence[int]
    degrees: Sequence[float]
    seeds: Sequence[int] = field(default_factory=lambda: (42,))

    def __post_init__(self) -> None:
        for name in ("models", "sizes", "degrees", "seeds"):
            if not getattr(self, name):
                raise InputError(f"benchmark grid needs at least one value for {name}")

    def cells(self) -> Iterator[BenchCell]:
        for model, n, degree, seed in itertools.product(self.models, self.sizes, self.degrees, self.seeds):
            yield BenchCell(model=model, n=n, avg_degree=degree, seed=seed)

    def __len__(self) -> int:
        return len(self.models) * len(self.sizes) * len(self.degrees) * len(self.seeds)

    @classmethod
    def from_config(cls, config: Optional[Config] = None) -> "BenchGrid":
        """Grid from the bench section; `bench.seeds` counts seeds from generators.seed."""
        config = config if config is not None else Config()
        base = config.get("generators.seed", 42)
        return cls(models=tuple(config.get("bench.models", ["ER"])),
                   sizes=tuple(config.get("bench.sizes", [2000])),
                   degrees=tuple(config.get("bench.degrees", [10])),
                   seeds=tuple(base + i for i in range(config.get("bench.seeds", 1))))


def run_cell(cell: BenchCell, options: BenchOptions = BenchOptions()) -> BenchRecord:
    """
    Benchmark one cell. Failures are reported in the error column, never raised.
    """
    options = options.resolved()
    record = BenchRecord(model=cell.model, n=cell.n, avg_degree=cell.avg_degree, seed=cell.seed)
    try:
        dag = generate(GeneratorConfig.for_degree(cell.model, cell.n, cell.avg_degree, seed=cell.seed,
                                                  b=options.ws_rewire_probability,
                                                  paths=min(cell.n, options.pb_paths)))
        record.edges = dag.edge_count
        timer = PhaseTimer()
        with timer.phase("total"):
            with timer.phase("sort"):
                dag = sort_adjacency_lists(dag)
            with timer.phase("decomp"):
                dec, _ = nh_conc(dag)
            indexed = dag
            if options.reduce_first:
                with timer.phase("reduce"):
                    indexed, _ = reduce(dag, dec)
            with timer.phase("index"):
                ix = build_index(indexed, dec)

        record.k_c = dec.k_c
        record.e_tr, record.e_red = ix.e_tr, ix.e_red
        classified = ix.e_tr + ix.e_red
        record.tr_ratio = ix.e_tr / classified if classified else 0.0
        record.e_red_out = reduce_outgoing(dag, dec)[1].remaining
        record.e_red_both = reduce(dag, dec)[1].remaining
        record.sort_ms = timer.ms("sort")
        record.decomp_ms = timer.ms("decomp")
        record.index_ms = timer.ms("index")
        record.total_ms = timer.ms("total")

        if not options.skip_baseline:
            with timer.phase("baseline"):
                transitive_closure_baseline(dag)
            record.tc_baseline_ms = timer.ms("baseline")

        if options.with_width:
            result = fulkerson_width(dag, workers=options.width_workers)
            record.width = result.width
            record.index_phase_ms = result.timings["index_ms"]
            record.bipartite_ms = result.timings["bipartite_ms"]
            record.matching_ms = result.timings["matching_ms"]
    except Exception as e:
        logger.error(f"Benchmark cell {cell} failed: {e}")
        record.error = f"{type(e).__name__}: {e}"
    return record


def _run_cell_args(args) -> BenchRecord:
    return run_cell(*args)


def run_bench(grid: BenchGrid, options: BenchOptions = BenchOptions(), jobs: int = 1,
              progress: bool = True, start_method: Optional[str] = None) -> List[BenchRecord]:
    """
    Run every cell of the grid and return the records in grid order.

    Args:
        grid: models x sizes x degrees x seeds
        options: pipeline switches
        jobs: worker processes, cells are independent
        progress: show a tqdm progress bar
        start_method: multiprocessing start method, the platform default when None

    Returns:
        One BenchRecord per cell
    """
    # workers may not share this process's Config, so settings travel with the options
    options = options.resolved()
    cells = list(grid.cells())
    logger.info(f"Running {len(cells)} benchmark cells with {jobs} job(s)")
    args = [(cell, options) for cell in cells]
    bar = dict(total=len(cells), desc="bench", unit="cell", disable=not progress)
    if jobs > 1:
        with multiprocessing.get_context(start_method).Pool(processes=jobs) as pool:
            records = list(tqdm(pool.imap(_run_cell_args, args), **bar))
    else:
        records = [run_cell(cell, options) for cell, options in tqdm(args, **bar)]

    failed = sum(1 for record in records if record.error)
    logger.info(f"Benchmark finished: {len(records) - failed} ok, {failed} failed")
    return records


def records_to_frame(records: Iterable[BenchRecord]) -> pd.DataFrame:
    """DataFrame with exactly the CSV columns, in order."""
    frame = pd.DataFrame([record.to_dict() for record in records], columns=list(COLUMNS))
    # nullable integers keep "5" from turning into "5.0" next to empty cells
    return frame.astype({column: "Int64" for column in INT_COLUMNS})


def write_csv(records: Iterable[BenchRecord], path: Union[str, Path]) -> pd.DataFrame:
    """
    Validate every record against the bench_record schema, then write the CSV.

    Invalid records are logged and still written.
    """
    records = list(records)
    validator = SchemaValidator()
    invalid = sum(1 for record in records if not validator.validate_bench_record(record.to_dict()))
    if invalid:
        logger.warning(f"{invalid} benchmark record(s) do not match the schema")
    frame = records_to_frame(records)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False)
    logger.info(f"Wrote {len(frame)} benchmark rows to {path}")
    return frame
