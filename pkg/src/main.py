#!/usr/bin/env python3
"""
Chain Reachability Toolkit

Command-line entry point. Every subcommand reads and writes the flat file
formats in src.formats; results go to stdout, logs to stderr.
"""
import logging
import sys
from contextlib import contextmanager
from typing import Iterator, List, Optional, Sequence

import click
import numpy as np

from src import DEFAULT_METHOD, __version__
from src.bench import BenchGrid, BenchOptions, emit_plot_data, run_bench, write_csv
from src.core import condense_sccs, transitive_closure_baseline
from src.decomposition import METHODS, decompose
from src.formats import (
    load_chains,
    load_edge_list,
    load_index,
    read_digraph,
    save_chains,
    save_edge_list,
    save_index,
)
from src.generators import MODELS, GeneratorConfig, generate
from src.reachability import build_index, fulkerson_width, query, reduce, reduce_outgoing, to_closure_matrix
from src.utils import ChainReachError, Config, PhaseTimer, setup_logger


class StageError(click.ClickException):
    """A pipeline failure, reported as `error [<stage>]: <detail>` with exit status 1."""

    exit_code = 1

    def __init__(self, stage: str, message: str):
        super().__init__(message)
        self.stage = stage

    def show(self, file=None) -> None:
        click.echo(f"error [{self.stage}]: {self.message}", err=True)


@contextmanager
def stage(name: str) -> Iterator[None]:
    """Map toolkit and file errors raised inside the block to a StageError."""
    try:
        yield
    except (ChainReachError, OSError) as e:
        logging.getLogger(__name__).debug(f"Stage {name} failed", exc_info=True)
        raise StageError(name, str(e)) from e


def _print_csv(header: Sequence[str], values: Sequence) -> None:
    click.echo(",".join(header))
    click.echo(",".join(str(value) for value in values))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="Path to configuration file (default: config.yaml at the project root)")
@click.option("--debug", is_flag=True, help="Enable debug logging")
@click.version_option(__version__, prog_name="chainreach")
def cli(config_path: Optional[str], debug: bool) -> None:
    """Chain decompositions, reachability indexes and DAG width."""
    if config_path is not None:
        Config.reset()
    config = Config(config_path)
    if debug:
        config.set("logging.level", "DEBUG")
    setup_logger("src")


@cli.command()
@click.option("--model", type=click.Choice(MODELS, case_sensitive=False), required=True)
@click.option("--n", "n", type=int, required=True, help="Number of vertices")
@click.option("--degree", type=float, default=None, help="Average degree |E|/n; sets the model parameters")
@click.option("--p", "p", type=float, default=None, help="ER edge probability")
@click.option("--m", "m", type=int, default=None, help="BA attachments per vertex")
@click.option("--k", "k", type=int, default=None, help="WS ring neighbours (even)")
@click.option("--b", "b", type=float, default=None,
              help="WS rewiring probability")
@click.option("--paths", type=int, default=None, help="PB path count")
@click.option("--seed", type=int, default=None, help="Random seed (default generators.seed)")
@click.option("-o", "--output", type=click.Path(dir_okay=False), required=True)
def gen(model: str, n: int, degree: Optional[float], p: Optional[float], m: Optional[int],
        k: Optional[int], b: Optional[float], paths: Optional[int], seed: Optional[int], output: str) -> None:
    """Generate a random DAG and write it as an edge list."""
    config = Config()
    if seed is None:
        seed = config.get("generators.seed", 42)
    with stage("generate"):
        if degree is not None:
            gc = GeneratorConfig.for_degree(model, n, degree, seed=seed, b=b, paths=paths)
        elif model == "ER":
            gc = GeneratorConfig(model=model, n=n, seed=seed, p=p)
        elif model == "BA":
            gc = GeneratorConfig(model=model, n=n, seed=seed,
                                 m=m if m is not None else config.get("generators.ba_attachments", 5))
        elif model == "WS":
            gc = GeneratorConfig(model=model, n=n, seed=seed, k=k,
                                 b=b if b is not None else config.get("generators.ws_rewire_probability", 0.9))
        else:
            gc = GeneratorConfig(model=model, n=n, seed=seed,
                                 paths=paths if paths is not None else min(n, config.get("generators.pb_paths", 100)),
                                 avg_degree=0.0)
        dag = generate(gc)
    with stage("write"):
        save_edge_list(output, dag, comments=[f"generator: {gc.describe()}"])
    click.echo(f"n={dag.n} m={dag.edge_count}")


@cli.command(name="decompose")
@click.option("-i", "--input", "input_path", type=click.Path(dir_okay=False), required=True)
@click.option("--method", type=click.Choice(METHODS), default=DEFAULT_METHOD, show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None,
              help="Chain file to write (default: print chains)")
def decompose_cmd(input_path: str, method: str, output: Optional[str]) -> None:
    """Compute a path or chain decomposition."""
    with stage("load"):
        dag = load_edge_list(input_path)
    timer = PhaseTimer()
    with stage("decompose"), timer.phase("decompose"):
        dec, stats = decompose(dag, method)
    if output is not None:
        with stage("write"):
            save_chains(output, dec)
    else:
        for chain in dec.chains:
            click.echo(" ".join(map(str, chain)))
    summary = f"k_c={dec.k_c} decomp_ms={timer.ms('decompose')}"
    if stats is not None:
        summary += f" k_p={stats.k_p} c={stats.c} path_len={stats.total_path_len}"
    click.echo(summary)


@cli.command(name="reduce")
@click.option("-i", "--input", "input_path", type=click.Path(dir_okay=False), required=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), required=True)
@click.option("--method", type=click.Choice(METHODS), default=DEFAULT_METHOD, show_default=True,
              help="Decomposition driving the reduction")
@click.option("--outgoing-only", is_flag=True, help="Skip the incoming pass")
def reduce_cmd(input_path: str, output: str, method: str, outgoing_only: bool) -> None:
    """Remove chain-detectable transitive edges."""
    with stage("load"):
        dag = load_edge_list(input_path)
    with stage("decompose"):
        dec, _ = decompose(dag, method)
    with stage("reduce"):
        reduced, stats = (reduce_outgoing if outgoing_only else reduce)(dag, dec)
    with stage("write"):
        save_edge_list(output, reduced)
    _print_csv(("removed_out", "removed_in", "remaining", "edge_visits"),
               (stats.removed_out, stats.removed_in, stats.remaining, stats.edge_visits))


@cli.command(name="index")
@click.option("-i", "--input", "input_path", type=click.Path(dir_okay=False), required=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), required=True)
@click.option("--chains", "chains_path", type=click.Path(dir_okay=False), default=None,
              help="Chain file to index with (default: nh_conc)")
@click.option("--reduce-first", is_flag=True, help="Index the reduced graph")
def index_cmd(input_path: str, output: str, chains_path: Optional[str], reduce_first: bool) -> None:
    """Build the reachability index of an edge list."""
    with stage("load"):
        dag = load_edge_list(input_path)
        dec = load_chains(chains_path, dag.n) if chains_path else None
    if dec is None:
        with stage("decompose"):
            dec, _ = decompose(dag, DEFAULT_METHOD)
    if reduce_first:
        with stage("reduce"):
            dag, _ = reduce(dag, dec)
    with stage("index"):
        ix = build_index(dag, dec)
    with stage("write"):
        save_index(output, ix)
    click.echo(f"k_c={ix.k_c} e_tr={ix.e_tr} e_red={ix.e_red}")


@cli.command(name="query")
@click.option("-i", "--input", "input_path", type=click.Path(dir_okay=False), required=True,
              help="Index file")
@click.argument("source", type=int)
@click.argument("target", type=int)
def query_cmd(input_path: str, source: int, target: int) -> None:
    """Print whether TARGET is reachable from SOURCE."""
    with stage("load"):
        ix = load_index(input_path)
    with stage("query"):
        reachable = query(ix, source, target)
    click.echo("true" if reachable else "false")


@cli.command()
@click.option("-i", "--input", "input_path", type=click.Path(dir_okay=False), required=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None,
              help="Write the matrix as rows of 0/1 digits")
@click.option("--baseline", is_flag=True, help="Use the traversal closure instead of the index")
def closure(input_path: str, output: Optional[str], baseline: bool) -> None:
    """Compute the reflexive transitive closure matrix."""
    with stage("load"):
        dag = load_edge_list(input_path)
    timer = PhaseTimer()
    with stage("index"), timer.phase("closure"):
        if baseline:
            matrix = transitive_closure_baseline(dag).to_matrix()
        else:
            dec, _ = decompose(dag, DEFAULT_METHOD)
            matrix = to_closure_matrix(build_index(dag, dec))
    if output is not None:
        with stage("write"):
            np.savetxt(output, matrix.astype(np.uint8), fmt="%d", delimiter="")
    click.echo(f"pairs={int(matrix.sum())} closure_ms={timer.ms('closure')}")


@cli.command()
@click.option("-i", "--input", "input_path", type=click.Path(dir_okay=False), required=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None,
              help="Chain file for the minimum decomposition")
@click.option("--workers", type=int, default=None, help="Threads for the bipartite rows")
def width(input_path: str, output: Optional[str], workers: Optional[int]) -> None:
    """Compute the width and a minimum chain decomposition."""
    if workers is None:
        workers = Config().get("width.workers", 1)
    with stage("load"):
        dag = load_edge_list(input_path)
    with stage("width"):
        result = fulkerson_width(dag, workers=workers)
    if output is not None:
        with stage("write"):
            save_chains(output, result.chains)
    click.echo(f"width={result.width}")
    columns = ("index_ms", "bipartite_ms", "matching_ms", "total_ms")
    _print_csv(columns, [result.timings[c] for c in columns])


@cli.command()
@click.option("--model", "models", type=click.Choice(MODELS, case_sensitive=False), multiple=True,
              help="Model to include (repeatable, default bench.models)")
@click.option("--n", "sizes", type=int, multiple=True, help="Vertex count (repeatable)")
@click.option("--degree", "degrees", type=float, multiple=True, help="Average degree (repeatable)")
@click.option("--seed", type=int, default=None, help="First seed (default generators.seed)")
@click.option("--seeds", type=int, default=None, help="Seeds per cell (default bench.seeds)")
@click.option("--b", "b", type=float, default=None,
              help="WS rewiring probability (default generators.ws_rewire_probability)")
@click.option("--paths", type=int, default=None, help="PB path count (default generators.pb_paths)")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None)
@click.option("--plot-data", "plot_path", type=click.Path(dir_okay=False), default=None,
              help="Also write index_ms and tc_baseline_ms per degree")
@click.option("--with-width", is_flag=True, help="Also compute the exact width")
@click.option("--reduce-first", is_flag=True, help="Index the reduced graph")
@click.option("--skip-baseline", is_flag=True, help="Do not time the traversal closure")
@click.option("--jobs", type=int, default=None, help="Worker processes")
@click.option("--no-progress", is_flag=True)
def bench(models: Sequence[str], sizes: Sequence[int], degrees: Sequence[float], seed: Optional[int],
          seeds: Optional[int], b: Optional[float], paths: Optional[int], csv_path: Optional[str],
          plot_path: Optional[str], with_width: bool, reduce_first: bool, skip_baseline: bool,
          jobs: Optional[int], no_progress: bool) -> None:
    """Run the benchmark grid and write one CSV row per cell."""
    config = Config()
    overrides = {
        "bench.models": list(models) or None,
        "bench.sizes": list(sizes) or None,
        "bench.degrees": list(degrees) or None,
        "bench.seeds": seeds,
        "bench.csv": csv_path,
        "bench.plot_data": plot_path,
        "bench.with_width": with_width or None,
        "bench.reduce_first": reduce_first or None,
        "bench.skip_baseline": skip_baseline or None,
        "bench.jobs": jobs,
        "generators.seed": seed,
        "generators.ws_rewire_probability": b,
        "generators.pb_paths": paths,
    }
    for key, value in overrides.items():
        if value is not None:
            config.set(key, value)

    with stage("bench"):
        grid = BenchGrid.from_config(config)
        options = BenchOptions(with_width=config.get("bench.with_width", False),
                               reduce_first=config.get("bench.reduce_first", False),
                               skip_baseline=config.get("bench.skip_baseline", False),
                               width_workers=config.get("width.workers", 1)).resolved(config)
        records = run_bench(grid, options, jobs=config.get("bench.jobs", 1), progress=not no_progress)
    with stage("write"):
        frame = write_csv(records, config.get("bench.csv"))
        if config.get("bench.plot_data"):
            emit_plot_data(records).to_csv(config.get("bench.plot_data"), index=False)
    failed = int(frame["error"].notna().sum())
    click.echo(f"rows={len(frame)} failed={failed} csv={config.get('bench.csv')}")


@cli.command()
@click.option("-i", "--input", "input_path", type=click.Path(dir_okay=False), required=True,
              help="Edge list, cycles allowed")
@click.option("-o", "--output", type=click.Path(dir_okay=False), required=True)
@click.option("--components", "components_path", type=click.Path(dir_okay=False), default=None,
              help="Write the component id of every vertex, one per line")
def condense(input_path: str, output: str, components_path: Optional[str]) -> None:
    """Collapse strongly connected components into a DAG."""
    with stage("load"):
        g = read_digraph(input_path)
    result = condense_sccs(g)
    with stage("write"):
        save_edge_list(output, result.dag, comments=[f"condensation of {input_path} (n={g.n})"])
        if components_path:
            with open(components_path, "w", encoding="utf-8") as f:
                f.writelines(f"{c}\n" for c in result.component_of)
    click.echo(f"components={result.component_count} m={result.dag.edge_count}")


@cli.command()
@click.option("-i", "--input", "input_path", type=click.Path(dir_okay=False), required=True)
@click.option("--with-width/--no-width", default=True, show_default=True)
def compare(input_path: str, with_width: bool) -> None:
    """Chain counts of every decomposition method, next to the width."""
    with stage("load"):
        dag = load_edge_list(input_path)
    rows: List[Sequence] = []
    with stage("decompose"):
        for method in METHODS:
            timer = PhaseTimer()
            with timer.phase(method):
                dec, _ = decompose(dag, method)
            rows.append((method, dec.k_c, timer.ms(method)))
    if with_width:
        with stage("width"):
            result = fulkerson_width(dag, workers=Config().get("width.workers", 1))
        rows.append(("width", result.width, result.timings["total_ms"]))
    click.echo("method,chains,ms")
    for row in rows:
        click.echo(",".join(map(str, row)))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the application."""
    try:
        result = cli.main(args=list(argv) if argv is not None else None,
                          prog_name="chainreach", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(main())
