"""
Tests for the benchmark harness, CSV output and plot data.
"""
import pandas as pd
import pytest

from src.bench import (
    COLUMNS,
    PLOT_COLUMNS,
    BenchCell,
    BenchGrid,
    BenchOptions,
    BenchRecord,
    emit_plot_data,
    records_to_frame,
    run_bench,
    run_cell,
    write_csv,
)
from src.utils import Config
from src.utils.errors import InputError
from src.validators import SchemaValidator


@pytest.fixture
def single_path_config(fresh_config):
    fresh_config.set("generators.pb_paths", 1)
    return fresh_config


def test_single_path_cell(single_path_config):
    record = run_cell(BenchCell(model="PB", n=50, avg_degree=0.0, seed=42))
    assert record.error is None
    assert record.edges == 49
    assert record.k_c == 1
    assert (record.e_tr, record.e_red) == (0, 49)
    assert record.tr_ratio == 0.0
    assert record.e_red_out == record.e_red_both == 49
    assert record.width is None
    assert record.tc_baseline_ms is not None


def test_cell_with_width(single_path_config):
    record = run_cell(BenchCell(model="PB", n=40, avg_degree=3.0, seed=1),
                      BenchOptions(with_width=True, skip_baseline=True))
    assert record.width == 1
    assert record.tc_baseline_ms is None
    assert record.matching_ms is not None
    assert record.index_phase_ms is not None


def test_cell_counts_are_consistent():
    record = run_cell(BenchCell(model="ER", n=300, avg_degree=5.0, seed=3), BenchOptions(with_width=True))
    assert record.e_tr + record.e_red == record.edges
    assert record.e_red_both <= record.e_red_out <= record.edges
    assert record.width <= record.k_c
    assert record.total_ms >= record.sort_ms + record.decomp_ms + record.index_ms


def test_reduce_first_keeps_the_chain_count():
    cell = BenchCell(model="BA", n=200, avg_degree=4.0, seed=5)
    plain = run_cell(cell)
    reduced = run_cell(cell, BenchOptions(reduce_first=True))
    assert reduced.k_c == plain.k_c
    assert reduced.e_tr + reduced.e_red == plain.e_red_both


def test_same_seed_same_record():
    cell = BenchCell(model="WS", n=200, avg_degree=3.0, seed=9)
    assert run_cell(cell).non_timing() == run_cell(cell).non_timing()


def test_failure_goes_to_error_column(mocker):
    mocker.patch("src.bench.harness.build_index", side_effect=RuntimeError("boom"))
    record = run_cell(BenchCell(model="ER", n=20, avg_degree=2.0, seed=1))
    assert record.error == "RuntimeError: boom"
    assert record.edges is not None
    assert record.k_c is None


def test_invalid_parameters_go_to_error_column():
    record = run_cell(BenchCell(model="BA", n=3, avg_degree=5.0, seed=1))
    assert record.error.startswith("InputError")


class TestGrid:
    """Grid expansion."""

    def test_cells_in_product_order(self):
        grid = BenchGrid(models=("ER", "PB"), sizes=(10,), degrees=(1.0, 2.0), seeds=(1, 2))
        cells = list(grid.cells())
        assert len(cells) == len(grid) == 8
        assert cells[0] == BenchCell(model="ER", n=10, avg_degree=1.0, seed=1)
        assert cells[-1] == BenchCell(model="PB", n=10, avg_degree=2.0, seed=2)

    def test_empty_axis_is_rejected(self):
        with pytest.raises(InputError, match="degrees"):
            BenchGrid(models=("ER",), sizes=(10,), degrees=())

    def test_from_config_counts_seeds(self, fresh_config):
        fresh_config.set("bench.seeds", 2)
        fresh_config.set("generators.seed", 7)
        assert BenchGrid.from_config().seeds == (7, 8)


def test_run_bench_and_csv(tmp_path):
    grid = BenchGrid(models=("ER", "WS"), sizes=(60,), degrees=(2.0,), seeds=(1, 2))
    records = run_bench(grid, progress=False)
    assert len(records) == 4
    assert [r.model for r in records] == ["ER", "ER", "WS", "WS"]

    path = tmp_path / "out" / "bench.csv"
    write_csv(records, path)
    lines = path.read_text().splitlines()
    assert lines[0] == ",".join(COLUMNS)
    assert len(lines) == 5
    frame = pd.read_csv(path)
    assert list(frame.columns) == list(COLUMNS)
    assert frame["width"].isna().all()


def test_parallel_run_matches_serial():
    grid = BenchGrid(models=("PB",), sizes=(80,), degrees=(2.0, 4.0), seeds=(1,))
    serial = [r.non_timing() for r in run_bench(grid, progress=False)]
    parallel = [r.non_timing() for r in run_bench(grid, jobs=2, progress=False)]
    assert parallel == serial


def test_frame_uses_nullable_integers():
    frame = records_to_frame([BenchRecord(model="ER", n=10, avg_degree=1.0, seed=1, k_c=3)])
    assert str(frame["k_c"].dtype) == "Int64"
    assert frame["width"].isna().all()


def test_records_match_schema():
    validator = SchemaValidator()
    record = run_cell(BenchCell(model="BA", n=50, avg_degree=2.0, seed=4), BenchOptions(with_width=True))
    assert validator.validate_bench_record(record.to_dict())
    failed = BenchRecord(model="ER", n=10, avg_degree=1.0, seed=1, error="InputError: bad")
    assert validator.validate_bench_record(failed.to_dict())


def test_schema_rejects_bad_record():
    bad = BenchRecord(model="XX", n=10, avg_degree=1.0, seed=1, tr_ratio=1.5).to_dict()
    errors = SchemaValidator().get_validation_errors(bad, "bench_record")
    assert any(error.startswith("model") for error in errors)
    assert any(error.startswith("tr_ratio") for error in errors)


class TestPlotData:
    """Index against baseline timings per degree."""

    def _record(self, degree, index_ms, tc_ms, error=None):
        return BenchRecord(model="ER", n=100, avg_degree=degree, seed=1,
                           index_ms=index_ms, tc_baseline_ms=tc_ms, error=error)

    def test_mean_per_degree_sorted(self):
        frame = emit_plot_data([
            self._record(10.0, 4, 40),
            self._record(5.0, 1, 10),
            self._record(10.0, 6, 60),
        ])
        assert list(frame.columns) == PLOT_COLUMNS
        assert frame["avg_degree"].tolist() == [5.0, 10.0]
        assert frame["index_ms"].tolist() == [1.0, 5.0]
        assert frame["tc_baseline_ms"].tolist() == [10.0, 50.0]

    def test_single_degree(self):
        frame = emit_plot_data([self._record(5.0, 2, 20)])
        assert len(frame) == 1

    def test_failed_and_incomplete_records_are_dropped(self):
        frame = emit_plot_data([
            self._record(5.0, 2, None),
            self._record(5.0, 2, 20, error="RuntimeError: boom"),
        ])
        assert frame.empty
        assert list(frame.columns) == PLOT_COLUMNS

    def test_empty_input(self):
        assert emit_plot_data([]).empty


class TestGeneratorSettings:
    """Generator settings are fixed when the run starts, not re-read per cell."""

    @pytest.fixture
    def lattice_config(self, fresh_config):
        fresh_config.set("generators.ws_rewire_probability", 0.0)
        return fresh_config

    def test_resolved_options_survive_a_config_reload(self, lattice_config):
        cell = BenchCell(model="WS", n=200, avg_degree=2.0, seed=4)
        options = BenchOptions(skip_baseline=True).resolved()
        assert options.ws_rewire_probability == 0.0
        expected = run_cell(cell, options).non_timing()

        Config.reset()
        assert Config().get("generators.ws_rewire_probability") == 0.9
        assert run_cell(cell, options).non_timing() == expected
        assert run_cell(cell, BenchOptions(skip_baseline=True)).non_timing() != expected

    def test_spawned_workers_match_serial_run(self, lattice_config):
        grid = BenchGrid(models=("WS", "PB"), sizes=(200,), degrees=(2.0,), seeds=(1, 2))
        options = BenchOptions(skip_baseline=True)
        serial = [r.non_timing() for r in run_bench(grid, options, progress=False)]
        spawned = [r.non_timing() for r in
                   run_bench(grid, options, jobs=2, progress=False, start_method="spawn")]
        assert spawned == serial

    def test_explicit_options_win_over_config(self, lattice_config):
        options = BenchOptions(ws_rewire_probability=0.5, pb_paths=3).resolved()
        assert (options.ws_rewire_probability, options.pb_paths) == (0.5, 3)


def test_write_csv_validates_every_record(tmp_path, mocker):
    spy = mocker.spy(SchemaValidator, "validate_bench_record")
    records = [
        BenchRecord(model="ER", n=10, avg_degree=1.0, seed=1, k_c=2),
        BenchRecord(model="XX", n=10, avg_degree=1.0, seed=1),
    ]
    path = tmp_path / "bench.csv"
    write_csv(records, path)
    assert spy.call_count == 2
    assert spy.spy_return is False
    assert pd.read_csv(path)["model"].tolist() == ["ER", "XX"]
