"""
Tests for the edge-list, chain and index file formats.
"""
import pytest

from src.decomposition import ChainDecomposition, nh_conc
from src.formats import (
    load_chains,
    load_edge_list,
    load_index,
    read_digraph,
    save_chains,
    save_edge_list,
    save_index,
)
from src.reachability import build_index, query
from src.utils.errors import CycleError, InputError, ParseError
from tests.fixtures.sample_graphs import SAMPLE_CHAINS, SAMPLE_N, edge_set, sample_dag, random_dags


@pytest.fixture
def write(tmp_path):
    def _write(text, name="graph.txt"):
        path = tmp_path / name
        path.write_text(text)
        return path
    return _write


def test_reads_small_edge_list(write):
    d = load_edge_list(write("3 2\n0 1\n1 2\n"))
    assert d.n == 3
    assert edge_set(d) == [(0, 1), (1, 2)]


def test_comments_and_blank_lines_are_skipped(write):
    d = load_edge_list(write("# generator: test\n\n3 1\n# an edge\n2 0\n\n"))
    assert edge_set(d) == [(2, 0)]


def test_too_many_edge_lines(write):
    with pytest.raises(ParseError, match="line 4") as info:
        load_edge_list(write("3 2\n0 1\n1 2\n0 2\n"))
    assert info.value.line == 4


def test_too_few_edge_lines(write):
    with pytest.raises(ParseError, match="announces 2 edges, found 1"):
        load_edge_list(write("3 2\n0 1\n"))


@pytest.mark.parametrize("text, line", [
    ("3\n", 1),
    ("3 x\n", 1),
    ("3 1\n0 1 2\n", 2),
    ("3 1\n0 -1\n", 2),
    ("3 1\n0 one\n", 2),
])
def test_malformed_lines(write, text, line):
    with pytest.raises(ParseError) as info:
        load_edge_list(write(text))
    assert info.value.line == line


def test_missing_header(write):
    with pytest.raises(ParseError, match="missing"):
        load_edge_list(write("# only a comment\n"))


def test_out_of_range_endpoint_names_the_line(write):
    with pytest.raises(InputError, match="line 3"):
        load_edge_list(write("2 2\n0 1\n0 2\n"))


def test_cycle_is_reported(write):
    path = write("3 3\n0 1\n1 2\n2 0\n")
    assert read_digraph(path).edge_count == 3
    with pytest.raises(CycleError):
        load_edge_list(path)


def test_edge_list_round_trip(tmp_path):
    for name, d in random_dags(10, 40, seed=61):
        path = tmp_path / "nested" / f"{name}.txt"
        save_edge_list(path, d, comments=[f"graph {name}"])
        assert path.read_text().startswith(f"# graph {name}\n{d.n} {d.edge_count}\n")
        assert edge_set(load_edge_list(path)) == edge_set(d)


def test_chain_file_round_trip(tmp_path):
    dec = ChainDecomposition.from_chains(SAMPLE_CHAINS, SAMPLE_N)
    path = tmp_path / "chains.txt"
    save_chains(path, dec)
    assert path.read_text().splitlines()[0] == "1 2 3"
    assert load_chains(path) == dec
    assert load_chains(path, n=SAMPLE_N) == dec


def test_chain_file_must_cover_every_vertex(write):
    with pytest.raises(InputError, match="not covered"):
        load_chains(write("0 1\n", "chains.txt"), n=3)


def test_index_file_round_trip(tmp_path):
    d = sample_dag()
    dec, _ = nh_conc(d)
    ix = build_index(d, dec)
    path = tmp_path / "index.txt"
    save_index(path, ix)
    lines = path.read_text().splitlines()
    assert lines[0] == f"# e_tr={ix.e_tr} e_red={ix.e_red}"
    assert lines[1] == f"{SAMPLE_N} {ix.k_c}"

    again = load_index(path)
    assert (again.e_tr, again.e_red) == (ix.e_tr, ix.e_red)
    assert all(query(again, s, t) == query(ix, s, t) for s in range(SAMPLE_N) for t in range(SAMPLE_N))


def test_sample_index_line(tmp_path):
    ix = build_index(sample_dag(), ChainDecomposition.from_chains(SAMPLE_CHAINS, SAMPLE_N))
    path = tmp_path / "index.txt"
    save_index(path, ix)
    # header comment, "n k_c", then vertices 0 and 1
    assert path.read_text().splitlines()[3] == "1 1 1 2 2"


def test_index_file_with_wrong_row_count(write):
    with pytest.raises(ParseError, match="announces 2 vertices"):
        load_index(write("2 1\n1 1 1\n", "index.txt"))


def test_index_file_with_short_row(write):
    with pytest.raises(ParseError) as info:
        load_index(write("1 2\n1 1 1\n", "index.txt"))
    assert info.value.line == 2


def test_empty_index_file(tmp_path, write):
    d = load_edge_list(write("0 0\n"))
    dec, _ = nh_conc(d)
    path = tmp_path / "index.txt"
    save_index(path, build_index(d, dec))
    assert load_index(path).n == 0
