"""
Tests for path heuristics, chain concatenation and NH_conc.
"""
import pytest

from src.core.graph import dag_from_edges
from src.decomposition import (
    METHODS,
    ChainDecomposition,
    chain_order_paths,
    concatenate,
    decompose,
    nh_conc,
    node_order_paths,
    reversed_dfs_lookup,
)
from src.utils.errors import InputError
from src.validators import ChainValidator
from tests.fixtures.oracles import max_antichain_size, tail_reaches_other_head
from tests.fixtures.sample_graphs import antichain_dag, diamond_dag, path_dag, random_dags


class TestChainDecomposition:
    """Labelling and validation of chain decompositions."""

    def test_labels_are_one_based(self):
        dec = ChainDecomposition.from_chains([[2, 0], [1]], 3)
        assert dec.k_c == 2
        assert dec.label(2) == (1, 1)
        assert dec.label(0) == (1, 2)
        assert dec.label(1) == (2, 1)
        assert dec.heads() == [2, 1]
        assert dec.tails() == [0, 1]

    @pytest.mark.parametrize("chains, message", [
        ([[0, 1], [1, 2]], "appears in chains"),
        ([[0, 1]], "not covered"),
        ([[0, 1, 2], []], "empty"),
        ([[0, 1, 5]], "out of range"),
    ])
    def test_invalid_chains_are_rejected(self, chains, message):
        with pytest.raises(InputError, match=message):
            ChainDecomposition.from_chains(chains, 3)


class TestNodeOrderPaths:
    """The node-order path heuristic."""

    def test_path_graph_is_one_path(self):
        assert node_order_paths(path_dag(3)).chains == ((0, 1, 2),)

    def test_isolated_vertices_are_singletons(self):
        assert node_order_paths(antichain_dag(2)).chains == ((0,), (1,))

    def test_diamond(self):
        d = diamond_dag()
        dec = node_order_paths(d)
        assert dec.chains == ((0, 1, 3), (2,))
        assert dec.is_path_decomposition(d)

    def test_random_outputs_are_path_decompositions(self):
        for name, d in random_dags(40, 30, seed=1):
            dec = node_order_paths(d)
            assert ChainValidator(d).validate(dec, paths=True) == [], name


def test_chain_order_paths_are_path_decompositions():
    assert chain_order_paths(diamond_dag()).chains == ((0, 1, 3), (2,))
    for name, d in random_dags(40, 30, seed=2):
        assert ChainValidator(d).validate(chain_order_paths(d), paths=True) == [], name


class TestReversedDfsLookup:
    """Backward search for a chain tail."""

    def test_start_without_predecessors(self):
        d = antichain_dag(1)
        blocked = set()
        result = reversed_dfs_lookup(d, 0, lambda v: False, blocked)
        assert result.path == ()
        assert result.blocked == {0}
        assert blocked == {0}

    def test_finds_immediate_tail(self):
        d = dag_from_edges(3, [(1, 2)])
        result = reversed_dfs_lookup(d, 2, lambda v: v == 1, set())
        assert result.path == (1, 2)
        assert result.blocked == frozenset()

    def test_failed_lookup_blocks_every_ancestor(self):
        d = dag_from_edges(3, [(0, 1), (1, 2), (0, 2)])
        blocked = set()
        result = reversed_dfs_lookup(d, 2, lambda v: False, blocked)
        assert result.path == ()
        assert result.blocked == {0, 1, 2}
        assert blocked == {0, 1, 2}

    def test_path_runs_from_tail_to_start(self):
        # 0 -> 1 -> 3 and 2 -> 3; only 0 is a tail
        d = dag_from_edges(4, [(0, 1), (1, 3), (2, 3)])
        blocked = set()
        result = reversed_dfs_lookup(d, 3, lambda v: v == 0, blocked)
        assert result.path == (0, 1, 3)
        assert not result.blocked & set(result.path)
        assert blocked == set(result.blocked)

    def test_blocked_vertices_are_not_expanded(self):
        d = dag_from_edges(3, [(0, 1), (1, 2)])
        result = reversed_dfs_lookup(d, 2, lambda v: v == 0, {1})
        assert result.path == ()


class TestConcatenate:
    """Chain concatenation by reversed lookups."""

    def test_two_paths_join(self):
        d = dag_from_edges(4, [(0, 1), (1, 2), (2, 3)])
        paths = ChainDecomposition.from_chains([[0, 1], [2, 3]], 4)
        dec, stats = concatenate(d, paths)
        assert dec.chains == ((0, 1, 2, 3),)
        assert (stats.k_p, stats.k_c, stats.c, stats.total_path_len) == (2, 1, 1, 1)

    def test_concatenation_free_input_is_unchanged(self):
        d = antichain_dag(3)
        paths = node_order_paths(d)
        dec, stats = concatenate(d, paths)
        assert dec.chains == paths.chains
        assert stats.c == 0

    def test_consecutive_joins(self):
        # every path head is an immediate successor of the previous tail
        d = dag_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        paths = ChainDecomposition.from_chains([[0, 1], [2], [3, 4]], 5)
        dec, stats = concatenate(d, paths)
        assert dec.k_c == 1
        assert stats.c == stats.k_p - stats.k_c == 2

    def test_random_results_are_valid_and_concatenation_free(self):
        for name, d in random_dags(60, 15, seed=3):
            dec, stats = concatenate(d, node_order_paths(d))
            assert ChainValidator(d).validate(dec) == [], name
            assert stats.c == stats.k_p - stats.k_c
            assert tail_reaches_other_head(d, dec.chains) == [], name


class TestNhConc:
    """NH_conc: node order with online lookups and greedy successors."""

    def test_path_graph_is_one_chain(self):
        dec, stats = nh_conc(path_dag(6))
        assert dec.k_c == 1
        assert stats.c == 0

    def test_prefers_lowest_outdegree_predecessor(self):
        # 2 has tail predecessors 0 (out-degree 2) and 1 (out-degree 1)
        d = dag_from_edges(5, [(0, 2), (0, 3), (1, 2), (4, 3)])
        dec, _ = nh_conc(d)
        assert dec.chain_of[2] == dec.chain_of[1]
        assert dec.chain_of[3] == dec.chain_of[4]

    def test_greedy_successor_and_lookup(self):
        # 3 is appended to [0, 2] greedily; 4 then reaches tail 1 through 2
        d = dag_from_edges(5, [(0, 2), (1, 2), (2, 3), (2, 4)])
        dec, stats = nh_conc(d)
        assert dec.chains == ((0, 2, 3), (1, 4))
        assert (stats.k_p, stats.k_c, stats.c, stats.total_path_len) == (3, 2, 1, 2)
        assert ChainValidator(d).validate(dec) == []

    def test_tie_on_outdegree_goes_to_lowest_id(self):
        d = dag_from_edges(4, [(0, 1), (2, 1), (1, 3)])
        dec, stats = nh_conc(d)
        assert dec.chains == ((0, 1, 3), (2,))
        assert stats.c == 0

    def test_random_results_are_valid(self):
        for name, d in random_dags(80, 15, seed=4):
            dec, stats = nh_conc(d)
            assert ChainValidator(d).validate(dec) == [], name
            assert dec.k_c >= max_antichain_size(d), name
            assert stats.k_p == stats.k_c + stats.c

    def test_deterministic(self):
        for _, d in random_dags(10, 40, seed=5):
            assert nh_conc(d) == nh_conc(d)


@pytest.mark.parametrize("method", METHODS)
def test_decompose_dispatch(method):
    for name, d in random_dags(12, 25, seed=6):
        dec, stats = decompose(d, method)
        assert ChainValidator(d).validate(dec, paths=method in ("node_order", "chain_order")) == [], name
        assert (stats is None) == (method in ("node_order", "chain_order"))


def test_decompose_rejects_unknown_method():
    with pytest.raises(InputError, match="unknown decomposition method"):
        decompose(path_dag(2), "optimal")


def test_concatenation_never_increases_chain_count():
    for _, d in random_dags(30, 40, seed=7):
        paths = node_order_paths(d)
        dec, _ = concatenate(d, paths)
        assert dec.k_c <= paths.k_c
