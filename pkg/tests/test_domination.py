from __future__ import annotations

import pytest

from splitdom.domination import (
    dominating_check,
    find_dominating_split,
    is_deletion_minimal,
    proof_guided_reduce,
    validate_domination_certificate,
)
from splitdom.errors import BudgetExceededError, GraphInputError, PreconditionError
from splitdom.graphs import Graph
from splitdom.patterns import catalog_lookup, star


class TestDominatingCheck:
    def test_edge_dominates_c4(self):
        assert dominating_check(catalog_lookup("c4"), (0, 1))

    def test_single_vertex_misses_c6(self):
        assert not dominating_check(catalog_lookup("c6"), (0,))

    def test_star_center(self):
        assert dominating_check(star(5), (0,))

    def test_matches_definition_exhaustively(self, graphs_exactly):
        from itertools import combinations

        for g in graphs_exactly(5):
            for size in range(1, g.n + 1):
                for combo in combinations(range(g.n), size):
                    expected = all(
                        v in combo or any(u in combo for u in g.neighbors(v))
                        for v in range(g.n)
                    )
                    assert dominating_check(g, combo) == expected


class TestExhaustiveSearch:
    def test_c4_dominated_by_an_edge(self):
        cert = find_dominating_split(catalog_lookup("c4"))
        assert cert.vertices == (0, 1)
        assert validate_domination_certificate(catalog_lookup("c4"), cert)

    def test_p7_admits_none(self):
        assert find_dominating_split(catalog_lookup("p7")) is None

    def test_c6_admits_no_complete_split(self):
        assert find_dominating_split(catalog_lookup("c6"), "complete-split") is None

    def test_c5_minimum_is_three(self):
        cert = find_dominating_split(catalog_lookup("c5"))
        assert len(cert.vertices) == 3
        sub_edges = [
            (u, v) for u in cert.vertices for v in cert.vertices
            if u < v and catalog_lookup("c5").has_edge(u, v)
        ]
        assert len(sub_edges) == 2  # a three-vertex path

    def test_k1(self):
        cert = find_dominating_split(catalog_lookup("k1"))
        assert cert.vertices == (0,)

    def test_rejects_disconnected(self):
        with pytest.raises(PreconditionError, match="connected"):
            find_dominating_split(catalog_lookup("2k2"))

    def test_rejects_oversized(self):
        path17 = Graph(17, [(i, i + 1) for i in range(16)])
        with pytest.raises(BudgetExceededError, match="caps"):
            find_dominating_split(path17)

    def test_rejects_unknown_kind(self):
        with pytest.raises(GraphInputError, match="kind"):
            find_dominating_split(catalog_lookup("k1"), "giant")

    def test_certificates_are_minimum_size(self, small_connected):
        from itertools import combinations

        from splitdom.graphs import induced_subgraph, mask_is_connected, mask_of
        from splitdom.recognition import split_partition

        for g in small_connected(5):
            cert = find_dominating_split(g)
            if cert is None:
                continue
            k = len(cert.vertices)
            for size in range(1, k):
                for combo in combinations(range(g.n), size):
                    if not dominating_check(g, combo):
                        continue
                    if not mask_is_connected(g.rows(), mask_of(combo)):
                        continue
                    sub, _ = induced_subgraph(g, combo)
                    assert split_partition(sub) is None


class TestProofGuidedReduce:
    def test_square_with_three_pendants(self):
        g = Graph(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (5, 1), (6, 2)],
        )
        cert = proof_guided_reduce(g)
        assert cert is not None
        assert cert.vertices == (0, 1, 2)
        assert validate_domination_certificate(g, cert)

    def test_pentagon_reduces_to_short_path(self):
        cert = proof_guided_reduce(catalog_lookup("c5"))
        assert cert is not None and len(cert.vertices) <= 3
        assert validate_domination_certificate(catalog_lookup("c5"), cert)

    def test_single_vertex(self):
        cert = proof_guided_reduce(catalog_lookup("k1"))
        assert cert is not None and cert.vertices == (0,)

    def test_rejects_disconnected(self):
        with pytest.raises(PreconditionError, match="connected"):
            proof_guided_reduce(catalog_lookup("2k2"))

    def test_agreement_with_exhaustive_oracle(self, small_connected):
        for g in small_connected(6):
            for kind in ("split", "complete-split"):
                reduced = proof_guided_reduce(g, kind)
                exact = find_dominating_split(g, kind)
                if reduced is not None:
                    assert validate_domination_certificate(g, reduced)
                    assert exact is not None  # never succeeds where none exists
                    assert is_deletion_minimal(g, reduced.vertices)

    def test_stall_on_obstruction_logs_nothing_for_non_free_input(self, caplog):
        import logging

        with caplog.at_level(logging.WARNING, logger="splitdom.domination"):
            result = proof_guided_reduce(catalog_lookup("p7"))
        assert result is None
        assert not caplog.records  # p7 is not C-free, so no counterexample alert
