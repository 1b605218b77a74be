from __future__ import annotations

import pytest

from oracles import brute_chromatic_number, brute_max_clique_size
from splitdom.cliques import is_triangle_free, maximal_stable_sets
from splitdom.coloring import (
    ColoringCertificate,
    blowup_clique_number,
    chromatic_number_exact,
    clique_number,
    color_diamond_free_certified,
    color_gem_free_certified,
    color_petersen_blowup,
    expand_blowup_coloring,
    verify_coloring,
)
from splitdom.errors import BudgetExceededError, PreconditionError
from splitdom.graphs import Graph
from splitdom.patterns import catalog_lookup, family_membership
from splitdom.recognition import build_blowup


class TestCliqueNumber:
    def test_k5(self):
        assert clique_number(catalog_lookup("k5"))[0] == 5

    def test_petersen_is_triangle_free(self, petersen):
        assert is_triangle_free(petersen)
        omega, witness = clique_number(petersen)
        assert omega == 2 and witness == (0, 1)

    def test_gem(self):
        omega, witness = clique_number(catalog_lookup("gem"))
        assert omega == 3
        assert witness == (0, 1, 4)

    def test_agrees_with_brute_force(self, graphs_exactly):
        from splitdom.graphs import is_clique

        for n in range(0, 7):
            for g in graphs_exactly(n):
                omega, witness = clique_number(g)
                assert omega == brute_max_clique_size(g)
                assert len(witness) == omega
                assert is_clique(g, witness)

    def test_witness_is_lexicographically_least(self, graphs_exactly):
        from itertools import combinations

        from splitdom.graphs import is_clique

        for g in graphs_exactly(5):
            omega, witness = clique_number(g)
            if omega == 0:
                continue
            least = min(
                c for c in combinations(range(g.n), omega) if is_clique(g, c)
            )
            assert witness == least


class TestChromaticNumber:
    def test_bipartite(self):
        assert chromatic_number_exact(catalog_lookup("c6"))[0] == 2

    def test_odd_cycle(self):
        assert chromatic_number_exact(catalog_lookup("c5"))[0] == 3

    def test_petersen(self, petersen):
        chi, coloring = chromatic_number_exact(petersen)
        assert chi == 3
        assert all(coloring[u] != coloring[v] for u, v in petersen.edges())

    def test_agrees_with_brute_force(self, graphs_exactly):
        for n in range(0, 7):
            for g in graphs_exactly(n):
                chi, coloring = chromatic_number_exact(g)
                assert chi == brute_chromatic_number(g)
                assert all(coloring[u] != coloring[v] for u, v in g.edges())

    def test_budget_guard(self):
        with pytest.raises(BudgetExceededError, match="caps"):
            chromatic_number_exact(Graph(17))


class TestBlowupCovering:
    def test_all_ones_needs_three(self):
        classes, count = color_petersen_blowup([1] * 10)
        assert count == 3

    def test_single_heavy_bag(self):
        classes, count = color_petersen_blowup([4] + [0] * 9)
        assert count == 4
        assert all(0 in s for s in classes)

    def test_all_twos_needs_five(self):
        classes, count = color_petersen_blowup([2] * 10)
        assert count == 5
        omega = blowup_clique_number([2] * 10)
        assert omega == 4 and count == (5 * omega + 3) // 4

    def test_zero_weights(self):
        assert color_petersen_blowup([0] * 10) == ((), 0)

    def test_classes_are_stable_sets(self, petersen):
        stable = set(maximal_stable_sets(petersen))
        classes, _ = color_petersen_blowup([2, 1, 0, 1, 2, 0, 1, 1, 2, 0])
        assert all(s in stable for s in classes)

    def test_expansion_is_proper(self, petersen):
        weights = (2, 0, 1, 3, 0, 1, 0, 2, 1, 1)
        g, part = build_blowup(petersen, weights)
        classes, count = color_petersen_blowup(weights)
        coloring = expand_blowup_coloring(part, classes)
        assert all(coloring[u] != coloring[v] for u, v in g.edges())
        assert len(set(coloring.values())) <= count

    def test_blowup_clique_number_matches_exact(self, petersen):
        for weights in ((1,) * 10, (2,) * 10, (0, 3, 1, 0, 2, 1, 1, 0, 0, 2)):
            g, _ = build_blowup(petersen, weights)
            assert blowup_clique_number(weights) == clique_number(g)[0]


class TestGemRouteColorer:
    def test_petersen_hits_the_bound(self, petersen):
        cert = color_gem_free_certified(petersen)
        assert cert.color_count == 3 == 2 * len(cert.clique_witness) - 1
        assert verify_coloring(petersen, cert)

    def test_tree(self):
        cert = color_gem_free_certified(catalog_lookup("p6"))
        assert cert.color_count == 2 and cert.bound_value == 3

    def test_pentagon(self):
        cert = color_gem_free_certified(catalog_lookup("c5"))
        assert cert.color_count == 3 == cert.bound_value

    def test_rejects_non_family_member(self):
        with pytest.raises(PreconditionError, match="not F-free"):
            color_gem_free_certified(catalog_lookup("c4"))

    def test_empty_and_disconnected(self):
        assert color_gem_free_certified(Graph(0)).color_count == 0
        cert = color_gem_free_certified(catalog_lookup("2k2"))
        assert cert.color_count == 2 and verify_coloring(catalog_lookup("2k2"), cert)

    def test_small_corpus_sound(self, small_connected):
        for g in small_connected(7):
            if not family_membership(g, "F").is_free:
                continue
            cert = color_gem_free_certified(g)
            assert verify_coloring(g, cert)
            omega = len(cert.clique_witness)
            assert cert.color_count <= 2 * omega - 1
            assert chromatic_number_exact(g)[0] <= cert.color_count

    def test_trace_records_the_recursion(self):
        cert = color_gem_free_certified(catalog_lookup("p5"))
        kinds = {step.kind for step in cert.trace}
        assert "cutset-merge" in kinds or "vertex-extension" in kinds


class TestDiamondRouteColorer:
    def test_petersen_hits_the_bound(self, petersen):
        cert = color_diamond_free_certified(petersen)
        assert cert.color_count == 3 == len(cert.clique_witness) + 1
        assert verify_coloring(petersen, cert)
        assert any(step.kind == "petersen-base" for step in cert.trace)

    def test_seven_cycle(self):
        cert = color_diamond_free_certified(catalog_lookup("c7"))
        assert cert.color_count == 3 == cert.bound_value

    def test_six_path(self):
        cert = color_diamond_free_certified(catalog_lookup("p6"))
        assert cert.color_count == 2 <= cert.bound_value

    def test_rejects_non_family_member(self):
        with pytest.raises(PreconditionError, match="not H-free"):
            color_diamond_free_certified(catalog_lookup("diamond"))

    def test_small_corpus_sound(self, small_connected):
        for g in small_connected(7):
            if not family_membership(g, "H").is_free:
                continue
            cert = color_diamond_free_certified(g)
            assert verify_coloring(g, cert)
            assert cert.color_count <= len(cert.clique_witness) + 1
            assert chromatic_number_exact(g)[0] <= cert.color_count


class TestVerifyColoring:
    def test_accepts_proper_triangle_coloring(self):
        k3 = catalog_lookup("k3")
        cert = ColoringCertificate((0, 1, 2), 3, (0, 1, 2), "2w-1", 5, ())
        assert verify_coloring(k3, cert)

    def test_rejects_improper_coloring(self):
        k3 = catalog_lookup("k3")
        cert = ColoringCertificate((0, 1, 1), 2, (0, 1, 2), "2w-1", 5, ())
        assert not verify_coloring(k3, cert)

    def test_rejects_wrong_count(self):
        k3 = catalog_lookup("k3")
        cert = ColoringCertificate((0, 1, 2), 4, (0, 1, 2), "2w-1", 5, ())
        assert not verify_coloring(k3, cert)

    def test_rejects_non_clique_witness(self):
        c4 = catalog_lookup("c4")
        cert = ColoringCertificate((0, 1, 0, 1), 2, (0, 1, 2), "w+1", 4, ())
        assert not verify_coloring(c4, cert)

    def test_rejects_bound_mismatch(self):
        k3 = catalog_lookup("k3")
        cert = ColoringCertificate((0, 1, 2), 3, (0, 1, 2), "2w-1", 99, ())
        assert not verify_coloring(k3, cert)

    def test_rejects_count_above_bound(self):
        # a wasteful but proper coloring exceeding the declared rule
        p3 = catalog_lookup("p3")
        cert = ColoringCertificate((0, 1, 2), 3, (0, 1), "w+1", 3, ())
        assert verify_coloring(p3, cert)
        cert_bad = ColoringCertificate((0, 1, 2), 3, (0,), "w+1", 2, ())
        assert not verify_coloring(p3, cert_bad)

    def test_pipeline_self_check(self, petersen):
        cert = color_diamond_free_certified(petersen)
        assert verify_coloring(petersen, cert)
