from __future__ import annotations

from itertools import permutations

import pytest

from oracles import naive_has_induced, naive_is_induced_embedding
from splitdom.errors import GraphInputError
from splitdom.graphs import Graph
from splitdom.patterns import (
    catalog_lookup,
    count_induced_copies,
    embedding_is_induced,
    enumerate_automorphisms,
    family_membership,
    find_induced_embedding,
    iter_induced_embeddings,
    pattern_names,
    star,
)

# independently typed neighbor tables (diffed against the catalog's edge data)
EXPECTED_ADJACENCY = {
    "paw": {0: {1, 2, 3}, 1: {0, 2}, 2: {0, 1}, 3: {0}},
    "diamond": {0: {1, 2}, 1: {0, 2, 3}, 2: {0, 1, 3}, 3: {1, 2}},
    "gem": {0: {1, 4}, 1: {0, 2, 4}, 2: {1, 3, 4}, 3: {2, 4}, 4: {0, 1, 2, 3}},
    "h1": {0: {1, 2, 3}, 1: {0, 2}, 2: {0, 1}, 3: {0, 4}, 4: {3}},
    "h2": {0: {1, 2, 3, 4}, 1: {0, 2}, 2: {0, 1}, 3: {0, 4}, 4: {0, 3}},
    "f1": {
        0: {1, 5, 6}, 1: {0, 2}, 2: {1, 3}, 3: {2, 4, 7}, 4: {3, 5}, 5: {4, 0},
        6: {0, 7}, 7: {6, 3},
    },
    "f2": {
        0: {1, 5, 6, 7}, 1: {0, 2, 6}, 2: {1, 3}, 3: {2, 4, 7}, 4: {3, 5},
        5: {4, 0}, 6: {0, 1, 7}, 7: {0, 3, 6},
    },
    "f3": {
        0: {1, 5, 6}, 1: {0, 2}, 2: {1, 3}, 3: {2, 4, 6}, 4: {3, 5}, 5: {4, 0},
        6: {0, 3, 7}, 7: {6},
    },
    "q1": {
        0: {1, 4, 5}, 1: {0, 2, 6}, 2: {1, 3, 7}, 3: {2, 4, 8}, 4: {3, 0, 9},
        5: {0}, 6: {1}, 7: {2}, 8: {3}, 9: {4},
    },
    "q2": {
        0: {1, 3, 4}, 1: {0, 2, 5}, 2: {1, 3, 6}, 3: {2, 0, 7},
        4: {0}, 5: {1}, 6: {2}, 7: {3},
    },
    "q3": {
        0: {1, 2, 3}, 1: {0, 2, 5}, 2: {0, 1, 6}, 3: {0, 4}, 4: {3, 7},
        5: {1}, 6: {2}, 7: {4},
    },
    "q4": {
        0: {1, 2, 3, 4}, 1: {0, 2, 5}, 2: {0, 1, 6}, 3: {0, 4, 7}, 4: {0, 3, 8},
        5: {1}, 6: {2}, 7: {3}, 8: {4},
    },
    "q5": {
        0: {1, 2, 3}, 1: {0, 2, 4}, 2: {0, 1, 5}, 3: {0, 6}, 4: {1}, 5: {2}, 6: {3},
    },
    "petersen": {
        0: {1, 4, 5}, 1: {0, 2, 6}, 2: {1, 3, 7}, 3: {2, 4, 8}, 4: {0, 3, 9},
        5: {0, 7, 8}, 6: {1, 8, 9}, 7: {2, 5, 9}, 8: {3, 5, 6}, 9: {4, 6, 7},
    },
}


class TestCatalog:
    @pytest.mark.parametrize("name", sorted(EXPECTED_ADJACENCY))
    def test_tables_match_independent_typing(self, name):
        g = catalog_lookup(name)
        assert {v: set(g.neighbors(v)) for v in range(g.n)} == EXPECTED_ADJACENCY[name]

    def test_gem_size(self):
        g = catalog_lookup("gem")
        assert (g.n, g.edge_count) == (5, 7)

    def test_q2_size(self):
        g = catalog_lookup("q2")
        assert (g.n, g.edge_count) == (8, 8)

    def test_petersen_three_regular(self):
        g = catalog_lookup("petersen")
        assert (g.n, g.edge_count) == (10, 15)
        assert all(g.degree(v) == 3 for v in range(10))

    def test_h_graphs_extend_the_paw(self):
        paw = catalog_lookup("paw")
        h1 = catalog_lookup("h1")
        h2 = catalog_lookup("h2")
        assert set(h1.edges()) == set(paw.edges()) | {(3, 4)}
        assert set(h2.edges()) == set(h1.edges()) | {(0, 4)}

    def test_f_graphs_extend_the_hexagon(self):
        c6 = set(catalog_lookup("c6").edges())
        assert set(catalog_lookup("f1").edges()) == c6 | {(0, 6), (6, 7), (3, 7)}
        assert set(catalog_lookup("f2").edges()) == c6 | {(0, 6), (1, 6), (6, 7), (0, 7), (3, 7)}
        assert set(catalog_lookup("f3").edges()) == c6 | {(0, 6), (3, 6), (6, 7)}

    def test_lookup_is_case_insensitive(self):
        assert catalog_lookup("PETERSEN") == catalog_lookup("petersen")
        assert catalog_lookup("K2uK1") == catalog_lookup("k2+k1")

    def test_lookup_returns_fresh_copies(self):
        assert catalog_lookup("paw") is not catalog_lookup("paw")

    def test_unknown_name(self):
        with pytest.raises(GraphInputError, match="unknown pattern"):
            catalog_lookup("nonesuch")

    def test_star_generator(self):
        s = star(4)
        assert s.n == 5 and s.degree(0) == 4
        assert all(s.degree(v) == 1 for v in range(1, 5))

    def test_names_cover_the_required_catalog(self):
        names = set(pattern_names())
        required = {
            "p2", "p3", "p4", "p5", "p6", "p7",
            "c4", "c5", "c6", "c7",
            "k1", "k2", "k3", "k4", "k5",
            "2k2", "k2+k1", "paw", "diamond", "gem",
            "h1", "h2", "q1", "q2", "q3", "q4", "q5",
            "f1", "f2", "f3", "petersen",
        }
        assert required <= names


class TestEmbeddingSearch:
    def test_diamond_in_itself_is_identity(self):
        d = catalog_lookup("diamond")
        emb = find_induced_embedding(d, d)
        assert emb.mapping == (0, 1, 2, 3)

    def test_petersen_has_no_induced_c4(self):
        pet = catalog_lookup("petersen")
        c4 = catalog_lookup("c4")
        assert not naive_has_induced(pet, c4)  # girth five, by exhaustive scan
        assert find_induced_embedding(pet, c4) is None

    def test_wheel_contains_gem(self):
        wheel = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)] + [(5, i) for i in range(5)])
        gem = catalog_lookup("gem")
        assert naive_has_induced(wheel, gem)
        emb = find_induced_embedding(wheel, gem)
        assert emb is not None
        assert embedding_is_induced(wheel, gem, emb.mapping)
        assert naive_is_induced_embedding(wheel, gem, emb.mapping)

    def test_returns_lexicographically_least(self):
        host = catalog_lookup("c6")
        p3 = catalog_lookup("p3")
        all_mappings = [e.mapping for e in iter_induced_embeddings(host, p3)]
        assert find_induced_embedding(host, p3).mapping == min(all_mappings)
        assert all_mappings == sorted(all_mappings)

    def test_agreement_with_naive_oracle_small(self, graphs_exactly):
        patterns = [
            catalog_lookup(name)
            for name in ("p3", "p4", "c4", "c5", "k3", "paw", "diamond", "gem", "2k2", "h1")
        ]
        for n in range(2, 6):
            for host in graphs_exactly(n):
                for pat in patterns:
                    if pat.n > host.n:
                        continue
                    got = find_induced_embedding(host, pat)
                    assert (got is not None) == naive_has_induced(host, pat)
                    if got is not None:
                        assert naive_is_induced_embedding(host, pat, got.mapping)

    def test_agreement_with_naive_oracle_sampled_larger(self, graphs_exactly):
        patterns = [catalog_lookup(name) for name in ("p7", "c7", "c6", "gem", "h2")]
        hosts = [g for i, g in enumerate(graphs_exactly(7)) if i % 37 == 0]
        hosts += [g for i, g in enumerate(graphs_exactly(8)) if i % 601 == 0]
        for host in hosts:
            for pat in patterns:
                got = find_induced_embedding(host, pat)
                assert (got is not None) == naive_has_induced(host, pat)
                if got is not None:
                    assert naive_is_induced_embedding(host, pat, got.mapping)

    def test_every_embedding_validates(self, graphs_exactly):
        c4 = catalog_lookup("c4")
        for host in graphs_exactly(6):
            for emb in iter_induced_embeddings(host, c4):
                assert embedding_is_induced(host, c4, emb.mapping)

    def test_automorphism_counts(self):
        # small groups cross-checked by full permutation scan
        for name in ("c5", "c6", "paw", "h2", "diamond"):
            g = catalog_lookup(name)
            naive = sum(
                1
                for perm in permutations(range(g.n))
                if naive_is_induced_embedding(g, g, perm)
            )
            assert len(enumerate_automorphisms(g)) == naive
        assert len(enumerate_automorphisms(catalog_lookup("petersen"))) == 120

    def test_count_induced_copies(self):
        q2 = catalog_lookup("q2")
        assert count_induced_copies(q2, catalog_lookup("c4")) == 1
        assert count_induced_copies(catalog_lookup("k4"), catalog_lookup("c4")) == 0
        assert count_induced_copies(catalog_lookup("c6"), catalog_lookup("p4")) == 6


class TestFamilies:
    def test_p7_is_its_own_witness(self):
        res = family_membership(catalog_lookup("p7"), "C")
        assert not res.is_free
        assert res.witness[0] == "p7"

    def test_petersen_is_f_free(self):
        assert family_membership(catalog_lookup("petersen"), "F").is_free

    def test_c6_is_h_free(self):
        assert family_membership(catalog_lookup("c6"), "H").is_free

    def test_family_names_case_insensitive(self):
        assert family_membership(catalog_lookup("k3"), "l1").is_free

    def test_unknown_family(self):
        with pytest.raises(GraphInputError, match="unknown family"):
            family_membership(catalog_lookup("k1"), "X")

    def test_witness_embedding_validates(self):
        res = family_membership(catalog_lookup("q2"), "C")
        assert not res.is_free
        name, emb = res.witness
        assert embedding_is_induced(catalog_lookup("q2"), catalog_lookup(name), emb.mapping)

    def test_q_graphs_avoid_long_paths_and_cycles(self):
        p7 = catalog_lookup("p7")
        c7 = catalog_lookup("c7")
        for name in ("q1", "q2", "q3", "q4", "q5"):
            q = catalog_lookup(name)
            assert find_induced_embedding(q, p7) is None
            assert find_induced_embedding(q, c7) is None
