from __future__ import annotations

import pytest

from oracles import brute_has_clique_cutset, brute_is_bisimplicial
from splitdom.decomposition import (
    BisimplicialCase,
    CliqueCutsetCase,
    LowDegreeCase,
    PetersenBlowupCase,
    PetersenGraphCase,
    blowup_maximality_violations,
    c5_neighborhood_partition,
    c5_partition_violations,
    c6_neighborhood_partition,
    c6_partition_violations,
    find_bisimplicial_vertex,
    find_clique_cutset,
    max_blowup_c6,
    minimal_separators,
    structure_case_diamond,
    structure_case_gem,
    validate_structure_case,
)
from splitdom.errors import GraphInputError, PreconditionError
from splitdom.graphs import Graph, connectivity
from splitdom.patterns import (
    Embedding,
    catalog_lookup,
    family_membership,
    find_induced_embedding,
)

BOWTIE = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
IDENTITY_C6 = Embedding("c6", (0, 1, 2, 3, 4, 5))


class TestCliqueCutset:
    def test_path_middle(self):
        assert find_clique_cutset(catalog_lookup("p3")) == (1,)

    def test_cycle_has_none(self):
        assert find_clique_cutset(catalog_lookup("c5")) is None

    def test_shared_triangle_vertex(self):
        assert find_clique_cutset(BOWTIE) == (0,)

    def test_p5_prefers_earliest(self):
        assert find_clique_cutset(catalog_lookup("p5")) == (1,)

    def test_rejects_disconnected(self):
        with pytest.raises(PreconditionError, match="connected"):
            find_clique_cutset(catalog_lookup("2k2"))

    def test_minimal_separators_of_c4(self):
        assert minimal_separators(catalog_lookup("c4")) == ((0, 2), (1, 3))

    def test_complete_against_brute_force(self, graphs_exactly):
        for n in range(1, 8):
            for g in graphs_exactly(n, connected_only=True):
                found = find_clique_cutset(g)
                assert (found is not None) == brute_has_clique_cutset(g)
                if found is not None:
                    assert not validate_structure_case(g, CliqueCutsetCase(found))


class TestBisimplicial:
    def test_c6_vertex(self):
        got = find_bisimplicial_vertex(catalog_lookup("c6"))
        assert got is not None
        v, a, b = got
        assert v == 0 and sorted(a + b) == [1, 5]

    def test_petersen_has_none(self, petersen):
        assert all(not brute_is_bisimplicial(petersen, v) for v in range(10))
        assert find_bisimplicial_vertex(petersen) is None

    def test_tree_leaf(self):
        p4 = catalog_lookup("p4")
        v, a, b = find_bisimplicial_vertex(p4)
        assert v == 0 and (a, b) == ((1,), ())

    def test_agrees_with_brute_force(self, graphs_exactly):
        for n in range(1, 7):
            for g in graphs_exactly(n):
                got = find_bisimplicial_vertex(g)
                expected = [v for v in range(g.n) if brute_is_bisimplicial(g, v)]
                if expected:
                    assert got is not None and got[0] == expected[0]
                    assert not validate_structure_case(g, BisimplicialCase(*got))
                else:
                    assert got is None


class TestMaxBlowup:
    def test_plain_hexagon(self):
        blowup = max_blowup_c6(catalog_lookup("c6"), IDENTITY_C6)
        assert blowup.bags == ((0,), (1,), (2,), (3,), (4,), (5,))

    def test_true_twin_joins_its_bag(self):
        g = Graph(7, list(catalog_lookup("c6").edges()) + [(6, 0), (6, 1), (6, 5)])
        blowup = max_blowup_c6(g, IDENTITY_C6)
        assert blowup.bags[0] == (0, 6)
        assert not blowup_maximality_violations(g, blowup)

    def test_f1_extras_stay_outside(self):
        f1 = catalog_lookup("f1")
        blowup = max_blowup_c6(f1, IDENTITY_C6)
        assert blowup.bags == ((0,), (1,), (2,), (3,), (4,), (5,))
        assert not blowup_maximality_violations(f1, blowup)

    def test_rejects_bad_embedding(self):
        with pytest.raises(GraphInputError, match="six-cycle"):
            max_blowup_c6(catalog_lookup("c6"), Embedding("c6", (0, 1, 2, 3, 5, 4)))


class TestHexagonPartition:
    def test_f1_lands_in_y_classes(self):
        f1 = catalog_lookup("f1")
        part = c6_neighborhood_partition(f1, max_blowup_c6(f1, IDENTITY_C6))
        assert part.y_classes[0] == (6,) and part.y_classes[3] == (7,)
        assert not c6_partition_violations(f1, part)

    def test_f2_lands_in_x_and_z(self):
        f2 = catalog_lookup("f2")
        part = c6_neighborhood_partition(f2, max_blowup_c6(f2, IDENTITY_C6))
        assert part.x_classes[0] == (6,) and part.z_classes[0] == (7,)
        assert not c6_partition_violations(f2, part)

    def test_f3_lands_in_z_and_rest(self):
        f3 = catalog_lookup("f3")
        part = c6_neighborhood_partition(f3, max_blowup_c6(f3, IDENTITY_C6))
        assert part.z_classes[0] == (6,) and part.rest == (7,)
        assert not c6_partition_violations(f3, part)

    def test_unclassifiable_vertex_raises(self):
        # a vertex adjacent to three pairwise non-consecutive bags
        g = Graph(7, list(catalog_lookup("c6").edges()) + [(6, 0), (6, 2), (6, 4)])
        blowup = max_blowup_c6(g, IDENTITY_C6)
        with pytest.raises(PreconditionError, match="unclassifiable"):
            c6_neighborhood_partition(g, blowup)


class TestPentagonPartition:
    def test_plain_pentagon(self):
        c5 = catalog_lookup("c5")
        part = c5_neighborhood_partition(c5, Embedding("c5", (0, 1, 2, 3, 4)))
        assert all(c == () for c in part.x_classes + part.y_classes)
        assert part.rest == ()
        assert not c5_partition_violations(c5, part)

    def test_petersen_outer_cycle(self, petersen):
        # classification only: Petersen contains an induced six-cycle, so the
        # C6-free precondition behind the partition facts does not hold here
        part = c5_neighborhood_partition(petersen, Embedding("c5", (0, 1, 2, 3, 4)))
        assert part.y_classes == ((5,), (6,), (7,), (8,), (9,))
        assert part.rest == ()

    def test_pendant_is_a_y_vertex(self):
        g = Graph(6, list(catalog_lookup("c5").edges()) + [(5, 0)])
        part = c5_neighborhood_partition(g, Embedding("c5", (0, 1, 2, 3, 4)))
        assert part.y_classes[0] == (5,)

    def test_unclassifiable_vertex_raises(self):
        g = Graph(6, list(catalog_lookup("c5").edges()) + [(5, 0), (5, 2)])
        with pytest.raises(PreconditionError, match="unclassifiable"):
            c5_neighborhood_partition(g, Embedding("c5", (0, 1, 2, 3, 4)))


class TestStructureCaseGem:
    def test_path_yields_first_cutset(self):
        case = structure_case_gem(catalog_lookup("p5"))
        assert case == CliqueCutsetCase((1,))

    def test_petersen_yields_blowup(self, petersen):
        case = structure_case_gem(petersen)
        assert isinstance(case, PetersenBlowupCase)
        assert not validate_structure_case(petersen, case)

    def test_bowtie_yields_shared_vertex(self):
        assert structure_case_gem(BOWTIE) == CliqueCutsetCase((0,))

    def test_rejects_non_family_member(self):
        with pytest.raises(PreconditionError, match="not F-free"):
            structure_case_gem(catalog_lookup("c4"))

    def test_rejects_disconnected(self):
        with pytest.raises(PreconditionError, match="connected"):
            structure_case_gem(catalog_lookup("2k2"))


class TestStructureCaseDiamond:
    def test_petersen(self, petersen):
        case = structure_case_diamond(petersen)
        assert isinstance(case, PetersenGraphCase)
        assert not validate_structure_case(petersen, case)

    def test_pentagon_low_degree(self):
        case = structure_case_diamond(catalog_lookup("c5"))
        assert case == LowDegreeCase(0, 2, 2)

    def test_path_cutset(self):
        assert structure_case_diamond(catalog_lookup("p4")) == CliqueCutsetCase((1,))

    def test_hexagon_carries_bound_two(self):
        case = structure_case_diamond(catalog_lookup("c6"))
        assert isinstance(case, LowDegreeCase) and case.bound == 2

    def test_rejects_non_family_member(self):
        with pytest.raises(PreconditionError, match="not H-free"):
            structure_case_diamond(catalog_lookup("diamond"))


class TestEvenHoleCorollary:
    def test_f_free_c6_free_graphs_have_bisimplicial_vertices(self, small_connected):
        c6 = catalog_lookup("c6")
        for g in small_connected(8):
            if not family_membership(g, "F").is_free:
                continue
            if find_induced_embedding(g, c6) is not None:
                continue
            assert find_bisimplicial_vertex(g) is not None, connectivity(g)
