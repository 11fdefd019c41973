# ABOUTME: Unit tests for structure enumeration and classification
# ABOUTME: Tests counts, the brute-force oracle, budgets and the cross-checks
import itertools

import pytest
from pydantic import ValidationError

from crossed.errors import BudgetExceeded, NotAGroup
from crossed.models import EnumerationTask, StructureKind
from crossed.search import (
    NodeCounter,
    classify,
    endomorphisms,
    enumerate_structures,
    enumerate_xbsmods,
    enumerate_xmods,
    enumerate_xsmods,
    homomorphisms,
    monoid_actions,
    naive_xbsmods,
    set_actions,
)
from crossed.monoid import trivial_action, validate_monoid_action, validate_set_action
from crossed.structures import CrossedSemiBimodule, validate_xbsmod

pytestmark = pytest.mark.unit

SMALL = ["trivial", "z2", "u2"]


class TestBuildingBlocks:
    """Test homomorphisms and actions found by backtracking"""

    def test_homomorphisms_z2_to_z2(self, z2):
        assert [h.map.tolist() for h in homomorphisms(z2, z2)] == [[0, 0], [0, 1]]

    def test_endomorphisms_of_z3(self, z3):
        assert endomorphisms(z3).tolist() == [[0, 0, 0], [0, 1, 2], [0, 2, 1]]

    def test_no_homomorphism_hits_a_missing_identity(self, z3, z2):
        assert [h.map.tolist() for h in homomorphisms(z3, z2)] == [[0, 0, 0]]

    def test_actions_of_z2_on_z2(self, z2):
        """Aut(Z/2) is trivial and the zero endomorphism cannot square to the identity"""
        assert len(monoid_actions("left", z2, z2)) == 1

    def test_set_actions_of_z2_on_two_points(self, z2):
        tables = [action.table.tolist() for action in set_actions(z2, 2)]
        assert tables == [[[0, 0], [1, 1]], [[0, 1], [1, 0]]]


class TestEnumeration:
    """Test complete enumeration on small pairs"""

    @pytest.mark.parametrize("a_name,k_name", [("trivial", "trivial"), ("trivial", "z2"), ("z2", "trivial")])
    def test_single_structure(self, catalog, a_name, k_name):
        assert len(enumerate_xbsmods(catalog.get(a_name), catalog.get(k_name))) == 1

    def test_z2_z2(self, z2):
        structures = enumerate_xbsmods(z2, z2)
        assert [X.name for X in structures] == ["z2_z2_0", "z2_z2_1"]
        assert structures[0].is_circ_constant()
        assert structures[1].circ.table.tolist() == [[0, 1], [1, 0]]

    def test_swap_is_phi_of_identity(self, z2, phi_structure):
        assert enumerate_xbsmods(z2, z2)[1] == phi_structure

    def test_xsmods_and_xmods(self, z2):
        assert len(enumerate_xsmods(z2, z2)) == 2
        assert len(enumerate_xmods(z2, z2)) == 2

    @pytest.mark.parametrize("a_name,k_name", list(itertools.product(SMALL, SMALL)))
    def test_matches_brute_force(self, catalog, a_name, k_name):
        A, K = catalog.get(a_name), catalog.get(k_name)
        assert enumerate_xbsmods(A, K) == naive_xbsmods(A, K)

    @pytest.mark.parametrize("a_name,k_name", list(itertools.product(SMALL, SMALL)))
    def test_every_result_is_valid(self, catalog, a_name, k_name):
        A, K = catalog.get(a_name), catalog.get(k_name)
        for X in enumerate_xbsmods(A, K):
            validate_xbsmod(A, K, X.circ, X.lam, X.rho, X.name)

    def test_deterministic(self, catalog):
        A, K = catalog.get("u2"), catalog.get("z2")
        first, second = enumerate_xbsmods(A, K), enumerate_xbsmods(A, K)
        assert [X.name for X in first] == [X.name for X in second]
        assert first == second

    def test_xmods_need_groups(self, catalog, z2):
        with pytest.raises(NotAGroup) as exc:
            enumerate_xmods(catalog.get("u2"), z2)
        assert exc.value.which == "A"


class TestEnumerationTask:
    """Test the task model and its limits"""

    def test_dispatch_by_kind(self, z2):
        task = EnumerationTask(A=z2, K=z2, kind=StructureKind.XSMOD)
        assert len(enumerate_structures(task)) == 2

    def test_order_cap(self, catalog, z2):
        with pytest.raises(ValidationError):
            EnumerationTask(A=catalog.get("z5"), K=z2, max_order=4)

    def test_budget(self, z2):
        with pytest.raises(BudgetExceeded):
            enumerate_structures(EnumerationTask(A=z2, K=z2, node_budget=1))

    def test_counter_without_budget(self):
        counter = NodeCounter()
        counter.visit(10)
        assert counter.nodes == 10


class TestClassification:
    """Test the partition counts and cross-checks"""

    def test_z2_z2(self, z2):
        result = classify(enumerate_xbsmods(z2, z2), z2, z2)
        assert result.checks.passed
        assert result.summary() == {
            "total": 2,
            "lambda_trivial": 2,
            "circ_constant": 1,
            "group_case": 2,
            "boundary_not_hom": 0,
        }

    def test_group_checks_present(self, z2):
        names = [r.name for r in classify(enumerate_xbsmods(z2, z2), z2, z2).checks.results]
        assert "group.canonical_weak_iso" in names
        assert "group.xmod_roundtrip" in names

    def test_non_group_pair(self, catalog, z2):
        A = catalog.get("u2")
        result = classify(enumerate_xbsmods(A, z2), A, z2)
        assert result.checks.passed
        assert not result.group_case
        assert "group.xmod_roundtrip" not in [r.name for r in result.checks.results]

    def test_missing_structure_is_reported(self, z2):
        result = classify(enumerate_xbsmods(z2, z2)[:1], z2, z2)
        assert not result.checks.passed

    def test_exchange_law_failure_is_a_fail_line(self, catalog, z2):
        """a∘x = a + parity(x) with ρ swapping the Klein coordinates breaks y·x^{∂y} = x·^{∂x}y"""
        klein = catalog.get("klein")
        circ = validate_set_action(klein, 2, [[0, 1, 1, 0], [1, 0, 0, 1]])
        rho = validate_monoid_action("right", z2, klein, [[0, 1, 2, 3], [0, 2, 1, 3]])
        X = CrossedSemiBimodule(z2, klein, circ, trivial_action("left", z2, klein), rho, "bad")

        result = classify([X], z2, klein)

        lines = [r.line() for r in result.checks.failures()]
        assert "exchange_law_and_twist: FAIL (0, 1, 1) bad: exchange law" in lines
        assert result.boundary_not_hom == []

    @pytest.mark.slow
    def test_order_three_sweep(self, catalog):
        monoids = catalog.up_to_order(3)
        for A, K in itertools.product(monoids, monoids):
            structures = enumerate_xbsmods(A, K)
            assert classify(structures, A, K).checks.passed
