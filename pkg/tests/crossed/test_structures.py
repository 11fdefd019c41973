# ABOUTME: Unit tests for crossed semi-bimodules, crossed (semi-)modules and their morphisms
# ABOUTME: Tests validators, the phi/recover pair, group-case functors and weak morphisms
import numpy as np
import pytest

from crossed.errors import (
    AxiomFails,
    CompatibilityFails,
    ConditionFails,
    HypothesisFails,
    LambdaNotTrivial,
    MalformedInput,
    NotAGroup,
    NotCommutative,
    NotComposable,
)
from crossed.monoid import identity_hom, trivial_action, validate_hom, validate_monoid_action, validate_set_action
from crossed.structures import (
    WeakMorphism,
    XbsMorphism,
    assemble_xbsmod,
    boundary,
    canonical_weak_iso,
    compose_weak,
    group_to_xmod,
    identity_morphism,
    identity_weak,
    phi,
    reconstruct_group_xbsmod,
    recover_xsmod,
    semibimodule_embed,
    strictify,
    twist_monoid,
    validate_morphism,
    validate_weak_morphism,
    validate_xbsmod,
    validate_xmod,
    validate_xsmod,
    xmod_to_xbsmod,
)

pytestmark = pytest.mark.unit

# automorphisms of Z/2 x Z/2 on indices 2u + v
SWAP = [0, 2, 1, 3]
SHEAR = [0, 1, 3, 2]


@pytest.fixture
def negation(z2, z3):
    return validate_monoid_action("left", z2, z3, [[0, 1, 2], [0, 2, 1]])


class TestValidateXbsmod:
    """Test the four axioms"""

    def test_phi_of_identity_is_valid(self, phi_structure, z2):
        X = validate_xbsmod(z2, z2, phi_structure.circ, phi_structure.lam, phi_structure.rho)
        assert X == phi_structure
        assert X.is_lambda_trivial()
        assert not X.is_circ_constant()
        assert X.is_group_case()

    def test_assemble_from_raw_tables(self, z2, phi_structure):
        X = assemble_xbsmod(z2, z2, [[0, 1], [1, 0]], [[0, 1], [0, 1]], [[0, 1], [0, 1]], "raw")
        assert X == phi_structure
        assert X.name == "raw"

    def test_constant_circ_with_negation(self, z2, z3, negation):
        """Z/3 has no nontrivial action on two points, so ∘ is constant"""
        circ = validate_set_action(z3, 2, [[0, 0, 0], [1, 1, 1]])
        rho = trivial_action("right", z2, z3)
        X = validate_xbsmod(z2, z3, circ, negation, rho)
        assert X.is_circ_constant()

    def test_axiom_two_failure(self, catalog, z2):
        """e∘1 = 0 on u2 but e·(1∘1) = e"""
        u2 = catalog.get("u2")
        circ = validate_set_action(z2, 2, [[0, 1], [1, 0]])
        with pytest.raises(AxiomFails) as exc:
            validate_xbsmod(u2, z2, circ, trivial_action("left", u2, z2), trivial_action("right", u2, z2))
        assert exc.value.axiom == "2"
        assert exc.value.witness == (1, 0, 1)

    def test_non_commuting_actions_fail_axiom_one(self, catalog, z2):
        klein = catalog.get("klein")
        lam = validate_monoid_action("left", z2, klein, [list(range(4)), SWAP])
        rho = validate_monoid_action("right", z2, klein, [list(range(4)), SHEAR])
        circ = validate_set_action(klein, 2, [[0] * 4, [1] * 4])
        with pytest.raises(AxiomFails) as exc:
            validate_xbsmod(z2, klein, circ, lam, rho)
        assert exc.value.axiom == "1"
        assert exc.value.witness == (1, 1, 1)

    def test_axiom_four_needs_commutative_k_over_trivial_a(self, catalog):
        """Over the trivial monoid the axiom reduces to yx = xy"""
        trivial, lz = catalog.get("trivial"), catalog.get("lz2_1")
        circ = validate_set_action(lz, 1, [[0, 0, 0]])
        with pytest.raises(AxiomFails) as exc:
            validate_xbsmod(trivial, lz, circ, trivial_action("left", trivial, lz), trivial_action("right", trivial, lz))
        assert exc.value.axiom == "4"
        assert exc.value.witness == (0, 0, 1, 2)

    def test_mismatched_components(self, z2, z3, phi_structure):
        with pytest.raises(MalformedInput):
            validate_xbsmod(z2, z3, phi_structure.circ, phi_structure.lam, phi_structure.rho)


class TestBoundaryAndTwist:
    """Test ∂ and the twisted monoid"""

    def test_boundary_of_phi(self, phi_structure):
        assert boundary(phi_structure).tolist() == [0, 1]

    def test_boundary_of_flat(self, flat_structure):
        assert boundary(flat_structure).tolist() == [0, 0]

    def test_twist_of_phi_is_z2(self, phi_structure, z2):
        twisted = twist_monoid(phi_structure)
        assert twisted == z2
        assert twisted.name == "z2_tw"


class TestCrossedSemiModules:
    """Test crossed semi-modules and the phi / recover pair"""

    def test_recover_inverts_phi(self, identity_xsmod):
        assert recover_xsmod(phi(identity_xsmod)) == identity_xsmod

    def test_phi_has_trivial_lambda(self, identity_xsmod):
        X = phi(identity_xsmod)
        assert X.is_lambda_trivial()
        assert X.circ.table.tolist() == [[0, 1], [1, 0]]

    def test_recover_rejects_nontrivial_lambda(self, z2, z3, negation):
        X = semibimodule_embed(negation, trivial_action("right", z2, z3))
        with pytest.raises(LambdaNotTrivial) as exc:
            recover_xsmod(X)
        assert exc.value.witness == (1, 1)

    def test_xsmod_over_non_group(self, catalog, z2):
        """∂: Z/2 -> u2 collapsing onto the identity"""
        u2 = catalog.get("u2")
        partial = validate_hom([0, 0], z2, u2)
        S = validate_xsmod(partial, trivial_action("right", u2, z2))
        assert S.A == u2
        assert S.K == z2

    def test_xsmod_rejects_wrong_action_side(self, z2):
        partial = validate_hom([0, 1], z2, z2)
        with pytest.raises(MalformedInput):
            validate_xsmod(partial, trivial_action("left", z2, z2))


class TestCrossedModules:
    """Test crossed modules and the group-case correspondence"""

    def test_identity_xmod(self, z2):
        M = validate_xmod(validate_hom([0, 1], z2, z2), trivial_action("right", z2, z2))
        assert group_to_xmod(xmod_to_xbsmod(M)) == M

    def test_inclusion_into_z4_round_trips(self, catalog, z2):
        """Z/2 -> Z/4 with the trivial action is crossed since Z/4 is abelian"""
        z4 = catalog.get("z4")
        M = validate_xmod(validate_hom([0, 2], z2, z4), trivial_action("right", z4, z2))
        assert group_to_xmod(xmod_to_xbsmod(M)) == M

    def test_xmod_requires_groups(self, catalog, z2):
        u2 = catalog.get("u2")
        with pytest.raises(NotAGroup) as exc:
            validate_xmod(validate_hom([0, 0], z2, u2), trivial_action("right", u2, z2))
        assert exc.value.which == "A"
        assert exc.value.witness == (1,)

    def test_group_to_xmod_requires_groups(self, catalog):
        u2 = catalog.get("u2")
        X = semibimodule_embed(trivial_action("left", u2, u2), trivial_action("right", u2, u2))
        with pytest.raises(NotAGroup) as exc:
            group_to_xmod(X)
        assert exc.value.witness == (1,)

    def test_group_to_xmod_of_phi(self, phi_structure):
        M = group_to_xmod(phi_structure)
        assert M.partial.map.tolist() == [0, 1]
        assert xmod_to_xbsmod(M) == phi_structure


class TestReconstruction:
    """Test rebuilding a group-case structure from λ, ρ and ∂"""

    def test_reconstructs_phi(self, phi_structure):
        X = reconstruct_group_xbsmod(phi_structure.lam, phi_structure.rho, boundary(phi_structure))
        assert X == phi_structure

    def test_hypothesis_one_fails(self, z2, z3, negation):
        with pytest.raises(HypothesisFails) as exc:
            reconstruct_group_xbsmod(negation, trivial_action("right", z2, z3), [0, 1, 0])
        assert exc.value.hypothesis == "i"
        assert exc.value.witness == (1, 1)

    def test_hypothesis_two_fails(self, catalog, z2):
        """∂(2u + v) = u with the swap action: ∂(1ᵇ) = ∂(2) = 1 but ∂(1) = 0"""
        klein = catalog.get("klein")
        rho = validate_monoid_action("right", z2, klein, [list(range(4)), SWAP])
        with pytest.raises(HypothesisFails) as exc:
            reconstruct_group_xbsmod(trivial_action("left", z2, klein), rho, [0, 0, 1, 1])
        assert exc.value.hypothesis == "ii"
        assert exc.value.witness == (1, 1)

    def test_hypothesis_three_fails(self, catalog, z2):
        """∂(2u + v) = u + v is swap invariant but 1·1ᵇ = 3 while 1·1 = 0"""
        klein = catalog.get("klein")
        rho = validate_monoid_action("right", z2, klein, [list(range(4)), SWAP])
        with pytest.raises(HypothesisFails) as exc:
            reconstruct_group_xbsmod(trivial_action("left", z2, klein), rho, [0, 1, 1, 0])
        assert exc.value.hypothesis == "iii"
        assert exc.value.witness == (1, 1)

    def test_constant_boundary_is_accepted(self, z2, z3, negation):
        X = reconstruct_group_xbsmod(negation, trivial_action("right", z2, z3), [0, 0, 0])
        assert X.is_circ_constant()
        assert not X.is_lambda_trivial()

    def test_incompatible_actions(self, catalog, z2):
        klein = catalog.get("klein")
        lam = validate_monoid_action("left", z2, klein, [list(range(4)), SWAP])
        rho = validate_monoid_action("right", z2, klein, [list(range(4)), SHEAR])
        with pytest.raises(CompatibilityFails) as exc:
            reconstruct_group_xbsmod(lam, rho, [0, 0, 0, 0])
        assert exc.value.witness == (1, 1, 1)

    def test_boundary_out_of_range(self, phi_structure):
        with pytest.raises(MalformedInput):
            reconstruct_group_xbsmod(phi_structure.lam, phi_structure.rho, [0, 5])


class TestSemibimoduleEmbed:
    """Test semi-bimodules as structures with constant ∘"""

    def test_embed_is_circ_constant(self, flat_structure):
        assert flat_structure.is_circ_constant()
        assert flat_structure.is_lambda_trivial()

    def test_embed_rejects_noncommutative(self, catalog):
        trivial, lz = catalog.get("trivial"), catalog.get("lz2_1")
        with pytest.raises(NotCommutative) as exc:
            semibimodule_embed(trivial_action("left", trivial, lz), trivial_action("right", trivial, lz))
        assert exc.value.witness == (1, 2)

    def test_embed_rejects_incompatible(self, catalog, z2):
        klein = catalog.get("klein")
        lam = validate_monoid_action("left", z2, klein, [list(range(4)), SWAP])
        rho = validate_monoid_action("right", z2, klein, [list(range(4)), SHEAR])
        with pytest.raises(CompatibilityFails) as exc:
            semibimodule_embed(lam, rho)
        assert exc.value.witness == (1, 1, 1)


class TestMorphisms:
    """Test strict and weak morphisms"""

    def test_identity_morphism(self, phi_structure):
        m = identity_morphism(phi_structure)
        assert validate_morphism(m, phi_structure, phi_structure) == m

    def test_collapse_fails_condition_one(self, phi_structure, flat_structure, z2):
        """id on both components from phi to flat: α(a∘x) = a + x but α(a)∘κ(x) = a"""
        m = XbsMorphism(identity_hom(z2), identity_hom(z2))
        with pytest.raises(ConditionFails) as exc:
            validate_morphism(m, phi_structure, flat_structure)
        assert exc.value.condition == "1"
        assert exc.value.witness == (0, 1)

    def test_strictify_identity(self, phi_structure):
        assert strictify(identity_morphism(phi_structure)) == identity_weak(phi_structure)

    def test_identity_weak_validates(self, phi_structure):
        w = identity_weak(phi_structure)
        assert validate_weak_morphism(w, phi_structure, phi_structure) == w

    def test_weak_unit_condition(self, phi_structure, z2):
        w = WeakMorphism(identity_hom(z2), np.array([[1, 0], [1, 0]]), z2, z2)
        with pytest.raises(ConditionFails) as exc:
            validate_weak_morphism(w, phi_structure, phi_structure)
        assert exc.value.condition == "unit"
        assert exc.value.witness == (0,)

    def test_weak_condition_one(self, phi_structure, z2):
        """γ(0, 1·1) = 0 but γ(0, 1)·γ(0∘1, 1) = 1 + γ(1, 1) = 1"""
        w = WeakMorphism(identity_hom(z2), np.array([[0, 1], [0, 0]]), z2, z2)
        with pytest.raises(ConditionFails) as exc:
            validate_weak_morphism(w, phi_structure, phi_structure)
        assert exc.value.condition == "1"
        assert exc.value.witness == (0, 1, 1)

    def test_weak_condition_two(self, phi_structure, z2):
        """κ = 0: κ(0)∘γ(0, 1) = 1 but κ(0∘1) = 0"""
        w = WeakMorphism(validate_hom([0, 0], z2, z2), np.array([[0, 1], [0, 1]]), z2, z2)
        with pytest.raises(ConditionFails) as exc:
            validate_weak_morphism(w, phi_structure, phi_structure)
        assert exc.value.condition == "2"
        assert exc.value.witness == (0, 1)

    def test_weak_condition_three(self, flat_structure, z2):
        """On the flat structure γ(1, 0)·γ(0, 1) = 1 but γ(0·1, 0·1) = γ(1, 1) = 0"""
        w = WeakMorphism(identity_hom(z2), np.array([[0, 1], [0, 0]]), z2, z2)
        with pytest.raises(ConditionFails) as exc:
            validate_weak_morphism(w, flat_structure, flat_structure)
        assert exc.value.condition == "3"
        assert exc.value.witness == (0, 1, 1, 0)

    def test_compose_with_identity(self, phi_structure):
        ident = identity_weak(phi_structure)
        assert compose_weak(ident, ident) == ident

    def test_compose_is_associative(self, z2, z3, negation):
        circ = validate_set_action(z3, 2, [[0, 0, 0], [1, 1, 1]])
        X = validate_xbsmod(z2, z3, circ, negation, trivial_action("right", z2, z3), "neg")
        iso = canonical_weak_iso(X)
        fwd, bwd = iso.forward, iso.backward
        left = compose_weak(fwd, compose_weak(bwd, fwd))
        right = compose_weak(compose_weak(fwd, bwd), fwd)
        assert left == right == fwd
        assert left.gamma.tolist() == [[0, 1, 2], [0, 2, 1]]

    def test_compose_requires_matching_carriers(self, phi_structure, z2, z3):
        w = identity_weak(phi_structure)
        other = WeakMorphism(identity_hom(z2), np.zeros((2, 3), dtype=np.int64), z3, z3)
        with pytest.raises(NotComposable):
            compose_weak(other, w)


class TestCanonicalWeakIso:
    """Test the weak isomorphism between X and its twisted reconstruction"""

    def test_phi_round_trip(self, phi_structure):
        iso = canonical_weak_iso(phi_structure)
        assert compose_weak(iso.backward, iso.forward) == identity_weak(iso.twisted)
        assert compose_weak(iso.forward, iso.backward) == identity_weak(phi_structure)

    def test_requires_groups(self, catalog):
        u2 = catalog.get("u2")
        X = semibimodule_embed(trivial_action("left", u2, u2), trivial_action("right", u2, u2))
        with pytest.raises(NotAGroup):
            canonical_weak_iso(X)
