"""
Crossed modules, crossed semi-modules and crossed semi-bimodules

Conventions: for a crossed semi-bimodule X = (A, K, ∘, λ, ρ) the tables are
indexed [a, x]: circ[a, x] = a∘x, lam[a, x] = ᵃx, rho[a, x] = xᵃ. Every
axiom check is exhaustive and reports the lexicographically least witness of
its quantified variables, A-variables first.
"""

import logging
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

import numpy as np

from crossed.errors import (
    AxiomFails,
    CompatibilityFails,
    ConditionFails,
    ConsistencyError,
    CrossedError,
    ExchangeLawFails,
    HypothesisFails,
    LambdaNotTrivial,
    MalformedInput,
    NotAGroup,
    NotCommutative,
    NotComposable,
)
from crossed.laws import DEFAULT_CHUNK, first_witness, frozen, table_key
from crossed.monoid import (
    FiniteMonoid,
    MonoidAction,
    MonoidHom,
    SetAction,
    TableEquality,
    commutativity_witness,
    constant_set_action,
    identity_hom,
    inverse_map,
    is_group,
    non_invertible,
    trivial_action,
    validate_hom,
    validate_monoid,
    validate_monoid_action,
    validate_set_action,
)

logger = logging.getLogger(__name__)


@contextmanager
def guaranteed(claim: str) -> Iterator[None]:
    """Turn a rejection inside the block into a ConsistencyError naming `claim`"""
    try:
        yield
    except ConsistencyError:
        raise
    except CrossedError as e:
        raise ConsistencyError(f"{claim}: {e}", e.witness) from e


def _first_mismatch(left: np.ndarray, right: np.ndarray) -> Optional[Tuple[int, ...]]:
    bad = np.argwhere(np.asarray(left) != np.asarray(right))
    return tuple(int(v) for v in bad[0]) if bad.size else None


@dataclass(frozen=True, eq=False)
class CrossedSemiBimodule(TableEquality):
    """Monoids A, K with a right K-set action ∘ on A and left/right A-monoid actions on K"""

    A: FiniteMonoid
    K: FiniteMonoid
    circ: SetAction
    lam: MonoidAction
    rho: MonoidAction
    name: str = "X"

    def key(self) -> Tuple:
        return (
            self.A.key(),
            self.K.key(),
            table_key(self.circ.table),
            table_key(self.lam.table),
            table_key(self.rho.table),
        )

    def is_lambda_trivial(self) -> bool:
        return self.lam.is_trivial()

    def is_circ_constant(self) -> bool:
        return bool((self.circ.table == np.arange(self.A.size)[:, None]).all())

    def is_group_case(self) -> bool:
        return is_group(self.A) and is_group(self.K)


def validate_xbsmod(
    A: FiniteMonoid,
    K: FiniteMonoid,
    circ: SetAction,
    lam: MonoidAction,
    rho: MonoidAction,
    name: str = "X",
    chunk: int = DEFAULT_CHUNK,
) -> CrossedSemiBimodule:
    """
    Check the four crossed semi-bimodule axioms exhaustively

    (1) (ᵃx)ᵇ = ᵃ(xᵇ)                   over (a, b, x)
    (2) (ab)∘(ᵃx) = a(b∘x)              over (a, b, x)
    (3) (ab)∘(xᵇ) = (a∘x)b              over (a, b, x)
    (4) (ᵃy)·x^{b∘y} = xᵇ·(^{a∘x}y)     over (a, b, x, y)

    The components are assumed individually validated.

    Raises:
        MalformedInput: components do not fit together
        AxiomFails: first failing axiom with its least witness
    """
    if lam.side != "left" or rho.side != "right":
        raise MalformedInput("lambda must be a left action and rho a right action")
    if lam.actor != A or rho.actor != A or lam.carrier != K or rho.carrier != K:
        raise MalformedInput("lambda and rho must be actions of A on K")
    if circ.actor != K or circ.carrier_size != A.size:
        raise MalformedInput("circ must be an action of K on the elements of A")

    C, L, R = circ.table, lam.table, rho.table
    nA, nK = A.size, K.size
    axioms = [
        ("1", (nA, nA, nK), lambda a, b, x: R[b, L[a, x]] == L[a, R[b, x]]),
        ("2", (nA, nA, nK), lambda a, b, x: C[A.mul(a, b), L[a, x]] == A.mul(a, C[b, x])),
        ("3", (nA, nA, nK), lambda a, b, x: C[A.mul(a, b), R[b, x]] == A.mul(C[a, x], b)),
        (
            "4",
            (nA, nA, nK, nK),
            lambda a, b, x, y: K.mul(L[a, y], R[C[b, y], x]) == K.mul(R[b, x], L[C[a, x], y]),
        ),
    ]
    for axiom, dims, law in axioms:
        witness = first_witness(dims, law, chunk)
        if witness is not None:
            raise AxiomFails(axiom, witness, structure=f"crossed semi-bimodule {name}")
    return CrossedSemiBimodule(A, K, circ, lam, rho, name)


def assemble_xbsmod(A: FiniteMonoid, K: FiniteMonoid, circ, lam, rho, name: str = "X", chunk: int = DEFAULT_CHUNK) -> CrossedSemiBimodule:
    """Validate raw ∘, λ, ρ tables as actions, then as a crossed semi-bimodule"""
    return validate_xbsmod(
        A,
        K,
        validate_set_action(K, A.size, circ, chunk),
        validate_monoid_action("left", A, K, lam, chunk),
        validate_monoid_action("right", A, K, rho, chunk),
        name,
        chunk,
    )


def boundary(X: CrossedSemiBimodule, chunk: int = DEFAULT_CHUNK) -> np.ndarray:
    """
    The map ∂(y) = 1∘y, returned as a plain index array K -> A

    Also checks the exchange law y·x^{∂y} = x·(^{∂x}y) over (x, y).
    """
    d = frozen(X.circ.table[X.A.identity])
    K, L, R = X.K, X.lam.table, X.rho.table
    witness = first_witness((K.size, K.size), lambda x, y: K.mul(y, R[d[y], x]) == K.mul(x, L[d[x], y]), chunk)
    if witness is not None:
        raise ExchangeLawFails(f"exchange law fails in {X.name}", witness)
    return d


def twist_monoid(X: CrossedSemiBimodule, chunk: int = DEFAULT_CHUNK) -> FiniteMonoid:
    """K^tw: the elements of K with x⋄y = y·x^{∂y}"""
    d = boundary(X, chunk)
    K, R = X.K, X.rho.table
    x = K.elements()[:, None]
    y = K.elements()[None, :]
    with guaranteed("twisted product is a monoid"):
        return validate_monoid(K.mul(y, R[d[y], x]), K.identity, f"{K.name}_tw", chunk)


@dataclass(frozen=True, eq=False)
class CrossedSemiModule(TableEquality):
    """A homomorphism ∂: K -> A with a right A-action on K"""

    partial: MonoidHom
    rho: MonoidAction
    name: str = "S"

    @property
    def A(self) -> FiniteMonoid:
        return self.partial.target

    @property
    def K(self) -> FiniteMonoid:
        return self.partial.source

    def key(self) -> Tuple:
        return (self.partial.key(), self.rho.key())


def _check_right_action_of(partial: MonoidHom, rho: MonoidAction) -> None:
    if rho.side != "right" or rho.actor != partial.target or rho.carrier != partial.source:
        raise MalformedInput("rho must be a right action of the codomain of partial on its domain")


def validate_xsmod(partial: MonoidHom, rho: MonoidAction, name: str = "S", chunk: int = DEFAULT_CHUNK) -> CrossedSemiModule:
    """
    Check the crossed semi-module axioms exhaustively

    i)  a·∂(xᵃ) = ∂(x)·a       over (a, x)
    ii) y·x^{∂y} = x·y         over (x, y)
    """
    _check_right_action_of(partial, rho)
    A, K, d, R = partial.target, partial.source, partial.map, rho.table
    witness = first_witness((A.size, K.size), lambda a, x: A.mul(a, d[R[a, x]]) == A.mul(d[x], a), chunk)
    if witness is not None:
        raise AxiomFails("i", witness, structure=f"crossed semi-module {name}")
    witness = first_witness((K.size, K.size), lambda x, y: K.mul(y, R[d[y], x]) == K.mul(x, y), chunk)
    if witness is not None:
        raise AxiomFails("ii", witness, structure=f"crossed semi-module {name}")
    return CrossedSemiModule(partial, rho, name)


def phi(S: CrossedSemiModule, chunk: int = DEFAULT_CHUNK) -> CrossedSemiBimodule:
    """The crossed semi-bimodule with trivial λ and a∘x = a·∂(x)"""
    A, K, d = S.A, S.K, S.partial.map
    circ = A.mul(A.elements()[:, None], d[None, :])
    with guaranteed("phi produces a crossed semi-bimodule"):
        return validate_xbsmod(
            A,
            K,
            validate_set_action(K, A.size, circ, chunk),
            trivial_action("left", A, K),
            S.rho,
            S.name,
            chunk,
        )


def recover_xsmod(X: CrossedSemiBimodule, chunk: int = DEFAULT_CHUNK) -> CrossedSemiModule:
    """
    The crossed semi-module of a crossed semi-bimodule with trivial λ

    Raises:
        LambdaNotTrivial: least (a, x) with ᵃx != x
    """
    A, K = X.A, X.K
    witness = _first_mismatch(X.lam.table, np.broadcast_to(K.elements(), X.lam.table.shape))
    if witness is not None:
        raise LambdaNotTrivial(f"left action of {X.name} is not trivial", witness)
    with guaranteed("1∘- is a homomorphism when λ is trivial"):
        partial = validate_hom(X.circ.table[A.identity], K, A, chunk)
    with guaranteed("λ-trivial structure satisfies the crossed semi-module axioms"):
        S = validate_xsmod(partial, X.rho, X.name, chunk)
    witness = _first_mismatch(X.circ.table, A.mul(A.elements()[:, None], partial.map[None, :]))
    if witness is not None:
        raise ConsistencyError("a∘x = a·∂(x) fails", witness)
    return S


@dataclass(frozen=True, eq=False)
class CrossedModule(TableEquality):
    """A group homomorphism ∂: K -> A with a right A-action on K by automorphisms"""

    partial: MonoidHom
    rho: MonoidAction
    name: str = "M"

    @property
    def A(self) -> FiniteMonoid:
        return self.partial.target

    @property
    def K(self) -> FiniteMonoid:
        return self.partial.source

    def key(self) -> Tuple:
        return (self.partial.key(), self.rho.key())


def _require_groups(**monoids: FiniteMonoid) -> None:
    for which, monoid in monoids.items():
        bad = non_invertible(monoid)
        if bad is not None:
            raise NotAGroup(which, (bad,))


def validate_xmod(partial: MonoidHom, rho: MonoidAction, name: str = "M", chunk: int = DEFAULT_CHUNK) -> CrossedModule:
    """
    Check the crossed module axioms exhaustively

    (1) ∂(xᵃ) = a⁻¹·∂(x)·a     over (a, x)
    (2) y^{∂x} = x⁻¹·y·x        over (x, y)

    Raises:
        NotAGroup: K or A has a non-invertible element
        AxiomFails: first failing axiom with its least witness
    """
    _check_right_action_of(partial, rho)
    A, K, d, R = partial.target, partial.source, partial.map, rho.table
    _require_groups(K=K, A=A)
    inv_a, inv_k = inverse_map(A), inverse_map(K)
    witness = first_witness((A.size, K.size), lambda a, x: d[R[a, x]] == A.mul(A.mul(inv_a[a], d[x]), a), chunk)
    if witness is not None:
        raise AxiomFails("1", witness, structure=f"crossed module {name}")
    witness = first_witness((K.size, K.size), lambda x, y: R[d[x], y] == K.mul(K.mul(inv_k[x], y), x), chunk)
    if witness is not None:
        raise AxiomFails("2", witness, structure=f"crossed module {name}")
    return CrossedModule(partial, rho, name)


def xmod_to_xbsmod(M: CrossedModule, chunk: int = DEFAULT_CHUNK) -> CrossedSemiBimodule:
    """Every crossed module is a crossed semi-module; apply phi"""
    with guaranteed("a crossed module satisfies the crossed semi-module axioms"):
        S = validate_xsmod(M.partial, M.rho, M.name, chunk)
    return phi(S, chunk)


def group_to_xmod(X: CrossedSemiBimodule, chunk: int = DEFAULT_CHUNK) -> CrossedModule:
    """
    The crossed module (K^tw, A, ∂) with action x^{*a} = ^{a⁻¹}xᵃ

    Raises:
        NotAGroup: A or K is not a group
    """
    A, K, L, R = X.A, X.K, X.lam.table, X.rho.table
    _require_groups(A=A, K=K)
    inv_a, inv_k = inverse_map(A), inverse_map(K)
    d = boundary(X, chunk)
    twisted = twist_monoid(X, chunk)

    items = K.elements()
    flat = L[inv_a[d[items]], inv_k[items]]
    bad = np.flatnonzero(twisted.mul(items, flat) != K.identity)
    if bad.size:
        raise ConsistencyError("x⋄x♭ = 1 fails", (int(bad[0]),))
    if not is_group(twisted):
        raise ConsistencyError(f"{twisted.name} is not a group")

    with guaranteed("∂ is a homomorphism out of the twisted group"):
        partial = validate_hom(d, twisted, A, chunk)
    star = R[A.elements()[:, None], L[inv_a[A.elements()][:, None], items[None, :]]]
    with guaranteed("x^{*a} is an action on the twisted group"):
        action = validate_monoid_action("right", A, twisted, star, chunk)
    witness = first_witness((A.size, K.size), lambda a, x: d[star[a, x]] == A.mul(A.mul(inv_a[a], d[x]), a), chunk)
    if witness is not None:
        raise ConsistencyError("∂(x^{*a}) = a⁻¹∂(x)a fails", witness)
    with guaranteed("the twisted structure is a crossed module"):
        return validate_xmod(partial, action, X.name, chunk)


def reconstruct_group_xbsmod(
    lam: MonoidAction,
    rho: MonoidAction,
    partial_map,
    name: str = "X",
    chunk: int = DEFAULT_CHUNK,
) -> CrossedSemiBimodule:
    """
    Rebuild a group-case crossed semi-bimodule from λ, ρ and ∂ via a∘x = a·∂(^{a⁻¹}x)

    Hypotheses, checked exhaustively:
        i)   ∂(xy) = ∂(x)·∂(^{∂(x)⁻¹}y)      over (x, y)
        ii)  ∂(^{b⁻¹}zᵇ) = b⁻¹·∂(z)·b        over (b, z)
        iii) y·x^{∂y} = x·^{∂x}y             over (x, y)

    Raises:
        NotAGroup, CompatibilityFails, HypothesisFails
    """
    if lam.side != "left" or rho.side != "right" or lam.actor != rho.actor or lam.carrier != rho.carrier:
        raise MalformedInput("lambda and rho must be left and right actions of one monoid on another")
    A, K, L, R = lam.actor, lam.carrier, lam.table, rho.table
    _require_groups(A=A, K=K)
    d = np.asarray(partial_map)
    if d.shape != (K.size,) or d.dtype.kind not in "iu" or ((d < 0) | (d >= A.size)).any():
        raise MalformedInput(f"boundary must be {K.size} indices into A")
    d = frozen(d)
    inv_a = inverse_map(A)

    witness = first_witness((A.size, A.size, K.size), lambda a, b, x: R[b, L[a, x]] == L[a, R[b, x]], chunk)
    if witness is not None:
        raise CompatibilityFails("(ᵃx)ᵇ = ᵃ(xᵇ) fails", witness)

    hypotheses = [
        ("i", (K.size, K.size), lambda x, y: d[K.mul(x, y)] == A.mul(d[x], d[L[inv_a[d[x]], y]])),
        ("ii", (A.size, K.size), lambda b, z: d[R[b, L[inv_a[b], z]]] == A.mul(A.mul(inv_a[b], d[z]), b)),
        ("iii", (K.size, K.size), lambda x, y: K.mul(y, R[d[y], x]) == K.mul(x, L[d[x], y])),
    ]
    for label, dims, law in hypotheses:
        witness = first_witness(dims, law, chunk)
        if witness is not None:
            raise HypothesisFails(label, witness)

    a = A.elements()[:, None]
    circ = A.mul(a, d[L[inv_a[a], K.elements()[None, :]]])
    with guaranteed("the reconstructed structure is a crossed semi-bimodule"):
        X = validate_xbsmod(A, K, validate_set_action(K, A.size, circ, chunk), lam, rho, name, chunk)
    witness = _first_mismatch(boundary(X, chunk), d)
    if witness is not None:
        raise ConsistencyError("boundary of the reconstruction differs from ∂", witness)
    return X


@dataclass(frozen=True, eq=False)
class XbsMorphism(TableEquality):
    """A morphism of crossed semi-bimodules: κ: K -> K' and α: A -> A'"""

    kappa: MonoidHom
    alpha: MonoidHom

    def key(self) -> Tuple:
        return (self.kappa.key(), self.alpha.key())


def identity_morphism(X: CrossedSemiBimodule) -> XbsMorphism:
    return XbsMorphism(identity_hom(X.K), identity_hom(X.A))


def validate_morphism(m: XbsMorphism, X: CrossedSemiBimodule, Xp: CrossedSemiBimodule, chunk: int = DEFAULT_CHUNK) -> XbsMorphism:
    """
    Check a morphism condition by condition over (a, x)

    (1) α(a∘x) = α(a)∘κ(x)
    (2) κ(ᵃx) = ^{α(a)}κ(x)
    (3) κ(xᵃ) = κ(x)^{α(a)}
    """
    if m.kappa.source != X.K or m.kappa.target != Xp.K or m.alpha.source != X.A or m.alpha.target != Xp.A:
        raise MalformedInput("morphism components do not match the structures")
    k, al = m.kappa.map, m.alpha.map
    dims = (X.A.size, X.K.size)
    conditions = [
        ("1", lambda a, x: al[X.circ.table[a, x]] == Xp.circ.table[al[a], k[x]]),
        ("2", lambda a, x: k[X.lam.table[a, x]] == Xp.lam.table[al[a], k[x]]),
        ("3", lambda a, x: k[X.rho.table[a, x]] == Xp.rho.table[al[a], k[x]]),
    ]
    for label, law in conditions:
        witness = first_witness(dims, law, chunk)
        if witness is not None:
            raise ConditionFails(label, witness)
    return m


@dataclass(frozen=True, eq=False)
class WeakMorphism(TableEquality):
    """
    A weak morphism (κ, γ) between crossed semi-bimodules

    κ: A -> A' is a homomorphism and gamma[a, x] = γ(a, x) lies in K'.
    """

    kappa: MonoidHom
    gamma: np.ndarray
    source_carrier: FiniteMonoid
    target_carrier: FiniteMonoid

    def key(self) -> Tuple:
        return (self.kappa.key(), table_key(self.gamma), self.source_carrier.key(), self.target_carrier.key())


def identity_weak(X: CrossedSemiBimodule) -> WeakMorphism:
    gamma = np.broadcast_to(X.K.elements(), (X.A.size, X.K.size))
    return WeakMorphism(identity_hom(X.A), frozen(gamma), X.K, X.K)


def strictify(m: XbsMorphism) -> WeakMorphism:
    """The weak morphism (α, γ) with γ(a, x) = κ(x)"""
    gamma = np.broadcast_to(m.kappa.map, (m.alpha.source.size, m.kappa.source.size))
    return WeakMorphism(m.alpha, frozen(gamma), m.kappa.source, m.kappa.target)


def validate_weak_morphism(w: WeakMorphism, X: CrossedSemiBimodule, Xp: CrossedSemiBimodule, chunk: int = DEFAULT_CHUNK) -> WeakMorphism:
    """
    Check a weak morphism exhaustively

    unit  γ(a, 1) = 1                                                   over (a,)
    (1)   γ(a, xy) = γ(a, x)·γ(a∘x, y)                                  over (a, x, y)
    (2)   κ(a)∘γ(a, x) = κ(a∘x)                                        over (a, x)
    (3)   ^{κa}γ(b, y)·γ(a, x)^{κ(b)∘γ(b, y)} = γ(ab, ᵃy·x^{b∘y})       over (a, b, x, y)

    These are exactly the conditions under which (a, x) ↦ (κa, γ(a, x))
    is a homomorphism A⋈K -> A'⋈K' commuting with source, target, unit and
    composition.
    """
    A, K, Ap, Kp = X.A, X.K, Xp.A, Xp.K
    if w.kappa.source != A or w.kappa.target != Ap or w.source_carrier != K or w.target_carrier != Kp:
        raise MalformedInput("weak morphism components do not match the structures")
    g = np.asarray(w.gamma)
    if g.shape != (A.size, K.size) or ((g < 0) | (g >= Kp.size)).any():
        raise MalformedInput(f"gamma must be a {A.size}x{K.size} table of indices into {Kp.name}")
    kap = w.kappa.map
    C, L, R = X.circ.table, X.lam.table, X.rho.table
    Cp, Lp, Rp = Xp.circ.table, Xp.lam.table, Xp.rho.table

    bad = np.flatnonzero(g[:, K.identity] != Kp.identity)
    if bad.size:
        raise ConditionFails("unit", (int(bad[0]),), kind="weak morphism")
    conditions = [
        ("1", (A.size, K.size, K.size), lambda a, x, y: g[a, K.mul(x, y)] == Kp.mul(g[a, x], g[C[a, x], y])),
        ("2", (A.size, K.size), lambda a, x: Cp[kap[a], g[a, x]] == kap[C[a, x]]),
        (
            "3",
            (A.size, A.size, K.size, K.size),
            lambda a, b, x, y: Kp.mul(Lp[kap[a], g[b, y]], Rp[Cp[kap[b], g[b, y]], g[a, x]])
            == g[A.mul(a, b), K.mul(L[a, y], R[C[b, y], x])],
        ),
    ]
    for label, dims, law in conditions:
        witness = first_witness(dims, law, chunk)
        if witness is not None:
            raise ConditionFails(label, witness, kind="weak morphism")
    return w


def compose_weak(second: WeakMorphism, first: WeakMorphism) -> WeakMorphism:
    """(κ', γ') ∘ (κ, γ) = (κ'κ, γ'') with γ''(a, x) = γ'(κ(a), γ(a, x))"""
    if first.kappa.target != second.kappa.source or first.target_carrier != second.source_carrier:
        raise NotComposable("weak morphisms are not composable")
    kappa = MonoidHom(first.kappa.source, second.kappa.target, frozen(second.kappa.map[first.kappa.map]))
    gamma = second.gamma[first.kappa.map[:, None], first.gamma]
    return WeakMorphism(kappa, frozen(gamma), first.source_carrier, second.target_carrier)


@dataclass(frozen=True, eq=False)
class CanonicalWeakIso:
    """The weak isomorphism between a group-case X and the structure rebuilt from its crossed module"""

    twisted: CrossedSemiBimodule
    forward: WeakMorphism
    backward: WeakMorphism


def canonical_weak_iso(X: CrossedSemiBimodule, chunk: int = DEFAULT_CHUNK) -> CanonicalWeakIso:
    """
    forward = (id, γ(a, x) = ᵃx) from xmod_to_xbsmod(group_to_xmod(X)) to X,
    backward = (id, γ(a, x) = ^{a⁻¹}x) in the other direction

    Raises:
        NotAGroup: A or K is not a group
    """
    twisted = xmod_to_xbsmod(group_to_xmod(X, chunk), chunk)
    A, L = X.A, X.lam.table
    inv_a = inverse_map(A)
    forward = WeakMorphism(identity_hom(A), frozen(L), twisted.K, X.K)
    backward = WeakMorphism(identity_hom(A), frozen(L[inv_a[:, None], X.K.elements()[None, :]]), X.K, twisted.K)
    with guaranteed("the canonical maps are weak morphisms"):
        validate_weak_morphism(forward, twisted, X, chunk)
        validate_weak_morphism(backward, X, twisted, chunk)
    if compose_weak(backward, forward) != identity_weak(twisted):
        raise ConsistencyError("backward ∘ forward is not the identity")
    if compose_weak(forward, backward) != identity_weak(X):
        raise ConsistencyError("forward ∘ backward is not the identity")
    return CanonicalWeakIso(twisted, forward, backward)


def semibimodule_embed(lam: MonoidAction, rho: MonoidAction, name: str = "X", chunk: int = DEFAULT_CHUNK) -> CrossedSemiBimodule:
    """
    A semi-bimodule (commutative K, compatible λ and ρ) as the crossed
    semi-bimodule with a∘x = a

    Raises:
        NotCommutative: least (x, y) with xy != yx
        CompatibilityFails: least (a, b, x) with (ᵃx)ᵇ != ᵃ(xᵇ)
    """
    if lam.side != "left" or rho.side != "right" or lam.actor != rho.actor or lam.carrier != rho.carrier:
        raise MalformedInput("lambda and rho must be left and right actions of one monoid on another")
    A, K, L, R = lam.actor, lam.carrier, lam.table, rho.table
    witness = commutativity_witness(K)
    if witness is not None:
        raise NotCommutative(f"{K.name} is not commutative", witness)
    witness = first_witness((A.size, A.size, K.size), lambda a, b, x: R[b, L[a, x]] == L[a, R[b, x]], chunk)
    if witness is not None:
        raise CompatibilityFails("(ᵃx)ᵇ = ᵃ(xᵇ) fails", witness)
    with guaranteed("a semi-bimodule with a∘x = a is a crossed semi-bimodule"):
        return validate_xbsmod(A, K, constant_set_action(K, A.size), lam, rho, name, chunk)
