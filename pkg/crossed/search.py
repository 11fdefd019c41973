"""
Enumeration of every crossed structure on a pair of small monoids

Homomorphisms, monoid actions and set actions are all assignments
m ↦ v(m) from a monoid M into a finite family of candidates closed under a
product P, with v(1) = unit and v(mm') = P[v(m), v(m')]. They are found by
one backtracking search that fixes elements in index order and prunes as soon
as a product instance has all three cells bound. Crossed semi-bimodules are
then assembled by filtering the stacked set actions against the axioms for
each (λ, ρ).
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field

from crossed.config import Settings, get_settings
from crossed.errors import BudgetExceeded, CrossedError, MalformedInput, MismatchWitness, NotAGroup
from crossed.laws import frozen
from crossed.models import EnumerationTask, StructureKind
from crossed.monoid import (
    FiniteMonoid,
    MonoidAction,
    MonoidHom,
    SetAction,
    is_commutative,
    is_group,
    non_invertible,
    validate_hom,
    validate_monoid_action,
    validate_set_action,
)
from crossed.report import CheckReport
from crossed.structures import (
    CrossedModule,
    CrossedSemiBimodule,
    CrossedSemiModule,
    boundary,
    canonical_weak_iso,
    group_to_xmod,
    phi,
    recover_xsmod,
    semibimodule_embed,
    twist_monoid,
    validate_xbsmod,
    validate_xmod,
    validate_xsmod,
    xmod_to_xbsmod,
)

logger = logging.getLogger(__name__)

Structure = Union[CrossedSemiBimodule, CrossedSemiModule, CrossedModule]


@dataclass
class NodeCounter:
    """Counts visited search nodes against an optional budget"""

    budget: Optional[int] = None
    nodes: int = 0

    def visit(self, count: int = 1) -> None:
        self.nodes += count
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(self.nodes)


def assignments(M: FiniteMonoid, product: np.ndarray, unit: int, counter: NodeCounter) -> List[np.ndarray]:
    """
    All v: M -> candidates with v(1) = unit and v(mm') = product[v(m), v(m')]

    `product` is a square table over candidate indices; -1 marks a product
    outside the family. Results come out in lexicographic order of v.
    """
    n = M.size
    table = M.full_table()
    choices = product.shape[0]
    order = [m for m in range(n) if m != M.identity]
    values = [-1] * n
    values[M.identity] = unit
    found: List[np.ndarray] = []

    def consistent(m: int) -> bool:
        vm = values[m]
        for other in range(n):
            vo = values[other]
            if vo < 0:
                continue
            for left, right, vl, vr in ((m, other, vm, vo), (other, m, vo, vm)):
                target = values[table[left, right]]
                if target >= 0 and product[vl, vr] != target:
                    return False
        # products landing on m itself
        for left in range(n):
            for right in range(n):
                if table[left, right] == m and values[left] >= 0 and values[right] >= 0:
                    if product[values[left], values[right]] != vm:
                        return False
        return True

    def extend(position: int) -> None:
        if position == len(order):
            found.append(frozen(values))
            return
        m = order[position]
        for candidate in range(choices):
            counter.visit()
            values[m] = candidate
            if consistent(m):
                extend(position + 1)
        values[m] = -1

    if product[unit, unit] != unit:
        return found
    extend(0)
    return found


def _composition_table(maps: np.ndarray, first_then_second: bool) -> np.ndarray:
    """product[i, j] = index of maps[j] ∘ maps[i] (or maps[i] ∘ maps[j]), -1 if absent"""
    lookup: Dict[Tuple[int, ...], int] = {tuple(int(v) for v in row): i for i, row in enumerate(maps)}
    count = maps.shape[0]
    product = np.full((count, count), -1, dtype=np.int64)
    for i in range(count):
        for j in range(count):
            composite = maps[j][maps[i]] if first_then_second else maps[i][maps[j]]
            product[i, j] = lookup.get(tuple(int(v) for v in composite), -1)
    return product


def homomorphisms(source: FiniteMonoid, target: FiniteMonoid, counter: Optional[NodeCounter] = None) -> List[MonoidHom]:
    """Every monoid homomorphism source -> target, in lexicographic order of the map"""
    counter = counter or NodeCounter()
    maps = assignments(source, target.full_table(), target.identity, counter)
    return [MonoidHom(source, target, m) for m in maps]


def endomorphisms(K: FiniteMonoid, counter: Optional[NodeCounter] = None) -> np.ndarray:
    maps = [hom.map for hom in homomorphisms(K, K, counter)]
    return np.stack(maps) if maps else np.empty((0, K.size), dtype=np.int64)


def monoid_actions(side: str, A: FiniteMonoid, K: FiniteMonoid, counter: Optional[NodeCounter] = None) -> List[MonoidAction]:
    """Every left or right action of A on K by endomorphisms, in lexicographic table order"""
    counter = counter or NodeCounter()
    endos = endomorphisms(K, counter)
    identity_index = next(i for i, e in enumerate(endos) if (e == K.elements()).all())
    # right: x^{ab} = (x^a)^b; left: ^{ab}x = ^a(^b x)
    product = _composition_table(endos, first_then_second=side == "right")
    return [
        MonoidAction(side, A, K, frozen(endos[v]))  # type: ignore[arg-type]
        for v in assignments(A, product, identity_index, counter)
    ]


def set_actions(K: FiniteMonoid, points: int, counter: Optional[NodeCounter] = None) -> List[SetAction]:
    """Every right action of K on `points` points, in lexicographic table order"""
    counter = counter or NodeCounter()
    transformations = np.array(list(itertools.product(range(points), repeat=points)), dtype=np.int64).reshape(-1, points)
    identity_index = next(i for i, t in enumerate(transformations) if (t == np.arange(points)).all())
    # a∘(xy) = (a∘x)∘y
    product = _composition_table(transformations, first_then_second=True)
    actions = [
        SetAction(K, points, frozen(transformations[v].T))
        for v in assignments(K, product, identity_index, counter)
    ]
    return sorted(actions, key=lambda action: tuple(action.table.ravel().tolist()))


def compatible_action_pairs(A: FiniteMonoid, K: FiniteMonoid, counter: Optional[NodeCounter] = None) -> List[Tuple[MonoidAction, MonoidAction]]:
    """Every (λ, ρ) with (ᵃx)ᵇ = ᵃ(xᵇ)"""
    counter = counter or NodeCounter()
    lefts = monoid_actions("left", A, K, counter)
    rights = monoid_actions("right", A, K, counter)
    pairs = []
    for lam in lefts:
        for rho in rights:
            counter.visit()
            if _compatible(lam.table, rho.table):
                pairs.append((lam, rho))
    return pairs


def _compatible(L: np.ndarray, R: np.ndarray) -> bool:
    """(ᵃx)ᵇ = ᵃ(xᵇ) for all a, b, x"""
    nA, nK = L.shape
    a = np.arange(nA)[:, None, None]
    b = np.arange(nA)[None, :, None]
    x = np.arange(nK)[None, None, :]
    return bool((R[b, L[a, x]] == L[a, R[b, x]]).all())


def _axiom2_mask(stack: np.ndarray, A: FiniteMonoid, L: np.ndarray) -> np.ndarray:
    """(ab)∘(ᵃx) = a(b∘x) for every stacked ∘"""
    nA, nK = L.shape
    a = np.arange(nA)[:, None, None]
    b = np.arange(nA)[None, :, None]
    x = np.arange(nK)[None, None, :]
    lhs = stack[:, A.mul(a, b), L[a, x]]
    rhs = A.mul(a, stack[:, b, x])
    return (lhs == rhs).reshape(stack.shape[0], -1).all(axis=1)


def _axiom3_mask(stack: np.ndarray, A: FiniteMonoid, R: np.ndarray) -> np.ndarray:
    """(ab)∘(xᵇ) = (a∘x)b for every stacked ∘"""
    nA, nK = R.shape
    a = np.arange(nA)[:, None, None]
    b = np.arange(nA)[None, :, None]
    x = np.arange(nK)[None, None, :]
    lhs = stack[:, A.mul(a, b), R[b, x]]
    rhs = A.mul(stack[:, a, x], b)
    return (lhs == rhs).reshape(stack.shape[0], -1).all(axis=1)


def _axiom4_mask(stack: np.ndarray, K: FiniteMonoid, L: np.ndarray, R: np.ndarray) -> np.ndarray:
    """(ᵃy)·x^{b∘y} = xᵇ·(^{a∘x}y) for every stacked ∘"""
    nA, nK = L.shape
    a = np.arange(nA)[:, None, None, None]
    b = np.arange(nA)[None, :, None, None]
    x = np.arange(nK)[None, None, :, None]
    y = np.arange(nK)[None, None, None, :]
    lhs = K.mul(L[a, y], R[stack[:, b, y], x])
    rhs = K.mul(R[b, x], L[stack[:, a, x], y])
    return (lhs == rhs).reshape(stack.shape[0], -1).all(axis=1)


def _structure_key(values: Sequence[np.ndarray]) -> Tuple[int, ...]:
    return tuple(np.concatenate([np.asarray(v).ravel() for v in values]).tolist())


def enumerate_xbsmods(A: FiniteMonoid, K: FiniteMonoid, counter: Optional[NodeCounter] = None) -> List[CrossedSemiBimodule]:
    """Every crossed semi-bimodule on (A, K), ordered by the (∘, λ, ρ) tables"""
    counter = counter or NodeCounter()
    lefts = monoid_actions("left", A, K, counter)
    rights = monoid_actions("right", A, K, counter)
    circs = set_actions(K, A.size, counter)
    logger.info(
        "searching %s x %s: %d left actions, %d right actions, %d set actions",
        A.name, K.name, len(lefts), len(rights), len(circs),
    )
    if not circs:
        return []
    stack = np.stack([c.table for c in circs])
    mask2 = [_axiom2_mask(stack, A, lam.table) for lam in lefts]
    mask3 = [_axiom3_mask(stack, A, rho.table) for rho in rights]

    found = []
    for i, lam in enumerate(lefts):
        for j, rho in enumerate(rights):
            counter.visit()
            if not _compatible(lam.table, rho.table):
                continue
            candidates = np.flatnonzero(mask2[i] & mask3[j])
            if candidates.size == 0:
                continue
            counter.visit(int(candidates.size))
            keep = candidates[_axiom4_mask(stack[candidates], K, lam.table, rho.table)]
            for c in keep:
                found.append(CrossedSemiBimodule(A, K, circs[int(c)], lam, rho, f"x{len(found)}"))
    found.sort(key=lambda X: _structure_key([X.circ.table, X.lam.table, X.rho.table]))
    return [
        CrossedSemiBimodule(X.A, X.K, X.circ, X.lam, X.rho, f"{A.name}_{K.name}_{i}")
        for i, X in enumerate(found)
    ]


def enumerate_xsmods(A: FiniteMonoid, K: FiniteMonoid, counter: Optional[NodeCounter] = None) -> List[CrossedSemiModule]:
    """Every crossed semi-module ∂: K -> A, ordered by (∂, ρ)"""
    counter = counter or NodeCounter()
    rights = monoid_actions("right", A, K, counter)
    found = []
    for partial in homomorphisms(K, A, counter):
        for rho in rights:
            counter.visit()
            try:
                found.append(validate_xsmod(partial, rho, f"{A.name}_{K.name}_{len(found)}"))
            except CrossedError:
                continue
    return found


def enumerate_xmods(A: FiniteMonoid, K: FiniteMonoid, counter: Optional[NodeCounter] = None) -> List[CrossedModule]:
    """
    Every crossed module ∂: K -> A, ordered by (∂, ρ)

    Raises:
        NotAGroup: A or K is not a group
    """
    for which, monoid in (("K", K), ("A", A)):
        bad = non_invertible(monoid)
        if bad is not None:
            raise NotAGroup(which, (bad,))
    counter = counter or NodeCounter()
    rights = monoid_actions("right", A, K, counter)
    found = []
    for partial in homomorphisms(K, A, counter):
        for rho in rights:
            counter.visit()
            try:
                found.append(validate_xmod(partial, rho, f"{A.name}_{K.name}_{len(found)}"))
            except CrossedError:
                continue
    return found


def enumerate_structures(task: EnumerationTask) -> List[Structure]:
    """
    The complete, duplicate-free, ordered list of structures of the task's kind

    Raises:
        BudgetExceeded: the node budget ran out
        NotAGroup: crossed modules requested on a non-group
    """
    counter = NodeCounter(task.node_budget)
    if task.kind == StructureKind.XBSMOD:
        result: List[Structure] = list(enumerate_xbsmods(task.A, task.K, counter))
    elif task.kind == StructureKind.XSMOD:
        result = list(enumerate_xsmods(task.A, task.K, counter))
    else:
        result = list(enumerate_xmods(task.A, task.K, counter))
    logger.info("enumerated %d %s on (%s, %s) in %d nodes", len(result), task.kind.value, task.A.name, task.K.name, counter.nodes)
    return result


def naive_xbsmods(A: FiniteMonoid, K: FiniteMonoid) -> List[CrossedSemiBimodule]:
    """
    Crossed semi-bimodules by brute force over every table triple

    Only meant for |A|, |K| <= 2, where it serves as an oracle.
    """
    if A.size > 2 or K.size > 2:
        raise MalformedInput("the brute-force oracle only runs for |A|, |K| <= 2")
    cells = A.size * K.size

    def valid(build) -> List:
        accepted = []
        for values in itertools.product(range(build[1]), repeat=cells):
            table = np.array(values, dtype=np.int64).reshape(A.size, K.size)
            try:
                accepted.append(build[0](table))
            except CrossedError:
                continue
        return accepted

    circs = valid((lambda t: validate_set_action(K, A.size, t), A.size))
    lefts = valid((lambda t: validate_monoid_action("left", A, K, t), K.size))
    rights = valid((lambda t: validate_monoid_action("right", A, K, t), K.size))
    found = []
    for circ in circs:
        for lam in lefts:
            for rho in rights:
                try:
                    found.append(validate_xbsmod(A, K, circ, lam, rho))
                except CrossedError:
                    continue
    found.sort(key=lambda X: _structure_key([X.circ.table, X.lam.table, X.rho.table]))
    return found


class ClassificationReport(BaseModel):
    """Partition counts and cross-checks for the structures on one (A, K)"""

    A: str
    K: str
    total: int
    lambda_trivial: List[int] = Field(default_factory=list)
    circ_constant: List[int] = Field(default_factory=list)
    group_case: bool = False
    boundary_not_hom: List[int] = Field(default_factory=list, description="Structures whose ∂ is not a homomorphism")
    checks: CheckReport

    def summary(self) -> Dict[str, int]:
        return {
            "total": self.total,
            "lambda_trivial": len(self.lambda_trivial),
            "circ_constant": len(self.circ_constant),
            "group_case": self.total if self.group_case else 0,
            "boundary_not_hom": len(self.boundary_not_hom),
        }


def _keys(structures) -> Dict[Tuple, object]:
    return {s.key(): s for s in structures}


def _compare_sets(report: CheckReport, name: str, found: Dict[Tuple, object], expected: Dict[Tuple, object], strict: bool) -> None:
    extra = [s for key, s in found.items() if key not in expected]
    missing = [s for key, s in expected.items() if key not in found]
    if not extra and not missing:
        report.record(name)
        return
    structure = (extra or missing)[0]
    if strict:
        raise MismatchWitness(name, structure)
    side = "enumerated only" if extra else "constructed only"
    report.record(name, passed=False, detail=f"{len(extra)} enumerated only, {len(missing)} constructed only ({side}: {getattr(structure, 'name', structure)})")


def classify(
    structures: List[CrossedSemiBimodule],
    A: FiniteMonoid,
    K: FiniteMonoid,
    settings: Optional[Settings] = None,
    strict: bool = False,
) -> ClassificationReport:
    """
    Partition enumerated crossed semi-bimodules and cross-check the claimed bijections

    With strict=True a one-sided structure raises MismatchWitness; otherwise
    it is reported as a FAIL line.
    """
    settings = settings or get_settings()
    chunk = settings.chunk_size
    checks = CheckReport(title=f"classify {A.name} {K.name}")
    lambda_trivial = [i for i, X in enumerate(structures) if X.is_lambda_trivial()]
    circ_constant = [i for i, X in enumerate(structures) if X.is_circ_constant()]
    group_case = is_group(A) and is_group(K)

    boundaries: Dict[int, np.ndarray] = {}
    boundary_not_hom = []
    broken: Optional[Tuple[Tuple[int, ...], str]] = None
    for i, X in enumerate(structures):
        try:
            d = boundary(X, chunk)
            twist_monoid(X, chunk)
        except CrossedError as e:
            # witness is (structure index,) followed by the law's own witness
            if broken is None:
                broken = ((i,) + (e.witness or ()), f"{X.name}: {e.law}")
            continue
        boundaries[i] = d
        try:
            validate_hom(d, K, A, chunk)
        except CrossedError:
            boundary_not_hom.append(i)
    if broken is None:
        checks.record("exchange_law_and_twist")
    else:
        checks.record("exchange_law_and_twist", broken[0], passed=False, detail=broken[1])

    lambda_trivial_keys = _keys(structures[i] for i in lambda_trivial)
    xsmods = enumerate_xsmods(A, K)
    images = _keys(phi(S, chunk) for S in xsmods)
    _compare_sets(checks, "lambda_trivial=phi(xsmod)", lambda_trivial_keys, images, strict)
    roundtrip = next((S for S in xsmods if recover_xsmod(phi(S, chunk), chunk) != S), None)
    checks.record("recover_xsmod.phi=id", passed=roundtrip is None, detail="" if roundtrip is None else roundtrip.name)

    if is_commutative(K):
        embedded = _keys(semibimodule_embed(lam, rho, chunk=chunk) for lam, rho in compatible_action_pairs(A, K))
        _compare_sets(checks, "circ_constant=embed(pairs)", _keys(structures[i] for i in circ_constant), embedded, strict)

    if group_case:
        _group_corpus(structures, boundaries, A, K, checks, chunk)

    return ClassificationReport(
        A=A.name,
        K=K.name,
        total=len(structures),
        lambda_trivial=lambda_trivial,
        circ_constant=circ_constant,
        group_case=group_case,
        boundary_not_hom=boundary_not_hom,
        checks=checks.sorted(),
    )


def _group_corpus(
    structures: List[CrossedSemiBimodule],
    boundaries: Dict[int, np.ndarray],
    A: FiniteMonoid,
    K: FiniteMonoid,
    checks: CheckReport,
    chunk: int,
) -> None:
    failed_iso = None
    failed_rule = None
    for i, X in enumerate(structures):
        try:
            canonical_weak_iso(X, chunk)
        except CrossedError:
            failed_iso = failed_iso if failed_iso is not None else i
        if i not in boundaries:
            continue
        d = boundaries[i]
        R = X.rho.table
        # ∂(x·z^{∂x}) = ∂(z)·∂(x)
        x = K.elements()[:, None]
        z = K.elements()[None, :]
        bad = np.argwhere(d[K.mul(x, R[d[x], z])] != A.mul(d[z], d[x]))
        if bad.size and failed_rule is None:
            failed_rule = (i,) + tuple(int(v) for v in bad[0])
    checks.record("group.canonical_weak_iso", None if failed_iso is None else (failed_iso,))
    checks.record("group.boundary_reverses_twisted_products", failed_rule)

    failed_roundtrip = None
    for M in enumerate_xmods(A, K):
        if group_to_xmod(xmod_to_xbsmod(M, chunk), chunk) != M:
            failed_roundtrip = M.name
            break
    checks.record("group.xmod_roundtrip", passed=failed_roundtrip is None, detail=failed_roundtrip or "")

